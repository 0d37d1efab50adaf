/* Copyright 2026 The asimcheck Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Seeded random models. Output depends only on the seed and the bounds, on
// every platform: sampling uses splitmix64 and integer arithmetic rather
// than the implementation-defined standard distributions.

#ifndef ASIMCHECK_GENERATE_HPP_
#define ASIMCHECK_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asimcheck/formula.hpp"
#include "asimcheck/kripke.hpp"

namespace asimcheck {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // True with probability num / 1024.
  bool chance(std::uint64_t num) { return (next() >> 54) < num; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed, e.g. one per suite instance.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (index * 0xd1b54a32d192ed03ULL));
  return g.next();
}

// a, b, ..., z, w26, w27, ...
inline std::string generated_world_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "w" + std::to_string(i);
}

// p, q, r, s, t, then p5, p6, ...
inline std::string generated_atom_name(std::size_t i) {
  static constexpr const char* kNames[] = {"p", "q", "r", "s", "t"};
  if (i < 5) return kNames[i];
  return "p" + std::to_string(i);
}

inline Vocabulary generated_vocab(std::size_t atoms) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) names.push_back(generated_atom_name(i));
  return Vocabulary(names);
}

inline KripkeModel generate_model(std::uint64_t seed, std::size_t max_worlds, const Vocabulary& vocab) {
  if (max_worlds == 0) throw std::invalid_argument("max_worlds must be at least 1");
  SplitMix64 rng(seed);
  const std::size_t n = 1 + rng.below(max_worlds);
  const std::uint64_t density = rng.below(1025);

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i][i] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.chance(density)) rel[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;

  detail::ModelData d;
  d.vocab = vocab;
  d.successors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.worlds.push_back(generated_world_name(i));
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) d.successors[i].push_back(j);
  }
  // Each valuation is the up-set generated by randomly chosen seed worlds.
  for (std::size_t p = 0; p < vocab.size(); ++p) {
    const std::uint64_t seeding = rng.below(1025);
    WorldSet v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rng.chance(seeding)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j]) v.set(j);
    }
    d.valuation.push_back(std::move(v));
  }
  return ModelFactory::build(std::move(d));
}

inline KripkeModel generate_model(std::uint64_t seed, std::size_t max_worlds, std::size_t max_atoms) {
  if (max_atoms == 0) throw std::invalid_argument("max_atoms must be at least 1");
  SplitMix64 rng(seed ^ 0x5bd1e995ULL);
  return generate_model(seed, max_worlds, generated_vocab(1 + rng.below(max_atoms)));
}

}  // namespace asimcheck

#endif  // ASIMCHECK_GENERATE_HPP_
