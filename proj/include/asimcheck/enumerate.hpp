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

// Bounded enumeration of formulas, used to build probe sets.

#ifndef ASIMCHECK_ENUMERATE_HPP_
#define ASIMCHECK_ENUMERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "asimcheck/formula.hpp"

namespace asimcheck {

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;
inline constexpr std::size_t kDefaultProbeSize = 7;

namespace detail {

inline void flatten(const Formula& f, Connective op, std::vector<Formula>& out) {
  if (f.kind() == op) {
    flatten(f.left(), op, out);
    flatten(f.right(), op, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace detail

// Canonical form modulo associativity, commutativity and idempotence of & and
// |, with top dropped from conjunctions and bot from disjunctions. Juncts are
// sorted and nested to the left. Implications are kept as they are.
inline Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom:
    case Connective::kBot:
    case Connective::kTop:
      return f;
    case Connective::kImp:
      return Formula::implies(normalize(f.left()), normalize(f.right()));
    case Connective::kAnd:
    case Connective::kOr: {
      const Connective op = f.kind();
      const Connective unit = op == Connective::kAnd ? Connective::kTop : Connective::kBot;
      std::vector<Formula> parts;
      detail::flatten(normalize(f.left()), op, parts);
      detail::flatten(normalize(f.right()), op, parts);
      std::erase_if(parts, [&](const Formula& g) { return g.kind() == unit; });
      std::sort(parts.begin(), parts.end());
      parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
      if (parts.empty()) return op == Connective::kAnd ? Formula::top() : Formula::bot();
      Formula acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = op == Connective::kAnd ? Formula::conj(acc, parts[i]) : Formula::disj(acc, parts[i]);
      }
      return acc;
    }
  }
  return f;
}

// All normal forms of formulas over `vocab` with at most `max_size` nodes and
// implication depth at most `max_impl_depth`, each listed once. Order is
// deterministic: by size, then atoms/bot/top, then &, |, -> combinations.
//
// Growth is roughly (|vocab| + 2)^((s+1)/2) * 3^((s-1)/2) before
// deduplication; `cap` bounds the output length.
inline std::vector<Formula> enumerate_formulas(const Vocabulary& vocab, std::size_t max_impl_depth,
                                               std::size_t max_size,
                                               std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Formula> out;
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  std::unordered_set<Formula, FormulaHash> seen;

  const auto add = [&](const Formula& g) {
    if (g.impl_depth() > max_impl_depth || g.size() > max_size) return;
    if (!seen.insert(g).second) return;
    if (out.size() >= cap) throw std::length_error("formula enumeration exceeds cap");
    out.push_back(g);
    by_size[g.size()].push_back(g);
  };

  if (max_size == 0) return out;
  for (const auto& a : vocab) add(Formula::atom(a));
  add(Formula::bot());
  add(Formula::top());

  for (std::size_t s = 3; s <= max_size; s += 2) {
    for (Connective op : {Connective::kAnd, Connective::kOr, Connective::kImp}) {
      for (std::size_t ls = 1; ls + 1 < s; ls += 2) {
        const std::size_t rs = s - 1 - ls;
        // Iterate over copies: `add` may append to smaller buckets only when
        // a normal form shrinks, which never yields a new formula.
        const auto lefts = by_size[ls];
        const auto rights = by_size[rs];
        for (const auto& l : lefts) {
          for (const auto& r : rights) {
            if (op == Connective::kImp) {
              if (std::max(l.impl_depth(), r.impl_depth()) + 1 > max_impl_depth) continue;
              add(Formula::implies(l, r));
            } else {
              add(normalize(op == Connective::kAnd ? Formula::conj(l, r) : Formula::disj(l, r)));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace asimcheck

#endif  // ASIMCHECK_ENUMERATE_HPP_
