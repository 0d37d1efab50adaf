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

// Distinguishing formulas: when the positive theory of one pointed model is
// not included in that of another, produce a formula true at the first and
// false at the second.

#ifndef ASIMCHECK_DISTINGUISH_HPP_
#define ASIMCHECK_DISTINGUISH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "asimcheck/enumerate.hpp"
#include "asimcheck/formula.hpp"
#include "asimcheck/kripke.hpp"
#include "asimcheck/relations.hpp"
#include "asimcheck/semantics.hpp"

namespace asimcheck {

struct DistinguishResult {
  std::optional<Formula> formula;
  // Rank at which the pair of points left the refinement; when no formula
  // exists, the rank at which the refinement stabilized.
  std::size_t rank = 0;
  bool value_at_1 = false;
  bool value_at_2 = false;
};

inline bool verify_distinguishing(const Formula& f, const PointedModel& pm1,
                                  const PointedModel& pm2) {
  return satisfies(pm1, f) && !satisfies(pm2, f);
}

// Reads the witness recorded by the refinement for the pair of points.
inline DistinguishResult distinguish(const PointedModel& pm1, const PointedModel& pm2) {
  const Refinement r(pm1.model, pm2.model);
  DistinguishResult result;
  const auto& w = r.witness(first(pm1.point), second(pm2.point));
  if (!w) {
    result.rank = r.stable_rank();
    return result;
  }
  result.formula = *w;
  result.rank = *r.drop_rank(first(pm1.point), second(pm2.point));
  result.value_at_1 = satisfies(pm1, *w);
  result.value_at_2 = satisfies(pm2, *w);
  if (!result.value_at_1 || result.value_at_2 || w->impl_depth() > result.rank)
    throw std::logic_error("synthesized formula failed verification: " + print(*w));
  return result;
}

// Exhaustive search for a distinguishing formula of implication depth at
// most `max_impl_depth`, independent of the refinement. Formulas are built
// bottom-up and kept only if their truth sets on the two models are new, so
// the search is complete without a size bound: any formula's truth sets are
// those of some kept representative.
inline std::optional<Formula> search_distinguishing_formula(const PointedModel& pm1,
                                                            const PointedModel& pm2,
                                                            std::size_t max_impl_depth) {
  if (!pm1.model.vocab().same_atoms(pm2.model.vocab()))
    throw RelationError("vocabulary mismatch");
  Evaluator e1(pm1.model), e2(pm2.model);
  using Key = std::pair<WorldSet, WorldSet>;
  std::map<Key, std::size_t> index;
  std::vector<Formula> reps;
  std::optional<Formula> found;

  const auto add = [&](const Formula& f) {
    Key key{e1.truth_set(f), e2.truth_set(f)};
    if (index.count(key)) return false;
    index.emplace(key, reps.size());
    if (!found && key.first.test(pm1.point) && !key.second.test(pm2.point)) found = f;
    reps.push_back(f);
    return true;
  };
  const auto close_lattice = [&] {
    for (bool grew = true; grew && !found;) {
      grew = false;
      const std::size_t n = reps.size();
      for (std::size_t i = 0; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          grew |= add(Formula::conj(reps[i], reps[j]));
          grew |= add(Formula::disj(reps[i], reps[j]));
        }
      }
    }
  };

  for (const auto& a : pm1.model.vocab()) add(Formula::atom(a));
  add(Formula::bot());
  add(Formula::top());
  close_lattice();
  for (std::size_t depth = 1; depth <= max_impl_depth && !found; ++depth) {
    const std::vector<Formula> lower = reps;
    for (const auto& a : lower) {
      for (const auto& b : lower) {
        add(Formula::implies(a, b));
        if (found) break;
      }
      if (found) break;
    }
    close_lattice();
  }
  return found;
}

}  // namespace asimcheck

#endif  // ASIMCHECK_DISTINGUISH_HPP_
