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

// Kripke satisfaction for intuitionistic formulas, finite theories (pos, neg)
// and the checks built on them.

#ifndef ASIMCHECK_SEMANTICS_HPP_
#define ASIMCHECK_SEMANTICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "asimcheck/formula.hpp"
#include "asimcheck/kripke.hpp"

namespace asimcheck {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Computes the set of worlds satisfying a formula. Results are memoized per
// subformula node, so shared subterms and repeated queries are evaluated
// once per evaluator.
class Evaluator {
 public:
  explicit Evaluator(KripkeModel model) : model_(std::move(model)) {}

  const KripkeModel& model() const { return model_; }

  const WorldSet& truth_set(const Formula& f) {
    if (const auto it = memo_.find(f.id()); it != memo_.end()) return it->second.second;
    WorldSet result = compute(f);
    return memo_.emplace(f.id(), std::make_pair(f, std::move(result))).first->second.second;
  }

  bool satisfies(WorldId w, const Formula& f) {
    if (w >= model_.size()) throw EvaluationError("unknown world");
    return truth_set(f).test(w);
  }

 private:
  WorldSet compute(const Formula& f) {
    const std::size_t n = model_.size();
    switch (f.kind()) {
      case Connective::kAtom: {
        const auto p = model_.vocab().find(f.name());
        if (!p) throw EvaluationError("unknown atom '" + f.name() + "'");
        return model_.valuation(*p);
      }
      case Connective::kBot:
        return WorldSet(n);
      case Connective::kTop:
        return WorldSet(n).set();
      case Connective::kAnd:
        return truth_set(f.left()) & truth_set(f.right());
      case Connective::kOr:
        return truth_set(f.left()) | truth_set(f.right());
      case Connective::kImp: {
        const WorldSet& lhs = truth_set(f.left());
        const WorldSet& rhs = truth_set(f.right());
        // w |= a -> b iff every R-successor v has v |/= a or v |= b.
        WorldSet out(n);
        for (WorldId w = 0; w < n; ++w) {
          bool ok = true;
          for (WorldId v : model_.successors(w)) {
            if (lhs.test(v) && !rhs.test(v)) {
              ok = false;
              break;
            }
          }
          if (ok) out.set(w);
        }
        return out;
      }
    }
    return WorldSet(n);
  }

  KripkeModel model_;
  // Keyed by node identity; the stored formula keeps the node alive. Element
  // references stay valid across rehashing.
  std::unordered_map<const void*, std::pair<Formula, WorldSet>> memo_;
};

inline bool satisfies(const KripkeModel& m, WorldId w, const Formula& f) {
  return Evaluator(m).satisfies(w, f);
}

inline bool satisfies(const KripkeModel& m, const std::string& w, const Formula& f) {
  return satisfies(m, m.world_id(w), f);
}

inline bool satisfies(const PointedModel& pm, const Formula& f) {
  return satisfies(pm.model, pm.point, f);
}

// A finite theory: formulas asserted true (pos) and false (neg).
struct Theory {
  std::vector<Formula> pos;
  std::vector<Formula> neg;

  friend bool operator==(const Theory&, const Theory&) = default;
};

// Splits `formulas` by truth at (m, w), preserving input order.
inline Theory theory_over(const KripkeModel& m, WorldId w, std::span<const Formula> formulas) {
  Evaluator eval(m);
  Theory t;
  for (const auto& f : formulas) (eval.satisfies(w, f) ? t.pos : t.neg).push_back(f);
  return t;
}

inline bool satisfies_theory(Evaluator& eval, WorldId w, const Theory& t) {
  for (const auto& f : t.pos)
    if (!eval.satisfies(w, f)) return false;
  for (const auto& f : t.neg)
    if (eval.satisfies(w, f)) return false;
  return true;
}

inline bool satisfies_theory(const KripkeModel& m, WorldId w, const Theory& t) {
  Evaluator eval(m);
  return satisfies_theory(eval, w, t);
}

// First R-successor of v (in world order) satisfying t. On a finite model
// this settles satisfiability by successors exactly: there are finitely many
// successors, so finite satisfiability by successors of a finite theory is
// outright satisfiability at one of them.
inline std::optional<WorldId> satisfiable_by_successor(const KripkeModel& m, WorldId v,
                                                       const Theory& t) {
  if (v >= m.size()) throw EvaluationError("unknown world");
  Evaluator eval(m);
  for (WorldId u : m.successors(v)) {
    if (satisfies_theory(eval, u, t)) return u;
  }
  return std::nullopt;
}

struct ElementaryResult {
  bool holds = true;
  // On failure: a world of the submodel (by name) and a probe formula whose
  // truth value differs between the two models there.
  std::optional<std::string> world;
  std::optional<Formula> formula;
};

// Probe-relative elementarity: every world of m has the same truth values
// for every probe formula in m and in n.
inline ElementaryResult is_elementary_submodel(const KripkeModel& m, const KripkeModel& n,
                                               std::span<const Formula> probe) {
  if (!is_submodel(m, n)) throw ModelError("not a submodel");
  Evaluator em(m), en(n);
  for (WorldId w = 0; w < m.size(); ++w) {
    const WorldId wn = n.world_id(m.world_name(w));
    for (const auto& f : probe) {
      if (em.satisfies(w, f) != en.satisfies(wn, f)) return {false, m.world_name(w), f};
    }
  }
  return {};
}

}  // namespace asimcheck

#endif  // ASIMCHECK_SEMANTICS_HPP_
