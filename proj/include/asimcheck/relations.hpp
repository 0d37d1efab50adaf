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

// Relations between the worlds of two models: checkers for asimulations,
// simulations, bisimulations, homomorphisms and embeddings, and the
// rank-stratified refinement whose limit is positive-theory inclusion.
//
// Worlds are tagged with the side (model 1 or model 2) they live on, so a
// model compared with itself is treated as two disjoint copies.

#ifndef ASIMCHECK_RELATIONS_HPP_
#define ASIMCHECK_RELATIONS_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asimcheck/formula.hpp"
#include "asimcheck/kripke.hpp"
#include "asimcheck/semantics.hpp"

namespace asimcheck {

class RelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side : std::uint8_t { kFirst = 1, kSecond = 2 };

inline Side other(Side s) { return s == Side::kFirst ? Side::kSecond : Side::kFirst; }

struct SidedWorld {
  Side side;
  WorldId world;

  friend auto operator<=>(const SidedWorld&, const SidedWorld&) = default;
};

inline SidedWorld first(WorldId w) { return {Side::kFirst, w}; }
inline SidedWorld second(WorldId w) { return {Side::kSecond, w}; }

using WorldPair = std::pair<SidedWorld, SidedWorld>;

class WRelation {
 public:
  WRelation() = default;
  WRelation(std::initializer_list<WorldPair> pairs) : pairs_(pairs) {}

  void insert(SidedWorld a, SidedWorld b) { pairs_.emplace(a, b); }
  bool contains(SidedWorld a, SidedWorld b) const { return pairs_.count({a, b}) != 0; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  // Same pairs with the side labels exchanged.
  WRelation swapped_sides() const {
    WRelation out;
    for (const auto& [a, b] : pairs_) {
      out.insert({other(a.side), a.world}, {other(b.side), b.world});
    }
    return out;
  }

  bool subset_of(const WRelation& o) const {
    return std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(), pairs_.end());
  }

  friend bool operator==(const WRelation&, const WRelation&) = default;

 private:
  std::set<WorldPair> pairs_;
};

// Total function from the worlds of model 1 to the worlds of model 2.
struct WorldMap {
  std::vector<WorldId> image;

  WorldId operator()(WorldId w) const { return image.at(w); }
  friend bool operator==(const WorldMap&, const WorldMap&) = default;
};

struct Violation {
  std::string condition;
  std::vector<SidedWorld> witness;
  std::string atom;
  std::optional<Formula> formula;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.condition == b.condition && a.witness == b.witness && a.atom == b.atom &&
           a.formula == b.formula;
  }
};

enum class ReportMode { kFirstPerCondition, kAll };

namespace detail {

class TwoModels {
 public:
  TwoModels(const KripkeModel& m1, const KripkeModel& m2) : m1_(m1), m2_(m2) {
    if (!m1.vocab().same_atoms(m2.vocab())) throw RelationError("vocabulary mismatch");
    for (const auto& a : m1.vocab()) to2_.push_back(*m2.vocab().find(a));
  }

  const KripkeModel& model(Side s) const { return s == Side::kFirst ? m1_ : m2_; }

  // Atoms are indexed by model 1's vocabulary.
  std::size_t atom_count() const { return to2_.size(); }
  const std::string& atom_name(std::size_t p) const { return m1_.vocab()[p]; }
  bool holds(std::size_t p, SidedWorld w) const {
    return w.side == Side::kFirst ? m1_.holds(p, w.world) : m2_.holds(to2_[p], w.world);
  }

  void check_range(SidedWorld w) const {
    if (w.world >= model(w.side).size()) throw RelationError("world out of range");
  }

 private:
  const KripkeModel& m1_;
  const KripkeModel& m2_;
  std::vector<std::size_t> to2_;
};

class ViolationSink {
 public:
  explicit ViolationSink(ReportMode mode) : mode_(mode) {}

  bool wants(const std::string& condition) const {
    if (mode_ == ReportMode::kAll) return true;
    return std::none_of(out_.begin(), out_.end(),
                        [&](const Violation& v) { return v.condition == condition; });
  }
  void add(Violation v) {
    if (!wants(v.condition)) return;
    if (std::find(out_.begin(), out_.end(), v) != out_.end()) return;
    out_.push_back(std::move(v));
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  ReportMode mode_;
  std::vector<Violation> out_;
};

inline void check_asimulation_into(const WRelation& a, const PointedModel& pm1,
                                   const PointedModel& pm2, ViolationSink& sink) {
  const TwoModels tm(pm1.model, pm2.model);
  for (const auto& [v, s] : a) {
    tm.check_range(v);
    tm.check_range(s);
  }
  for (const auto& [v, s] : a) {
    if (v.side == s.side) sink.add({"s-type", {v, s}, {}, {}});
  }
  if (!a.contains(first(pm1.point), second(pm2.point))) {
    sink.add({"elem", {first(pm1.point), second(pm2.point)}, {}, {}});
  }
  for (const auto& [v, s] : a) {
    if (v.side == s.side) continue;
    for (std::size_t p = 0; p < tm.atom_count(); ++p) {
      if (tm.holds(p, v) && !tm.holds(p, s)) sink.add({"s-atom", {v, s}, tm.atom_name(p), {}});
    }
    if (!sink.wants("s-back")) continue;
    // s R t requires some u with v R u, t A u and u A t.
    for (WorldId t : tm.model(s.side).successors(s.world)) {
      const SidedWorld st{s.side, t};
      bool matched = false;
      for (WorldId u : tm.model(v.side).successors(v.world)) {
        const SidedWorld su{v.side, u};
        if (a.contains(st, su) && a.contains(su, st)) {
          matched = true;
          break;
        }
      }
      if (!matched) sink.add({"s-back", {v, s, st}, {}, {}});
    }
  }
}

}  // namespace detail

// Checks the four asimulation conditions (s-type, elem, s-atom, s-back) for
// `a` from pm1 to pm2.
inline std::vector<Violation> check_asimulation(const WRelation& a, const PointedModel& pm1,
                                                const PointedModel& pm2,
                                                ReportMode mode = ReportMode::kFirstPerCondition) {
  detail::ViolationSink sink(mode);
  detail::check_asimulation_into(a, pm1, pm2, sink);
  return sink.take();
}

// Checks type, elem, atom and forth for `z` from pm1 to pm2.
inline std::vector<Violation> check_simulation(const WRelation& z, const PointedModel& pm1,
                                               const PointedModel& pm2,
                                               ReportMode mode = ReportMode::kFirstPerCondition) {
  const detail::TwoModels tm(pm1.model, pm2.model);
  detail::ViolationSink sink(mode);
  for (const auto& [v, s] : z) {
    tm.check_range(v);
    tm.check_range(s);
  }
  for (const auto& [v, s] : z) {
    if (v.side != Side::kFirst || s.side != Side::kSecond) sink.add({"type", {v, s}, {}, {}});
  }
  if (!z.contains(first(pm1.point), second(pm2.point))) {
    sink.add({"elem", {first(pm1.point), second(pm2.point)}, {}, {}});
  }
  for (const auto& [v, s] : z) {
    if (v.side != Side::kFirst || s.side != Side::kSecond) continue;
    for (std::size_t p = 0; p < tm.atom_count(); ++p) {
      if (tm.holds(p, v) && !tm.holds(p, s)) sink.add({"atom", {v, s}, tm.atom_name(p), {}});
    }
    if (!sink.wants("forth")) continue;
    for (WorldId u : pm1.model.successors(v.world)) {
      const auto succ = pm2.model.successors(s.world);
      const bool matched = std::any_of(succ.begin(), succ.end(), [&](WorldId t) {
        return z.contains(first(u), second(t));
      });
      if (!matched) sink.add({"forth", {v, s, first(u)}, {}, {}});
    }
  }
  return sink.take();
}

// A bisimulation is a symmetric asimulation; it is checked as an asimulation
// in both directions.
inline std::vector<Violation> check_bisimulation(const WRelation& b, const PointedModel& pm1,
                                                 const PointedModel& pm2,
                                                 ReportMode mode = ReportMode::kFirstPerCondition) {
  detail::ViolationSink sink(mode);
  for (const auto& [x, y] : b) {
    if (!b.contains(y, x)) sink.add({"symmetry", {x, y}, {}, {}});
  }
  detail::check_asimulation_into(b, pm1, pm2, sink);
  detail::ViolationSink reverse(mode);
  detail::check_asimulation_into(b.swapped_sides(), pm2, pm1, reverse);
  for (auto v : reverse.take()) {
    for (auto& w : v.witness) w.side = other(w.side);
    sink.add(std::move(v));
  }
  return sink.take();
}

inline std::vector<Violation> check_homomorphism(const WorldMap& h, const KripkeModel& m1,
                                                 const KripkeModel& m2,
                                                 ReportMode mode = ReportMode::kFirstPerCondition) {
  const detail::TwoModels tm(m1, m2);
  if (h.image.size() != m1.size()) throw RelationError("map is not total on model 1");
  for (WorldId img : h.image) tm.check_range(second(img));
  detail::ViolationSink sink(mode);
  for (WorldId v = 0; v < m1.size(); ++v) {
    for (std::size_t p = 0; p < tm.atom_count(); ++p) {
      if (tm.holds(p, first(v)) && !tm.holds(p, second(h(v))))
        sink.add({"atom", {first(v), second(h(v))}, tm.atom_name(p), {}});
    }
    for (WorldId u : m1.successors(v)) {
      if (!m2.related(h(v), h(u))) sink.add({"hom", {first(v), first(u)}, {}, {}});
    }
  }
  return sink.take();
}

// Injective, order-preserving and -reflecting homomorphism that keeps the
// truth value of every probe formula. Theory preservation is checked only
// relative to `probe`.
inline std::vector<Violation> check_embedding(const WorldMap& h, const KripkeModel& m1,
                                              const KripkeModel& m2, std::span<const Formula> probe,
                                              ReportMode mode = ReportMode::kFirstPerCondition) {
  detail::ViolationSink sink(mode);
  for (auto v : check_homomorphism(h, m1, m2, mode)) sink.add(std::move(v));
  for (WorldId v = 0; v < m1.size(); ++v) {
    for (WorldId u = v + 1; u < m1.size(); ++u) {
      if (h(v) == h(u)) sink.add({"injective", {first(v), first(u)}, {}, {}});
    }
  }
  for (WorldId v = 0; v < m1.size(); ++v) {
    for (WorldId u = 0; u < m1.size(); ++u) {
      if (m2.related(h(v), h(u)) && !m1.related(v, u))
        sink.add({"s-hom", {first(v), first(u)}, {}, {}});
    }
  }
  Evaluator e1(m1), e2(m2);
  for (WorldId v = 0; v < m1.size(); ++v) {
    for (const auto& f : probe) {
      if (!sink.wants("theories")) break;
      if (e1.satisfies(v, f) != e2.satisfies(h(v), f))
        sink.add({"theories", {first(v), second(h(v))}, {}, f});
    }
  }
  return sink.take();
}

// ---------------------------------------------------------------------------
// Rank-stratified refinement.
//
//   u <=_0 s      iff every atom true at u is true at s
//   u <=_{n+1} s  iff u <=_0 s and every successor t of s has a successor
//                 u' of u with t <=_n u' and u' <=_n t
//
// over cross pairs in both directions. The chain is descending and
// stabilizes; its limit is positive-theory inclusion. Whenever a pair drops
// out, a formula true at u and false at s with implication depth at most
// the drop rank is recorded.
class Refinement {
 public:
  Refinement(const KripkeModel& m1, const KripkeModel& m2) : m1_(m1), m2_(m2), tm_(m1_, m2_) {
    n1_ = m1.size();
    const std::size_t n = n1_ + m2.size();
    n_ = n;
    succ_.resize(n);
    for (WorldId w = 0; w < n; ++w) {
      const SidedWorld sw = sided(w);
      for (WorldId v : tm_.model(sw.side).successors(sw.world)) succ_[w].push_back(global({sw.side, v}));
    }
    drop_.assign(n * n, kNever);
    witness_.assign(n * n, std::nullopt);
    run();
  }
  Refinement(const Refinement&) = delete;
  Refinement& operator=(const Refinement&) = delete;

  // Smallest n with <=_n equal to <=_{n+1}.
  std::size_t stable_rank() const { return stable_rank_; }

  std::optional<std::size_t> drop_rank(SidedWorld u, SidedWorld s) const {
    const std::size_t d = drop_[index(u, s)];
    if (d == kNever) return std::nullopt;
    return d;
  }

  // u <=_rank s.
  bool related(SidedWorld u, SidedWorld s, std::size_t rank) const {
    return alive(global(u), global(s), rank);
  }
  // u <= s in the limit.
  bool related(SidedWorld u, SidedWorld s) const { return drop_[index(u, s)] == kNever; }

  // Formula true at u and false at s; present iff the pair dropped out.
  const std::optional<Formula>& witness(SidedWorld u, SidedWorld s) const {
    return witness_[index(u, s)];
  }

  // All cross pairs in <=_rank, or in the limit when rank is absent.
  WRelation relation(std::optional<std::size_t> rank = std::nullopt) const {
    WRelation out;
    for (WorldId x = 0; x < n_; ++x) {
      for (WorldId y = 0; y < n_; ++y) {
        if (!cross(x, y)) continue;
        const bool in = rank ? alive(x, y, *rank) : drop_[x * n_ + y] == kNever;
        if (in) out.insert(sided(x), sided(y));
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kNever = static_cast<std::size_t>(-1);

  SidedWorld sided(WorldId g) const {
    return g < n1_ ? first(g) : second(g - n1_);
  }
  WorldId global(SidedWorld w) const {
    tm_.check_range(w);
    return w.side == Side::kFirst ? w.world : n1_ + w.world;
  }
  bool cross(WorldId x, WorldId y) const { return (x < n1_) != (y < n1_); }
  std::size_t index(SidedWorld u, SidedWorld s) const {
    if (u.side == s.side) throw RelationError("refinement relates worlds of different sides only");
    return global(u) * n_ + global(s);
  }
  bool alive(WorldId x, WorldId y, std::size_t rank) const {
    const std::size_t d = drop_[x * n_ + y];
    return d == kNever || d > rank;
  }

  void run() {
    for (WorldId x = 0; x < n_; ++x) {
      for (WorldId y = 0; y < n_; ++y) {
        if (!cross(x, y)) continue;
        for (std::size_t p = 0; p < tm_.atom_count(); ++p) {
          if (tm_.holds(p, sided(x)) && !tm_.holds(p, sided(y))) {
            drop_[x * n_ + y] = 0;
            witness_[x * n_ + y] = Formula::atom(tm_.atom_name(p));
            break;
          }
        }
      }
    }
    for (std::size_t rank = 0;; ++rank) {
      std::vector<std::pair<std::size_t, Formula>> drops;
      for (WorldId x = 0; x < n_; ++x) {
        for (WorldId y = 0; y < n_; ++y) {
          if (!cross(x, y) || !alive(x, y, rank)) continue;
          if (auto f = refute(x, y, rank)) drops.emplace_back(x * n_ + y, std::move(*f));
        }
      }
      if (drops.empty()) {
        stable_rank_ = rank;
        return;
      }
      for (auto& [i, f] : drops) {
        drop_[i] = rank + 1;
        witness_[i] = std::move(f);
      }
    }
  }

  // If (x, y) fails the successor clause at `rank`, the rank+1 witness.
  //
  // Let t be the first successor of y without a mutual match among the
  // successors of x. Each successor u of x fails "t <= u" or "u <= t" at
  // `rank`, with a recorded witness. Build
  //
  //   (AND of phi_u : t <= u fails) -> (OR of psi_u : u <= t fails)
  //
  // where phi_u is true at t and false at u, psi_u true at u and false at t.
  // At t every phi holds and every psi fails, so the implication fails at y.
  // At any successor u of x either phi_u fails (antecedent false) or psi_u
  // holds (consequent true), so the implication holds at x. A u failing both
  // directions is placed on the consequent side.
  std::optional<Formula> refute(WorldId x, WorldId y, std::size_t rank) const {
    for (WorldId t : succ_[y]) {
      const bool matched = std::any_of(succ_[x].begin(), succ_[x].end(), [&](WorldId u) {
        return alive(t, u, rank) && alive(u, t, rank);
      });
      if (matched) continue;
      std::vector<Formula> antecedent, consequent;
      for (WorldId u : succ_[x]) {
        if (!alive(u, t, rank)) {
          add_unique(consequent, *witness_[u * n_ + t], Connective::kBot);
        } else {
          add_unique(antecedent, *witness_[t * n_ + u], Connective::kTop);
        }
      }
      return Formula::implies(fold(antecedent, Connective::kAnd), fold(consequent, Connective::kOr));
    }
    return std::nullopt;
  }

  static void add_unique(std::vector<Formula>& out, const Formula& f, Connective unit) {
    if (f.kind() == unit) return;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }

  static Formula fold(const std::vector<Formula>& parts, Connective op) {
    if (parts.empty()) return op == Connective::kAnd ? Formula::top() : Formula::bot();
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      acc = op == Connective::kAnd ? Formula::conj(acc, parts[i]) : Formula::disj(acc, parts[i]);
    }
    return acc;
  }

  KripkeModel m1_, m2_;
  detail::TwoModels tm_;  // refers to m1_ and m2_
  std::size_t n1_ = 0;
  std::size_t n_ = 0;
  std::vector<std::vector<WorldId>> succ_;
  std::vector<std::size_t> drop_;
  std::vector<std::optional<Formula>> witness_;
  std::size_t stable_rank_ = 0;
};

// The relation <=_rank over cross pairs in both directions.
inline WRelation leq_rank(const KripkeModel& m1, const KripkeModel& m2, std::size_t rank) {
  return Refinement(m1, m2).relation(rank);
}

// The limit of the refinement, if it relates the two points.
inline std::optional<WRelation> greatest_asimulation(const PointedModel& pm1,
                                                     const PointedModel& pm2) {
  const Refinement r(pm1.model, pm2.model);
  if (!r.related(first(pm1.point), second(pm2.point))) return std::nullopt;
  return r.relation();
}

// {(w, v)} ∪ {(u, u) : v R u} over two copies of m. The diagonal pairs are
// included in both directions: over a single model (u, u) serves as a pair
// of either orientation, which the back clause relies on.
inline WRelation monotonicity_asimulation(const KripkeModel& m, WorldId w, WorldId v) {
  if (w >= m.size() || v >= m.size()) throw RelationError("world out of range");
  if (!m.related(w, v)) throw RelationError("monotonicity asimulation needs w R v");
  WRelation a;
  a.insert(first(w), second(v));
  for (WorldId u : m.successors(v)) {
    a.insert(first(u), second(u));
    a.insert(second(u), first(u));
  }
  return a;
}

// Largest relation from model 1 to model 2 closed under atom and forth. The
// elem condition is not imposed.
inline WRelation greatest_simulation(const KripkeModel& m1, const KripkeModel& m2) {
  const detail::TwoModels tm(m1, m2);
  const std::size_t n1 = m1.size(), n2 = m2.size();
  std::vector<char> in(n1 * n2, 0);
  for (WorldId v = 0; v < n1; ++v) {
    for (WorldId s = 0; s < n2; ++s) {
      bool ok = true;
      for (std::size_t p = 0; p < tm.atom_count() && ok; ++p)
        ok = !tm.holds(p, first(v)) || tm.holds(p, second(s));
      in[v * n2 + s] = ok;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (WorldId v = 0; v < n1; ++v) {
      for (WorldId s = 0; s < n2; ++s) {
        if (!in[v * n2 + s]) continue;
        for (WorldId u : m1.successors(v)) {
          const auto succ = m2.successors(s);
          if (std::none_of(succ.begin(), succ.end(), [&](WorldId t) { return in[u * n2 + t]; })) {
            in[v * n2 + s] = 0;
            changed = true;
            break;
          }
        }
      }
    }
  }
  WRelation z;
  for (WorldId v = 0; v < n1; ++v)
    for (WorldId s = 0; s < n2; ++s)
      if (in[v * n2 + s]) z.insert(first(v), second(s));
  return z;
}

// Human-readable rendering of a violation, e.g. "s-back (a@1, a@2, b@2)".
inline std::string describe(const Violation& v, const KripkeModel& m1, const KripkeModel& m2) {
  std::string out = v.condition + " (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    const auto& w = v.witness[i];
    if (i) out += ", ";
    out += (w.side == Side::kFirst ? m1 : m2).world_name(w.world);
    out += w.side == Side::kFirst ? "@1" : "@2";
  }
  out += ")";
  if (!v.atom.empty()) out += " atom " + v.atom;
  if (v.formula) out += " formula " + print(*v.formula);
  return out;
}

}  // namespace asimcheck

#endif  // ASIMCHECK_RELATIONS_HPP_
