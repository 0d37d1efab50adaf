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

// Depth-bounded intuitionistic unravelling: the tree of R-paths from a root,
// ordered by prefix. Every world is reflexive, so the full unravelling is
// infinite; here paths have at most depth + 1 entries.

#ifndef ASIMCHECK_UNRAVEL_HPP_
#define ASIMCHECK_UNRAVEL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asimcheck/enumerate.hpp"
#include "asimcheck/formula.hpp"
#include "asimcheck/kripke.hpp"
#include "asimcheck/relations.hpp"
#include "asimcheck/semantics.hpp"

namespace asimcheck {

inline constexpr std::size_t kDefaultNodeCap = 50'000;
inline constexpr const char* kNodeCapEnv = "ASIMCHECK_NODE_CAP";

class NodeCapExceeded : public std::runtime_error {
 public:
  NodeCapExceeded(std::size_t cap, std::size_t depth)
      : std::runtime_error("unravelling exceeds node cap " + std::to_string(cap) +
                           " at depth " + std::to_string(depth)),
        cap_(cap),
        depth_(depth) {}
  std::size_t cap() const { return cap_; }
  std::size_t depth() const { return depth_; }

 private:
  std::size_t cap_;
  std::size_t depth_;
};

// Default cap, overridable through ASIMCHECK_NODE_CAP.
inline std::size_t node_cap_from_env() {
  const char* env = std::getenv(kNodeCapEnv);
  if (env == nullptr || *env == '\0') return kDefaultNodeCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(kNodeCapEnv) + " must be a positive integer");
  }
}

inline std::string path_name(const KripkeModel& base, const std::vector<WorldId>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '/';
    out += base.world_name(path[i]);
  }
  return out;
}

class UnravelledModel {
 public:
  const KripkeModel& base() const { return base_; }
  WorldId root() const { return root_; }
  std::size_t depth() const { return depth_; }
  // The tree itself; node i is world i.
  const KripkeModel& model() const { return model_; }

  std::size_t node_count() const { return paths_.size(); }
  const std::vector<WorldId>& path(WorldId node) const { return paths_.at(node); }
  WorldId last(WorldId node) const { return paths_.at(node).back(); }
  std::size_t length(WorldId node) const { return paths_.at(node).size(); }
  std::optional<WorldId> parent(WorldId node) const {
    if (parent_.at(node) == node) return std::nullopt;
    return parent_[node];
  }
  bool is_frontier(WorldId node) const { return length(node) == depth_ + 1; }
  // Remaining path extensions below the node: depth - (length - 1).
  std::size_t headroom(WorldId node) const { return depth_ + 1 - length(node); }
  std::optional<WorldId> find_node(const std::vector<WorldId>& path) const {
    const auto it = by_path_.find(path);
    if (it == by_path_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend UnravelledModel unravel(const KripkeModel&, WorldId, std::size_t, std::size_t);

  UnravelledModel(KripkeModel base, KripkeModel tree) : base_(std::move(base)), model_(std::move(tree)) {}

  KripkeModel base_;
  WorldId root_ = 0;
  std::size_t depth_ = 0;
  KripkeModel model_;
  std::vector<std::vector<WorldId>> paths_;
  std::vector<WorldId> parent_;
  std::map<std::vector<WorldId>, WorldId> by_path_;
};

// Nodes are listed breadth-first with children in world order, so node 0 is
// the root and every parent precedes its children.
inline UnravelledModel unravel(const KripkeModel& m, WorldId root, std::size_t depth,
                               std::size_t node_cap) {
  if (root >= m.size()) throw ModelError("unknown root world");
  std::vector<std::vector<WorldId>> paths{{root}};
  std::vector<WorldId> parent{0};
  std::vector<std::vector<WorldId>> children(1);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].size() > depth) continue;
    for (WorldId u : m.successors(paths[i].back())) {
      if (paths.size() >= node_cap) throw NodeCapExceeded(node_cap, paths[i].size());
      auto p = paths[i];
      p.push_back(u);
      children[i].push_back(paths.size());
      paths.push_back(std::move(p));
      parent.push_back(i);
      children.emplace_back();
    }
  }

  const std::size_t n = paths.size();
  detail::ModelData d;
  d.vocab = m.vocab();
  d.successors.resize(n);
  // Reflexive-transitive closure of the one-step extension: a node sees
  // itself and everything below it.
  for (std::size_t i = n; i-- > 0;) {
    d.successors[i].push_back(i);
    for (WorldId c : children[i]) {
      d.successors[i].insert(d.successors[i].end(), d.successors[c].begin(), d.successors[c].end());
    }
  }
  d.valuation.assign(d.vocab.size(), WorldSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.worlds.push_back(path_name(m, paths[i]));
    for (std::size_t p = 0; p < d.vocab.size(); ++p) {
      if (m.holds(p, paths[i].back())) d.valuation[p].set(i);
    }
  }

  UnravelledModel u(m, ModelFactory::build(std::move(d)));
  u.root_ = root;
  u.depth_ = depth;
  for (std::size_t i = 0; i < n; ++i) u.by_path_.emplace(paths[i], i);
  u.paths_ = std::move(paths);
  u.parent_ = std::move(parent);
  return u;
}

inline UnravelledModel unravel(const KripkeModel& m, WorldId root, std::size_t depth) {
  return unravel(m, root, depth, node_cap_from_env());
}

// Pairs every node with its last world, in both directions. Side 1 is the
// unravelled model, side 2 the base model.
inline WRelation unravel_bisimulation(const UnravelledModel& u) {
  WRelation b;
  for (WorldId i = 0; i < u.node_count(); ++i) {
    b.insert(first(i), second(u.last(i)));
    b.insert(second(u.last(i)), first(i));
  }
  return b;
}

// node -> last world, from the unravelled model to the base.
inline WRelation node_to_last_relation(const UnravelledModel& u) {
  WRelation z;
  for (WorldId i = 0; i < u.node_count(); ++i) z.insert(first(i), second(u.last(i)));
  return z;
}

struct BisimulationSplit {
  // Violations involving a node at maximal length; truncation makes these
  // expected.
  std::vector<Violation> frontier;
  std::vector<Violation> non_frontier;
};

inline BisimulationSplit split_bisimulation_violations(const UnravelledModel& u) {
  const auto all = check_bisimulation(unravel_bisimulation(u), PointedModel(u.model(), 0),
                                      PointedModel(u.base(), u.root()), ReportMode::kAll);
  BisimulationSplit split;
  for (const auto& v : all) {
    const bool at_frontier =
        std::any_of(v.witness.begin(), v.witness.begin() + std::min<std::size_t>(2, v.witness.size()),
                    [&](const SidedWorld& w) { return w.side == Side::kFirst && u.is_frontier(w.world); });
    (at_frontier ? split.frontier : split.non_frontier).push_back(v);
  }
  return split;
}

struct AgreementFailure {
  WorldId node;
  Formula formula;
  bool in_unravelling;
  bool in_base;
};

struct UnravelReport {
  std::size_t probe_depth = 0;
  std::size_t probe_size = 0;

  // The tree passes model validation.
  bool is_model = true;
  bool antisymmetric = true;
  std::optional<std::pair<WorldId, WorldId>> antisymmetry_witness;
  bool prefix_law = true;
  std::optional<std::pair<WorldId, WorldId>> prefix_witness;

  std::size_t frontier_violations = 0;
  std::vector<Violation> non_frontier_violations;

  // Node vs. last world on formulas of implication depth at most
  // min(probe_depth, headroom(node)).
  std::size_t agreement_checks = 0;
  std::size_t agreement_failure_count = 0;
  std::vector<AgreementFailure> agreement_failures;  // first few

  // Nodes with the same last world and the same headroom have isomorphic
  // cones, so they must agree on every probe formula.
  std::size_t cone_checks = 0;
  std::size_t cone_failure_count = 0;

  bool structure_ok() const {
    return is_model && antisymmetric && prefix_law && non_frontier_violations.empty();
  }
  bool ok() const {
    return structure_ok() && agreement_failure_count == 0 && cone_failure_count == 0;
  }
};

inline constexpr std::size_t kReportedAgreementFailures = 8;

inline UnravelReport check_lemma1(const UnravelledModel& u, std::size_t probe_depth,
                                 std::size_t probe_size = kDefaultProbeSize) {
  UnravelReport report;
  report.probe_depth = probe_depth;
  report.probe_size = probe_size;
  const KripkeModel& tree = u.model();
  const std::size_t n = u.node_count();

  RawModel raw;
  raw.worlds = tree.worlds();
  for (const auto& [a, b] : tree.order_pairs())
    raw.order.emplace_back(tree.world_name(a), tree.world_name(b));
  for (std::size_t p = 0; p < tree.vocab().size(); ++p) {
    std::vector<std::string> ws;
    for (WorldId w = 0; w < n; ++w)
      if (tree.holds(p, w)) ws.push_back(tree.world_name(w));
    raw.valuation.emplace_back(tree.vocab()[p], std::move(ws));
  }
  raw.vocab = tree.vocab().atoms();
  report.is_model = validate(raw).ok();

  const auto is_prefix = [&](WorldId x, WorldId y) {
    const auto& px = u.path(x);
    const auto& py = u.path(y);
    return px.size() <= py.size() && std::equal(px.begin(), px.end(), py.begin());
  };
  for (WorldId x = 0; x < n; ++x) {
    for (WorldId y : tree.successors(x)) {
      if (y != x && tree.related(y, x) && report.antisymmetric) {
        report.antisymmetric = false;
        report.antisymmetry_witness = {x, y};
      }
      if (!is_prefix(x, y) && report.prefix_law) {
        report.prefix_law = false;
        report.prefix_witness = {x, y};
      }
    }
    // Every prefix of a node is below it.
    const auto& py = u.path(x);
    for (std::size_t len = 1; len <= py.size() && report.prefix_law; ++len) {
      const auto pre = u.find_node({py.begin(), py.begin() + static_cast<std::ptrdiff_t>(len)});
      if (!pre || !tree.related(*pre, x)) {
        report.prefix_law = false;
        report.prefix_witness = {pre.value_or(x), x};
      }
    }
  }

  const auto split = split_bisimulation_violations(u);
  report.frontier_violations = split.frontier.size();
  report.non_frontier_violations = split.non_frontier;

  const auto probe = enumerate_formulas(u.base().vocab(), probe_depth, probe_size);
  Evaluator in_tree(tree), in_base(u.base());
  for (WorldId x = 0; x < n; ++x) {
    const std::size_t bound = std::min(probe_depth, u.headroom(x));
    for (const auto& f : probe) {
      if (f.impl_depth() > bound) continue;
      ++report.agreement_checks;
      const bool a = in_tree.satisfies(x, f);
      const bool b = in_base.satisfies(u.last(x), f);
      if (a != b) {
        if (report.agreement_failure_count++ < kReportedAgreementFailures)
          report.agreement_failures.push_back({x, f, a, b});
      }
    }
  }

  std::map<std::pair<WorldId, std::size_t>, WorldId> representative;
  for (WorldId x = 0; x < n; ++x) {
    const auto [it, inserted] = representative.emplace(std::make_pair(u.last(x), u.headroom(x)), x);
    if (inserted) continue;
    for (const auto& f : probe) {
      ++report.cone_checks;
      if (in_tree.satisfies(x, f) != in_tree.satisfies(it->second, f)) ++report.cone_failure_count;
    }
  }
  return report;
}

// Builds h node by node along the tree: h(root) = target point, and a child
// is sent to the first successor s of h(parent), in world order, with
// child Z s. Such an s exists by the forth condition.
inline WorldMap homomorphism_from_total_simulation(const WRelation& z, const UnravelledModel& u,
                                                   const PointedModel& target) {
  std::vector<bool> covered(u.node_count(), false);
  for (const auto& [a, b] : z) {
    if (a.side == Side::kFirst && a.world < u.node_count()) covered[a.world] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw RelationError("simulation is not total on the unravelled model");
  const auto violations = check_simulation(z, PointedModel(u.model(), 0), target);
  if (!violations.empty())
    throw RelationError("not a simulation: " + describe(violations.front(), u.model(), target.model));

  WorldMap h;
  h.image.assign(u.node_count(), 0);
  h.image[0] = target.point;
  for (WorldId node = 1; node < u.node_count(); ++node) {
    const WorldId from = h.image[*u.parent(node)];
    const auto succ = target.model.successors(from);
    const auto it = std::find_if(succ.begin(), succ.end(),
                                 [&](WorldId s) { return z.contains(first(node), second(s)); });
    if (it == succ.end()) throw RelationError("no forth witness for node " + u.model().world_name(node));
    h.image[node] = *it;
  }
  return h;
}

}  // namespace asimcheck

#endif  // ASIMCHECK_UNRAVEL_HPP_
