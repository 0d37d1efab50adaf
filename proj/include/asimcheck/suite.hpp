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

// Property suite: runs property checks over seeded random models and
// reports counts plus the first counterexample per check.

#ifndef ASIMCHECK_SUITE_HPP_
#define ASIMCHECK_SUITE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asimcheck/distinguish.hpp"
#include "asimcheck/enumerate.hpp"
#include "asimcheck/generate.hpp"
#include "asimcheck/io.hpp"
#include "asimcheck/kripke.hpp"
#include "asimcheck/relations.hpp"
#include "asimcheck/semantics.hpp"
#include "asimcheck/unravel.hpp"

namespace asimcheck {

struct SuiteConfig {
  std::size_t model_count = 100;
  std::size_t max_worlds = 5;
  std::size_t max_atoms = 2;
  std::size_t max_probe_depth = 2;
  std::size_t probe_size = kDefaultProbeSize;
  std::size_t unravel_depth = 3;
  std::uint64_t seed = 42;
  std::vector<std::string> checks;
  // Run a single instance, as in a reproduction command.
  std::optional<std::size_t> instance;
};

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
  Json models = Json::array();

  static Outcome pass() { return {}; }
  static Outcome skip(std::string why = {}) { return {Status::kSkip, std::move(why), Json::array()}; }
};

struct CheckSpec {
  std::string name;
  std::string description;
  std::function<Outcome(const SuiteConfig&, std::uint64_t)> run;
};

namespace detail {

inline Outcome fail(std::string detail, std::initializer_list<Json> models) {
  return {Status::kFail, std::move(detail), Json(models)};
}

inline Json pointed_json(const KripkeModel& m, WorldId point) {
  return {{"point", m.world_name(point)}, {"model", model_to_json(m)}};
}

struct Pair {
  KripkeModel m1;
  KripkeModel m2;
  WorldId w1;
  WorldId w2;
};

inline Pair generate_pair(std::uint64_t seed, std::size_t max_worlds, std::size_t max_atoms) {
  SplitMix64 g(seed);
  KripkeModel m1 = generate_model(g.next(), max_worlds, max_atoms);
  KripkeModel m2 = generate_model(g.next(), max_worlds, m1.vocab());
  const WorldId w1 = g.below(m1.size());
  const WorldId w2 = g.below(m2.size());
  return {std::move(m1), std::move(m2), w1, w2};
}

inline Outcome check_monotonicity(const SuiteConfig& c, std::uint64_t seed) {
  const KripkeModel m = generate_model(seed, c.max_worlds, c.max_atoms);
  Evaluator e(m);
  for (const auto& f : enumerate_formulas(m.vocab(), c.max_probe_depth, c.probe_size)) {
    const WorldSet& t = e.truth_set(f);
    for (WorldId w = 0; w < m.size(); ++w) {
      if (!t.test(w)) continue;
      for (WorldId v : m.successors(w)) {
        if (!t.test(v))
          return fail(print(f) + " holds at " + m.world_name(w) + " but not at " + m.world_name(v),
                      {model_to_json(m)});
      }
    }
  }
  return Outcome::pass();
}

inline Outcome check_monotonicity_asim(const SuiteConfig& c, std::uint64_t seed) {
  SplitMix64 g(seed);
  const KripkeModel m = generate_model(g.next(), c.max_worlds, c.max_atoms);
  const WorldId w = g.below(m.size());
  const auto succ = m.successors(w);
  const WorldId v = succ[g.below(succ.size())];
  const auto a = monotonicity_asimulation(m, w, v);
  const auto violations = check_asimulation(a, PointedModel(m, w), PointedModel(m, v));
  if (!violations.empty())
    return fail(describe(violations.front(), m, m), {pointed_json(m, w), pointed_json(m, v)});
  return Outcome::pass();
}

inline Outcome check_preservation(const SuiteConfig& c, std::uint64_t seed) {
  const auto p = generate_pair(seed, c.max_worlds, c.max_atoms);
  const PointedModel pm1(p.m1, p.w1), pm2(p.m2, p.w2);
  if (!greatest_asimulation(pm1, pm2)) return Outcome::skip("no asimulation");
  Evaluator e1(p.m1), e2(p.m2);
  for (const auto& f : enumerate_formulas(p.m1.vocab(), c.max_probe_depth, c.probe_size)) {
    if (e1.satisfies(p.w1, f) && !e2.satisfies(p.w2, f))
      return fail(print(f) + " true at point 1, false at point 2",
                  {pointed_json(p.m1, p.w1), pointed_json(p.m2, p.w2)});
  }
  return Outcome::pass();
}

inline Outcome check_fixpoint_asim(const SuiteConfig& c, std::uint64_t seed) {
  const auto p = generate_pair(seed, c.max_worlds, c.max_atoms);
  const Refinement r(p.m1, p.m2);
  if (!r.related(first(p.w1), second(p.w2))) return Outcome::skip("root pair not related");
  const auto violations =
      check_asimulation(r.relation(), PointedModel(p.m1, p.w1), PointedModel(p.m2, p.w2));
  if (!violations.empty())
    return fail(describe(violations.front(), p.m1, p.m2),
                {pointed_json(p.m1, p.w1), pointed_json(p.m2, p.w2)});
  return Outcome::pass();
}

inline Outcome check_fixpoint_vs_oracle(const SuiteConfig& c, std::uint64_t seed) {
  const auto p = generate_pair(seed, std::min<std::size_t>(c.max_worlds, 4),
                               std::min<std::size_t>(c.max_atoms, 2));
  const PointedModel pm1(p.m1, p.w1), pm2(p.m2, p.w2);
  const auto models = {pointed_json(p.m1, p.w1), pointed_json(p.m2, p.w2)};
  const bool absent = !greatest_asimulation(pm1, pm2).has_value();
  const auto d = distinguish(pm1, pm2);
  if (d.formula.has_value() != absent)
    return fail(absent ? "no asimulation but no formula" : "asimulation exists but a formula was returned",
                models);
  if (d.formula && !verify_distinguishing(*d.formula, pm1, pm2))
    return fail("returned formula does not distinguish: " + print(*d.formula), models);
  const std::size_t stable = Refinement(p.m1, p.m2).stable_rank();
  const auto oracle = search_distinguishing_formula(pm1, pm2, stable);
  if (oracle.has_value() != absent)
    return fail(oracle ? "oracle found " + print(*oracle) + " but an asimulation exists"
                       : "oracle found nothing up to rank " + std::to_string(stable),
                models);
  return Outcome::pass();
}

inline Outcome check_distinguish(const SuiteConfig& c, std::uint64_t seed) {
  const auto p = generate_pair(seed, c.max_worlds, c.max_atoms);
  const PointedModel pm1(p.m1, p.w1), pm2(p.m2, p.w2);
  const auto d = distinguish(pm1, pm2);
  if (!d.formula) {
    if (!greatest_asimulation(pm1, pm2))
      return fail("no formula and no asimulation", {pointed_json(p.m1, p.w1), pointed_json(p.m2, p.w2)});
    return Outcome::pass();
  }
  if (!verify_distinguishing(*d.formula, pm1, pm2) || d.formula->impl_depth() > d.rank)
    return fail("certificate fails: " + print(*d.formula),
                {pointed_json(p.m1, p.w1), pointed_json(p.m2, p.w2)});
  // Re-parse the printed formula and verify again.
  if (!verify_distinguishing(parse(print(*d.formula), p.m1.vocab()), pm1, pm2))
    return fail("printed formula does not round-trip: " + print(*d.formula),
                {pointed_json(p.m1, p.w1), pointed_json(p.m2, p.w2)});
  return Outcome::pass();
}

struct UnravelInstance {
  KripkeModel m;
  WorldId root;
  std::size_t depth;
};

inline UnravelInstance unravel_instance(const SuiteConfig& c, std::uint64_t seed) {
  SplitMix64 g(seed);
  KripkeModel m = generate_model(g.next(), c.max_worlds, c.max_atoms);
  const WorldId root = g.below(m.size());
  const std::size_t depth = g.below(c.unravel_depth + 1);
  return {std::move(m), root, depth};
}

inline std::string unravel_label(const UnravelInstance& in) {
  return "root " + in.m.world_name(in.root) + ", depth " + std::to_string(in.depth);
}

// Parts 1-3: the tree is a model, ordered by prefix, antisymmetric, and the
// node/last-world relation only breaks at the frontier.
inline Outcome check_unravel_structure(const SuiteConfig& c, std::uint64_t seed) {
  const auto in = unravel_instance(c, seed);
  const auto u = unravel(in.m, in.root, in.depth);
  const auto r = asimcheck::check_lemma1(u, c.max_probe_depth, c.probe_size);
  if (r.structure_ok() && r.cone_failure_count == 0) return Outcome::pass();
  std::string why;
  if (!r.is_model) why = "unravelling is not a model";
  else if (!r.antisymmetric) why = "not antisymmetric";
  else if (!r.prefix_law) why = "prefix law fails";
  else if (!r.non_frontier_violations.empty())
    why = "non-frontier " + describe(r.non_frontier_violations.front(), u.model(), u.base());
  else why = "nodes with equal last world and headroom disagree";
  return fail(why + " (" + unravel_label(in) + ")", {pointed_json(in.m, in.root)});
}

// Parts 4-5 in headroom-bounded form: node agrees with its last world on
// formulas of implication depth at most min(probe depth, headroom).
inline Outcome check_unravel_agreement(const SuiteConfig& c, std::uint64_t seed) {
  const auto in = unravel_instance(c, seed);
  const auto u = unravel(in.m, in.root, in.depth);
  const auto r = asimcheck::check_lemma1(u, c.max_probe_depth, c.probe_size);
  if (r.agreement_failure_count == 0) return Outcome::pass();
  const auto& f = r.agreement_failures.front();
  return fail(print(f.formula) + " is " + (f.in_unravelling ? "true" : "false") + " at node " +
                  u.model().world_name(f.node) + " but " + (f.in_base ? "true" : "false") +
                  " at " + u.base().world_name(u.last(f.node)) + " (" + unravel_label(in) + ")",
              {pointed_json(in.m, in.root)});
}

inline Outcome check_hom_extraction(const SuiteConfig& c, std::uint64_t seed) {
  SplitMix64 g(seed);
  const auto in = unravel_instance(c, g.next());
  const auto u = unravel(in.m, in.root, in.depth);
  // Even instances map into the base along node -> last world; odd ones
  // compose with the greatest simulation into a second model.
  std::optional<PointedModel> target;
  WRelation z;
  if (g.below(2) == 0) {
    target.emplace(in.m, in.root);
    z = node_to_last_relation(u);
  } else {
    const KripkeModel n = generate_model(g.next(), c.max_worlds, in.m.vocab());
    const auto sim = greatest_simulation(in.m, n);
    std::optional<WorldId> point;
    for (WorldId s = 0; s < n.size() && !point; ++s)
      if (sim.contains(first(in.root), second(s))) point = s;
    if (!point) return Outcome::skip("no simulation from the root");
    target.emplace(n, *point);
    for (WorldId x = 0; x < u.node_count(); ++x)
      for (WorldId s = 0; s < n.size(); ++s)
        if (sim.contains(first(u.last(x)), second(s))) z.insert(first(x), second(s));
  }
  const PointedModel src(u.model(), 0);
  const auto models = {pointed_json(in.m, in.root), pointed_json(target->model, target->point)};
  if (const auto sv = check_simulation(z, src, *target); !sv.empty())
    return fail("constructed relation is not a simulation: " + describe(sv.front(), u.model(), target->model),
                models);
  const WorldMap h = homomorphism_from_total_simulation(z, u, *target);
  const auto hv = check_homomorphism(h, u.model(), target->model);
  if (!hv.empty()) return fail(describe(hv.front(), u.model(), target->model), models);
  if (h(0) != target->point) return fail("h(root) is not the target point", models);
  for (WorldId x = 0; x < u.node_count(); ++x)
    if (!z.contains(first(x), second(h(x))))
      return fail("node " + u.model().world_name(x) + " not Z-related to its image", models);
  return Outcome::pass();
}

inline Outcome check_tagging(const SuiteConfig& c, std::uint64_t seed) {
  const KripkeModel m = generate_model(seed, c.max_worlds, c.max_atoms);
  const KripkeModel t = tag_model(m);
  // Round-trip through the file format and full validation.
  const auto v = validate_model_json(model_to_json(t));
  if (!v.ok()) return fail("tagged model invalid: " + v.violations.front().describe(), {model_to_json(m)});
  for (WorldId w = 0; w < m.size(); ++w) {
    const auto plus = *t.vocab().find(tag_plus(m.world_name(w)));
    const auto minus = *t.vocab().find(tag_minus(m.world_name(w)));
    for (WorldId v2 = 0; v2 < m.size(); ++v2) {
      if (t.holds(plus, v2) != m.related(w, v2) || t.holds(minus, v2) == m.related(v2, w))
        return fail("tag valuation wrong at " + m.world_name(v2) + " for " + m.world_name(w),
                    {model_to_json(m)});
    }
  }
  return Outcome::pass();
}

}  // namespace detail

inline const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = {
      {"monotonicity", "truth persists along R for every probe formula", detail::check_monotonicity},
      {"monotonicity-asim", "the monotonicity relation is an asimulation", detail::check_monotonicity_asim},
      {"preservation", "asimulations preserve probe formulas", detail::check_preservation},
      {"fixpoint-asim", "the refinement limit is an asimulation", detail::check_fixpoint_asim},
      {"fixpoint-vs-oracle", "refinement, synthesis and brute-force search agree",
       detail::check_fixpoint_vs_oracle},
      {"distinguish", "synthesized formulas verify and round-trip", detail::check_distinguish},
      {"unravel-structure", "unravelling structure and frontier-only bisimulation defects", detail::check_unravel_structure},
      {"unravel-agreement", "headroom-bounded node/last-world agreement", detail::check_unravel_agreement},
      {"hom-extraction", "homomorphism extraction from a total simulation", detail::check_hom_extraction},
      {"tagging", "tag atoms define up-sets and non-down-sets", detail::check_tagging},
  };
  return registry;
}

inline std::vector<std::string> all_check_names() {
  std::vector<std::string> out;
  for (const auto& c : check_registry()) out.push_back(c.name);
  return out;
}

inline const CheckSpec& find_check(const std::string& name) {
  for (const auto& c : check_registry())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown check '" + name + "'");
}

struct Counterexample {
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::string detail;
  Json models;
};

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::optional<Counterexample> counterexample;
  std::string repro;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> results;

  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.failed == 0; });
  }
};

inline void validate_config(const SuiteConfig& c) {
  if (c.model_count == 0 || c.max_worlds == 0 || c.max_atoms == 0 || c.max_probe_depth == 0 ||
      c.probe_size == 0 || c.unravel_depth == 0)
    throw std::invalid_argument("suite bounds must be at least 1");
  for (const auto& name : c.checks) find_check(name);
  if (c.instance && *c.instance >= c.model_count)
    throw std::invalid_argument("instance index out of range");
}

inline std::string repro_command(const SuiteConfig& c, const std::string& check, std::size_t instance) {
  std::ostringstream out;
  out << "asimcheck suite --checks " << check << " --seed " << c.seed << " --models " << c.model_count
      << " --max-worlds " << c.max_worlds << " --max-atoms " << c.max_atoms << " --probe-depth "
      << c.max_probe_depth << " --probe-size " << c.probe_size << " --unravel-depth " << c.unravel_depth
      << " --instance " << instance;
  return out.str();
}

// Instance i of every check draws from the stream mix_seed(seed, i).
inline SuiteReport run_suite(const SuiteConfig& config) {
  validate_config(config);
  SuiteReport report{config, {}};
  for (const auto& name : config.checks) {
    const auto& check = find_check(name);
    CheckResult r;
    r.name = name;
    const std::size_t lo = config.instance.value_or(0);
    const std::size_t hi = config.instance ? lo + 1 : config.model_count;
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t seed = mix_seed(config.seed, i);
      Outcome o;
      try {
        o = check.run(config, seed);
      } catch (const std::exception& e) {
        o = {Status::kFail, std::string("exception: ") + e.what(), Json::array()};
      }
      switch (o.status) {
        case Status::kPass: ++r.passed; break;
        case Status::kSkip: ++r.skipped; break;
        case Status::kFail:
          ++r.failed;
          if (!r.counterexample) {
            r.counterexample = Counterexample{i, seed, o.detail, o.models};
            r.repro = repro_command(config, name, i);
          }
          break;
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

inline std::string render_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "seed " << report.config.seed << ", " << report.config.model_count << " instances, max worlds "
      << report.config.max_worlds << ", max atoms " << report.config.max_atoms << "\n";
  std::size_t width = 5;
  for (const auto& r : report.results) width = std::max(width, r.name.size());
  const auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(n, s.size()), ' ');
    return s;
  };
  const auto num = [](std::size_t v) {
    std::string s = std::to_string(v);
    return std::string(s.size() < 6 ? 6 - s.size() : 0, ' ') + s;
  };
  out << pad("check", width) << "    pass  fail  skip\n";
  for (const auto& r : report.results)
    out << pad(r.name, width) << "  " << num(r.passed) << num(r.failed) << num(r.skipped) << "\n";
  for (const auto& r : report.results) {
    if (!r.counterexample) continue;
    const auto& ce = *r.counterexample;
    out << "\nFAIL " << r.name << " instance " << ce.instance << ": " << ce.detail << "\n";
    out << "  repro: " << r.repro << "\n";
    out << "  models: " << ce.models.dump() << "\n";
  }
  out << (report.ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

inline Json render_json(const SuiteReport& report) {
  const auto& c = report.config;
  Json j;
  j["config"] = {{"models", c.model_count},        {"max_worlds", c.max_worlds},
                 {"max_atoms", c.max_atoms},       {"probe_depth", c.max_probe_depth},
                 {"probe_size", c.probe_size},     {"unravel_depth", c.unravel_depth},
                 {"seed", c.seed},                 {"checks", c.checks}};
  if (c.instance) j["config"]["instance"] = *c.instance;
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json e{{"check", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}};
    if (r.counterexample) {
      e["counterexample"] = {{"instance", r.counterexample->instance},
                             {"seed", r.counterexample->seed},
                             {"detail", r.counterexample->detail},
                             {"models", r.counterexample->models},
                             {"repro", r.repro}};
    }
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["ok"] = report.ok();
  return j;
}

}  // namespace asimcheck

#endif  // ASIMCHECK_SUITE_HPP_
