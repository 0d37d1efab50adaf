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

// asimcheck command-line front end.
//
// Exit codes: 0 success / property holds, 1 property fails or relation
// absent, 2 usage, I/O or validation error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asimcheck/asimcheck.hpp"

namespace {

using namespace asimcheck;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Options {
  bool json = false;
  std::size_t probe_depth = 2;
  std::size_t probe_size = kDefaultProbeSize;
};

void emit(const Json& j, const std::optional<std::string>& path = std::nullopt) {
  if (path) {
    write_json_file(*path, j);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

std::vector<Formula> probe_for(const Vocabulary& vocab, const Options& o) {
  return enumerate_formulas(vocab, o.probe_depth, o.probe_size);
}

// One formula per line; blank lines and lines starting with '#' are skipped.
std::vector<Formula> read_formula_list(const std::string& path, const Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<Formula> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out.push_back(parse(line, vocab));
  }
  return out;
}

int report_violations(const std::vector<Violation>& vs, const KripkeModel& m1, const KripkeModel& m2,
                      const Options& o, const std::string& ok_text) {
  if (o.json) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(violation_to_json(v, m1, m2));
    emit({{"ok", vs.empty()}, {"violations", std::move(arr)}});
  } else if (vs.empty()) {
    std::cout << ok_text << '\n';
  } else {
    for (const auto& v : vs) {
      std::cout << describe(v, m1, m2);
      if (!v.atom.empty()) std::cout << " atom " << v.atom;
      if (v.formula) std::cout << " formula " << print(*v.formula);
      std::cout << '\n';
    }
  }
  return vs.empty() ? kOk : kNegative;
}

struct PairArgs {
  std::string m1, w1, m2, w2;
};

void add_pair_args(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("model1", a.m1, "first model file")->required();
  cmd->add_option("world1", a.w1, "point in the first model")->required();
  cmd->add_option("model2", a.m2, "second model file")->required();
  cmd->add_option("world2", a.w2, "point in the second model")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asimulations and intuitionistic Kripke models"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");

  const auto add_probe = [&](CLI::App* cmd) {
    cmd->add_option("--probe-depth", opt.probe_depth, "maximal implication depth of probe formulas");
    cmd->add_option("--probe-size", opt.probe_size, "maximal size of probe formulas");
  };

  std::function<int()> action;

  // validate
  std::string v_model;
  auto* validate_cmd = app.add_subcommand("validate", "check that a model file is a valid model");
  validate_cmd->add_option("model", v_model)->required();
  validate_cmd->callback([&] {
    action = [&] {
      const auto v = validate_model_json(read_json_file(v_model));
      if (opt.json) {
        Json arr = Json::array();
        for (const auto& x : v.violations) arr.push_back(x.describe());
        emit({{"ok", v.ok()}, {"violations", std::move(arr)}});
      } else if (v.ok()) {
        std::cout << "valid: " << v.model->size() << " worlds, " << v.model->vocab().size() << " atoms\n";
      } else {
        for (const auto& x : v.violations) std::cout << x.describe() << '\n';
      }
      return v.ok() ? kOk : kNegative;
    };
  });

  // sat
  std::string s_model, s_world, s_formula;
  auto* sat_cmd = app.add_subcommand("sat", "evaluate a formula at a world");
  sat_cmd->add_option("model", s_model)->required();
  sat_cmd->add_option("world", s_world)->required();
  sat_cmd->add_option("formula", s_formula)->required();
  sat_cmd->callback([&] {
    action = [&] {
      const auto m = read_model(s_model);
      const bool holds = satisfies(m, s_world, parse(s_formula, m.vocab()));
      if (opt.json) emit({{"holds", holds}});
      else std::cout << (holds ? "true" : "false") << '\n';
      return holds ? kOk : kNegative;
    };
  });

  // theory
  std::string t_model, t_world;
  std::optional<std::string> t_probe, t_successor;
  auto* theory_cmd = app.add_subcommand("theory", "split a probe set by truth at a world");
  theory_cmd->add_option("model", t_model)->required();
  theory_cmd->add_option("world", t_world)->required();
  theory_cmd->add_option("--formulas", t_probe, "file with one formula per line (default: enumerated probe)");
  theory_cmd->add_option("--satisfiable", t_successor,
                         "theory file; report the first successor satisfying it");
  add_probe(theory_cmd);
  theory_cmd->callback([&] {
    action = [&] {
      const auto m = read_model(t_model);
      const WorldId w = m.world_id(t_world);
      if (t_successor) {
        const auto t = theory_from_json(read_json_file(*t_successor), m.vocab());
        const auto u = satisfiable_by_successor(m, w, t);
        if (opt.json) emit({{"successor", u ? Json(m.world_name(*u)) : Json(nullptr)}});
        else std::cout << (u ? m.world_name(*u) : "none") << '\n';
        return u ? kOk : kNegative;
      }
      const auto probe = t_probe ? read_formula_list(*t_probe, m.vocab()) : probe_for(m.vocab(), opt);
      emit(theory_to_json(theory_over(m, w, probe)));
      return kOk;
    };
  });

  // asim
  PairArgs a_args;
  std::optional<std::string> a_emit, a_relation;
  auto* asim_cmd = app.add_subcommand("asim", "greatest asimulation, or check a given relation");
  add_pair_args(asim_cmd, a_args);
  asim_cmd->add_option("--emit-relation", a_emit, "write the greatest asimulation here");
  asim_cmd->add_option("--relation", a_relation, "check this relation instead");
  asim_cmd->callback([&] {
    action = [&] {
      const PointedModel pm1(read_model(a_args.m1), a_args.w1), pm2(read_model(a_args.m2), a_args.w2);
      if (a_relation) {
        const auto r = relation_from_json(read_json_file(*a_relation), pm1.model, pm2.model);
        return report_violations(check_asimulation(r, pm1, pm2), pm1.model, pm2.model, opt,
                                 "asimulation");
      }
      const auto a = greatest_asimulation(pm1, pm2);
      if (a && a_emit) write_json_file(*a_emit, relation_to_json(*a, pm1.model, pm2.model));
      if (opt.json) {
        emit({{"exists", a.has_value()},
              {"relation", a ? relation_to_json(*a, pm1.model, pm2.model) : Json(nullptr)}});
      } else {
        std::cout << (a ? "asimulation exists (" + std::to_string(a->size()) + " pairs)" : "no asimulation")
                  << '\n';
      }
      return a ? kOk : kNegative;
    };
  });

  // bisim, sim-check
  PairArgs b_args;
  std::string b_relation;
  auto* bisim_cmd = app.add_subcommand("bisim", "check a bisimulation");
  add_pair_args(bisim_cmd, b_args);
  bisim_cmd->add_option("--relation", b_relation, "relation file")->required();
  bisim_cmd->callback([&] {
    action = [&] {
      const PointedModel pm1(read_model(b_args.m1), b_args.w1), pm2(read_model(b_args.m2), b_args.w2);
      const auto r = relation_from_json(read_json_file(b_relation), pm1.model, pm2.model);
      return report_violations(check_bisimulation(r, pm1, pm2), pm1.model, pm2.model, opt, "bisimulation");
    };
  });

  PairArgs z_args;
  std::string z_relation;
  auto* sim_cmd = app.add_subcommand("sim-check", "check a simulation");
  add_pair_args(sim_cmd, z_args);
  sim_cmd->add_option("--relation", z_relation, "relation file")->required();
  sim_cmd->callback([&] {
    action = [&] {
      const PointedModel pm1(read_model(z_args.m1), z_args.w1), pm2(read_model(z_args.m2), z_args.w2);
      const auto r = relation_from_json(read_json_file(z_relation), pm1.model, pm2.model);
      return report_violations(check_simulation(r, pm1, pm2), pm1.model, pm2.model, opt, "simulation");
    };
  });

  // hom-check, embed-check
  std::string h_m1, h_m2, h_map;
  auto* hom_cmd = app.add_subcommand("hom-check", "check a homomorphism");
  hom_cmd->add_option("model1", h_m1)->required();
  hom_cmd->add_option("model2", h_m2)->required();
  hom_cmd->add_option("--map", h_map, "world map file")->required();
  hom_cmd->callback([&] {
    action = [&] {
      const auto m1 = read_model(h_m1), m2 = read_model(h_m2);
      const auto h = world_map_from_json(read_json_file(h_map), m1, m2);
      return report_violations(check_homomorphism(h, m1, m2), m1, m2, opt, "homomorphism");
    };
  });

  std::string e_m1, e_m2, e_map;
  auto* embed_cmd = app.add_subcommand("embed-check", "check an embedding against a probe set");
  embed_cmd->add_option("model1", e_m1)->required();
  embed_cmd->add_option("model2", e_m2)->required();
  embed_cmd->add_option("--map", e_map, "world map file")->required();
  add_probe(embed_cmd);
  embed_cmd->callback([&] {
    action = [&] {
      const auto m1 = read_model(e_m1), m2 = read_model(e_m2);
      const auto h = world_map_from_json(read_json_file(e_map), m1, m2);
      return report_violations(check_embedding(h, m1, m2, probe_for(m1.vocab(), opt)), m1, m2, opt,
                               "embedding");
    };
  });

  // elementary
  std::string el_sub, el_super;
  auto* elem_cmd = app.add_subcommand("elementary", "probe-relative elementary submodel check");
  elem_cmd->add_option("submodel", el_sub)->required();
  elem_cmd->add_option("model", el_super)->required();
  add_probe(elem_cmd);
  elem_cmd->callback([&] {
    action = [&] {
      const auto m = read_model(el_sub), n = read_model(el_super);
      const auto r = is_elementary_submodel(m, n, probe_for(m.vocab(), opt));
      if (opt.json) {
        emit({{"holds", r.holds},
              {"world", r.world ? Json(*r.world) : Json(nullptr)},
              {"formula", r.formula ? Json(print(*r.formula)) : Json(nullptr)}});
      } else if (r.holds) {
        std::cout << "elementary\n";
      } else {
        std::cout << "not elementary: " << print(*r.formula) << " differs at " << *r.world << '\n';
      }
      return r.holds ? kOk : kNegative;
    };
  });

  // unravel
  std::string u_model, u_root;
  std::size_t u_depth = 0;
  std::optional<std::string> u_out;
  bool u_check = false;
  auto* unravel_cmd = app.add_subcommand("unravel", "depth-bounded unravelling around a world");
  unravel_cmd->add_option("model", u_model)->required();
  unravel_cmd->add_option("root", u_root)->required();
  unravel_cmd->add_option("--depth,-k", u_depth, "maximal path extension")->required();
  unravel_cmd->add_option("--output,-o", u_out, "write the unravelled model here");
  unravel_cmd->add_flag("--check", u_check, "run the unravelling checks and print a report");
  add_probe(unravel_cmd);
  unravel_cmd->callback([&] {
    action = [&] {
      const auto m = read_model(u_model);
      const auto u = unravel(m, m.world_id(u_root), u_depth);
      if (!u_check) {
        emit(unravelled_to_json(u), u_out);
        return kOk;
      }
      if (u_out) write_json_file(*u_out, unravelled_to_json(u));
      const auto r = check_lemma1(u, opt.probe_depth, opt.probe_size);
      Json failures = Json::array();
      for (const auto& f : r.agreement_failures) {
        failures.push_back({{"node", u.model().world_name(f.node)},
                            {"formula", print(f.formula)},
                            {"in_unravelling", f.in_unravelling},
                            {"in_base", f.in_base}});
      }
      const Json j{{"nodes", u.node_count()},
                   {"is_model", r.is_model},
                   {"antisymmetric", r.antisymmetric},
                   {"prefix_law", r.prefix_law},
                   {"frontier_violations", r.frontier_violations},
                   {"non_frontier_violations", r.non_frontier_violations.size()},
                   {"agreement_checks", r.agreement_checks},
                   {"agreement_failures", r.agreement_failure_count},
                   {"agreement_examples", std::move(failures)},
                   {"cone_checks", r.cone_checks},
                   {"cone_failures", r.cone_failure_count},
                   {"ok", r.ok()}};
      if (opt.json) {
        emit(j);
      } else {
        for (const auto& [k, v] : j.items()) {
          if (k != "agreement_examples") std::cout << k << ": " << v.dump() << '\n';
        }
        for (const auto& f : r.agreement_failures) {
          std::cout << "  " << print(f.formula) << " at " << u.model().world_name(f.node) << ": "
                    << std::boolalpha << f.in_unravelling << " in the unravelling, " << f.in_base
                    << " at " << u.base().world_name(u.last(f.node)) << '\n';
        }
      }
      return r.ok() ? kOk : kNegative;
    };
  });

  // tag
  std::string tg_model;
  std::optional<std::string> tg_out;
  auto* tag_cmd = app.add_subcommand("tag", "add tag atoms q+_w and q-_w for every world");
  tag_cmd->add_option("model", tg_model)->required();
  tag_cmd->add_option("--output,-o", tg_out, "write the tagged model here");
  tag_cmd->callback([&] {
    action = [&] {
      emit(model_to_json(tag_model(read_model(tg_model))), tg_out);
      return kOk;
    };
  });

  // distinguish
  PairArgs d_args;
  auto* dist_cmd = app.add_subcommand("distinguish", "formula true at point 1 and false at point 2");
  add_pair_args(dist_cmd, d_args);
  dist_cmd->callback([&] {
    action = [&] {
      const PointedModel pm1(read_model(d_args.m1), d_args.w1), pm2(read_model(d_args.m2), d_args.w2);
      const auto r = distinguish(pm1, pm2);
      if (opt.json) {
        emit(certificate_to_json(r));
      } else {
        std::cout << (r.formula ? print(*r.formula) : "none") << '\n';
        std::cout << certificate_to_json(r).dump() << '\n';
      }
      return r.formula ? kOk : kNegative;
    };
  });

  // suite
  SuiteConfig sc;
  std::vector<std::string> s_checks;
  std::optional<std::size_t> s_instance;
  bool s_list = false;
  auto* suite_cmd = app.add_subcommand("suite", "run the property suite over random models");
  suite_cmd->add_option("--checks", s_checks, "checks to run (default: all)")->delimiter(',');
  suite_cmd->add_option("--seed", sc.seed);
  suite_cmd->add_option("--models", sc.model_count, "instances per check");
  suite_cmd->add_option("--max-worlds", sc.max_worlds);
  suite_cmd->add_option("--max-atoms", sc.max_atoms);
  suite_cmd->add_option("--probe-depth", sc.max_probe_depth);
  suite_cmd->add_option("--probe-size", sc.probe_size);
  suite_cmd->add_option("--unravel-depth", sc.unravel_depth);
  suite_cmd->add_option("--instance", s_instance, "run a single instance");
  suite_cmd->add_flag("--list", s_list, "list the registered checks");
  suite_cmd->callback([&] {
    action = [&] {
      if (s_list) {
        for (const auto& c : check_registry()) std::cout << c.name << "  " << c.description << '\n';
        return kOk;
      }
      sc.checks = suite_cmd->count("--checks") ? s_checks : all_check_names();
      std::erase(sc.checks, std::string());
      sc.instance = s_instance;
      const auto report = run_suite(sc);
      if (opt.json) emit(render_json(report));
      else std::cout << render_text(report);
      return report.ok() ? kOk : kNegative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: formula: " << e.what() << '\n';
  } catch (const NodeCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (set " << kNodeCapEnv << " to raise it)\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
