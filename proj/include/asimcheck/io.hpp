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

// JSON file formats for models, theories, relations, world maps and
// distinguishing certificates.

#ifndef ASIMCHECK_IO_HPP_
#define ASIMCHECK_IO_HPP_

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asimcheck/distinguish.hpp"
#include "asimcheck/formula.hpp"
#include "asimcheck/kripke.hpp"
#include "asimcheck/relations.hpp"
#include "asimcheck/semantics.hpp"
#include "asimcheck/unravel.hpp"
#include "json.hpp"

namespace asimcheck {

using Json = nlohmann::ordered_json;

// Malformed or unreadable input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

namespace detail {

inline std::vector<std::string> string_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

struct ModelFile {
  RawModel raw;
  Closure closure = Closure::kReflexiveTransitive;
};

inline ModelFile model_file_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("model must be a JSON object");
  ModelFile f;
  if (!j.contains("worlds")) throw InputError("model is missing 'worlds'");
  f.raw.worlds = detail::string_array(j.at("worlds"), "worlds");
  if (j.contains("order")) {
    const auto& order = j.at("order");
    if (!order.is_array()) throw InputError("order must be an array of pairs");
    for (const auto& p : order) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw InputError("order entries must be 2-element arrays of world names");
      f.raw.order.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  if (j.contains("closure")) {
    if (!j.at("closure").is_string()) throw InputError("closure must be a string");
    try {
      f.closure = parse_closure(j.at("closure").get<std::string>());
    } catch (const ModelError& e) {
      throw InputError(e.what());
    }
  }
  if (j.contains("valuation")) {
    const auto& val = j.at("valuation");
    if (!val.is_object()) throw InputError("valuation must be an object");
    for (const auto& [atom, ws] : val.items())
      f.raw.valuation.emplace_back(atom, detail::string_array(ws, "valuation of " + atom));
  }
  if (j.contains("vocab")) f.raw.vocab = detail::string_array(j.at("vocab"), "vocab");
  return f;
}

// Applies the file's closure and validates.
inline Validation validate_model_json(const Json& j) {
  auto f = model_file_from_json(j);
  return close_and_validate(std::move(f.raw), f.closure);
}

inline KripkeModel model_from_json(const Json& j) {
  const auto v = validate_model_json(j);
  if (!v.ok()) throw ModelError("invalid model: " + v.violations.front().describe());
  return *v.model;
}

inline KripkeModel read_model(const std::string& path) { return model_from_json(read_json_file(path)); }

// The full order is written out, so the closure is "none".
inline Json model_to_json(const KripkeModel& m) {
  Json j;
  j["worlds"] = m.worlds();
  Json order = Json::array();
  for (const auto& [a, b] : m.order_pairs()) order.push_back({m.world_name(a), m.world_name(b)});
  j["order"] = std::move(order);
  j["closure"] = "none";
  Json val = Json::object();
  for (std::size_t p = 0; p < m.vocab().size(); ++p) {
    Json ws = Json::array();
    for (WorldId w = 0; w < m.size(); ++w)
      if (m.holds(p, w)) ws.push_back(m.world_name(w));
    val[m.vocab()[p]] = std::move(ws);
  }
  j["valuation"] = std::move(val);
  j["vocab"] = m.vocab().atoms();
  return j;
}

inline Json unravelled_to_json(const UnravelledModel& u) {
  Json j = model_to_json(u.model());
  j["unravel"] = {{"base", model_to_json(u.base())},
                  {"root", u.base().world_name(u.root())},
                  {"depth", u.depth()}};
  return j;
}

inline Theory theory_from_json(const Json& j, const Vocabulary& vocab) {
  if (!j.is_object()) throw InputError("theory must be a JSON object");
  Theory t;
  const auto read = [&](const char* key, std::vector<Formula>& out) {
    if (!j.contains(key)) return;
    for (const auto& s : detail::string_array(j.at(key), key)) out.push_back(parse(s, vocab));
  };
  read("pos", t.pos);
  read("neg", t.neg);
  return t;
}

inline Json theory_to_json(const Theory& t) {
  Json pos = Json::array(), neg = Json::array();
  for (const auto& f : t.pos) pos.push_back(print(f));
  for (const auto& f : t.neg) neg.push_back(print(f));
  return {{"pos", std::move(pos)}, {"neg", std::move(neg)}};
}

inline WRelation relation_from_json(const Json& j, const KripkeModel& m1, const KripkeModel& m2) {
  if (!j.is_array()) throw InputError("relation must be an array of quadruples");
  const auto sided = [&](const Json& side, const Json& world) {
    if (!side.is_number_integer() || !world.is_string())
      throw InputError("relation entries must be [side, world, side, world]");
    const auto s = side.get<int>();
    if (s != 1 && s != 2) throw InputError("relation side must be 1 or 2");
    const auto& m = s == 1 ? m1 : m2;
    const auto name = world.get<std::string>();
    const auto w = m.find_world(name);
    if (!w) throw InputError("unknown world '" + name + "' on side " + std::to_string(s));
    return SidedWorld{s == 1 ? Side::kFirst : Side::kSecond, *w};
  };
  WRelation r;
  for (const auto& q : j) {
    if (!q.is_array() || q.size() != 4) throw InputError("relation entries must be quadruples");
    r.insert(sided(q[0], q[1]), sided(q[2], q[3]));
  }
  return r;
}

inline Json relation_to_json(const WRelation& r, const KripkeModel& m1, const KripkeModel& m2) {
  const auto name = [&](SidedWorld w) {
    return (w.side == Side::kFirst ? m1 : m2).world_name(w.world);
  };
  Json out = Json::array();
  for (const auto& [a, b] : r)
    out.push_back({static_cast<int>(a.side), name(a), static_cast<int>(b.side), name(b)});
  return out;
}

// A world map file is an object from worlds of model 1 to worlds of model 2.
inline WorldMap world_map_from_json(const Json& j, const KripkeModel& m1, const KripkeModel& m2) {
  if (!j.is_object()) throw InputError("world map must be a JSON object");
  constexpr WorldId kUnset = static_cast<WorldId>(-1);
  WorldMap h;
  h.image.assign(m1.size(), kUnset);
  for (const auto& [from, to] : j.items()) {
    const auto v = m1.find_world(from);
    if (!v) throw InputError("unknown world '" + from + "' in model 1");
    if (!to.is_string()) throw InputError("world map values must be world names");
    const auto s = m2.find_world(to.get<std::string>());
    if (!s) throw InputError("unknown world '" + to.get<std::string>() + "' in model 2");
    h.image[*v] = *s;
  }
  for (WorldId v = 0; v < m1.size(); ++v)
    if (h.image[v] == kUnset) throw InputError("world map is not total: missing '" + m1.world_name(v) + "'");
  return h;
}

inline Json world_map_to_json(const WorldMap& h, const KripkeModel& m1, const KripkeModel& m2) {
  Json j = Json::object();
  for (WorldId v = 0; v < h.image.size(); ++v) j[m1.world_name(v)] = m2.world_name(h.image[v]);
  return j;
}

inline Json certificate_to_json(const DistinguishResult& r) {
  Json j;
  j["formula"] = r.formula ? Json(print(*r.formula)) : Json(nullptr);
  j["rank"] = r.rank;
  j["value_at_1"] = r.value_at_1;
  j["value_at_2"] = r.value_at_2;
  return j;
}

inline Json violation_to_json(const Violation& v, const KripkeModel& m1, const KripkeModel& m2) {
  Json witness = Json::array();
  for (const auto& w : v.witness)
    witness.push_back({static_cast<int>(w.side), (w.side == Side::kFirst ? m1 : m2).world_name(w.world)});
  Json j{{"condition", v.condition}, {"witness", std::move(witness)}};
  if (!v.atom.empty()) j["atom"] = v.atom;
  if (v.formula) j["formula"] = print(*v.formula);
  return j;
}

}  // namespace asimcheck

#endif  // ASIMCHECK_IO_HPP_
