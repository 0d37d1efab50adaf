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

// Finite intuitionistic Kripke models: a non-empty set of worlds, a preorder
// and a valuation that is upward closed along the preorder.
//
// A KripkeModel can only be obtained through validate() (or the operations
// below, which route through it), so every instance satisfies the model
// invariants. Instances are immutable and cheap to copy.

#ifndef ASIMCHECK_KRIPKE_HPP_
#define ASIMCHECK_KRIPKE_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "asimcheck/formula.hpp"

namespace asimcheck {

using WorldId = std::size_t;
using WorldSet = boost::dynamic_bitset<>;

// Structural problems with model input: these are not invariant violations
// but malformed data.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Closure { kNone, kReflexive, kReflexiveTransitive };

inline Closure parse_closure(const std::string& s) {
  if (s == "none") return Closure::kNone;
  if (s == "reflexive") return Closure::kReflexive;
  if (s == "reflexive-transitive") return Closure::kReflexiveTransitive;
  throw ModelError("unknown closure mode '" + s + "'");
}

inline std::string to_string(Closure c) {
  switch (c) {
    case Closure::kNone: return "none";
    case Closure::kReflexive: return "reflexive";
    case Closure::kReflexiveTransitive: return "reflexive-transitive";
  }
  return "none";
}

using NamedPair = std::pair<std::string, std::string>;

// Model as read from a file, before closure and validation.
struct RawModel {
  std::vector<std::string> worlds;
  std::vector<NamedPair> order;
  // Atom -> worlds, in file order.
  std::vector<std::pair<std::string, std::vector<std::string>>> valuation;
  // Defaults to the valuation keys.
  std::optional<std::vector<std::string>> vocab;
};

namespace detail {

// Index-based model description shared by validate() and the constructions
// that derive new models from valid ones.
struct ModelData {
  std::vector<std::string> worlds;
  Vocabulary vocab;
  std::vector<std::vector<WorldId>> successors;  // not necessarily sorted
  std::vector<WorldSet> valuation;               // indexed like vocab
};

inline std::unordered_map<std::string, WorldId> index_worlds(
    const std::vector<std::string>& worlds) {
  std::unordered_map<std::string, WorldId> index;
  for (WorldId i = 0; i < worlds.size(); ++i) {
    if (!index.emplace(worlds[i], i).second)
      throw ModelError("duplicate world name '" + worlds[i] + "'");
  }
  return index;
}

inline WorldId lookup_world(const std::unordered_map<std::string, WorldId>& index,
                            const std::string& name) {
  const auto it = index.find(name);
  if (it == index.end()) throw ModelError("unknown world '" + name + "'");
  return it->second;
}

}  // namespace detail

class KripkeModel {
 public:
  std::size_t size() const { return data_->worlds.size(); }
  const std::vector<std::string>& worlds() const { return data_->worlds; }
  const std::string& world_name(WorldId w) const { return data_->worlds.at(w); }
  std::optional<WorldId> find_world(const std::string& name) const {
    const auto it = data_->world_index.find(name);
    if (it == data_->world_index.end()) return std::nullopt;
    return it->second;
  }
  WorldId world_id(const std::string& name) const {
    return detail::lookup_world(data_->world_index, name);
  }

  const Vocabulary& vocab() const { return data_->vocab; }

  // Sorted R-successors of w, including w itself.
  std::span<const WorldId> successors(WorldId w) const { return data_->successors.at(w); }
  bool related(WorldId from, WorldId to) const {
    const auto& s = data_->successors.at(from);
    return std::binary_search(s.begin(), s.end(), to);
  }

  // Worlds where the atom with vocabulary index `atom` holds.
  const WorldSet& valuation(std::size_t atom) const { return data_->valuation.at(atom); }
  bool holds(std::size_t atom, WorldId w) const { return data_->valuation.at(atom).test(w); }

  // All pairs of the order, in canonical (world, world) order.
  std::vector<std::pair<WorldId, WorldId>> order_pairs() const {
    std::vector<std::pair<WorldId, WorldId>> out;
    for (WorldId w = 0; w < size(); ++w) {
      for (WorldId v : successors(w)) out.emplace_back(w, v);
    }
    return out;
  }

  // Equality of the described structures, independent of the order in which
  // worlds and atoms are listed.
  friend bool operator==(const KripkeModel& a, const KripkeModel& b) {
    if (a.data_ == b.data_) return true;
    if (a.size() != b.size() || !a.vocab().same_atoms(b.vocab())) return false;
    std::vector<WorldId> to_b(a.size());
    for (WorldId w = 0; w < a.size(); ++w) {
      const auto found = b.find_world(a.world_name(w));
      if (!found) return false;
      to_b[w] = *found;
    }
    for (WorldId w = 0; w < a.size(); ++w) {
      if (a.successors(w).size() != b.successors(to_b[w]).size()) return false;
      for (WorldId v : a.successors(w)) {
        if (!b.related(to_b[w], to_b[v])) return false;
      }
    }
    for (std::size_t p = 0; p < a.vocab().size(); ++p) {
      const std::size_t q = *b.vocab().find(a.vocab()[p]);
      for (WorldId w = 0; w < a.size(); ++w) {
        if (a.holds(p, w) != b.holds(q, to_b[w])) return false;
      }
    }
    return true;
  }

 private:
  struct Data {
    std::vector<std::string> worlds;
    std::unordered_map<std::string, WorldId> world_index;
    Vocabulary vocab;
    std::vector<std::vector<WorldId>> successors;
    std::vector<WorldSet> valuation;
  };

  explicit KripkeModel(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend struct ModelFactory;

  std::shared_ptr<const Data> data_;
};

struct PointedModel {
  PointedModel(KripkeModel m, WorldId w) : model(std::move(m)), point(w) {
    if (point >= model.size()) throw ModelError("point out of range");
  }
  PointedModel(KripkeModel m, const std::string& w) : model(std::move(m)), point(0) {
    point = model.world_id(w);
  }

  KripkeModel model;
  WorldId point;
};

// ---------------------------------------------------------------------------
// Validation.

struct ModelViolation {
  enum class Kind { kNotReflexive, kNotTransitive, kNotMonotone };
  Kind kind;
  // Reflexive: {w}. Transitive: {a, b, c} with aRb, bRc, not aRc.
  // Monotone: {w, v} with wRv, w in V(atom), v not in V(atom).
  std::vector<std::string> worlds;
  std::string atom;

  std::string describe() const {
    switch (kind) {
      case Kind::kNotReflexive:
        return "order not reflexive: missing (" + worlds[0] + ", " + worlds[0] + ")";
      case Kind::kNotTransitive:
        return "order not transitive: (" + worlds[0] + ", " + worlds[1] + ") and (" +
               worlds[1] + ", " + worlds[2] + ") but not (" + worlds[0] + ", " + worlds[2] +
               ")";
      case Kind::kNotMonotone:
        return "valuation not monotone: " + atom + " holds at " + worlds[0] + ", " +
               worlds[0] + " R " + worlds[1] + ", " + atom + " fails at " + worlds[1];
    }
    return {};
  }
};

struct Validation {
  std::optional<KripkeModel> model;
  // One witness per violated invariant, first in canonical order.
  std::vector<ModelViolation> violations;

  bool ok() const { return model.has_value(); }
};

struct ModelFactory {
  static Validation validate(detail::ModelData d) {
    if (d.worlds.empty()) throw ModelError("model has no worlds");
    const std::size_t n = d.worlds.size();
    auto data = std::make_shared<KripkeModel::Data>();
    data->world_index = detail::index_worlds(d.worlds);
    for (auto& s : d.successors) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    Validation result;
    const auto name = [&](WorldId w) { return d.worlds[w]; };
    const auto has = [&](WorldId a, WorldId b) {
      return std::binary_search(d.successors[a].begin(), d.successors[a].end(), b);
    };

    for (WorldId w = 0; w < n; ++w) {
      if (!has(w, w)) {
        result.violations.push_back({ModelViolation::Kind::kNotReflexive, {name(w)}, {}});
        break;
      }
    }
    [&] {
      for (WorldId a = 0; a < n; ++a) {
        for (WorldId b : d.successors[a]) {
          for (WorldId c : d.successors[b]) {
            if (!has(a, c)) {
              result.violations.push_back(
                  {ModelViolation::Kind::kNotTransitive, {name(a), name(b), name(c)}, {}});
              return;
            }
          }
        }
      }
    }();
    [&] {
      for (WorldId w = 0; w < n; ++w) {
        for (WorldId v : d.successors[w]) {
          for (std::size_t p = 0; p < d.vocab.size(); ++p) {
            if (d.valuation[p].test(w) && !d.valuation[p].test(v)) {
              result.violations.push_back(
                  {ModelViolation::Kind::kNotMonotone, {name(w), name(v)}, d.vocab[p]});
              return;
            }
          }
        }
      }
    }();
    if (!result.violations.empty()) return result;

    data->worlds = std::move(d.worlds);
    data->vocab = std::move(d.vocab);
    data->successors = std::move(d.successors);
    data->valuation = std::move(d.valuation);
    result.model = KripkeModel(std::move(data));
    return result;
  }

  // For constructions that preserve the invariants by design; a violation
  // here is a bug.
  static KripkeModel build(detail::ModelData d) {
    Validation v = validate(std::move(d));
    if (!v.ok()) throw std::logic_error("internal construction broke model invariants: " +
                                        v.violations.front().describe());
    return std::move(*v.model);
  }
};

inline detail::ModelData to_data(const KripkeModel& m) {
  detail::ModelData d;
  d.worlds = m.worlds();
  d.vocab = m.vocab();
  for (WorldId w = 0; w < m.size(); ++w) {
    d.successors.emplace_back(m.successors(w).begin(), m.successors(w).end());
  }
  for (std::size_t p = 0; p < m.vocab().size(); ++p) d.valuation.push_back(m.valuation(p));
  return d;
}

// Resolves names; the order is taken as given (apply close() first if the
// input is abbreviated).
inline Validation validate(const RawModel& raw) {
  detail::ModelData d;
  d.worlds = raw.worlds;
  const auto index = detail::index_worlds(d.worlds);
  if (d.worlds.empty()) throw ModelError("model has no worlds");

  std::vector<std::string> vocab_names;
  if (raw.vocab) {
    vocab_names = *raw.vocab;
  } else {
    for (const auto& [atom, ws] : raw.valuation) vocab_names.push_back(atom);
  }
  try {
    d.vocab = Vocabulary(vocab_names);
  } catch (const VocabularyError& e) {
    throw ModelError(e.what());
  }

  d.successors.resize(d.worlds.size());
  for (const auto& [a, b] : raw.order) {
    d.successors[detail::lookup_world(index, a)].push_back(detail::lookup_world(index, b));
  }
  d.valuation.assign(d.vocab.size(), WorldSet(d.worlds.size()));
  std::vector<bool> seen(d.vocab.size(), false);
  for (const auto& [atom, ws] : raw.valuation) {
    const auto p = d.vocab.find(atom);
    if (!p) throw ModelError("valuation references unknown atom '" + atom + "'");
    if (seen[*p]) throw ModelError("duplicate valuation entry for atom '" + atom + "'");
    seen[*p] = true;
    for (const auto& w : ws) d.valuation[*p].set(detail::lookup_world(index, w));
  }
  return ModelFactory::validate(std::move(d));
}

// Closes `pairs` over `worlds` under the requested closure. Output is in
// canonical order (by position in `worlds`).
inline std::vector<NamedPair> close(const std::vector<std::string>& worlds,
                                    const std::vector<NamedPair>& pairs, Closure mode) {
  const auto index = detail::index_worlds(worlds);
  const std::size_t n = worlds.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : pairs) {
    rel[detail::lookup_world(index, a)][detail::lookup_world(index, b)] = true;
  }
  if (mode != Closure::kNone) {
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  }
  if (mode == Closure::kReflexiveTransitive) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (rel[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (rel[k][j]) rel[i][j] = true;
  }
  std::vector<NamedPair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) out.emplace_back(worlds[i], worlds[j]);
  return out;
}

inline Validation close_and_validate(RawModel raw, Closure mode) {
  raw.order = close(raw.worlds, raw.order, mode);
  return validate(raw);
}

// ---------------------------------------------------------------------------
// Submodels and chains.

// The submodel of n on `ws`; world order follows n.
inline KripkeModel submodel(const KripkeModel& n, const std::vector<WorldId>& ws) {
  if (ws.empty()) throw ModelError("submodel needs at least one world");
  std::vector<bool> keep(n.size(), false);
  for (WorldId w : ws) keep.at(w) = true;
  std::vector<WorldId> new_id(n.size(), 0);
  detail::ModelData d;
  d.vocab = n.vocab();
  for (WorldId w = 0; w < n.size(); ++w) {
    if (!keep[w]) continue;
    new_id[w] = d.worlds.size();
    d.worlds.push_back(n.world_name(w));
  }
  d.successors.resize(d.worlds.size());
  d.valuation.assign(d.vocab.size(), WorldSet(d.worlds.size()));
  for (WorldId w = 0; w < n.size(); ++w) {
    if (!keep[w]) continue;
    for (WorldId v : n.successors(w)) {
      if (keep[v]) d.successors[new_id[w]].push_back(new_id[v]);
    }
    for (std::size_t p = 0; p < d.vocab.size(); ++p) {
      if (n.holds(p, w)) d.valuation[p].set(new_id[w]);
    }
  }
  return ModelFactory::build(std::move(d));
}

inline KripkeModel submodel(const KripkeModel& n, const std::vector<std::string>& ws) {
  std::vector<WorldId> ids;
  for (const auto& w : ws) ids.push_back(n.world_id(w));
  return submodel(n, ids);
}

// m is a submodel of n: m's worlds are n-worlds, and order and valuation are
// the restrictions of n's.
inline bool is_submodel(const KripkeModel& m, const KripkeModel& n) {
  if (!m.vocab().same_atoms(n.vocab())) throw ModelError("vocabulary mismatch");
  std::vector<WorldId> to_n(m.size());
  for (WorldId w = 0; w < m.size(); ++w) {
    const auto found = n.find_world(m.world_name(w));
    if (!found) return false;
    to_n[w] = *found;
  }
  for (WorldId w = 0; w < m.size(); ++w) {
    for (WorldId v = 0; v < m.size(); ++v) {
      if (m.related(w, v) != n.related(to_n[w], to_n[v])) return false;
    }
    for (std::size_t p = 0; p < m.vocab().size(); ++p) {
      if (m.holds(p, w) != n.holds(*n.vocab().find(m.vocab()[p]), to_n[w])) return false;
    }
  }
  return true;
}

// Componentwise union of a chain M_0 ⊆ M_1 ⊆ ...; worlds are listed in order
// of first appearance.
inline KripkeModel chain_union(const std::vector<KripkeModel>& chain) {
  if (chain.empty()) throw ModelError("empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!is_submodel(chain[i], chain[i + 1]))
      throw ModelError("chain condition violated at index " + std::to_string(i));
  }
  detail::ModelData d;
  d.vocab = chain.front().vocab();
  std::unordered_map<std::string, WorldId> index;
  for (const auto& m : chain) {
    for (const auto& w : m.worlds()) {
      if (index.emplace(w, d.worlds.size()).second) d.worlds.push_back(w);
    }
  }
  d.successors.resize(d.worlds.size());
  d.valuation.assign(d.vocab.size(), WorldSet(d.worlds.size()));
  for (const auto& m : chain) {
    for (WorldId w = 0; w < m.size(); ++w) {
      const WorldId u = index.at(m.world_name(w));
      for (WorldId v : m.successors(w)) d.successors[u].push_back(index.at(m.world_name(v)));
      for (std::size_t p = 0; p < d.vocab.size(); ++p) {
        if (m.holds(*m.vocab().find(d.vocab[p]), w)) d.valuation[p].set(u);
      }
    }
  }
  return ModelFactory::build(std::move(d));
}

// ---------------------------------------------------------------------------
// Tagging: extends the vocabulary with q+_w (true exactly on the up-set of w)
// and q-_w (false exactly on the down-set of w) for every world w.

inline std::string tag_plus(const std::string& world) { return "q+_" + world; }
inline std::string tag_minus(const std::string& world) { return "q-_" + world; }

inline KripkeModel tag_model(const KripkeModel& m) {
  detail::ModelData d = to_data(m);
  std::vector<std::string> names = m.vocab().atoms();
  for (const auto& w : m.worlds()) {
    for (const auto& tag : {tag_plus(w), tag_minus(w)}) {
      if (m.vocab().contains(tag))
        throw ModelError("tag atom '" + tag + "' collides with the vocabulary");
      if (!is_valid_atom_name(tag))
        throw ModelError("world name '" + w + "' cannot form a tag atom");
      names.push_back(tag);
    }
  }
  try {
    d.vocab = Vocabulary(std::move(names));
  } catch (const VocabularyError& e) {
    throw ModelError(e.what());
  }
  const std::size_t n = m.size();
  for (WorldId w = 0; w < n; ++w) {
    WorldSet plus(n), minus(n);
    for (WorldId v = 0; v < n; ++v) {
      if (m.related(w, v)) plus.set(v);
      if (!m.related(v, w)) minus.set(v);
    }
    d.valuation.push_back(std::move(plus));
    d.valuation.push_back(std::move(minus));
  }
  return ModelFactory::build(std::move(d));
}

}  // namespace asimcheck

#endif  // ASIMCHECK_KRIPKE_HPP_
