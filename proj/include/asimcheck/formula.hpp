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

// Intuitionistic propositional formulas: immutable AST, concrete syntax and
// structural measures.
//
// Grammar (loosest to tightest):
//   formula := imp
//   imp     := or ("->" imp)?          right associative
//   or      := and ("|" and)*          left associative
//   and     := unary ("&" unary)*      left associative
//   unary   := "~" unary | atom | "bot" | "top" | "(" formula ")"
//
// "~f" is sugar for "f -> bot"; there is no negation node.

#ifndef ASIMCHECK_FORMULA_HPP_
#define ASIMCHECK_FORMULA_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace asimcheck {

enum class Connective { kAtom, kBot, kTop, kAnd, kOr, kImp };

namespace detail {

struct FormulaNode {
  Connective kind = Connective::kBot;
  std::string name;
  std::shared_ptr<const FormulaNode> left;
  std::shared_ptr<const FormulaNode> right;
  std::size_t size = 1;
  std::size_t impl_depth = 0;
  std::size_t hash = 0;
};

}  // namespace detail

class Formula {
 public:
  static Formula atom(std::string name) {
    return Formula(Connective::kAtom, std::move(name), nullptr, nullptr);
  }
  static Formula bot() { return Formula(Connective::kBot, {}, nullptr, nullptr); }
  static Formula top() { return Formula(Connective::kTop, {}, nullptr, nullptr); }
  static Formula conj(Formula l, Formula r) {
    return Formula(Connective::kAnd, {}, std::move(l), std::move(r));
  }
  static Formula disj(Formula l, Formula r) {
    return Formula(Connective::kOr, {}, std::move(l), std::move(r));
  }
  static Formula implies(Formula l, Formula r) {
    return Formula(Connective::kImp, {}, std::move(l), std::move(r));
  }
  static Formula negation(Formula f) { return implies(std::move(f), bot()); }

  Connective kind() const { return node_->kind; }
  bool is_binary() const {
    return kind() == Connective::kAnd || kind() == Connective::kOr ||
           kind() == Connective::kImp;
  }
  // Only meaningful for atoms.
  const std::string& name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  // Node count.
  std::size_t size() const { return node_->size; }
  // Nesting depth of "->"; conjunction and disjunction do not count.
  std::size_t impl_depth() const { return node_->impl_depth; }
  std::size_t hash() const { return node_->hash; }

  // Identity of the shared node, usable as a memo key while the formula is
  // kept alive.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size()) return false;
    return compare(a, b) == 0;
  }

  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    const int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  using Node = detail::FormulaNode;

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Formula(Connective kind, std::string name, std::nullptr_t, std::nullptr_t) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->name = std::move(name);
    n->hash = std::hash<int>{}(static_cast<int>(kind)) * 0x9e3779b97f4a7c15ULL;
    if (kind == Connective::kAtom) n->hash ^= std::hash<std::string>{}(n->name) + 0x7f4a7c15;
    node_ = std::move(n);
  }

  Formula(Connective kind, std::string name, Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->name = std::move(name);
    std::size_t h = std::hash<int>{}(static_cast<int>(kind)) * 0x9e3779b97f4a7c15ULL;
    switch (kind) {
      case Connective::kAtom:
        n->size = 1;
        h ^= std::hash<std::string>{}(n->name) + 0x7f4a7c15 + (h << 6) + (h >> 2);
        break;
      case Connective::kBot:
      case Connective::kTop:
        n->size = 1;
        break;
      default:
        n->size = 1 + l.size() + r.size();
        n->impl_depth = std::max(l.impl_depth(), r.impl_depth()) +
                        (kind == Connective::kImp ? 1 : 0);
        h ^= l.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= r.hash() + 0x85ebca6b + (h << 6) + (h >> 2);
        n->left = std::move(l.node_);
        n->right = std::move(r.node_);
        break;
    }
    n->hash = h;
    node_ = std::move(n);
  }

  // Total structural order: connective, then atom name, then children.
  static int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
      case Connective::kAtom:
        return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
      case Connective::kBot:
      case Connective::kTop:
        return 0;
      default:
        if (const int c = compare(a.left(), b.left()); c != 0) return c;
        return compare(a.right(), b.right());
    }
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline std::size_t impl_depth(const Formula& f) { return f.impl_depth(); }

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::kAtom:
      out.insert(f.name());
      break;
    case Connective::kBot:
    case Connective::kTop:
      break;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

inline std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Atom names and vocabularies.

namespace detail {

inline bool is_atom_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

// '+', '-' and '/' are allowed after the first character so that tag atoms
// such as "q+_a" or "q-_a/b" are expressible; '-' never swallows an arrow.
inline bool is_atom_continue(std::string_view s, std::size_t i) {
  const char c = s[i];
  if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '/')
    return true;
  if (c == '-') return i + 1 >= s.size() || s[i + 1] != '>';
  return false;
}

inline bool is_reserved(std::string_view s) { return s == "bot" || s == "top"; }

}  // namespace detail

inline bool is_valid_atom_name(std::string_view s) {
  if (s.empty() || !detail::is_atom_start(s[0]) || detail::is_reserved(s)) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!detail::is_atom_continue(s, i)) return false;
  }
  return true;
}

class VocabularyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite ordered set of atom names.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!is_valid_atom_name(atoms_[i]))
        throw VocabularyError("invalid atom name '" + atoms_[i] + "'");
      if (!index_.emplace(atoms_[i], i).second)
        throw VocabularyError("duplicate atom name '" + atoms_[i] + "'");
    }
  }

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& operator[](std::size_t i) const { return atoms_[i]; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  std::optional<std::size_t> find(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Same atoms, possibly in a different order.
  bool same_atoms(const Vocabulary& other) const {
    if (size() != other.size()) return false;
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [&](const std::string& a) { return other.contains(a); });
  }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Parsing.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_imp();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept("->")) return Formula::implies(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = Formula::disj(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = Formula::conj(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("~")) return Formula::negation(parse_unary());
    if (accept("(")) {
      Formula inner = parse_imp();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (is_atom_start(text_[pos_])) {
      const std::size_t start = pos_++;
      while (pos_ < text_.size() && is_atom_continue(text_, pos_)) ++pos_;
      const std::string word(text_.substr(start, pos_ - start));
      if (word == "bot") return Formula::bot();
      if (word == "top") return Formula::top();
      return Formula::atom(word);
    }
    fail(std::string("unknown token '") + text_[pos_] + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::Parser(text).parse(); }

// Parses and checks that every atom belongs to `vocab`.
inline Formula parse(std::string_view text, const Vocabulary& vocab) {
  Formula f = parse(text);
  for (const auto& a : atoms_of(f)) {
    if (!vocab.contains(a)) throw ParseError("atom '" + a + "' not in vocabulary", 0);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Printing with minimal parentheses; parse(print(f)) == f.

namespace detail {

inline int precedence(Connective c) {
  switch (c) {
    case Connective::kImp: return 1;
    case Connective::kOr: return 2;
    case Connective::kAnd: return 3;
    default: return 4;
  }
}

inline void print_to(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::kAtom: out += f.name(); break;
    case Connective::kBot: out += "bot"; break;
    case Connective::kTop: out += "top"; break;
    case Connective::kImp:
      print_to(f.left(), prec + 1, out);
      out += " -> ";
      print_to(f.right(), prec, out);
      break;
    case Connective::kOr:
    case Connective::kAnd:
      print_to(f.left(), prec, out);
      out += f.kind() == Connective::kOr ? " | " : " & ";
      print_to(f.right(), prec + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string print(const Formula& f) {
  std::string out;
  detail::print_to(f, 0, out);
  return out;
}

}  // namespace asimcheck

#endif  // ASIMCHECK_FORMULA_HPP_
