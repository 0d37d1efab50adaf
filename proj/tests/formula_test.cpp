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


#include "asimcheck/formula.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

namespace asimcheck {
namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
Formula r() { return Formula::atom("r"); }

TEST(Parse, ImplicationIsLoosest) {
  EXPECT_EQ(parse("p -> q | r"), Formula::implies(p(), Formula::disj(q(), r())));
}

TEST(Parse, ReservedTokens) {
  EXPECT_EQ(parse("top"), Formula::top());
  EXPECT_EQ(parse("bot"), Formula::bot());
}

TEST(Parse, NegationIsSugar) { EXPECT_EQ(parse("~p"), Formula::implies(p(), Formula::bot())); }

TEST(Parse, ImplicationAssociatesRight) {
  EXPECT_EQ(parse("p -> q -> r"), Formula::implies(p(), Formula::implies(q(), r())));
}

TEST(Parse, AndOrAssociateLeft) {
  EXPECT_EQ(parse("p & q & r"), Formula::conj(Formula::conj(p(), q()), r()));
  EXPECT_EQ(parse("p | q | r"), Formula::disj(Formula::disj(p(), q()), r()));
}

TEST(Parse, AndBindsTighterThanOr) {
  EXPECT_EQ(parse("p | q & r"), Formula::disj(p(), Formula::conj(q(), r())));
}

TEST(Parse, NegationBindsTightest) {
  EXPECT_EQ(parse("~p & q"), Formula::conj(Formula::negation(p()), q()));
  EXPECT_EQ(parse("~~p"), Formula::negation(Formula::negation(p())));
}

TEST(Parse, TagAtomNames) {
  EXPECT_EQ(parse("q+_a -> q-_b"), Formula::implies(Formula::atom("q+_a"), Formula::atom("q-_b")));
  EXPECT_EQ(parse("x->y"), Formula::implies(Formula::atom("x"), Formula::atom("y")));
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse("p & ");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("p q"), ParseError);
  EXPECT_THROW(parse("(p"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("p $ q"), ParseError);
}

TEST(Parse, VocabularyCheck) {
  const Vocabulary v({"p"});
  EXPECT_NO_THROW(parse("p -> bot", v));
  EXPECT_THROW(parse("q", v), ParseError);
}

TEST(Print, Examples) {
  EXPECT_EQ(print(Formula::implies(p(), Formula::bot())), "p -> bot");
  EXPECT_EQ(print(Formula::conj(p(), Formula::disj(q(), r()))), "p & (q | r)");
  EXPECT_EQ(print(Formula::top()), "top");
  EXPECT_EQ(print(Formula::implies(Formula::implies(p(), q()), r())), "(p -> q) -> r");
  EXPECT_EQ(print(Formula::conj(p(), Formula::conj(q(), r()))), "p & (q & r)");
}

TEST(ImplDepth, Examples) {
  EXPECT_EQ(impl_depth(p()), 0u);
  EXPECT_EQ(impl_depth(Formula::implies(p(), q())), 1u);
  EXPECT_EQ(impl_depth(Formula::implies(Formula::implies(p(), Formula::bot()), q())), 2u);
}

TEST(AtomsOf, Examples) {
  EXPECT_EQ(atoms_of(Formula::implies(p(), q())), (std::set<std::string>{"p", "q"}));
  EXPECT_TRUE(atoms_of(Formula::bot()).empty());
  EXPECT_EQ(atoms_of(Formula::conj(p(), p())), (std::set<std::string>{"p"}));
}

TEST(Vocabulary, Invariants) {
  EXPECT_THROW(Vocabulary({"p", "p"}), VocabularyError);
  EXPECT_THROW(Vocabulary({"bot"}), VocabularyError);
  EXPECT_THROW(Vocabulary({"1p"}), VocabularyError);
  EXPECT_THROW(Vocabulary({""}), VocabularyError);
  const Vocabulary v({"p", "q"});
  EXPECT_EQ(v.find("q"), 1u);
  EXPECT_FALSE(v.find("r"));
}

Formula random_formula(std::mt19937_64& g, int budget) {
  const auto pick = g() % (budget <= 0 ? 3 : 6);
  switch (pick) {
    case 0: return Formula::atom(std::string(1, static_cast<char>('p' + g() % 3)));
    case 1: return Formula::bot();
    case 2: return Formula::top();
    case 3: return Formula::conj(random_formula(g, budget - 1), random_formula(g, budget - 1));
    case 4: return Formula::disj(random_formula(g, budget - 1), random_formula(g, budget - 1));
    default: return Formula::implies(random_formula(g, budget - 1), random_formula(g, budget - 1));
  }
}

std::size_t depth_by_definition(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom:
    case Connective::kBot:
    case Connective::kTop: return 0;
    case Connective::kAnd:
    case Connective::kOr: return std::max(depth_by_definition(f.left()), depth_by_definition(f.right()));
    case Connective::kImp: return 1 + std::max(depth_by_definition(f.left()), depth_by_definition(f.right()));
  }
  return 0;
}

TEST(Property, RoundTripAndMeasures) {
  std::mt19937_64 g(7);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(g, 5);
    const std::string text = print(f);
    ASSERT_EQ(parse(text), f) << text;
    ASSERT_EQ(f.impl_depth(), depth_by_definition(f)) << text;
    for (const auto& a : atoms_of(f)) ASSERT_NE(text.find(a), std::string::npos);
  }
}

TEST(Formula, StructuralEqualityAndOrder) {
  EXPECT_EQ(Formula::conj(p(), q()), parse("p & q"));
  EXPECT_NE(Formula::conj(p(), q()), Formula::conj(q(), p()));
  EXPECT_NE(Formula::conj(p(), q()), Formula::disj(p(), q()));
  EXPECT_TRUE(p() < q() || q() < p());
  EXPECT_EQ(Formula::conj(p(), q()).size(), 3u);
}

}  // namespace
}  // namespace asimcheck
