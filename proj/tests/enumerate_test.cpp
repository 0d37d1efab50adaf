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


#include "asimcheck/enumerate.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

namespace asimcheck {
namespace {

bool contains(const std::vector<Formula>& fs, const Formula& f) {
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

TEST(Enumerate, DepthZeroSizeThree) {
  const auto fs = enumerate_formulas(Vocabulary({"p"}), 0, 3);
  // & and | of the leaves normalize to a leaf except p & bot and p | top.
  ASSERT_EQ(fs.size(), 5u);
  EXPECT_EQ(fs[0], parse("p"));
  EXPECT_EQ(fs[1], parse("bot"));
  EXPECT_EQ(fs[2], parse("top"));
  EXPECT_EQ(fs[3], normalize(parse("p & bot")));
  EXPECT_EQ(fs[4], normalize(parse("p | top")));
}

TEST(Enumerate, EmptyVocabulary) {
  const auto fs = enumerate_formulas(Vocabulary(std::vector<std::string>{}), 1, 3);
  EXPECT_TRUE(contains(fs, parse("top")));
  EXPECT_TRUE(contains(fs, parse("bot")));
  EXPECT_TRUE(contains(fs, parse("top -> bot")));
  EXPECT_TRUE(contains(fs, parse("bot -> top")));
}

TEST(Enumerate, Membership) {
  const auto fs = enumerate_formulas(Vocabulary({"p"}), 1, 5);
  EXPECT_TRUE(contains(fs, parse("p -> bot")));
  EXPECT_TRUE(contains(fs, parse("top -> p")));
  EXPECT_FALSE(contains(fs, parse("(p -> p) -> p")));
}

TEST(Enumerate, RespectsBoundsAndIsDuplicateFree) {
  const auto fs = enumerate_formulas(Vocabulary({"p", "q"}), 2, 7);
  std::set<Formula> seen;
  for (const auto& f : fs) {
    EXPECT_LE(f.size(), 7u);
    EXPECT_LE(f.impl_depth(), 2u);
    EXPECT_EQ(normalize(f), f);
    EXPECT_TRUE(seen.insert(f).second) << print(f);
  }
  EXPECT_EQ(fs, enumerate_formulas(Vocabulary({"p", "q"}), 2, 7));
}

TEST(Enumerate, Cap) {
  EXPECT_THROW(enumerate_formulas(Vocabulary({"p", "q"}), 2, 7, 100), std::length_error);
}

TEST(Normalize, AcAndUnits) {
  EXPECT_EQ(normalize(parse("q & p & q")), normalize(parse("p & q")));
  EXPECT_EQ(normalize(parse("p & top")), parse("p"));
  EXPECT_EQ(normalize(parse("p | bot")), parse("p"));
  EXPECT_EQ(normalize(parse("top & top")), parse("top"));
  EXPECT_EQ(normalize(parse("bot | bot")), parse("bot"));
  EXPECT_EQ(normalize(parse("(q & p) -> (p | p)")), Formula::implies(normalize(parse("p & q")), parse("p")));
}

}  // namespace
}  // namespace asimcheck
