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


#include "asimcheck/unravel.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "asimcheck/generate.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

namespace asimcheck {
namespace {

using fixtures::chain2;

std::set<std::string> node_names(const UnravelledModel& u) {
  const auto& w = u.model().worlds();
  return {w.begin(), w.end()};
}

TEST(Unravel, Chain2DepthOne) {
  const auto m = chain2();
  const auto u = unravel(m, 0, 1);
  EXPECT_EQ(node_names(u), (std::set<std::string>{"a", "a/a", "a/b"}));
  const auto& t = u.model();
  const WorldId root = t.world_id("a"), aa = t.world_id("a/a"), ab = t.world_id("a/b");
  EXPECT_TRUE(t.related(root, aa));
  EXPECT_TRUE(t.related(root, ab));
  EXPECT_FALSE(t.related(aa, ab));
  const auto p = *t.vocab().find("p");
  EXPECT_FALSE(t.holds(p, root));
  EXPECT_FALSE(t.holds(p, aa));
  EXPECT_TRUE(t.holds(p, ab));
}

TEST(Unravel, DepthZeroIsTheRoot) {
  const auto m = chain2();
  const auto u = unravel(m, 1, 0);
  EXPECT_EQ(u.node_count(), 1u);
  EXPECT_EQ(u.model().world_name(0), "b");
  EXPECT_TRUE(u.model().holds(0, 0));
}

TEST(Unravel, Chain2DepthTwoIsAntisymmetric) {
  const auto u = unravel(chain2(), 0, 2);
  EXPECT_EQ(node_names(u), (std::set<std::string>{"a", "a/a", "a/b", "a/a/a", "a/a/b", "a/b/b"}));
  const auto& t = u.model();
  for (WorldId x = 0; x < u.node_count(); ++x)
    for (WorldId y = 0; y < u.node_count(); ++y) {
      EXPECT_FALSE(x != y && t.related(x, y) && t.related(y, x));
      const auto& px = u.path(x);
      const auto& py = u.path(y);
      const bool prefix = px.size() <= py.size() && std::equal(px.begin(), px.end(), py.begin());
      EXPECT_EQ(t.related(x, y), prefix);
    }
}

TEST(Unravel, NodeCap) {
  const auto c = fixtures::cluster2();
  try {
    unravel(c, 0, 10, 100);
    FAIL() << "expected the node cap to trigger";
  } catch (const NodeCapExceeded& e) {
    EXPECT_EQ(e.cap(), 100u);
    EXPECT_EQ(e.depth(), 6u);
  }
  EXPECT_NO_THROW(unravel(c, 0, 5, 100));
}

TEST(Unravel, NodeCapFromEnvironment) {
  ::setenv(kNodeCapEnv, "3", 1);
  EXPECT_EQ(node_cap_from_env(), 3u);
  EXPECT_THROW(unravel(chain2(), 0, 2), NodeCapExceeded);
  ::setenv(kNodeCapEnv, "zero", 1);
  EXPECT_THROW(node_cap_from_env(), std::invalid_argument);
  ::unsetenv(kNodeCapEnv);
  EXPECT_EQ(node_cap_from_env(), kDefaultNodeCap);
}

TEST(UnravelBisimulation, SingletonDepthZero) {
  const auto s = fixtures::singleton_c();
  const auto u = unravel(s, 0, 0);
  WRelation expected;
  expected.insert(first(0), second(0));
  expected.insert(second(0), first(0));
  EXPECT_EQ(unravel_bisimulation(u), expected);
  EXPECT_TRUE(check_bisimulation(expected, {u.model(), 0}, {s, 0}).empty());
}

TEST(UnravelBisimulation, Chain2FromTopIsExact) {
  const auto m = chain2();
  const auto u = unravel(m, 1, 1);
  EXPECT_TRUE(check_bisimulation(unravel_bisimulation(u), {u.model(), 0}, {m, 1}).empty());
}

TEST(UnravelBisimulation, TruncationOnlyHurtsTheFrontier) {
  const auto m = chain2();
  const auto two = split_bisimulation_violations(unravel(m, 0, 2));
  EXPECT_TRUE(two.non_frontier.empty());
  EXPECT_FALSE(two.frontier.empty());
  const auto u1 = unravel(m, 0, 1);
  const auto one = split_bisimulation_violations(u1);
  EXPECT_TRUE(one.non_frontier.empty());
  for (const auto& v : one.frontier) {
    EXPECT_EQ(v.condition, "s-back");
    for (std::size_t i = 0; i < 2; ++i)
      EXPECT_FALSE(v.witness[i].side == Side::kFirst && u1.model().world_name(v.witness[i].world) == "a");
  }
}

TEST(UnravelChecks, StructureHolds) {
  const auto r = check_lemma1(unravel(chain2(), 0, 3), 2);
  EXPECT_TRUE(r.is_model);
  EXPECT_TRUE(r.antisymmetric);
  EXPECT_TRUE(r.prefix_law);
  EXPECT_TRUE(r.non_frontier_violations.empty());
  EXPECT_GT(r.frontier_violations, 0u);
  EXPECT_EQ(r.cone_failure_count, 0u);
  EXPECT_GT(r.cone_checks, 0u);
}

// Truncation leaves a frontier path that stutters at a, where p never
// holds, so ~~p fails at the root of the tree while it holds at a itself.
TEST(UnravelChecks, HeadroomAgreementFailsUnderTruncation) {
  const auto m = chain2();
  const auto u = unravel(m, 0, 3);
  const Formula f = parse("~~p");
  EXPECT_EQ(f.impl_depth(), 2u);
  EXPECT_EQ(u.headroom(0), 3u);
  EXPECT_TRUE(oracle::holds(m, 0, f));
  EXPECT_FALSE(oracle::holds(u.model(), 0, f));
  const auto r = check_lemma1(u, 2);
  EXPECT_GT(r.agreement_failure_count, 0u);
  EXPECT_FALSE(r.ok());
  bool found = false;
  for (const auto& x : r.agreement_failures) found |= x.node == 0 && x.formula == f;
  EXPECT_TRUE(found);
}

TEST(UnravelChecks, DepthZeroProbesAgreeEverywhere) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto m = generate_model(s, 4, 2);
    const auto u = unravel(m, s % m.size(), 2);
    const auto r = check_lemma1(u, 0);
    EXPECT_EQ(r.agreement_failure_count, 0u);
  }
}

TEST(UnravelChecks, SameLastWorldNodesAgreeAtDepthOne) {
  const auto u = unravel(chain2(), 0, 3);
  const WorldId ab = *u.find_node({0, 1}), aab = *u.find_node({0, 0, 1});
  EXPECT_GE(u.headroom(aab), 1u);
  for (const auto& f : enumerate_formulas(u.base().vocab(), 1, kDefaultProbeSize))
    EXPECT_EQ(oracle::holds(u.model(), ab, f), oracle::holds(u.model(), aab, f)) << print(f);
}

TEST(Property, StructureOnRandomModels) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto m = generate_model(s, 4, 2);
    const auto r = check_lemma1(unravel(m, s % m.size(), 1 + s % 3), 1, 5);
    ASSERT_TRUE(r.structure_ok()) << s;
    ASSERT_EQ(r.cone_failure_count, 0u) << s;
  }
}

TEST(HomExtraction, NodeToLastGivesLastWorldMap) {
  const auto m = chain2();
  const auto u = unravel(m, 0, 1);
  const auto z = node_to_last_relation(u);
  EXPECT_TRUE(check_simulation(z, {u.model(), 0}, {m, 0}).empty());
  const auto h = homomorphism_from_total_simulation(z, u, {m, 0});
  EXPECT_EQ(h(u.model().world_id("a")), 0u);
  EXPECT_EQ(h(u.model().world_id("a/a")), 0u);
  EXPECT_EQ(h(u.model().world_id("a/b")), 1u);
  EXPECT_TRUE(check_homomorphism(h, u.model(), m).empty());
  for (WorldId x = 0; x < u.node_count(); ++x) EXPECT_EQ(h(x), u.last(x));
}

TEST(HomExtraction, SingletonBaseGivesConstantMap) {
  const auto s = fixtures::singleton_c();
  const auto u = unravel(s, 0, 3);
  const auto h = homomorphism_from_total_simulation(node_to_last_relation(u), u, {s, 0});
  for (WorldId x = 0; x < u.node_count(); ++x) EXPECT_EQ(h(x), 0u);
}

TEST(HomExtraction, RejectsBadRelations) {
  const auto m = chain2();
  const auto u = unravel(m, 0, 1);
  WRelation partial;
  partial.insert(first(0), second(0));
  EXPECT_THROW(homomorphism_from_total_simulation(partial, u, {m, 0}), RelationError);
  WRelation wrong;
  for (WorldId x = 0; x < u.node_count(); ++x) wrong.insert(first(x), second(0));
  EXPECT_THROW(homomorphism_from_total_simulation(wrong, u, {m, 0}), RelationError);
}

}  // namespace
}  // namespace asimcheck
