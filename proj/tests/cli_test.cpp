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


// Runs the asimcheck binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "asimcheck/io.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ASIMCHECK_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(ASIMCHECK_TESTDATA) + "/" + name; }

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("asimcheck_cli_" + name)).string();
}

TEST(Cli, SatPrintsFalse) {
  const auto r = run("sat " + data("chain2.json") + " b \"p -> bot\"");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "false\n");
  const auto t = run("sat " + data("chain2.json") + " b p");
  EXPECT_EQ(t.status, 0);
  EXPECT_EQ(t.out, "true\n");
}

TEST(Cli, DistinguishSingletonAgainstChain) {
  const auto r = run("distinguish " + data("singleton.json") + " c " + data("chain2.json") + " a");
  EXPECT_EQ(r.status, 0);
  const auto nl = r.out.find('\n');
  ASSERT_NE(nl, std::string::npos);
  EXPECT_EQ(r.out.substr(0, nl), "p -> bot");
  const auto cert = asimcheck::Json::parse(r.out.substr(nl + 1));
  EXPECT_EQ(cert["formula"], "p -> bot");
  EXPECT_EQ(cert["rank"], 1);
  EXPECT_EQ(cert["value_at_1"], true);
  EXPECT_EQ(cert["value_at_2"], false);
  const auto none = run("distinguish " + data("chain2.json") + " a " + data("chain2.json") + " b");
  EXPECT_EQ(none.status, 1);
}

TEST(Cli, AsimEmitsRelationIffItExists) {
  const auto out = temp("asim.json");
  std::filesystem::remove(out);
  const auto yes = run("asim " + data("chain2.json") + " a " + data("chain2.json") + " b --emit-relation " + out);
  EXPECT_EQ(yes.status, 0);
  ASSERT_TRUE(std::filesystem::exists(out));
  // The emitted file re-verifies.
  const auto check = run("asim " + data("chain2.json") + " a " + data("chain2.json") + " b --relation " + out);
  EXPECT_EQ(check.status, 0);
  std::filesystem::remove(out);
  const auto no = run("asim " + data("chain2.json") + " b " + data("chain2.json") + " a --emit-relation " + out);
  EXPECT_EQ(no.status, 1);
  EXPECT_FALSE(std::filesystem::exists(out));
}

TEST(Cli, Validate) {
  EXPECT_EQ(run("validate " + data("chain2.json")).status, 0);
  const auto bad = run("validate " + data("not_monotone.json"));
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("monotone"), std::string::npos);
  EXPECT_EQ(run("validate " + data("unknown_world.json")).status, 2);
  EXPECT_EQ(run("validate " + data("missing.json")).status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("sat " + data("chain2.json") + " b \"p ->\"").status, 2);
  EXPECT_EQ(run("sat " + data("chain2.json") + " z p").status, 2);
  EXPECT_EQ(run("suite --checks nope").status, 2);
}

TEST(Cli, TheoryAndSuccessors) {
  const auto r = run("theory " + data("chain2.json") + " b --probe-depth 1 --probe-size 3");
  EXPECT_EQ(r.status, 0);
  const auto j = asimcheck::Json::parse(r.out);
  EXPECT_TRUE(j.contains("pos"));
  EXPECT_TRUE(j.contains("neg"));
  const auto s = run("theory " + data("chain2.json") + " a --satisfiable " + data("theory_p.json"));
  EXPECT_EQ(s.status, 0);
  EXPECT_EQ(s.out, "b\n");
}

TEST(Cli, RelationCheckers) {
  const auto m = data("chain2.json");
  EXPECT_EQ(run("bisim " + m + " a " + m + " a --relation " + data("chain2_identity.json")).status, 0);
  EXPECT_EQ(run("hom-check " + m + " " + m + " --map " + data("id_map.json")).status, 0);
  EXPECT_EQ(run("hom-check " + m + " " + m + " --map " + data("swap_map.json")).status, 1);
  EXPECT_EQ(run("embed-check " + m + " " + m + " --map " + data("id_map.json")).status, 0);
  EXPECT_EQ(run("elementary " + data("chain2_b.json") + " " + m).status, 0);
}

TEST(Cli, SimCheckRoundTrip) {
  const auto rel = temp("sim.json");
  {
    std::ofstream out(rel);
    out << R"([[1, "a", 2, "a"], [1, "b", 2, "b"]])";
  }
  const auto m = data("chain2.json");
  EXPECT_EQ(run("sim-check " + m + " a " + m + " a --relation " + rel).status, 0);
  std::filesystem::remove(rel);
}

TEST(Cli, UnravelAndTagRoundTrip) {
  const auto out = temp("unravel.json");
  EXPECT_EQ(run("unravel " + data("chain2.json") + " a --depth 2 -o " + out).status, 0);
  const auto j = asimcheck::read_json_file(out);
  EXPECT_EQ(j["worlds"].size(), 6u);
  EXPECT_EQ(j["unravel"]["root"], "a");
  EXPECT_EQ(j["unravel"]["depth"], 2);
  EXPECT_EQ(run("validate " + out).status, 0);
  const auto tagged = temp("tag.json");
  EXPECT_EQ(run("tag " + data("chain2.json") + " -o " + tagged).status, 0);
  EXPECT_EQ(run("validate " + tagged).status, 0);
  EXPECT_EQ(run("sat " + tagged + " b \"q+_b & ~q-_b\"").status, 0);
  std::filesystem::remove(out);
  std::filesystem::remove(tagged);
}

TEST(Cli, SuiteIsDeterministic) {
  const auto a = run("suite --seed 42 --models 10 --checks monotonicity,tagging");
  const auto b = run("suite --seed 42 --models 10 --checks monotonicity,tagging");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = run("--json suite --models 5 --checks monotonicity");
  EXPECT_TRUE(asimcheck::Json::parse(j.out)["ok"].get<bool>());
  const auto empty = run("suite --checks \"\"");
  EXPECT_EQ(empty.status, 0);
}

}  // namespace
