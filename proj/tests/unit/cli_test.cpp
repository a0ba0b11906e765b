// Copyright 2026 The domlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "domlab/domlab.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& rel) { return std::string(DOMLAB_DATA_DIR) + "/" + rel; }

Result cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  auto dir = fs::temp_directory_path() / ("domlab_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto out = dir / ("out" + std::to_string(counter));
  auto err = dir / ("err" + std::to_string(counter++));
  std::string cmd = env + " '" + std::string(DOMLAB_CLI_PATH) + "' " + args + " > '" + out.string() + "' 2> '" +
                    err.string() + "'";
  int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

TEST(Cli, NestedRunOnExampleTwo) {
  auto r = cli("--format table run --catalog ex2 --mode nested --policy remove-all");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "maximal: {1}×{1} at ω\n");
}

TEST(Cli, UniversalRunOnExampleTwo) {
  auto r = cli("--format table run --catalog ex2 --mode universal --policy remove-all");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "maximal: ∅ at ω+1\n");
}

TEST(Cli, IntroUniversal) {
  auto r = cli("--format table run --catalog intro --mode universal");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "maximal: ∅ at 1\n");
}

TEST(Cli, IntroScripted) {
  auto r = cli("--format table run --catalog intro --mode nested --policy scripted --script '" +
               data("scripts/intro_two_step.json") + "'");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "maximal: {1/2}×{*} at 2\n");
}

TEST(Cli, GkzRemoveOneOnFiniteGame) {
  auto r = cli("--format table run --game '" + data("games/dominance_2x2.json") + "' --mode gkz --policy remove-one");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "maximal: {Top}×{Left} at 2\n");
}

TEST(Cli, TraceFileValidates) {
  auto trace = fs::temp_directory_path() / ("domlab_trace_" + std::to_string(::getpid()) + ".jsonl");
  auto r = cli("--format table run --catalog ex2 --mode nested --out '" + trace.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  auto v = cli("--format table validate --catalog ex2 --mode nested --trace '" + trace.string() + "'");
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_TRUE(has(v.out, "valid nested elimination sequence")) << v.out;
  auto u = cli("--format table validate --catalog ex2 --mode universal --trace '" + trace.string() + "'");
  EXPECT_EQ(u.code, 1) << u.out << u.err;
  EXPECT_TRUE(has(u.out, "not a universal elimination sequence")) << u.out;
  fs::remove(trace);
}

TEST(Cli, StoppedRunExitsOne) {
  auto script = fs::temp_directory_path() / ("domlab_script_" + std::to_string(::getpid()) + ".json");
  std::ofstream(script) << R"js({"steps": [{"P1": "(1/2,1)"}]})js";
  auto r = cli("--format table run --catalog intro --mode nested --policy scripted --script '" +
               script.string() + "'");
  EXPECT_EQ(r.code, 1) << r.out << r.err;
  EXPECT_EQ(r.out, "stopped: (0,1/2]×{*} at 1\n");
  fs::remove(script);
  auto k = cli("--format table run --catalog ex5 --mode nested --policy scripted --script '" +
               data("scripts/ex5_keep_sink.json") + "'");
  EXPECT_EQ(k.code, 0) << k.out << k.err;
  EXPECT_TRUE(has(k.out, "maximal: {-1}×{1}")) << k.out;
}

TEST(Cli, AnalyzeExampleThree) {
  auto r = cli("--format table analyze --catalog ex3 --reduction '[0,1]×{Left}' --check complete-boundedness");
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_TRUE(has(r.out, "complete-boundedness")) << r.out;
  EXPECT_TRUE(has(r.out, "fails")) << r.out;
}

TEST(Cli, AnalyzeExampleTwo) {
  auto r = cli("--format table analyze --catalog ex2 --reduction '{1}×{1}' --check complete-boundedness");
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_TRUE(has(r.out, "fails")) << r.out;
  auto j = cli("--format json analyze --catalog ex2 --reduction '{1}×{1}' --check complete-boundedness");
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_FALSE(doc.at("verdicts").at(0).at("holds").get<bool>());
}

TEST(Cli, CheckTheoremsRandom) {
  auto r = cli("--format table check-theorems --random 200 --players 2 --max-strats 3 --seed 7");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_FALSE(has(r.out, "FAIL")) << r.out;
  EXPECT_TRUE(has(r.out, "200/200")) << r.out;
}

TEST(Cli, CheckTheoremsCatalog) {
  auto r = cli("--format json check-theorems --catalog all");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc.at("passed").get<bool>());
  EXPECT_EQ(doc.at("entries").size(), 7u);
}

TEST(Cli, EnumerateNoDominance) {
  auto r = cli("--format table enumerate --game '" + data("games/matching_pennies.json") + "' --mode nested --list 5");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "1 sequences, 1 reductions in range")) << r.out;
  EXPECT_TRUE(has(r.out, "maximal: {Heads, Tails}×{Heads, Tails}")) << r.out;
}

TEST(Cli, EnumerateAnalyticIsUnsupported) {
  auto r = cli("--format table enumerate --catalog ex2");
  EXPECT_EQ(r.code, 4) << r.out << r.err;
}

TEST(Cli, EnumerationCapExitsThree) {
  auto r = cli("--format table enumerate --game '" + data("games/dominance_2x2.json") + "'",
               "DOMLAB_CAPS=max_strategies=2");
  EXPECT_EQ(r.code, 3) << r.out << r.err;
  auto bad = cli("--format table enumerate --game '" + data("games/dominance_2x2.json") + "'", "DOMLAB_CAPS=wat");
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, BudgetExitsThree) {
  auto r = cli("--format table run --catalog ex2 --mode nested --max-limits 0");
  EXPECT_EQ(r.code, 3) << r.out << r.err;
  EXPECT_TRUE(has(r.out, "stopped:")) << r.out;
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(cli("run --catalog nope").code, 2);
  EXPECT_EQ(cli("run --catalog ex2 --mode sideways").code, 2);
  EXPECT_EQ(cli("run --catalog ex2 --game x.json").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("run --catalog ex2 --policy greedy").code, 2);
  EXPECT_EQ(cli("analyze --catalog ex2 --reduction '[0,1' --check local-boundedness").code, 2);
  EXPECT_EQ(cli("validate --game /nonexistent.json").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, UndefinedRelationExitsFour) {
  auto r = cli("--format table analyze --catalog ex1 --reduction '∅' --check local-boundedness");
  EXPECT_TRUE(r.code == 0 || r.code == 4) << r.code;
}

TEST(Cli, CatalogListAndVerify) {
  auto l = cli("--format table catalog list");
  EXPECT_EQ(l.code, 0);
  for (const auto& [id, alias] : domlab::catalog_ids()) EXPECT_TRUE(has(l.out, id)) << id;
  auto v = cli("--format table catalog verify ex4");
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_FALSE(has(v.out, "FAIL")) << v.out;
}

TEST(Cli, InterpolateGkz) {
  const auto game = data("games/dominance_2x2.json");
  auto r = cli("--format json interpolate-gkz --game '" + game + "' --to '{Top}×{Left, Right}'");
  EXPECT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.at("chain").size(), 2u);
  EXPECT_EQ(doc.at("chain").back(), "{Top}×{Left, Right}");
  auto t = cli("--format table interpolate-gkz --game '" + game +
               "' --from '{Top}×{Left, Right}' --to '{Top}×{Left}'");
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.out, "0  {Top}×{Left, Right}\n1  {Top}×{Left}\n");
  // Right is not dominated at the full game
  EXPECT_EQ(cli("interpolate-gkz --game '" + game + "' --to '{Top}×{Left}'").code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"--format json run --catalog ex2 --mode nested",
                           "--format json run --catalog ex1 --mode nested --policy random-subset --seed 3",
                           "--format json check-theorems --random 20 --seed 7"}) {
    auto a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
