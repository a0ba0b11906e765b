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

#include <fstream>
#include <sstream>

#include "support.hpp"

namespace domlab {
namespace {

using testing::N;
using testing::Q;

Json read_json(const std::string& rel) {
  std::ifstream in(testing::data_path(rel));
  return Json::parse(in);
}

TEST(Serialize, RationalsAreStringPairs) {
  auto j = rational_to_json(Q(-3, 4));
  EXPECT_EQ(j.dump(), R"({"num":"-3","den":"4"})");
  EXPECT_EQ(json_to_rational(j, "$"), Q(-3, 4));
  EXPECT_EQ(json_to_rational(Json(5), "$"), Q(5, 1));
  EXPECT_EQ(json_to_rational(Json::parse(R"({"num":"6","den":"-4"})"), "$"), Q(-3, 2));
  EXPECT_THROW(json_to_rational(Json(0.5), "$"), FormatError);
  EXPECT_THROW(json_to_rational(Json::parse(R"({"num":"1"})"), "$"), FormatError);
}

TEST(Serialize, SetRoundTrip) {
  testing::SetGen gen(11);
  for (int k = 0; k < 500; ++k) {
    auto s = gen.set(gen.pool());
    auto back = set_from_json(set_to_json(s), "$", testing::test_registry());
    EXPECT_EQ(back, s);
    EXPECT_EQ(parse_set(s.to_string(), testing::test_registry()), s) << s.to_string();
  }
}

TEST(Serialize, TaggedPrimitives) {
  auto s = parse_set("{a, 2} ∪ [0,1/2) ∪ tail(even, 3)");
  auto j = set_to_json(s);
  ASSERT_TRUE(j.is_array());
  std::vector<std::string> types;
  for (const auto& p : j) types.push_back(p.at("type").get<std::string>());
  EXPECT_NE(std::find(types.begin(), types.end(), "atom"), types.end());
  EXPECT_NE(std::find(types.begin(), types.end(), "interval"), types.end());
  EXPECT_NE(std::find(types.begin(), types.end(), "tail"), types.end());
  EXPECT_THROW(set_from_json(Json::parse(R"([{"type":"blob"}])"), "$"), FormatError);
  EXPECT_THROW(set_from_json(Json::parse(R"([{"type":"tail","seq":"nope","start":0}])"), "$"), FormatError);
  EXPECT_THROW(set_from_json(Json(3), "$"), FormatError);
}

TEST(Serialize, TextSyntax) {
  EXPECT_TRUE(parse_set("∅").empty());
  EXPECT_TRUE(parse_set("empty").empty());
  EXPECT_EQ(parse_set("{Left}"), SymbolicSet::atoms({"Left"}));
  EXPECT_EQ(parse_set("{\"1x\"}"), SymbolicSet::atoms({"1x"}));
  EXPECT_EQ(parse_set("[0,1]"), SymbolicSet::interval(0, 1, true, true));
  EXPECT_EQ(parse_set("(0,1) U {1}"), SymbolicSet::interval(0, 1, false, true));
  auto g = instantiate("ex3").game;
  EXPECT_EQ(parse_reduction("[0,1]×{Left}", 2),
            Reduction({SymbolicSet::interval(0, 1, true, true), SymbolicSet::atoms({"Left"})}));
  EXPECT_EQ(parse_reduction("[0,1] x {Left}", 2), parse_reduction("[0,1]×{Left}", 2));
  EXPECT_TRUE(parse_reduction("∅", 2).is_empty());
  EXPECT_THROW(parse_set("[0,1"), MalformedSet);
  EXPECT_THROW(parse_set("[1]"), MalformedSet);
  EXPECT_THROW(parse_set("tail(even, 1/2)"), MalformedSet);
  EXPECT_THROW(parse_set("{1,}"), MalformedSet);
  EXPECT_THROW(parse_reduction("{1}", 2), MalformedSet);
}

TEST(Serialize, ReductionRoundTrip) {
  auto g = instantiate("ex2").game;
  Reduction r({parse_set("tail(even, 2) ∪ {1}"), parse_set("{1}")});
  auto j = reduction_to_json(g, r);
  EXPECT_TRUE(j.contains("P1"));
  EXPECT_EQ(reduction_from_json(g, j, "$"), r);
  EXPECT_EQ(reduction_from_json(g, Json("tail(even, 2) ∪ {1} × {1}"), "$"), r);
  EXPECT_THROW(reduction_from_json(g, Json::parse(R"({"P1":"{1}","P9":"{1}"})"), "$"), FormatError);
  EXPECT_THROW(reduction_from_json(g, Json::parse(R"({"P1":"{1}"})"), "$"), FormatError);
}

TEST(Serialize, TraceRoundTripWithCertificate) {
  auto g = instantiate("ex2").game;
  auto t = run(g, Mode::kNested, Policy::remove_all());
  auto text = trace_to_jsonl(g, t);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(t.stages.size()));
  auto back = trace_from_jsonl(g, text, Mode::kNested);
  ASSERT_EQ(back.stages.size(), t.stages.size());
  for (std::size_t k = 0; k < t.stages.size(); ++k) {
    EXPECT_EQ(back.stages[k].reduction, t.stages[k].reduction) << k;
    EXPECT_EQ(back.stages[k].stage.to_string(), t.stages[k].stage.to_string());
    EXPECT_EQ(back.stages[k].certificate.has_value(), t.stages[k].certificate.has_value());
  }
  EXPECT_TRUE(back.terminal_maximal);
  EXPECT_TRUE(validate_sequence(g, back, Mode::kNested).valid);
  EXPECT_EQ(trace_to_jsonl(g, back), text);
}

TEST(Serialize, TraceErrorsNameTheLine) {
  auto g = instantiate("ex2").game;
  try {
    trace_from_jsonl(g, "\n{not json}\n", Mode::kNested);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(trace_from_jsonl(g, R"({"stage":{"k":0}})", Mode::kNested), FormatError);
}

TEST(Serialize, PolicyNames) {
  EXPECT_EQ(policy_from_name("remove-all", 0).kind, Policy::Kind::kRemoveAll);
  EXPECT_EQ(policy_from_name("remove-one", 0).kind, Policy::Kind::kRemoveOne);
  auto r = policy_from_name("random-subset", 42);
  EXPECT_EQ(r.kind, Policy::Kind::kRandomSubset);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_THROW(policy_from_name("greedy", 0), FormatError);
}

TEST(Serialize, DataScripts) {
  auto intro = instantiate("intro").game;
  auto p = script_from_json(intro, read_json("scripts/intro_two_step.json"));
  EXPECT_EQ(p.kind, Policy::Kind::kScripted);
  ASSERT_EQ(p.script.size(), 2u);
  EXPECT_EQ(p.script[0][0], SymbolicSet::interval(Q(1, 2), 1, false, false));
  EXPECT_EQ(p.fallback, nullptr);
  auto t = run(intro, Mode::kNested, p);
  EXPECT_EQ(t.final_reduction(), Reduction({SymbolicSet::points({Q(1, 2)}), SymbolicSet::atoms({"*"})}));

  auto ex5 = instantiate("ex5").game;
  auto keep = script_from_json(ex5, read_json("scripts/ex5_keep_sink.json"));
  ASSERT_NE(keep.fallback, nullptr);
  EXPECT_EQ(keep.fallback->protect[0], SymbolicSet::points({-1}));
  auto all = script_from_json(ex5, read_json("scripts/ex5_remove_all.json"));
  ASSERT_NE(all.fallback, nullptr);
  EXPECT_EQ(all.fallback->kind, Policy::Kind::kRemoveAll);

  auto ex1 = instantiate("ex1").game;
  auto eq4 = script_from_json(ex1, read_json("scripts/ex1_eq4.json"));
  EXPECT_EQ(eq4.script.size(), 3u);
  EXPECT_EQ(eq4.script[2][1], SymbolicSet::atoms({"Right"}));

  EXPECT_THROW(script_from_json(ex1, Json::parse(R"({"step":[]})")), FormatError);
  EXPECT_THROW(script_from_json(ex1, Json::parse(R"({"steps":[{"P7":"{1}"}]})")), FormatError);
  EXPECT_THROW(script_from_json(ex1, Json::parse(R"({"steps":[],"then":{"policy":"x"}})")), FormatError);
}

TEST(Serialize, SequenceRegistry) {
  auto j = Json::parse(R"([{"id":"thirds","a":"1","b":"0","c":"0","d":"3"}])");
  auto reg = registry_from_json(j);
  auto s = parse_set("tail(thirds, 0)", reg);
  EXPECT_TRUE(s.contains(Strategy::number(Q(2, 3))));
  EXPECT_THROW(registry_from_json(Json::parse(R"([{"id":"x","a":"1"}])")), FormatError);
  auto back = registry_from_json(registry_to_json(reg));
  EXPECT_EQ(back.get("thirds")->at(4), reg.get("thirds")->at(4));
}

}  // namespace
}  // namespace domlab
