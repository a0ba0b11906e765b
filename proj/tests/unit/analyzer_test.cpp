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

#include "support.hpp"

namespace domlab {
namespace {

using testing::N;
using testing::Q;

const SymbolicSet kOne = SymbolicSet::points({Rational(1)});
const SymbolicSet kStar = SymbolicSet::atoms({"*"});

// The failing witness must re-derive: non-empty dominating set with no
// undominated member.
void expect_reproducible(const Game& g, const BoundednessVerdict& v, const SymbolicSet& pool_scope) {
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.player && v.strategy && v.dominating && v.reduction);
  const auto& r = *v.reduction;
  auto d = set_intersect(g.dominating_set(*v.player, *v.strategy, r), pool_scope);
  EXPECT_EQ(d, *v.dominating);
  EXPECT_FALSE(d.empty());
  EXPECT_TRUE(g.undominated_elements(*v.player, d, pool_scope, r).empty());
}

TEST(Complete, IntroSingletonsFail) {
  auto g = instantiate("intro").game;
  for (auto a : {Q(1, 3), Q(1, 2), Q(9, 10)}) {
    auto v = is_completely_bounded(g, Reduction({SymbolicSet::points({a}), kStar}));
    EXPECT_FALSE(v.holds) << a.get_str();
    expect_reproducible(g, v, g.space(0));
  }
}

TEST(Complete, ExampleTwoTopFails) {
  auto g = instantiate("ex2").game;
  auto v = is_completely_bounded(g, Reduction({kOne, kOne}));
  expect_reproducible(g, v, g.space(*v.player));
  EXPECT_TRUE(is_locally_bounded(g, Reduction({kOne, kOne})).holds);
}

TEST(Complete, ExampleTwoEarlyStagesHold) {
  auto g = instantiate("ex2").game;
  auto t = run(g, Mode::kNested, Policy::remove_all());
  for (std::size_t k = 0; k + 1 < t.stages.size() && k < 12; ++k) {
    EXPECT_TRUE(is_completely_bounded(g, t.stages[k].reduction).holds) << k;
  }
}

TEST(Complete, ExampleThreeLeftColumnFails) {
  auto g = instantiate("ex3").game;
  auto r = parse_reduction("[0,1]×{Left}", 2);
  auto v = is_completely_bounded(g, r);
  expect_reproducible(g, v, g.space(*v.player));
  EXPECT_TRUE(is_completely_bounded(g, g.full()).holds);
}

TEST(Complete, EmptyHoldsVacuously) {
  for (const auto& [id, alias] : catalog_ids()) {
    auto g = instantiate(id).game;
    EXPECT_TRUE(is_completely_bounded(g, Reduction::empty(2)).holds);
    EXPECT_TRUE(is_locally_bounded(g, Reduction::empty(2)).holds);
    EXPECT_TRUE(property_C_at(g, Reduction::empty(2)).holds);
  }
}

TEST(Local, HalfOpenUnitIntervalFails) {
  auto g = unit_interval_identity_game();
  auto r = Reduction({SymbolicSet::interval(0, 1, true, false), kStar});
  auto v = is_locally_bounded(g, r);
  expect_reproducible(g, v, r[0]);
  EXPECT_TRUE(is_locally_bounded(g, g.full()).holds);
}

TEST(Local, NoDominanceHolds) {
  auto g = instantiate("ex3").game;
  EXPECT_TRUE(is_locally_bounded(g, g.full()).holds);
}

TEST(Local, CompleteImpliesLocalOnCatalogStages) {
  for (const char* id : {"ex2", "ex4", "ex5"}) {
    auto g = instantiate(id).game;
    for (const auto& r : run(g, Mode::kNested, Policy::remove_all()).reductions()) {
      if (is_completely_bounded(g, r).holds) EXPECT_TRUE(is_locally_bounded(g, r).holds) << id;
    }
  }
}

TEST(PropertyC, ExampleFourFailsAtTheLimit) {
  auto g = instantiate("ex4").game;
  auto lr = SymbolicSet::atoms({"Left", "Right"});
  auto v = property_C_at(g, Reduction({lr, lr}));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.strategy.has_value());
  EXPECT_TRUE(v.strategy->is_number());
  expect_reproducible(g, v, g.space(*v.player));
}

TEST(PropertyC, FiniteGames) {
  auto dom = load_finite_game_text(R"({"players":["P1","P2"],
    "strategies":{"P1":["a","b"],"P2":["x","y"]},
    "payoffs":{"P1":[[1,1],[0,0]],"P2":[[0,0],[0,0]]}})");
  EXPECT_TRUE(satisfies_property_C(dom).holds);
  auto flat = load_finite_game_text(R"({"players":["P1","P2"],
    "strategies":{"P1":["a","b"],"P2":["x","y"]},
    "payoffs":{"P1":[[1,0],[0,1]],"P2":[[0,1],[1,0]]}})");
  EXPECT_TRUE(satisfies_property_C(flat).holds);
  // Finite strategy sets always have undominated dominators, so the
  // truncations of the property C counterexample satisfy it.
  auto e = instantiate("ex4");
  for (int n : {3, 5}) {
    EnumerationCaps caps;
    caps.max_strategies_total = 20;
    auto t = e.truncation(n);
    EXPECT_TRUE(satisfies_property_C(t, caps).holds) << n;
    EXPECT_TRUE(class_equal(enumerate_sequences(t, Mode::kNested, caps),
                            enumerate_sequences(t, Mode::kUniversal, caps)));
  }
}

TEST(Classes, FiniteGamesAreBounded) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto g = random_game(s, 2, 3);
    for (auto m : {Mode::kNested, Mode::kUniversal}) {
      EXPECT_TRUE(class_boundedness(g, m, BoundKind::kComplete).holds) << s;
      EXPECT_TRUE(class_boundedness(g, m, BoundKind::kLocal).holds) << s;
    }
    auto f = is_forgetfulness_proof(g);
    auto l = class_boundedness(g, Mode::kNested, BoundKind::kLocal);
    EXPECT_EQ(f.holds, l.holds) << s;
    auto star = closed_under_dominance_star(g);
    if (star.holds) EXPECT_TRUE(l.holds) << s;
  }
}

TEST(Classes, DegenerateGame) {
  auto g = load_finite_game_text(R"({"players":["P1","P2"],"strategies":{"P1":["a"],"P2":["x"]},
    "payoffs":{"P1":[[0]],"P2":[[0]]}})");
  EXPECT_TRUE(class_boundedness(g, Mode::kNested, BoundKind::kComplete).holds);
  EXPECT_TRUE(is_forgetfulness_proof(g).holds);
  EXPECT_TRUE(closed_under_dominance_star(g).holds);
  EXPECT_TRUE(satisfies_property_C(g).holds);
}

TEST(Classes, ExampleTwoTruncation) {
  auto e = instantiate("ex2");
  EnumerationCaps caps;
  caps.max_strategies_total = 20;
  auto t = e.truncation(5);
  EXPECT_TRUE(class_boundedness(t, Mode::kNested, BoundKind::kComplete, caps).holds);
  EXPECT_TRUE(class_equal(enumerate_sequences(t, Mode::kNested, caps),
                          enumerate_sequences(t, Mode::kUniversal, caps)));
}

TEST(DominanceStar, ExampleFiveFailsAtTheSink) {
  auto g = instantiate("ex5").game;
  const Reduction sink({SymbolicSet::points({Q(-1)}), kOne});
  auto v = dominance_star_at(g, g.full(), sink);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.player, 0u);
  ASSERT_TRUE(v.strategy.has_value());
  EXPECT_EQ(*v.strategy, N(-1));
  ASSERT_TRUE(v.later.has_value());
  EXPECT_EQ(*v.later, sink);
  auto t = run(g, Mode::kNested, ex5_keep_sink());
  EXPECT_FALSE(pairs_dominance_star(g, trace_pairs(t)).holds);
}

TEST(DominanceStar, ExampleTwoHoldsAlongTheChain) {
  auto g = instantiate("ex2").game;
  auto t = run(g, Mode::kNested, Policy::remove_all());
  EXPECT_TRUE(pairs_dominance_star(g, trace_pairs(t)).holds);
}

TEST(DominanceStar, NoDominanceHolds) {
  auto g = load_finite_game_text(R"({"players":["P1","P2"],
    "strategies":{"P1":["a","b"],"P2":["x","y"]},
    "payoffs":{"P1":[[1,0],[0,1]],"P2":[[0,1],[1,0]]}})");
  EXPECT_TRUE(closed_under_dominance_star(g).holds);
}

TEST(Forgetfulness, ExampleFiveStagesAreLocallyBounded) {
  auto g = instantiate("ex5").game;
  auto a = run(g, Mode::kNested, Policy::remove_all()).reductions();
  auto b = run(g, Mode::kNested, ex5_keep_sink()).reductions();
  EXPECT_TRUE(range_locally_bounded(g, a).holds);
  EXPECT_TRUE(range_locally_bounded(g, b).holds);
}

TEST(Lemma, MaximalReductionsHaveNoUndominatedDominators) {
  // At a nested-maximal reduction every non-empty dominating set lacks an
  // undominated element.
  auto g = instantiate("ex2").game;
  const Reduction top({kOne, kOne});
  for (std::size_t i = 0; i < 2; ++i) {
    auto d = g.dominating_set(i, N(1), top);
    ASSERT_FALSE(d.empty());
    EXPECT_TRUE(g.undominated_elements(i, d, g.space(i), top).empty());
  }
}

}  // namespace
}  // namespace domlab
