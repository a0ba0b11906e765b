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

Game from_file(const std::string& rel) {
  std::ifstream in(testing::data_path(rel));
  std::stringstream ss;
  ss << in.rdbuf();
  return load_finite_game_text(ss.str());
}

// Both players have one dominated strategy from the start.
Game independent_dominance() {
  return load_finite_game_text(R"({"players":["P1","P2"],
    "strategies":{"P1":["a","b"],"P2":["x","y"]},
    "payoffs":{"P1":[[1,1],[0,0]],"P2":[[1,0],[1,0]]}})");
}

EliminationTrace as_trace(const SequenceClass& c, const FiniteTableOracle& f,
                          const std::vector<std::size_t>& path) {
  EliminationTrace t;
  t.mode = c.mode;
  for (std::size_t j = 0; j < path.size(); ++j) {
    TraceEntry e;
    e.stage = Stage{0, static_cast<std::int64_t>(j)};
    e.reduction = f.from_masks(c.nodes[path[j]]);
    t.stages.push_back(e);
  }
  t.terminal_maximal = true;
  return t;
}

TEST(Enumerate, DominanceGameHasOneEnd) {
  auto g = from_file("games/dominance_2x2.json");
  auto c = enumerate_sequences(g, Mode::kNested);
  const auto& f = *finite_oracle(g);
  ASSERT_EQ(c.maximal_set().size(), 1u);
  EXPECT_EQ(f.from_masks(c.maximal_set()[0]),
            Reduction({SymbolicSet::atoms({"Top"}), SymbolicSet::atoms({"Left"})}));
  EXPECT_EQ(c.sequence_count(), 1);
}

TEST(Enumerate, NoDominanceSingleSequence) {
  auto g = from_file("games/matching_pennies.json");
  for (auto m : {Mode::kNested, Mode::kUniversal, Mode::kGkz}) {
    auto c = enumerate_sequences(g, m);
    EXPECT_EQ(c.sequence_count(), 1);
    EXPECT_EQ(c.nodes.size(), 1u);
    EXPECT_TRUE(c.maximal[0]);
  }
}

TEST(Enumerate, SeveralOrdersSameEnd) {
  auto g = independent_dominance();
  auto c = enumerate_sequences(g, Mode::kNested);
  // {b} then {y}, {y} then {b}, or both at once
  EXPECT_EQ(c.sequence_count(), 3);
  EXPECT_EQ(c.nodes.size(), 4u);
  EXPECT_EQ(c.maximal_set().size(), 1u);
  const auto& f = *finite_oracle(g);
  for (const auto& p : c.list(10)) {
    EXPECT_TRUE(validate_sequence(g, as_trace(c, f, p), Mode::kNested).valid);
  }
}

TEST(Enumerate, ExampleTwoTruncationIsStrictlyOrdered) {
  auto e = instantiate("ex2");
  auto g = e.truncation(3);
  auto c = enumerate_sequences(g, Mode::kNested);
  EXPECT_EQ(c.sequence_count(), 1);
  ASSERT_EQ(c.maximal_set().size(), 1u);
  const auto& f = *finite_oracle(g);
  auto path = c.list(1).at(0);
  std::vector<Rational> removed;
  for (std::size_t j = 1; j < path.size(); ++j) {
    auto before = f.from_masks(c.nodes[path[j - 1]]);
    auto after = f.from_masks(c.nodes[path[j]]);
    std::size_t count = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      auto gone = set_difference(before[i], after.is_empty() ? SymbolicSet() : after[i]);
      auto elems = gone.finite_elements();
      ASSERT_TRUE(elems.has_value());
      count += elems->size();
      for (const auto& x : *elems) removed.push_back(x.value());
    }
    EXPECT_EQ(count, 1u) << "one strategy per stage";
  }
  ASSERT_GE(removed.size(), 4u);
  EXPECT_EQ(removed[0], testing::Q(0));
  EXPECT_EQ(removed[1], testing::Q(1, 2));
  EXPECT_EQ(removed[2], testing::Q(2, 3));
  EXPECT_EQ(removed[3], testing::Q(3, 4));
  EXPECT_TRUE(std::is_sorted(removed.begin(), removed.end()));
  // without the rest of the grid the last term is not beaten by 1
  auto top = f.from_masks(c.maximal_set()[0]);
  EXPECT_EQ(top, Reduction({SymbolicSet::points({testing::Q(4, 5), 1}), SymbolicSet::points({testing::Q(5, 6), 1})}));
  EXPECT_TRUE(class_equal(c, enumerate_sequences(g, Mode::kUniversal)));
}

TEST(Enumerate, CapsAreEnforced) {
  auto g = random_game(3, 2, 3);
  EnumerationCaps small;
  small.max_strategies_total = 2;
  EXPECT_THROW(enumerate_sequences(g, Mode::kNested, small), EnumerationTooLarge);
  EnumerationCaps few;
  few.max_sequences = 0;
  EXPECT_THROW(enumerate_sequences(independent_dominance(), Mode::kNested, few), EnumerationTooLarge);
  EXPECT_THROW(enumerate_sequences(instantiate("ex2").game, Mode::kNested), UnsupportedQuery);
}

TEST(Enumerate, Deterministic) {
  auto g = random_game(41, 2, 3);
  const auto& f = *finite_oracle(g);
  auto a = sequence_class_to_json(f, enumerate_sequences(g, Mode::kNested), 50).dump();
  auto b = sequence_class_to_json(f, enumerate_sequences(g, Mode::kNested), 50).dump();
  EXPECT_EQ(a, b);
}

TEST(Enumerate, MoreThanOneSequenceOccurs) {
  std::size_t multi = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    if (enumerate_sequences(random_game(s, 2, 3), Mode::kNested).sequence_count() > 1) ++multi;
  }
  EXPECT_GT(multi, 0u);
}

TEST(Enumerate, ClassInvariantsOnRandomGames) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    auto g = random_game(s, 2, 3);
    const auto& f = *finite_oracle(g);
    auto n = enumerate_sequences(g, Mode::kNested);
    auto u = enumerate_sequences(g, Mode::kUniversal);
    auto k = enumerate_sequences(g, Mode::kGkz);
    EXPECT_EQ(u.maximal_set().size(), 1u) << s;
    EXPECT_TRUE(class_equal(n, u)) << s;
    EXPECT_TRUE(class_equal(k, n)) << s;
    EXPECT_EQ(n.nodes.front(), f.kernel().full());
    for (const auto& [c, m] : {std::pair{&n, Mode::kNested}, std::pair{&u, Mode::kUniversal}}) {
      for (const auto& p : c->list(25)) {
        EXPECT_TRUE(validate_sequence(g, as_trace(*c, f, p), m).valid) << s;
      }
    }
  }
}

TEST(Enumerate, ThreePlayerGame) {
  auto g = from_file("games/three_player.json");
  auto n = enumerate_sequences(g, Mode::kNested);
  auto u = enumerate_sequences(g, Mode::kUniversal);
  EXPECT_TRUE(class_equal(n, u));
  EXPECT_EQ(u.maximal_set().size(), 1u);
}

}  // namespace
}  // namespace domlab
