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

#include "set_suite.hpp"

namespace domlab::testing {
namespace {

std::string notes(const SuiteResult& r) {
  std::string out;
  for (const auto& n : r.notes) out += n + "\n";
  return out;
}

TEST(SetProperties, NormalizationIdempotent) {
  auto r = normalization_cases(11, 4000);
  EXPECT_EQ(r.cases, 4000u);
  EXPECT_TRUE(r.ok()) << notes(r);
}

TEST(SetProperties, ExtensionalSoundness) {
  auto r = soundness_cases(12, 4000);
  EXPECT_TRUE(r.ok()) << notes(r);
  // only differences of the interval-minus-family shape are refused
  EXPECT_LT(r.skipped, r.cases / 10);
}

TEST(SetProperties, SoundOnTheFullProbeGrid) {
  SetGen gen(13);
  const auto grid = probe_values();
  for (int c = 0; c < 150; ++c) {
    auto seqs = gen.pool();
    auto s = gen.set(seqs), t = gen.set(seqs);
    auto u = set_union(s, t), i = set_intersect(s, t);
    std::optional<SymbolicSet> d;
    try {
      d = set_difference(s, t);
    } catch (const UnsupportedCombination&) {
    }
    for (const auto& x : grid) {
      const bool a = s.contains(x), b = t.contains(x);
      ASSERT_EQ(u.contains(x), a || b) << s.to_string() << " | " << t.to_string() << " @ " << x.to_string();
      ASSERT_EQ(i.contains(x), a && b) << s.to_string() << " & " << t.to_string() << " @ " << x.to_string();
      if (d) ASSERT_EQ(d->contains(x), a && !b) << s.to_string() << " - " << t.to_string() << " @ " << x.to_string();
    }
  }
}

TEST(SetProperties, SubsetIffDifferenceEmpty) {
  auto r = compare_cases(14, 3000);
  EXPECT_TRUE(r.ok()) << notes(r);
}

TEST(SetProperties, ChainLimitSound) {
  std::size_t detected = 0;
  auto r = chain_limit_cases(15, 2000, &detected);
  EXPECT_TRUE(r.ok()) << notes(r);
  // Generated chains are affine by construction; most must be recognised.
  EXPECT_GT(detected, 1500u);
}

TEST(SetProperties, IntervalMinusFamilyIsRefused) {
  auto iv = SymbolicSet::interval(0, 1, true, true);
  EXPECT_THROW(set_difference(iv, SymbolicSet::tail(even_sequence(), 0)), UnsupportedCombination);
  // finitely many family points inside is fine
  auto d = set_difference(SymbolicSet::interval(0, Q(5, 6), true, true), SymbolicSet::tail(even_sequence(), 1));
  EXPECT_FALSE(d.contains(N(2, 3)));
  EXPECT_FALSE(d.contains(N(4, 5)));
  EXPECT_TRUE(d.contains(N(5, 6)));
}

TEST(SetProperties, CrossSequenceDifferenceIsRefused) {
  auto frac = SymbolicSet::tail(frac_sequence(), 0);
  auto inv = SymbolicSet::tail(inv_sequence(), 0);
  // Either exact or an explicit refusal, never an approximation.
  try {
    auto d = set_difference(frac, inv);
    for (const auto& x : probe_values()) {
      EXPECT_EQ(d.contains(x), frac.contains(x) && !inv.contains(x)) << x.to_string();
    }
  } catch (const UnsupportedCombination&) {
    SUCCEED();
  }
}

}  // namespace
}  // namespace domlab::testing
