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

#ifndef DOMLAB_TESTS_SUPPORT_HPP_
#define DOMLAB_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <random>
#include <string>
#include <vector>

#include "domlab/domlab.hpp"

namespace domlab {

// Readable values in test failure messages.
inline void PrintTo(const SymbolicSet& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Reduction& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const Strategy& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace domlab

namespace domlab::testing {

inline Strategy A(const std::string& s) { return Strategy::atom(s); }
inline Strategy N(long p, long q = 1) { return Strategy::number(make_rational(p, q)); }
inline Rational Q(long p, long q = 1) { return make_rational(p, q); }

inline std::vector<Strategy> atoms(std::initializer_list<const char*> xs) {
  std::vector<Strategy> out;
  for (const char* x : xs) out.push_back(Strategy::atom(x));
  return out;
}

// Decreasing test sequence 1/(k+1).
inline SequencePtr inv_sequence() {
  static const auto s = std::make_shared<const RationalSequence>("inv", 0, 1, 1, 1, 0);
  return s;
}

inline SequenceRegistry test_registry() {
  auto r = standard_registry();
  r.add(*inv_sequence());
  return r;
}

// Random sets over a small grid. Tail families come from one pool per
// call so that no unsupported cross-sequence combination arises.
class SetGen {
 public:
  explicit SetGen(std::uint64_t seed) : rng_(seed) {}

  std::vector<SequencePtr> pool() {
    if (coin()) return {frac_sequence()};
    return {even_sequence(), odd_sequence()};
  }

  Rational grid() { return make_rational(static_cast<long>(uniform(0, 18)) - 6, static_cast<long>(uniform(1, 6))); }

  SetPrimitive primitive(const std::vector<SequencePtr>& seqs) {
    switch (uniform(0, 3)) {
      case 0: return Atom{std::string(1, static_cast<char>('a' + uniform(0, 2)))};
      case 1: return Point{grid()};
      case 2: {
        auto lo = grid(), hi = grid();
        if (hi < lo) std::swap(lo, hi);
        return Interval{lo, hi, coin(), coin()};
      }
      default: return TailFamily{seqs[uniform(0, seqs.size() - 1)], static_cast<std::int64_t>(uniform(0, 6))};
    }
  }

  SymbolicSet set(const std::vector<SequencePtr>& seqs) {
    std::vector<SetPrimitive> p;
    const auto n = uniform(0, 4);
    for (std::size_t k = 0; k < n; ++k) p.push_back(primitive(seqs));
    return SymbolicSet::of(std::move(p));
  }

  bool coin() { return rng_() & 1; }
  std::size_t uniform(std::size_t lo, std::size_t hi) { return lo + rng_() % (hi - lo + 1); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Atoms, grid values with small offsets, and sequence terms up to index 20.
inline std::vector<Strategy> probe_values() {
  std::vector<Strategy> out;
  for (const char* a : {"a", "b", "c", "z"}) out.push_back(Strategy::atom(a));
  std::vector<Rational> vals;
  for (long q = 1; q <= 6; ++q) {
    for (long p = -7 * q; p <= 13 * q; ++p) vals.push_back(make_rational(p, q));
  }
  const auto eps = make_rational(1, 1000);
  std::size_t n = vals.size();
  for (std::size_t k = 0; k < n; ++k) {
    vals.push_back(vals[k] + eps);
    vals.push_back(vals[k] - eps);
  }
  for (const auto& s : {even_sequence(), odd_sequence(), frac_sequence(), inv_sequence()}) {
    for (std::int64_t k = 0; k <= 20; ++k) vals.push_back(s->at(k));
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (auto& v : vals) out.push_back(Strategy::number(v));
  return out;
}

// Finite game over atom labels with payoffs given per profile.
inline Game table_game(std::vector<std::string> players, std::vector<std::vector<Strategy>> strategies,
                       std::vector<std::vector<Rational>> payoffs) {
  return make_finite_game("test", std::move(players), std::move(strategies), std::move(payoffs));
}

inline std::string data_path(const std::string& rel) { return std::string(DOMLAB_DATA_DIR) + "/" + rel; }

inline Game data_game(const std::string& rel) {
  std::ifstream in(data_path(rel));
  std::stringstream ss;
  ss << in.rdbuf();
  return load_finite_game_text(ss.str(), rel);
}

}  // namespace domlab::testing

#endif  // DOMLAB_TESTS_SUPPORT_HPP_
