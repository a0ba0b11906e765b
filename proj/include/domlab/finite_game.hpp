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

#ifndef DOMLAB_FINITE_GAME_HPP_
#define DOMLAB_FINITE_GAME_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include "json.hpp"

#include "domlab/error.hpp"
#include "domlab/game.hpp"
#include "domlab/rational.hpp"
#include "domlab/symbolic_set.hpp"

namespace domlab {

// One bitmask of surviving strategy indices per player.
using Masks = std::vector<std::uint64_t>;

inline constexpr std::size_t kMaxStrategiesPerPlayer = 64;
inline constexpr std::size_t kMaxProfiles = std::size_t{1} << 22;

inline std::uint64_t low_bits(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Payoff tensor with precomputed strict comparisons. For each player i and
// pair (a, b), less(i, a, b) marks the opponent profiles where
// u_i(a, .) < u_i(b, .); a is dominated by b relative to R_{-i} iff the
// opponent mask of R is a subset of that bitset.
class FiniteKernel {
 public:
  FiniteKernel() = default;
  // payoffs[i] is row-major over all profiles in player order.
  FiniteKernel(std::vector<std::size_t> counts, std::vector<std::vector<Rational>> payoffs)
      : counts_(std::move(counts)), payoffs_(std::move(payoffs)) {
    const std::size_t n = counts_.size();
    std::size_t total = 1;
    for (auto c : counts_) {
      if (c == 0 || c > kMaxStrategiesPerPlayer) {
        throw FormatError("strategies", "each player needs 1.." +
                                            std::to_string(kMaxStrategiesPerPlayer) +
                                            " strategies");
      }
      total *= c;
      if (total > kMaxProfiles) throw FormatError("payoffs", "payoff tensor too large");
    }
    total_ = total;
    strides_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) strides_[i - 1] = strides_[i] * counts_[i];
    less_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = counts_[i];
      const std::size_t opp = total_ / m;
      less_[i].assign(m * m, boost::dynamic_bitset<>(opp));
      for (std::size_t q = 0; q < opp; ++q) {
        std::size_t base = embed(i, q);
        for (std::size_t a = 0; a < m; ++a) {
          const Rational& ua = payoffs_[i][base + a * strides_[i]];
          for (std::size_t b = 0; b < m; ++b) {
            if (ua < payoffs_[i][base + b * strides_[i]]) less_[i][a * m + b].set(q);
          }
        }
      }
    }
  }

  std::size_t players() const { return counts_.size(); }
  std::size_t count(std::size_t i) const { return counts_[i]; }
  std::uint64_t all(std::size_t i) const { return low_bits(counts_[i]); }
  Masks full() const {
    Masks m;
    for (std::size_t i = 0; i < players(); ++i) m.push_back(all(i));
    return m;
  }
  std::size_t opponent_profiles(std::size_t i) const { return total_ / counts_[i]; }

  const Rational& payoff(std::size_t i, const std::vector<std::size_t>& profile) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < profile.size(); ++j) idx += profile[j] * strides_[j];
    return payoffs_[i][idx];
  }
  const std::vector<Rational>& payoff_table(std::size_t i) const { return payoffs_[i]; }

  // Opponent profiles of player i lying in R_{-i}.
  boost::dynamic_bitset<> opponent_mask(std::size_t i, const Masks& r) const {
    boost::dynamic_bitset<> out(opponent_profiles(i));
    const std::size_t n = players();
    for (std::size_t q = 0; q < out.size(); ++q) {
      // decode q over players j != i, last player fastest
      std::size_t rest = q;
      bool inside = true;
      for (std::size_t j = n; j-- > 0;) {
        if (j == i) continue;
        std::size_t d = rest % counts_[j];
        rest /= counts_[j];
        if (!(r[j] >> d & 1)) inside = false;
      }
      if (inside) out.set(q);
    }
    return out;
  }

  bool dominates(std::size_t i, std::size_t a, std::size_t b,
                 const boost::dynamic_bitset<>& opp) const {
    return opp.any() && opp.is_subset_of(less_[i][a * counts_[i] + b]);
  }

  // row[a] = mask of strategies that dominate a.
  std::vector<std::uint64_t> dominator_rows(std::size_t i,
                                            const boost::dynamic_bitset<>& opp) const {
    const std::size_t m = counts_[i];
    std::vector<std::uint64_t> rows(m, 0);
    if (opp.none()) return rows;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (opp.is_subset_of(less_[i][a * m + b])) rows[a] |= std::uint64_t{1} << b;
      }
    }
    return rows;
  }

  std::uint64_t dominated(std::size_t i, std::uint64_t target, std::uint64_t scope,
                          const boost::dynamic_bitset<>& opp) const {
    auto rows = dominator_rows(i, opp);
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < counts_[i]; ++a) {
      if ((target >> a & 1) && (rows[a] & scope)) out |= std::uint64_t{1} << a;
    }
    return out;
  }

 private:
  // Flat index of the profile with player i at 0 and opponents decoded from q.
  std::size_t embed(std::size_t i, std::size_t q) const {
    std::size_t idx = 0;
    std::size_t rest = q;
    for (std::size_t j = counts_.size(); j-- > 0;) {
      if (j == i) continue;
      idx += (rest % counts_[j]) * strides_[j];
      rest /= counts_[j];
    }
    return idx;
  }

  std::vector<std::size_t> counts_;
  std::vector<std::vector<Rational>> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
  std::vector<std::vector<boost::dynamic_bitset<>>> less_;
};

// Brute-force oracle over a payoff table.
class FiniteTableOracle : public DominanceOracle {
 public:
  FiniteTableOracle(std::vector<std::vector<Strategy>> strategies, FiniteKernel kernel)
      : strategies_(std::move(strategies)), kernel_(std::move(kernel)) {
    index_.resize(strategies_.size());
    for (std::size_t i = 0; i < strategies_.size(); ++i) {
      for (std::size_t k = 0; k < strategies_[i].size(); ++k) {
        index_[i].emplace(strategies_[i][k], k);
      }
    }
  }

  std::string name() const override { return "finite-table"; }
  const FiniteKernel& kernel() const { return kernel_; }
  const std::vector<Strategy>& strategies(std::size_t i) const { return strategies_[i]; }

  std::size_t index_of(std::size_t i, const Strategy& s) const {
    auto it = index_[i].find(s);
    if (it == index_[i].end()) {
      throw MalformedSet("strategy '" + s.to_string() + "' is not in A_" + std::to_string(i));
    }
    return it->second;
  }

  std::uint64_t to_mask(std::size_t i, const SymbolicSet& s) const {
    auto elems = s.finite_elements();
    if (!elems) throw MalformedSet("finite game set must be finite: " + s.to_string());
    std::uint64_t m = 0;
    for (const auto& x : *elems) m |= std::uint64_t{1} << index_of(i, x);
    return m;
  }

  Masks to_masks(const Reduction& r) const {
    Masks m;
    for (std::size_t i = 0; i < strategies_.size(); ++i) {
      m.push_back(r.is_empty() ? 0 : to_mask(i, r[i]));
    }
    return m;
  }

  SymbolicSet from_mask(std::size_t i, std::uint64_t m) const {
    std::vector<SetPrimitive> prims;
    for (std::size_t k = 0; k < strategies_[i].size(); ++k) {
      if (!(m >> k & 1)) continue;
      const Strategy& s = strategies_[i][k];
      if (s.is_atom()) {
        prims.push_back(Atom{s.label()});
      } else {
        prims.push_back(Point{s.value()});
      }
    }
    return SymbolicSet::of(std::move(prims));
  }

  Reduction from_masks(const Masks& m) const {
    std::vector<SymbolicSet> sets;
    for (std::size_t i = 0; i < m.size(); ++i) sets.push_back(from_mask(i, m[i]));
    return Reduction(std::move(sets));
  }

  bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                 const Reduction& r) const override {
    auto opp = kernel_.opponent_mask(i, to_masks(r));
    return kernel_.dominates(i, index_of(i, a), index_of(i, b), opp);
  }

  SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                 const SymbolicSet& scope,
                                 const Reduction& r) const override {
    auto opp = kernel_.opponent_mask(i, to_masks(r));
    return from_mask(i, kernel_.dominated(i, to_mask(i, target), to_mask(i, scope), opp));
  }

  SymbolicSet dominating_set(std::size_t i, const Strategy& a,
                             const Reduction& r) const override {
    auto opp = kernel_.opponent_mask(i, to_masks(r));
    return from_mask(i, kernel_.dominator_rows(i, opp)[index_of(i, a)]);
  }

  SymbolicSet lower_contour_set(std::size_t i, const Strategy& a,
                                const Reduction& r) const override {
    auto opp = kernel_.opponent_mask(i, to_masks(r));
    auto rows = kernel_.dominator_rows(i, opp);
    std::size_t ai = index_of(i, a);
    std::uint64_t m = 0;
    for (std::size_t x = 0; x < rows.size(); ++x) {
      if (rows[x] >> ai & 1) m |= std::uint64_t{1} << x;
    }
    return from_mask(i, m);
  }

  Rational payoff(std::size_t i, const Profile& profile) const override {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < profile.size(); ++j) idx.push_back(index_of(j, profile[j]));
    return kernel_.payoff(i, idx);
  }

 private:
  std::vector<std::vector<Strategy>> strategies_;
  std::vector<std::map<Strategy, std::size_t>> index_;
  FiniteKernel kernel_;
};

// The finite oracle behind a game, or null for analytic games.
inline const FiniteTableOracle* finite_oracle(const Game& g) {
  return dynamic_cast<const FiniteTableOracle*>(&g.oracle());
}

inline Game make_finite_game(std::string source, std::vector<std::string> players,
                             std::vector<std::vector<Strategy>> strategies,
                             std::vector<std::vector<Rational>> payoffs) {
  std::vector<std::size_t> counts;
  std::vector<SymbolicSet> spaces;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    counts.push_back(strategies[i].size());
    std::set<Strategy> seen(strategies[i].begin(), strategies[i].end());
    if (seen.size() != strategies[i].size()) {
      throw FormatError("strategies", "duplicate strategy for player " + std::to_string(i));
    }
    std::vector<SetPrimitive> prims;
    for (const auto& s : strategies[i]) {
      if (s.is_atom()) {
        prims.push_back(Atom{s.label()});
      } else {
        prims.push_back(Point{s.value()});
      }
    }
    spaces.push_back(SymbolicSet::of(std::move(prims)));
  }
  auto oracle = std::make_shared<FiniteTableOracle>(
      strategies, FiniteKernel(counts, std::move(payoffs)));
  return Game(std::move(source), std::move(players), std::move(spaces), strategies,
              std::move(oracle));
}

// Builds a finite game from a payoff function over index profiles.
inline Game make_finite_game(
    std::string source, std::vector<std::string> players,
    std::vector<std::vector<Strategy>> strategies,
    const std::function<Rational(std::size_t, const std::vector<std::size_t>&)>& u) {
  const std::size_t n = strategies.size();
  std::size_t total = 1;
  for (const auto& s : strategies) total *= std::max<std::size_t>(s.size(), 1);
  std::vector<std::vector<Rational>> payoffs(n, std::vector<Rational>(total));
  std::vector<std::size_t> prof(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t j = n; j-- > 0;) {
      prof[j] = rest % strategies[j].size();
      rest /= strategies[j].size();
    }
    for (std::size_t i = 0; i < n; ++i) payoffs[i][flat] = u(i, prof);
  }
  return make_finite_game(std::move(source), std::move(players), std::move(strategies),
                          std::move(payoffs));
}

// ---------------------------------------------------------------------------
// Game file format

namespace detail {

inline Integer json_integer(const nlohmann::ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) {
      throw FormatError(where, "'" + s + "' is not a decimal integer");
    }
    return z;
  }
  throw FormatError(where, "expected an integer or a decimal integer string");
}

}  // namespace detail

inline Rational json_to_rational(const nlohmann::ordered_json& v, const std::string& where) {
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return Rational(detail::json_integer(v, where));
  }
  if (v.is_object()) {
    if (!v.contains("num") || !v.contains("den")) {
      throw FormatError(where, "rational needs \"num\" and \"den\"");
    }
    Integer num = detail::json_integer(v.at("num"), where + ".num");
    Integer den = detail::json_integer(v.at("den"), where + ".den");
    if (den == 0) throw FormatError(where + ".den", "zero denominator");
    return make_rational(num, den);
  }
  if (v.is_number_float()) {
    throw FormatError(where, "floating point payoff; write it as {\"num\", \"den\"}");
  }
  throw FormatError(where, "expected an integer or {\"num\", \"den\"}");
}

inline nlohmann::ordered_json rational_to_json(const Rational& q) {
  nlohmann::ordered_json j;
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  return j;
}

inline Game load_finite_game(const nlohmann::ordered_json& doc, std::string source = "file") {
  if (!doc.is_object()) throw FormatError("$", "game document must be an object");
  for (const char* key : {"players", "strategies", "payoffs"}) {
    if (!doc.contains(key)) throw FormatError("$", std::string("missing \"") + key + "\"");
  }
  const auto& jp = doc.at("players");
  if (!jp.is_array()) throw FormatError("$.players", "expected an array of names");
  std::vector<std::string> players;
  for (std::size_t k = 0; k < jp.size(); ++k) {
    if (!jp[k].is_string()) {
      throw FormatError("$.players[" + std::to_string(k) + "]", "player name must be a string");
    }
    players.push_back(jp[k].get<std::string>());
  }
  if (players.size() < 2) throw FormatError("$.players", "need at least two players");
  if (std::set<std::string>(players.begin(), players.end()).size() != players.size()) {
    throw FormatError("$.players", "duplicate player name");
  }

  const auto& js = doc.at("strategies");
  if (!js.is_object()) throw FormatError("$.strategies", "expected an object keyed by player");
  std::vector<std::vector<Strategy>> strategies;
  for (const auto& p : players) {
    const std::string where = "$.strategies." + p;
    if (!js.contains(p)) throw FormatError(where, "missing strategy list");
    const auto& list = js.at(p);
    if (!list.is_array()) throw FormatError(where, "expected an array of labels");
    if (list.empty()) throw FormatError(where, "strategy list is empty");
    std::vector<Strategy> labels;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      if (!list[k].is_string()) throw FormatError(at, "strategy label must be a string");
      auto label = list[k].get<std::string>();
      if (label.empty()) throw FormatError(at, "empty strategy label");
      if (!seen.insert(label).second) throw FormatError(at, "duplicate label '" + label + "'");
      labels.push_back(Strategy::atom(label));
    }
    if (labels.size() > kMaxStrategiesPerPlayer) {
      throw FormatError(where, "more than " + std::to_string(kMaxStrategiesPerPlayer) +
                                   " strategies");
    }
    strategies.push_back(std::move(labels));
  }
  for (const auto& [key, value] : js.items()) {
    if (std::find(players.begin(), players.end(), key) == players.end()) {
      throw FormatError("$.strategies." + key, "unknown player");
    }
  }

  const auto& jpay = doc.at("payoffs");
  if (!jpay.is_object()) throw FormatError("$.payoffs", "expected an object keyed by player");
  const std::size_t n = players.size();
  std::size_t total = 1;
  for (const auto& s : strategies) {
    total *= s.size();
    if (total > kMaxProfiles) throw FormatError("$.payoffs", "payoff tensor too large");
  }
  std::vector<std::vector<Rational>> payoffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "$.payoffs." + players[i];
    if (!jpay.contains(players[i])) throw FormatError(where, "missing payoff tensor");
    auto& flat = payoffs[i];
    flat.reserve(total);
    std::function<void(const nlohmann::ordered_json&, std::size_t, const std::string&)> walk =
        [&](const nlohmann::ordered_json& node, std::size_t depth, const std::string& at) {
          if (depth == n) {
            flat.push_back(json_to_rational(node, at));
            return;
          }
          if (!node.is_array()) {
            throw FormatError(at, "expected an array over " + players[depth] + "'s strategies");
          }
          if (node.size() != strategies[depth].size()) {
            throw FormatError(at, "ragged tensor: " + std::to_string(node.size()) +
                                      " entries for " +
                                      std::to_string(strategies[depth].size()) +
                                      " strategies of " + players[depth]);
          }
          for (std::size_t k = 0; k < node.size(); ++k) {
            walk(node[k], depth + 1, at + "[" + std::to_string(k) + "]");
          }
        };
    walk(jpay.at(players[i]), 0, where);
  }
  for (const auto& [key, value] : jpay.items()) {
    if (std::find(players.begin(), players.end(), key) == players.end()) {
      throw FormatError("$.payoffs." + key, "unknown player");
    }
  }
  return make_finite_game(std::move(source), std::move(players), std::move(strategies),
                          std::move(payoffs));
}

inline Game load_finite_game_text(const std::string& text, std::string source = "file") {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("$", std::string("invalid JSON: ") + e.what());
  }
  return load_finite_game(doc, std::move(source));
}

inline nlohmann::ordered_json finite_game_to_json(const Game& g) {
  const auto* fo = finite_oracle(g);
  if (!fo) throw UnsupportedQuery(g.source(), "only finite games have a table form");
  nlohmann::ordered_json doc;
  doc["players"] = g.players();
  nlohmann::ordered_json strat = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& s : fo->strategies(i)) list.push_back(s.to_string());
    strat[g.players()[i]] = list;
  }
  doc["strategies"] = strat;
  nlohmann::ordered_json pay = nlohmann::ordered_json::object();
  const auto& k = fo->kernel();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::function<nlohmann::ordered_json(std::size_t, std::size_t)> build =
        [&](std::size_t depth, std::size_t offset) -> nlohmann::ordered_json {
      if (depth == g.num_players()) {
        const Rational& q = k.payoff_table(i)[offset];
        if (is_integer(q) && q.get_num().fits_slong_p()) return nlohmann::ordered_json(q.get_num().get_si());
        return rational_to_json(q);
      }
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      std::size_t stride = 1;
      for (std::size_t j = depth + 1; j < g.num_players(); ++j) stride *= k.count(j);
      for (std::size_t s = 0; s < k.count(depth); ++s) {
        arr.push_back(build(depth + 1, offset + s * stride));
      }
      return arr;
    };
    pay[g.players()[i]] = build(0, 0);
  }
  doc["payoffs"] = pay;
  return doc;
}

}  // namespace domlab

#endif  // DOMLAB_FINITE_GAME_HPP_
