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

#ifndef DOMLAB_GAME_HPP_
#define DOMLAB_GAME_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/error.hpp"
#include "domlab/symbolic_set.hpp"

namespace domlab {

using Profile = std::vector<Strategy>;

// A product set R = R_1 x ... x R_n. A product with an empty factor is the
// empty set, so every factor is emptied to keep one representation of it.
class Reduction {
 public:
  Reduction() = default;
  explicit Reduction(std::vector<SymbolicSet> sets) : sets_(std::move(sets)) {
    canonicalize();
  }

  static Reduction empty(std::size_t players) {
    return Reduction(std::vector<SymbolicSet>(players));
  }

  std::size_t size() const { return sets_.size(); }
  const SymbolicSet& operator[](std::size_t i) const { return sets_.at(i); }
  const std::vector<SymbolicSet>& sets() const { return sets_; }

  bool is_empty() const {
    return sets_.empty() || sets_.front().empty();
  }

  // R with player i's factor replaced.
  Reduction with(std::size_t i, SymbolicSet s) const {
    auto sets = sets_;
    sets.at(i) = std::move(s);
    return Reduction(std::move(sets));
  }

  std::string to_string() const {
    if (is_empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (i) out += "×";
      out += sets_[i].to_string();
    }
    return out;
  }

  friend bool operator==(const Reduction& x, const Reduction& y) {
    return x.sets_ == y.sets_;
  }
  friend bool operator!=(const Reduction& x, const Reduction& y) { return !(x == y); }

 private:
  void canonicalize() {
    for (const auto& s : sets_) {
      if (s.empty()) {
        for (auto& t : sets_) t = SymbolicSet();
        return;
      }
    }
  }
  std::vector<SymbolicSet> sets_;
};

inline bool reduction_subset(const Reduction& r, const Reduction& s) {
  if (r.is_empty()) return true;
  if (s.is_empty()) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!is_subset(r[i], s[i])) return false;
  }
  return true;
}

inline Reduction reduction_intersect(const Reduction& r, const Reduction& s) {
  std::vector<SymbolicSet> out;
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(set_intersect(r[i], s[i]));
  return Reduction(std::move(out));
}

struct ChainPattern;

// Uniform dominance interface. Relations are relative to R_{-i}; callers
// guarantee R is non-empty.
class DominanceOracle {
 public:
  virtual ~DominanceOracle() = default;

  virtual std::string name() const = 0;

  // a strictly dominated by b relative to R_{-i}.
  virtual bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                         const Reduction& r) const = 0;

  // {a in target : some b in scope dominates a}
  virtual SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                         const SymbolicSet& scope,
                                         const Reduction& r) const = 0;

  // {b in A_i : a dominated by b}
  virtual SymbolicSet dominating_set(std::size_t i, const Strategy& a,
                                     const Reduction& r) const = 0;

  // {b in A_i : b dominated by a}
  virtual SymbolicSet lower_contour_set(std::size_t i, const Strategy& a,
                                        const Reduction& r) const = 0;

  virtual SymbolicSet undominated_elements(std::size_t i, const SymbolicSet& x,
                                           const SymbolicSet& scope,
                                           const Reduction& r) const {
    return set_difference(x, dominated_elements(i, x, scope, r));
  }

  virtual Rational payoff(std::size_t i, const Profile& profile) const = 0;

  // Catalog games may define their own maximal GKZ step.
  virtual std::optional<Reduction> gkz_step(const Reduction&) const { return std::nullopt; }

  // True when a detected limit pattern belongs to a chain family whose
  // closed form has been proven by hand.
  virtual bool certify_limit(const ChainPattern&) const { return false; }
};

class Game {
 public:
  Game() = default;
  Game(std::string source, std::vector<std::string> players,
       std::vector<SymbolicSet> spaces,
       std::vector<std::vector<Strategy>> declared_order,
       std::shared_ptr<const DominanceOracle> oracle)
      : source_(std::move(source)),
        players_(std::move(players)),
        spaces_(std::move(spaces)),
        order_(std::move(declared_order)),
        oracle_(std::move(oracle)) {
    if (players_.size() < 2) throw FormatError("players", "need at least two players");
    if (spaces_.size() != players_.size()) {
      throw FormatError("strategies", "one strategy space per player required");
    }
    for (std::size_t i = 0; i < spaces_.size(); ++i) {
      if (spaces_[i].empty()) {
        throw FormatError("strategies." + players_[i], "strategy set is empty");
      }
    }
    order_.resize(players_.size());
  }

  const std::string& source() const { return source_; }
  std::size_t num_players() const { return players_.size(); }
  const std::vector<std::string>& players() const { return players_; }
  const SymbolicSet& space(std::size_t i) const { return spaces_.at(i); }
  Reduction full() const { return Reduction(spaces_); }
  const DominanceOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const DominanceOracle> oracle_ptr() const { return oracle_; }

  // Declared atom order for player i; numbers follow in ascending order.
  const std::vector<Strategy>& declared_order(std::size_t i) const { return order_.at(i); }

  std::optional<std::size_t> player_index(const std::string& name) const {
    for (std::size_t i = 0; i < players_.size(); ++i) {
      if (players_[i] == name) return i;
    }
    return std::nullopt;
  }

  bool contains(const Reduction& r) const {
    if (r.size() != players_.size()) return false;
    return reduction_subset(r, full());
  }

  bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                 const Reduction& r) const {
    require_opponents(r);
    return oracle_->dominates(i, a, b, r);
  }
  SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                 const SymbolicSet& scope, const Reduction& r) const {
    require_opponents(r);
    if (target.empty() || scope.empty()) return {};
    return oracle_->dominated_elements(i, target, scope, r);
  }
  SymbolicSet dominating_set(std::size_t i, const Strategy& a, const Reduction& r) const {
    require_opponents(r);
    return oracle_->dominating_set(i, a, r);
  }
  SymbolicSet lower_contour_set(std::size_t i, const Strategy& a, const Reduction& r) const {
    require_opponents(r);
    return oracle_->lower_contour_set(i, a, r);
  }
  SymbolicSet undominated_elements(std::size_t i, const SymbolicSet& x,
                                   const SymbolicSet& scope, const Reduction& r) const {
    require_opponents(r);
    if (x.empty()) return {};
    if (scope.empty()) return x;
    return oracle_->undominated_elements(i, x, scope, r);
  }

  // Strategies of player i in declared order: atoms as declared, then the
  // finite numeric elements ascending. Nullopt for infinite sets.
  std::optional<std::vector<Strategy>> ordered_elements(std::size_t i,
                                                        const SymbolicSet& s) const {
    auto elems = s.finite_elements();
    if (!elems) return std::nullopt;
    std::vector<Strategy> out;
    for (const auto& x : order_.at(i)) {
      if (s.contains(x)) out.push_back(x);
    }
    std::vector<Strategy> rest;
    for (const auto& x : *elems) {
      if (std::find(out.begin(), out.end(), x) == out.end()) rest.push_back(x);
    }
    std::sort(rest.begin(), rest.end());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

 private:
  void require_opponents(const Reduction& r) const {
    if (r.size() != players_.size()) {
      throw UndefinedRelation("reduction has " + std::to_string(r.size()) +
                              " components for " + std::to_string(players_.size()) +
                              " players");
    }
    if (r.is_empty()) {
      throw UndefinedRelation("dominance is undefined relative to an empty R_{-i}");
    }
  }

  std::string source_;
  std::vector<std::string> players_;
  std::vector<SymbolicSet> spaces_;
  std::vector<std::vector<Strategy>> order_;
  std::shared_ptr<const DominanceOracle> oracle_;
};

}  // namespace domlab

#endif  // DOMLAB_GAME_HPP_
