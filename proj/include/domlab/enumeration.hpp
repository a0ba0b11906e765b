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

#ifndef DOMLAB_ENUMERATION_HPP_
#define DOMLAB_ENUMERATION_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "domlab/engine.hpp"
#include "domlab/error.hpp"
#include "domlab/finite_game.hpp"
#include "domlab/game.hpp"
#include "domlab/rational.hpp"

// Exhaustive enumeration of elimination sequences of finite games. Sequences
// are paths in the DAG of reachable reductions; identity steps are left out,
// so every path ends at a maximal reduction.

namespace domlab {

struct EnumerationCaps {
  std::size_t max_strategies_total = 8;
  std::uint64_t max_sequences = 100'000'000;
  std::size_t max_nodes = 1'000'000;
};

inline std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }

inline bool masks_empty(const Masks& r) {
  return r.empty() || std::any_of(r.begin(), r.end(), [](std::uint64_t m) { return m == 0; });
}

inline bool masks_subset(const Masks& r, const Masks& s) {
  if (masks_empty(r)) return true;
  if (masks_empty(s)) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] & ~s[i]) return false;
  }
  return true;
}

inline std::size_t masks_size(const Masks& r) {
  std::size_t n = 0;
  for (auto m : r) n += popcount(m);
  return n;
}

// Dominator rows of every player at R.
inline std::vector<std::vector<std::uint64_t>> all_rows(const FiniteKernel& k, const Masks& r) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < k.players(); ++i) {
    rows.push_back(k.dominator_rows(i, k.opponent_mask(i, r)));
  }
  return rows;
}

// Legal removal sets of one player. The empty set is always first.
inline std::vector<std::uint64_t> legal_removals(const FiniteKernel& k, std::size_t i,
                                                 const Masks& r,
                                                 const std::vector<std::uint64_t>& rows,
                                                 Mode mode) {
  const std::uint64_t ri = r[i];
  const std::uint64_t scope = mode == Mode::kUniversal ? k.all(i) : ri;
  std::uint64_t rem = 0;
  for (std::size_t a = 0; a < k.count(i); ++a) {
    if ((ri >> a & 1) && (rows[a] & scope)) rem |= std::uint64_t{1} << a;
  }
  std::vector<std::uint64_t> out{0};
  if (rem == 0) return out;
  std::vector<std::uint64_t> subs;
  for (std::uint64_t x = rem;; x = (x - 1) & rem) {
    if (x == 0) break;
    bool ok = true;
    if (mode == Mode::kGkz) {
      const std::uint64_t keep = ri & ~x;
      for (std::size_t a = 0; a < k.count(i) && ok; ++a) {
        if ((x >> a & 1) && !(rows[a] & keep)) ok = false;
      }
    }
    if (ok) subs.push_back(x);
  }
  std::sort(subs.begin(), subs.end());
  out.insert(out.end(), subs.begin(), subs.end());
  return out;
}

// Every S != R with R -> S legal in the mode, sorted and without duplicates.
// An empty product is returned as all zeros.
inline std::vector<Masks> successors(const FiniteKernel& k, const Masks& r, Mode mode) {
  if (masks_empty(r)) return {};
  const std::size_t n = k.players();
  auto rows = all_rows(k, r);
  std::vector<std::vector<std::uint64_t>> choices;
  for (std::size_t i = 0; i < n; ++i) choices.push_back(legal_removals(k, i, r, rows[i], mode));
  std::set<Masks> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::size_t j = n;
    while (j-- > 0) {
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
    Masks s(n);
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = r[i] & ~choices[i][pick[i]];
      empty = empty || s[i] == 0;
    }
    if (empty) s.assign(n, 0);
    out.insert(std::move(s));
  }
  return {out.begin(), out.end()};
}

inline bool masks_maximal(const FiniteKernel& k, const Masks& r, Mode mode) {
  if (masks_empty(r)) return true;
  auto rows = all_rows(k, r);
  for (std::size_t i = 0; i < k.players(); ++i) {
    const std::uint64_t scope = mode == Mode::kUniversal ? k.all(i) : r[i];
    for (std::size_t a = 0; a < k.count(i); ++a) {
      if ((r[i] >> a & 1) && (rows[i][a] & scope)) return false;
    }
  }
  return true;
}

// All sequences of one mode, as a DAG over reachable reductions. Node 0 is A;
// nodes appear in breadth-first order with sorted successor lists.
class SequenceClass {
 public:
  Mode mode = Mode::kNested;
  std::vector<Masks> nodes;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<bool> maximal;
  // paths[v]: number of sequences from v to a maximal reduction.
  std::vector<Integer> paths;

  Integer sequence_count() const { return paths.empty() ? Integer(0) : paths[0]; }

  std::optional<std::size_t> find(const Masks& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Masks> maximal_set() const {
    std::vector<Masks> out;
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      if (maximal[v]) out.push_back(nodes[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Up to `limit` sequences, each as a list of node ids.
  std::vector<std::vector<std::size_t>> list(std::size_t limit) const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path{0};
    list_from(0, path, out, limit);
    return out;
  }

  // Every pair (u, v) with v reachable from u, u included.
  std::vector<std::vector<bool>> reachability() const {
    const std::size_t n = nodes.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t v : reverse_topological()) {
      reach[v][v] = true;
      for (std::size_t w : succ[v]) {
        for (std::size_t x = 0; x < n; ++x) {
          if (reach[w][x]) reach[v][x] = true;
        }
      }
    }
    return reach;
  }

  // Successors always have fewer strategies, so sorting by size is a
  // topological order.
  std::vector<std::size_t> reverse_topological() const {
    std::vector<std::size_t> order(nodes.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return masks_size(nodes[x]) < masks_size(nodes[y]);
    });
    return order;
  }

  std::size_t add(const Masks& m) {
    auto [it, fresh] = index_.emplace(m, nodes.size());
    if (fresh) {
      nodes.push_back(m);
      succ.emplace_back();
      maximal.push_back(false);
    }
    return it->second;
  }

 private:
  void list_from(std::size_t v, std::vector<std::size_t>& path,
                 std::vector<std::vector<std::size_t>>& out, std::size_t limit) const {
    if (out.size() >= limit) return;
    if (maximal[v]) {
      out.push_back(path);
      return;
    }
    for (std::size_t w : succ[v]) {
      path.push_back(w);
      list_from(w, path, out, limit);
      path.pop_back();
    }
  }

  std::map<Masks, std::size_t> index_;
};

inline const FiniteTableOracle& require_finite(const Game& g) {
  const auto* f = finite_oracle(g);
  if (!f) throw UnsupportedQuery(g.source(), "enumeration needs a finite game");
  return *f;
}

inline void check_strategy_cap(const FiniteKernel& k, const EnumerationCaps& caps) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < k.players(); ++i) total += k.count(i);
  if (total > caps.max_strategies_total) {
    throw EnumerationTooLarge("game has " + std::to_string(total) +
                                  " strategies, max_strategies_total is " +
                                  std::to_string(caps.max_strategies_total),
                              total);
  }
}

inline SequenceClass enumerate_sequences(const FiniteKernel& k, Mode mode,
                                         const EnumerationCaps& caps = {}) {
  check_strategy_cap(k, caps);
  SequenceClass c;
  c.mode = mode;
  c.add(k.full());
  for (std::size_t v = 0; v < c.nodes.size(); ++v) {
    const Masks r = c.nodes[v];
    auto next = successors(k, r, mode);
    if (next.empty()) {
      c.maximal[v] = true;
      continue;
    }
    std::vector<std::size_t> ids;
    for (const auto& s : next) {
      ids.push_back(c.add(s));
      if (c.nodes.size() > caps.max_nodes) {
        throw EnumerationTooLarge("more than " + std::to_string(caps.max_nodes) +
                                      " reachable reductions",
                                  c.nodes.size());
      }
    }
    c.succ[v] = std::move(ids);
  }
  c.paths.assign(c.nodes.size(), Integer(0));
  for (std::size_t v : c.reverse_topological()) {
    if (c.maximal[v]) {
      c.paths[v] = 1;
      continue;
    }
    for (std::size_t w : c.succ[v]) c.paths[v] += c.paths[w];
  }
  if (c.sequence_count() > Integer(std::to_string(caps.max_sequences))) {
    unsigned long long n = c.sequence_count().fits_ulong_p()
                               ? c.sequence_count().get_ui()
                               : ~0ULL;
    throw EnumerationTooLarge("more than " + std::to_string(caps.max_sequences) +
                                  " sequences (" + c.sequence_count().get_str() + ")",
                              n);
  }
  return c;
}

inline SequenceClass enumerate_sequences(const Game& g, Mode mode,
                                         const EnumerationCaps& caps = {}) {
  return enumerate_sequences(require_finite(g).kernel(), mode, caps);
}

// E^a ⊆ E^b: every edge of a's DAG is an edge of b's and every maximal node
// of a is maximal in b.
inline bool class_subset(const SequenceClass& a, const SequenceClass& b) {
  for (std::size_t v = 0; v < a.nodes.size(); ++v) {
    auto w = b.find(a.nodes[v]);
    if (!w) return false;
    if (a.maximal[v] && !b.maximal[*w]) return false;
    for (std::size_t x : a.succ[v]) {
      auto y = b.find(a.nodes[x]);
      if (!y) return false;
      if (std::find(b.succ[*w].begin(), b.succ[*w].end(), *y) == b.succ[*w].end()) return false;
    }
  }
  return true;
}

inline bool class_equal(const SequenceClass& a, const SequenceClass& b) {
  return class_subset(a, b) && class_subset(b, a);
}

inline std::vector<Reduction> to_reductions(const FiniteTableOracle& f,
                                            const std::vector<Masks>& ms) {
  std::vector<Reduction> out;
  for (const auto& m : ms) out.push_back(f.from_masks(m));
  return out;
}

// Every product subset of A, the empty product once.
inline std::vector<Masks> all_product_subsets(const FiniteKernel& k) {
  std::vector<Masks> out;
  const std::size_t n = k.players();
  Masks cur(n, 1);
  while (true) {
    out.push_back(cur);
    std::size_t j = n;
    while (j-- > 0) {
      if (cur[j] < k.all(j)) {
        ++cur[j];
        break;
      }
      cur[j] = 1;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  out.push_back(Masks(n, 0));
  return out;
}

}  // namespace domlab

#endif  // DOMLAB_ENUMERATION_HPP_
