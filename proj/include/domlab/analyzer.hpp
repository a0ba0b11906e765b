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

#ifndef DOMLAB_ANALYZER_HPP_
#define DOMLAB_ANALYZER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/engine.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/finite_game.hpp"
#include "domlab/game.hpp"
#include "domlab/symbolic_set.hpp"

// Boundedness conditions. Per-reduction checks work on any oracle; the
// class-level checks enumerate finite games or take an explicit range.

namespace domlab {

struct BoundednessVerdict {
  bool holds = true;
  std::string check;
  // Clause of the definition that failed.
  std::string clause;
  std::string scope_note;
  std::optional<std::size_t> player;
  std::optional<Strategy> strategy;
  std::optional<SymbolicSet> dominating;
  std::optional<Reduction> reduction;
  // Second reduction of a failing pair.
  std::optional<Reduction> later;
};

namespace detail {

// Elements of target that have a dominator in the scope, but none that is
// undominated. `pool` holds the candidate representatives.
inline SymbolicSet unbounded_elements(const Game& g, std::size_t i, const SymbolicSet& target,
                                      const SymbolicSet& scope, const SymbolicSet& pool,
                                      const Reduction& r) {
  auto has_dominator = g.dominated_elements(i, target, scope, r);
  if (has_dominator.empty()) return {};
  auto good = g.dominated_elements(i, has_dominator, pool, r);
  return set_difference(has_dominator, good);
}

inline BoundednessVerdict fail_at(BoundednessVerdict v, const Game& g, std::size_t i,
                                  const SymbolicSet& bad, const Reduction& r,
                                  const SymbolicSet& scope) {
  v.holds = false;
  v.player = i;
  v.strategy = pick_element(bad);
  v.dominating = set_intersect(g.dominating_set(i, *v.strategy, r), scope);
  v.reduction = r;
  return v;
}

}  // namespace detail

// Every non-empty D(a), a in R_i, contains an element undominated in A_i.
// By transitivity it is enough to meet the undominated part of A_i.
inline BoundednessVerdict is_completely_bounded(const Game& g, const Reduction& r) {
  BoundednessVerdict v;
  v.check = "complete-boundedness";
  v.scope_note = "a ranges over R_i, dominators and undominated elements over A_i";
  if (r.is_empty()) return v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& a = g.space(i);
    auto top = g.undominated_elements(i, a, a, r);
    auto bad = detail::unbounded_elements(g, i, r[i], a, top, r);
    if (!bad.empty()) {
      v.clause = "non-empty dominating set without an undominated element";
      return detail::fail_at(v, g, i, bad, r, a);
    }
  }
  return v;
}

// Same as complete boundedness with everything restricted to R_i.
inline BoundednessVerdict is_locally_bounded(const Game& g, const Reduction& r) {
  BoundednessVerdict v;
  v.check = "local-boundedness";
  v.scope_note = "a, dominators and undominated elements all range over R_i";
  if (r.is_empty()) return v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto top = g.undominated_elements(i, r[i], r[i], r);
    auto bad = detail::unbounded_elements(g, i, r[i], r[i], top, r);
    if (!bad.empty()) {
      v.clause = "dominating set within R_i has no element undominated in R_i";
      return detail::fail_at(v, g, i, bad, r, r[i]);
    }
  }
  return v;
}

// Property C at one reduction: a ranges over all of A_i.
inline BoundednessVerdict property_C_at(const Game& g, const Reduction& r) {
  BoundednessVerdict v;
  v.check = "property-C";
  v.scope_note = "a ranges over A_i, not R_i";
  if (r.is_empty()) return v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& a = g.space(i);
    auto top = g.undominated_elements(i, a, a, r);
    auto bad = detail::unbounded_elements(g, i, a, a, top, r);
    if (!bad.empty()) {
      v.clause = "dominated strategy of A_i without an A_i-undominated dominator";
      return detail::fail_at(v, g, i, bad, r, a);
    }
  }
  return v;
}

// Closure under dominance* for one pair R before-or-equal S.
inline BoundednessVerdict dominance_star_at(const Game& g, const Reduction& r,
                                            const Reduction& s) {
  BoundednessVerdict v;
  v.check = "closure-under-dominance*";
  v.scope_note = "pairs R before-or-equal S on one nested sequence";
  if (s.is_empty()) return v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto x = g.dominated_elements(i, s[i], r[i], r);
    if (x.empty()) continue;
    auto top = g.undominated_elements(i, s[i], s[i], s);
    auto good = g.dominated_elements(i, x, top, s);
    auto bad = set_difference(x, good);
    if (!bad.empty()) {
      v.clause = "no S_i-undominated dominator relative to S_{-i}";
      v = detail::fail_at(v, g, i, bad, s, s[i]);
      v.reduction = r;
      v.later = s;
      return v;
    }
  }
  return v;
}

// Forgetfulness at one reduction. Needs a finite removable set per player.
inline BoundednessVerdict forgetfulness_at(const Game& g, const Reduction& r) {
  BoundednessVerdict v;
  v.check = "forgetfulness-proofness";
  v.scope_note = "every nested sub-step of one player at R";
  if (r.is_empty()) return v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto rem = g.dominated_elements(i, r[i], r[i], r);
    auto elems = rem.finite_elements();
    if (!elems || elems->size() > 20) {
      throw UnsupportedQuery(g.source(), "forgetfulness needs a small finite removable set");
    }
    const std::size_t k = elems->size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
      std::vector<Strategy> drop;
      for (std::size_t j = 0; j < k; ++j) {
        if (bits >> j & 1) drop.push_back((*elems)[j]);
      }
      std::vector<SetPrimitive> prims;
      for (const auto& s : drop) {
        prims.push_back(s.is_atom() ? SetPrimitive(Atom{s.label()})
                                    : SetPrimitive(Point{s.value()}));
      }
      auto si = set_difference(r[i], SymbolicSet::of(std::move(prims)));
      if (si.empty()) continue;
      auto x = g.dominated_elements(i, si, r[i], r);
      auto bad = set_difference(x, g.dominated_elements(i, x, si, r));
      if (!bad.empty()) {
        v.clause = "strategy dominated in R_i but not within S_i";
        v = detail::fail_at(v, g, i, bad, r, si);
        v.later = r.with(i, si);
        return v;
      }
    }
  }
  return v;
}

// Applies a per-reduction check to a range and returns the first failure.
template <typename Check>
BoundednessVerdict over_range(const std::vector<Reduction>& range, Check check,
                              std::string name) {
  BoundednessVerdict last;
  last.check = std::move(name);
  for (const auto& r : range) {
    auto v = check(r);
    if (!v.holds) return v;
    last.scope_note = v.scope_note;
  }
  return last;
}

inline BoundednessVerdict range_completely_bounded(const Game& g,
                                                   const std::vector<Reduction>& range) {
  return over_range(range, [&](const Reduction& r) { return is_completely_bounded(g, r); },
                    "complete-boundedness");
}

inline BoundednessVerdict range_locally_bounded(const Game& g,
                                                const std::vector<Reduction>& range) {
  return over_range(range, [&](const Reduction& r) { return is_locally_bounded(g, r); },
                    "local-boundedness");
}

inline BoundednessVerdict range_property_C(const Game& g, const std::vector<Reduction>& range) {
  return over_range(range, [&](const Reduction& r) { return property_C_at(g, r); },
                    "property-C");
}

inline BoundednessVerdict pairs_dominance_star(
    const Game& g, const std::vector<std::pair<Reduction, Reduction>>& pairs) {
  BoundednessVerdict last;
  last.check = "closure-under-dominance*";
  for (const auto& [r, s] : pairs) {
    auto v = dominance_star_at(g, r, s);
    if (!v.holds) return v;
    last.scope_note = v.scope_note;
  }
  return last;
}

// Ordered stage pairs of a trace.
inline std::vector<std::pair<Reduction, Reduction>> trace_pairs(const EliminationTrace& t) {
  std::vector<std::pair<Reduction, Reduction>> out;
  for (std::size_t a = 0; a < t.stages.size(); ++a) {
    for (std::size_t b = a; b < t.stages.size(); ++b) {
      out.emplace_back(t.stages[a].reduction, t.stages[b].reduction);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bitmask versions for finite games

namespace detail {

inline std::uint64_t undominated_in(const std::vector<std::uint64_t>& rows, std::uint64_t x,
                                    std::uint64_t scope) {
  std::uint64_t out = 0;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if ((x >> a & 1) && !(rows[a] & scope)) out |= std::uint64_t{1} << a;
  }
  return out;
}

// First a in target with a dominator in scope but none in pool.
inline std::optional<std::size_t> first_unbounded(const std::vector<std::uint64_t>& rows,
                                                  std::uint64_t target, std::uint64_t scope,
                                                  std::uint64_t pool) {
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if ((target >> a & 1) && (rows[a] & scope) && !(rows[a] & pool)) return a;
  }
  return std::nullopt;
}

inline BoundednessVerdict mask_fail(BoundednessVerdict v, const FiniteTableOracle& f,
                                    std::size_t i, std::size_t a, std::uint64_t dom,
                                    const Masks& r) {
  v.holds = false;
  v.player = i;
  v.strategy = f.strategies(i)[a];
  v.dominating = f.from_mask(i, dom);
  v.reduction = f.from_masks(r);
  return v;
}

}  // namespace detail

enum class BoundKind { kComplete, kLocal };

inline std::string to_string(BoundKind k) {
  return k == BoundKind::kComplete ? "complete" : "local";
}

inline BoundednessVerdict mask_bounded(const FiniteTableOracle& f, const Masks& r,
                                       BoundKind kind) {
  const auto& k = f.kernel();
  BoundednessVerdict v;
  v.check = kind == BoundKind::kComplete ? "complete-boundedness" : "local-boundedness";
  if (masks_empty(r)) return v;
  for (std::size_t i = 0; i < k.players(); ++i) {
    auto rows = k.dominator_rows(i, k.opponent_mask(i, r));
    const std::uint64_t scope = kind == BoundKind::kComplete ? k.all(i) : r[i];
    auto pool = detail::undominated_in(rows, scope, scope);
    if (auto a = detail::first_unbounded(rows, r[i], scope, pool)) {
      v.clause = "non-empty dominating set without an undominated element";
      return detail::mask_fail(v, f, i, *a, rows[*a] & scope, r);
    }
  }
  return v;
}

inline BoundednessVerdict mask_property_C(const FiniteTableOracle& f, const Masks& r) {
  const auto& k = f.kernel();
  BoundednessVerdict v;
  v.check = "property-C";
  v.scope_note = "a ranges over A_i, not R_i";
  if (masks_empty(r)) return v;
  for (std::size_t i = 0; i < k.players(); ++i) {
    auto rows = k.dominator_rows(i, k.opponent_mask(i, r));
    auto pool = detail::undominated_in(rows, k.all(i), k.all(i));
    if (auto a = detail::first_unbounded(rows, k.all(i), k.all(i), pool)) {
      v.clause = "dominated strategy of A_i without an A_i-undominated dominator";
      return detail::mask_fail(v, f, i, *a, rows[*a], r);
    }
  }
  return v;
}

inline BoundednessVerdict mask_forgetfulness(const FiniteTableOracle& f, const Masks& r) {
  const auto& k = f.kernel();
  BoundednessVerdict v;
  v.check = "forgetfulness-proofness";
  v.scope_note = "every nested sub-step of one player at R";
  if (masks_empty(r)) return v;
  for (std::size_t i = 0; i < k.players(); ++i) {
    auto rows = k.dominator_rows(i, k.opponent_mask(i, r));
    for (std::uint64_t x : legal_removals(k, i, r, rows, Mode::kNested)) {
      const std::uint64_t s = r[i] & ~x;
      if (x == 0 || s == 0) continue;
      if (auto a = detail::first_unbounded(rows, s, r[i], s)) {
        v.clause = "strategy dominated in R_i but not within S_i";
        v = detail::mask_fail(v, f, i, *a, rows[*a] & r[i], r);
        Masks later = r;
        later[i] = s;
        v.later = f.from_masks(later);
        return v;
      }
    }
  }
  return v;
}

inline BoundednessVerdict mask_dominance_star(const FiniteTableOracle& f, const Masks& r,
                                              const Masks& s) {
  const auto& k = f.kernel();
  BoundednessVerdict v;
  v.check = "closure-under-dominance*";
  v.scope_note = "pairs R before-or-equal S on one nested sequence";
  if (masks_empty(s)) return v;
  for (std::size_t i = 0; i < k.players(); ++i) {
    auto rows_r = k.dominator_rows(i, k.opponent_mask(i, r));
    auto rows_s = k.dominator_rows(i, k.opponent_mask(i, s));
    auto pool = detail::undominated_in(rows_s, s[i], s[i]);
    for (std::size_t a = 0; a < k.count(i); ++a) {
      if (!(s[i] >> a & 1) || !(rows_r[a] & r[i])) continue;
      if (rows_s[a] & pool) continue;
      v.clause = "no S_i-undominated dominator relative to S_{-i}";
      v = detail::mask_fail(v, f, i, a, rows_s[a] & s[i], s);
      v.reduction = f.from_masks(r);
      v.later = f.from_masks(s);
      return v;
    }
  }
  return v;
}

// Class-level checks over the enumerated range of a finite game.

inline BoundednessVerdict class_boundedness(const FiniteTableOracle& f, const SequenceClass& c,
                                            BoundKind kind) {
  BoundednessVerdict v;
  v.check = kind == BoundKind::kComplete ? "complete-boundedness" : "local-boundedness";
  v.scope_note = "every reduction in the range of the " + to_string(c.mode) + " class";
  for (const auto& r : c.nodes) {
    auto x = mask_bounded(f, r, kind);
    if (!x.holds) {
      x.scope_note = v.scope_note;
      return x;
    }
  }
  return v;
}

inline BoundednessVerdict class_boundedness(const Game& g, Mode mode, BoundKind kind,
                                            const EnumerationCaps& caps = {}) {
  const auto& f = require_finite(g);
  return class_boundedness(f, enumerate_sequences(f.kernel(), mode, caps), kind);
}

inline BoundednessVerdict satisfies_property_C(const FiniteTableOracle& f,
                                               const SequenceClass& nested) {
  BoundednessVerdict v;
  v.check = "property-C";
  v.scope_note = "a ranges over A_i, every reduction in the range of the nested class";
  for (const auto& r : nested.nodes) {
    auto x = mask_property_C(f, r);
    if (!x.holds) return x;
  }
  return v;
}

inline BoundednessVerdict satisfies_property_C(const Game& g, const EnumerationCaps& caps = {}) {
  const auto& f = require_finite(g);
  return satisfies_property_C(f, enumerate_sequences(f.kernel(), Mode::kNested, caps));
}

inline BoundednessVerdict is_forgetfulness_proof(const FiniteTableOracle& f,
                                                 const SequenceClass& nested) {
  BoundednessVerdict v;
  v.check = "forgetfulness-proofness";
  v.scope_note = "every reduction in the range of the nested class";
  for (const auto& r : nested.nodes) {
    auto x = mask_forgetfulness(f, r);
    if (!x.holds) return x;
  }
  return v;
}

inline BoundednessVerdict is_forgetfulness_proof(const Game& g,
                                                 const EnumerationCaps& caps = {}) {
  const auto& f = require_finite(g);
  return is_forgetfulness_proof(f, enumerate_sequences(f.kernel(), Mode::kNested, caps));
}

inline BoundednessVerdict closed_under_dominance_star(const FiniteTableOracle& f,
                                                      const SequenceClass& nested) {
  BoundednessVerdict v;
  v.check = "closure-under-dominance*";
  v.scope_note = "pairs R before-or-equal S on one nested sequence";
  auto reach = nested.reachability();
  for (std::size_t a = 0; a < nested.nodes.size(); ++a) {
    for (std::size_t b = 0; b < nested.nodes.size(); ++b) {
      if (!reach[a][b]) continue;
      auto x = mask_dominance_star(f, nested.nodes[a], nested.nodes[b]);
      if (!x.holds) return x;
    }
  }
  return v;
}

inline BoundednessVerdict closed_under_dominance_star(const Game& g,
                                                      const EnumerationCaps& caps = {}) {
  const auto& f = require_finite(g);
  return closed_under_dominance_star(f, enumerate_sequences(f.kernel(), Mode::kNested, caps));
}

}  // namespace domlab

#endif  // DOMLAB_ANALYZER_HPP_
