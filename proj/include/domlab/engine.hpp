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

#ifndef DOMLAB_ENGINE_HPP_
#define DOMLAB_ENGINE_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "domlab/chain_pattern.hpp"
#include "domlab/error.hpp"
#include "domlab/game.hpp"
#include "domlab/symbolic_set.hpp"

namespace domlab {

enum class Mode { kNested, kUniversal, kGkz };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::kNested: return "nested";
    case Mode::kUniversal: return "universal";
    case Mode::kGkz: return "gkz";
  }
  return "?";
}

inline std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "nested") return Mode::kNested;
  if (s == "universal") return Mode::kUniversal;
  if (s == "gkz") return Mode::kGkz;
  return std::nullopt;
}

// The ordinal w*k + n.
struct Stage {
  std::int64_t k = 0;
  std::int64_t n = 0;

  auto operator<=>(const Stage&) const = default;

  std::string to_string() const {
    if (k == 0) return std::to_string(n);
    std::string w = k == 1 ? "ω" : "ω·" + std::to_string(k);
    return n == 0 ? w : w + "+" + std::to_string(n);
  }
};

struct Witness {
  std::size_t player = 0;
  SymbolicSet removed;
  Strategy sample;
  Strategy dominator;
};

struct TraceEntry {
  Stage stage;
  Reduction reduction;
  // Per player, what left since the previous stage.
  std::vector<SymbolicSet> removed;
  std::vector<Witness> witnesses;
  std::optional<ChainPattern> certificate;
};

struct EliminationTrace {
  Mode mode = Mode::kNested;
  std::vector<TraceEntry> stages;
  bool terminal_maximal = false;

  const Reduction& final_reduction() const { return stages.back().reduction; }
  const Stage& final_stage() const { return stages.back().stage; }
  std::vector<Reduction> reductions() const {
    std::vector<Reduction> out;
    for (const auto& e : stages) out.push_back(e.reduction);
    return out;
  }
};

struct Verdict {
  bool valid = true;
  std::string violation;
  std::optional<std::size_t> player;
  std::optional<Strategy> element;
  std::optional<std::size_t> stage_index;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why) {
    Verdict v;
    v.valid = false;
    v.violation = std::move(why);
    return v;
  }
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, EliminationTrace partial)
      : Error("budget exhausted: " + what), partial_(std::move(partial)) {}
  const EliminationTrace& partial() const { return partial_; }

 private:
  EliminationTrace partial_;
};

struct Policy {
  enum class Kind { kRemoveAll, kRemoveOne, kScripted, kRandomSubset };
  Kind kind = Kind::kRemoveAll;
  std::uint64_t seed = 0;
  // Scripted: removal sets per stage, indexed by player.
  std::vector<std::vector<SymbolicSet>> script;
  // Scripted: what to do once the script runs out; stop when null.
  std::shared_ptr<const Policy> fallback;
  // Per player, strategies the policy never removes.
  std::vector<SymbolicSet> protect;

  static Policy remove_all() { return {}; }
  static Policy remove_one() {
    Policy p;
    p.kind = Kind::kRemoveOne;
    return p;
  }
  static Policy random_subset(std::uint64_t seed) {
    Policy p;
    p.kind = Kind::kRandomSubset;
    p.seed = seed;
    return p;
  }
  static Policy scripted(std::vector<std::vector<SymbolicSet>> steps,
                         std::shared_ptr<const Policy> then = nullptr) {
    Policy p;
    p.kind = Kind::kScripted;
    p.script = std::move(steps);
    p.fallback = std::move(then);
    return p;
  }
};

inline std::string to_string(Policy::Kind k) {
  switch (k) {
    case Policy::Kind::kRemoveAll: return "remove-all";
    case Policy::Kind::kRemoveOne: return "remove-one";
    case Policy::Kind::kScripted: return "scripted";
    case Policy::Kind::kRandomSubset: return "random-subset";
  }
  return "?";
}

// Mutable state threaded through the steps of one run.
struct StepContext {
  explicit StepContext(std::uint64_t seed = 0) : rng(seed) {}
  std::mt19937_64 rng;
  std::size_t script_pos = 0;
};

struct StepResult {
  Reduction next;
  std::vector<SymbolicSet> removed;
  std::vector<Witness> witnesses;
  // Set when a script ran out with no fallback.
  bool exhausted = false;
};

struct Budget {
  int max_successor_steps = 64;
  int max_limits = 3;
  int window = 5;
  bool allow_heuristic_limits = false;
};

// Dominator scope of a step from R to S for player i.
inline const SymbolicSet& step_scope(const Game& g, const Reduction& r, const Reduction& s,
                                     Mode mode, std::size_t i) {
  switch (mode) {
    case Mode::kNested: return r[i];
    case Mode::kUniversal: return g.space(i);
    case Mode::kGkz: return s[i];
  }
  return r[i];
}

inline Verdict validate_step(const Game& g, const Reduction& r, const Reduction& s, Mode mode) {
  if (!reduction_subset(s, r)) {
    Verdict v = Verdict::fail("S ⊆ R");
    for (std::size_t i = 0; i < s.size() && !s.is_empty(); ++i) {
      auto extra = set_difference(s[i], r.is_empty() ? SymbolicSet() : r[i]);
      if (!extra.empty()) {
        v.player = i;
        v.element = pick_element(extra);
        break;
      }
    }
    return v;
  }
  if (r.is_empty() || s == r) return Verdict::ok();

  if (s.is_empty()) {
    // The empty product needs one player whose whole R_i can go.
    if (mode == Mode::kGkz) {
      Verdict v = Verdict::fail("a GKZ step keeps a dominator in S_i, so it cannot reach ∅");
      v.player = 0;
      v.element = pick_element(r[0]);
      return v;
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      const SymbolicSet& scope = mode == Mode::kNested ? r[i] : g.space(i);
      if (g.dominated_elements(i, r[i], scope, r) == r[i]) return Verdict::ok();
    }
    const SymbolicSet& scope0 = mode == Mode::kNested ? r[0] : g.space(0);
    Verdict v = Verdict::fail("no player's R_i is entirely dominated, so ∅ is not a " +
                              to_string(mode) + " reduction");
    v.player = 0;
    v.element = pick_element(set_difference(r[0], g.dominated_elements(0, r[0], scope0, r)));
    return v;
  }

  for (std::size_t i = 0; i < r.size(); ++i) {
    auto removed = set_difference(r[i], s[i]);
    if (removed.empty()) continue;
    auto dom = g.dominated_elements(i, removed, step_scope(g, r, s, mode, i), r);
    auto bad = set_difference(removed, dom);
    if (!bad.empty()) {
      Verdict v = Verdict::fail("removed strategy has no dominator in the " + to_string(mode) +
                                " scope");
      v.player = i;
      v.element = pick_element(bad);
      return v;
    }
  }
  return Verdict::ok();
}

inline bool is_maximal(const Game& g, const Reduction& r, Mode mode) {
  if (r.is_empty()) return true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const SymbolicSet& scope = mode == Mode::kUniversal ? g.space(i) : r[i];
    if (!g.dominated_elements(i, r[i], scope, r).empty()) return false;
  }
  return true;
}

namespace detail {

inline std::vector<Witness> make_witnesses(const Game& g, const Reduction& r,
                                           const Reduction& s, Mode mode,
                                           const std::vector<SymbolicSet>& removed) {
  constexpr std::size_t kMaxPerPlayer = 64;
  std::vector<Witness> out;
  for (std::size_t i = 0; i < removed.size(); ++i) {
    std::size_t count = 0;
    for (const auto& p : removed[i].primitives()) {
      if (++count > kMaxPerPlayer) break;
      Strategy sample = representative(p);
      SymbolicSet scope;
      if (mode == Mode::kGkz && s.is_empty()) {
        scope = SymbolicSet();
      } else {
        scope = step_scope(g, r, s, mode, i);
      }
      auto doms = set_intersect(g.dominating_set(i, sample, r), scope);
      auto b = pick_element(doms);
      if (!b) continue;
      out.push_back({i, SymbolicSet::of({p}), sample, *b});
    }
  }
  return out;
}

inline SymbolicSet protected_set(const Policy& p, std::size_t i) {
  return i < p.protect.size() ? p.protect[i] : SymbolicSet();
}

// Greedy GKZ legalization over a finite removal set: while some removed
// element has no surviving dominator, keep its first dominator in declared
// order.
inline SymbolicSet legalize_gkz(const Game& g, const Reduction& r, std::size_t i,
                                SymbolicSet removal) {
  auto order = g.ordered_elements(i, r[i]);
  if (!order) {
    throw UnsupportedQuery(g.source(), "GKZ legalization needs a finite R_" +
                                           std::to_string(i));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto survivors = set_difference(r[i], removal);
    for (const auto& a : *order) {
      if (!removal.contains(a)) continue;
      auto doms = g.dominating_set(i, a, r);
      if (!set_intersect(doms, survivors).empty()) continue;
      for (const auto& b : *order) {
        if (doms.contains(b)) {
          removal = set_difference(removal, SymbolicSet::singleton(b));
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return removal;
}

// First element of a removable set in declared order.
inline std::optional<Strategy> first_in_order(const Game& g, std::size_t i,
                                              const SymbolicSet& s) {
  for (const auto& a : g.declared_order(i)) {
    if (s.contains(a)) return a;
  }
  auto atoms = atom_part(s);
  if (!atoms.empty()) return pick_element(atoms);
  auto num = numeric_part(s);
  if (num.empty()) return std::nullopt;
  auto least = least_number(num);
  if (!least) {
    throw UnsupportedQuery(g.source(), "remove-one needs a least removable element, but " +
                                           num.to_string() + " has none");
  }
  return Strategy::number(*least);
}

}  // namespace detail

inline StepResult step(const Game& g, const Reduction& r, Mode mode, const Policy& policy,
                       StepContext& ctx) {
  StepResult res;
  const std::size_t n = g.num_players();
  res.next = r;
  res.removed.assign(n, SymbolicSet());
  if (r.is_empty()) return res;

  if (policy.kind == Policy::Kind::kScripted) {
    if (ctx.script_pos >= policy.script.size()) {
      if (!policy.fallback) {
        res.exhausted = true;
        return res;
      }
      return step(g, r, mode, *policy.fallback, ctx);
    }
    const auto& rem = policy.script[ctx.script_pos++];
    std::vector<SymbolicSet> sets;
    for (std::size_t i = 0; i < n; ++i) {
      SymbolicSet ri = i < rem.size() ? rem[i] : SymbolicSet();
      auto outside = set_difference(ri, r[i]);
      if (!outside.empty()) {
        throw IllegalStep("scripted removal of " + outside.to_string() + " for player " +
                          g.players()[i] + " lies outside R_i");
      }
      sets.push_back(set_difference(r[i], ri));
    }
    Reduction s(std::move(sets));
    auto v = validate_step(g, r, s, mode);
    if (!v.valid) {
      std::string who = v.player ? g.players()[*v.player] : std::string("?");
      std::string what = v.element ? v.element->to_string() : std::string("?");
      throw IllegalStep("scripted step " + std::to_string(ctx.script_pos - 1) +
                        " is not a " + to_string(mode) + " reduction: player " + who +
                        ", strategy " + what + " (" + v.violation + ")");
    }
    res.next = s;
    for (std::size_t i = 0; i < n; ++i) {
      res.removed[i] = set_difference(r[i], s.is_empty() ? SymbolicSet() : s[i]);
    }
    res.witnesses = detail::make_witnesses(g, r, s, mode, res.removed);
    return res;
  }

  if (mode == Mode::kGkz && policy.kind == Policy::Kind::kRemoveAll) {
    if (auto s = g.oracle().gkz_step(r)) {
      auto v = validate_step(g, r, *s, Mode::kGkz);
      if (!v.valid) throw IllegalStep("catalog GKZ step rejected: " + v.violation);
      res.next = *s;
      for (std::size_t i = 0; i < n; ++i) {
        res.removed[i] = set_difference(r[i], s->is_empty() ? SymbolicSet() : (*s)[i]);
      }
      res.witnesses = detail::make_witnesses(g, r, *s, mode, res.removed);
      return res;
    }
  }

  // Removable sets per player.
  std::vector<SymbolicSet> removable(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SymbolicSet& scope = mode == Mode::kUniversal ? g.space(i) : r[i];
    removable[i] = set_difference(g.dominated_elements(i, r[i], scope, r),
                                  detail::protected_set(policy, i));
  }

  std::vector<SymbolicSet> chosen(n);
  switch (policy.kind) {
    case Policy::Kind::kRemoveAll:
      chosen = removable;
      break;
    case Policy::Kind::kRemoveOne:
      for (std::size_t i = 0; i < n; ++i) {
        if (removable[i].empty()) continue;
        chosen[i] = SymbolicSet::singleton(*detail::first_in_order(g, i, removable[i]));
        break;
      }
      break;
    case Policy::Kind::kRandomSubset: {
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<SetPrimitive> keep;
        for (const auto& p : removable[i].primitives()) {
          if (ctx.rng() & 1) keep.push_back(p);
        }
        chosen[i] = SymbolicSet::of(std::move(keep));
        any = any || !chosen[i].empty();
      }
      if (!any) {
        for (std::size_t i = 0; i < n; ++i) {
          if (removable[i].empty()) continue;
          chosen[i] = SymbolicSet::of({removable[i].primitives().front()});
          break;
        }
      }
      break;
    }
    case Policy::Kind::kScripted:
      break;
  }

  if (mode == Mode::kGkz) {
    std::vector<SymbolicSet> raw;
    for (std::size_t i = 0; i < n; ++i) raw.push_back(set_difference(r[i], chosen[i]));
    if (!validate_step(g, r, Reduction(raw), Mode::kGkz).valid) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!chosen[i].empty()) chosen[i] = detail::legalize_gkz(g, r, i, chosen[i]);
      }
    }
  }

  std::vector<SymbolicSet> sets;
  for (std::size_t i = 0; i < n; ++i) sets.push_back(set_difference(r[i], chosen[i]));
  Reduction s(std::move(sets));
  res.next = s;
  for (std::size_t i = 0; i < n; ++i) {
    res.removed[i] = s.is_empty() ? r[i] : chosen[i];
  }
  res.witnesses = detail::make_witnesses(g, r, s, mode, res.removed);
  return res;
}

inline StepResult step(const Game& g, const Reduction& r, Mode mode, const Policy& policy) {
  StepContext ctx(policy.seed);
  return step(g, r, mode, policy, ctx);
}

inline EliminationTrace run(const Game& g, Mode mode, const Policy& policy,
                            const Budget& budget = {},
                            const SequenceRegistry& registry = standard_registry()) {
  if (budget.max_successor_steps <= 0 || budget.max_limits < 0 || budget.window < 3) {
    throw IllegalStep("budget must be positive and the window at least 3");
  }
  EliminationTrace trace;
  trace.mode = mode;
  trace.stages.push_back({Stage{0, 0}, g.full(), {}, {}, std::nullopt});
  StepContext ctx(policy.seed);
  std::size_t block_start = 0;
  int steps_in_block = 0;

  while (true) {
    const Reduction current = trace.final_reduction();
    if (is_maximal(g, current, mode)) {
      trace.terminal_maximal = true;
      break;
    }
    const Stage at = trace.final_stage();
    if (steps_in_block >= budget.max_successor_steps) {
      if (at.k >= budget.max_limits) {
        throw BudgetExhausted("no fixpoint below ω·" + std::to_string(budget.max_limits + 1),
                              trace);
      }
      std::vector<Reduction> history;
      for (std::size_t k = block_start; k < trace.stages.size(); ++k) {
        history.push_back(trace.stages[k].reduction);
      }
      auto p = detect_affine_pattern(history, budget.window, registry);
      if (!p) throw BudgetExhausted("no affine chain pattern after " + std::to_string(steps_in_block) + " steps", trace);
      if (p->constant()) throw BudgetExhausted("chain stalled without reaching a maximal reduction", trace);
      p->base_stage += static_cast<std::int64_t>(block_start);
      if (g.oracle().certify_limit(*p)) {
        p->certificate = Certificate::kInductive;
      } else if (!budget.allow_heuristic_limits) {
        throw BudgetExhausted("limit pattern has only a window-only certificate", trace);
      }
      Reduction lim = chain_limit(*p);
      TraceEntry e;
      e.stage = Stage{at.k + 1, 0};
      e.reduction = lim;
      for (std::size_t i = 0; i < g.num_players(); ++i) {
        e.removed.push_back(set_difference(current[i], lim.is_empty() ? SymbolicSet() : lim[i]));
      }
      e.certificate = *p;
      trace.stages.push_back(std::move(e));
      block_start = trace.stages.size() - 1;
      steps_in_block = 0;
      continue;
    }
    StepResult res = step(g, current, mode, policy, ctx);
    if (res.exhausted || res.next == current) break;
    TraceEntry e;
    e.stage = Stage{at.k, at.n + 1};
    e.reduction = res.next;
    e.removed = std::move(res.removed);
    e.witnesses = std::move(res.witnesses);
    trace.stages.push_back(std::move(e));
    ++steps_in_block;
  }
  return trace;
}

// Checks the trace against the definition of an elimination sequence and
// reports the first violation.
inline Verdict validate_sequence(const Game& g, const EliminationTrace& t, Mode mode,
                                 bool allow_heuristic_limits = false) {
  auto at = [](Verdict v, std::size_t k) {
    v.stage_index = k;
    return v;
  };
  if (t.stages.empty()) return Verdict::fail("empty trace");
  if (t.stages[0].reduction != g.full() || t.stages[0].stage != Stage{0, 0}) {
    return at(Verdict::fail("R^0 = A"), 0);
  }
  for (std::size_t k = 1; k < t.stages.size(); ++k) {
    const auto& prev = t.stages[k - 1];
    const auto& cur = t.stages[k];
    if (cur.stage.n > 0) {
      if (cur.stage != Stage{prev.stage.k, prev.stage.n + 1}) {
        return at(Verdict::fail("stage numbering"), k);
      }
      auto v = validate_step(g, prev.reduction, cur.reduction, mode);
      if (!v.valid) return at(v, k);
      continue;
    }
    if (cur.stage != Stage{prev.stage.k + 1, 0}) return at(Verdict::fail("stage numbering"), k);
    if (!cur.certificate) return at(Verdict::fail("limit stage without certificate"), k);
    const ChainPattern& p = *cur.certificate;
    if (p.base_stage < 0 || p.stride < 1 || p.verified_window < 3) {
      return at(Verdict::fail("malformed limit certificate"), k);
    }
    std::size_t block_start = 0;
    for (std::size_t j = k; j-- > 0;) {
      if (t.stages[j].stage.n == 0) {
        block_start = j;
        break;
      }
    }
    for (int w = 0; w < p.verified_window; ++w) {
      auto idx = static_cast<std::size_t>(p.base_stage + p.stride * w);
      if (idx < block_start || idx >= k) {
        return at(Verdict::fail("certificate window outside the chain"), k);
      }
      if (instance(p, w) != t.stages[idx].reduction) {
        return at(Verdict::fail("certificate does not reproduce the chain"), k);
      }
    }
    if (static_cast<std::size_t>(p.base_stage + p.stride * (p.verified_window - 1)) != k - 1) {
      return at(Verdict::fail("certificate does not end at the last successor stage"), k);
    }
    if (!g.oracle().certify_limit(p) && !allow_heuristic_limits) {
      return at(Verdict::fail("limit stage rests on a window-only certificate"), k);
    }
    if (chain_limit(p) != cur.reduction) {
      return at(Verdict::fail("limit stage differs from the chain intersection"), k);
    }
  }
  if (!is_maximal(g, t.final_reduction(), mode)) {
    return at(Verdict::fail("no maximal reduction reached"), t.stages.size() - 1);
  }
  return Verdict::ok();
}

// Refines a nested step R -> S into a chain of GKZ steps by the lower
// contour construction. Only finite R is supported.
inline std::vector<Reduction> gkz_interpolate(const Game& g, const Reduction& r,
                                              const Reduction& s) {
  auto v = validate_step(g, r, s, Mode::kNested);
  if (!v.valid) throw NotANestedStep(v.violation);
  if (r == s || r.is_empty()) return {r};
  if (s.is_empty()) {
    throw UnsupportedQuery(g.source(), "GKZ interpolation of a step to ∅");
  }
  const std::size_t n = g.num_players();
  std::vector<std::vector<Strategy>> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto o = g.ordered_elements(i, r[i]);
    if (!o) throw UnsupportedQuery(g.source(), "GKZ interpolation needs finite reductions");
    order[i] = std::move(*o);
  }

  std::vector<SymbolicSet> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto gone = set_difference(r[i], s[i]);
    auto y = g.dominated_elements(i, gone, s[i], r);
    z[i] = set_difference(gone, y);
  }

  std::vector<Reduction> chain{r};
  std::size_t guard = 0;
  for (std::size_t i = 0; i < n; ++i) guard += order[i].size();
  while (true) {
    std::vector<SymbolicSet> sets;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!z[i].empty()) {
        for (const auto& a : order[i]) {
          if (!z[i].contains(a)) continue;
          auto below = set_intersect(g.lower_contour_set(i, a, r), z[i]);
          if (below.empty()) continue;
          z[i] = set_difference(z[i], below);
          break;
        }
      }
      any = any || !z[i].empty();
      sets.push_back(set_union(s[i], z[i]));
    }
    chain.emplace_back(std::move(sets));
    auto link = validate_step(g, chain[chain.size() - 2], chain.back(), Mode::kGkz);
    if (!link.valid) {
      throw Error("GKZ interpolation produced an invalid link: " + link.violation);
    }
    if (!any) break;
    if (guard-- == 0) throw Error("GKZ interpolation did not terminate");
  }
  return chain;
}

}  // namespace domlab

#endif  // DOMLAB_ENGINE_HPP_
