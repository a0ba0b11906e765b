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

#ifndef DOMLAB_VERIFY_HPP_
#define DOMLAB_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domlab/analyzer.hpp"
#include "domlab/catalog.hpp"
#include "domlab/engine.hpp"
#include "domlab/enumeration.hpp"

namespace domlab {

enum class CheckKind { kFixture, kTruncationStable, kInherentlyInfinite };

inline std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::kFixture: return "fixture";
    case CheckKind::kTruncationStable: return "truncation-stable";
    case CheckKind::kInherentlyInfinite: return "inherently-infinite";
  }
  return "?";
}

struct CatalogCheck {
  std::string name;
  CheckKind kind = CheckKind::kFixture;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct CatalogReport {
  std::string id;
  std::vector<CatalogCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.passed; });
  }
};

struct VerifyOptions {
  std::vector<int> truncations = {3, 5, 7};
  int random_seeds = 100;
  int sampled_singletons = 20;
  EnumerationCaps caps{20, 100'000'000, 1'000'000};
};

namespace verify_detail {

inline std::string yn(bool b) { return b ? "true" : "false"; }

inline std::string trace_end(const EliminationTrace& t) {
  return t.final_reduction().to_string() + " at stage " + t.final_stage().to_string();
}

inline SymbolicSet parse_points(std::initializer_list<Rational> xs) {
  return SymbolicSet::points(std::vector<Rational>(xs));
}

inline Policy script(std::vector<std::vector<SymbolicSet>> steps) {
  return Policy::scripted(std::move(steps));
}

inline std::string verdict_text(const Game& g, const Verdict& v) {
  if (v.valid) return "valid";
  std::string s = "invalid";
  if (v.stage_index) s += " at stage index " + std::to_string(*v.stage_index);
  if (v.player) s += ", player " + g.players()[*v.player];
  if (v.element) s += ", strategy " + v.element->to_string();
  return s;
}

}  // namespace verify_detail

// The two-step chain (1/2,1) then (0,1/2) on the open interval.
inline Policy intro_script() {
  using verify_detail::script;
  auto half = make_rational(1, 2);
  return script({{SymbolicSet::interval(half, 1, false, false), {}},
                 {SymbolicSet::interval(0, half, false, false), {}}});
}

// The ex1 hand-built chain: Center, then (1/2,1), then [0,1/2] with Right.
inline Policy eq4_script() {
  using verify_detail::script;
  auto half = make_rational(1, 2);
  return script({{{}, SymbolicSet::atoms({"Center"})},
                 {SymbolicSet::interval(half, 1, false, false), {}},
                 {SymbolicSet::interval(0, half, true, true), SymbolicSet::atoms({"Right"})}});
}

// ex5 chain that never removes the sink -1.
inline Policy ex5_keep_sink() {
  Policy p = Policy::remove_all();
  p.protect = {SymbolicSet::points({Rational(-1)}), SymbolicSet()};
  return p;
}

// E^n = E^u on finite truncations of depth n.
inline void truncation_checks(const CatalogEntry& e, const VerifyOptions& opt,
                              CatalogReport& rep) {
  {
    // Depth n embeds into depth n + 1 with the same payoffs.
    CatalogCheck c{"truncations embed into the next depth", CheckKind::kTruncationStable, false,
                   "true", ""};
    try {
      bool ok = true;
      for (int n : opt.truncations) {
        auto a = e.truncation(n);
        auto b = e.truncation(n + 1);
        const auto& fa = require_finite(a);
        for (std::size_t i = 0; i < 2 && ok; ++i) ok = is_subset(a.space(i), b.space(i));
        for (const auto& x : fa.strategies(0)) {
          for (const auto& y : fa.strategies(1)) {
            const Profile p{x, y};
            for (std::size_t i = 0; i < 2; ++i) {
              ok = ok && a.oracle().payoff(i, p) == b.oracle().payoff(i, p) &&
                   e.game.oracle().payoff(i, p) == a.oracle().payoff(i, p);
            }
          }
        }
      }
      c.passed = ok;
      c.actual = verify_detail::yn(ok);
    } catch (const Error& ex) {
      c.actual = ex.what();
    }
    rep.checks.push_back(std::move(c));
  }
  for (int n : opt.truncations) {
    CatalogCheck c{"truncation N=" + std::to_string(n) + ": nested class equals universal class",
                   CheckKind::kTruncationStable, false, "true", ""};
    try {
      auto g = e.truncation(n);
      auto en = enumerate_sequences(g, Mode::kNested, opt.caps);
      auto eu = enumerate_sequences(g, Mode::kUniversal, opt.caps);
      c.passed = class_equal(en, eu);
      c.actual = verify_detail::yn(c.passed) + " (" + en.sequence_count().get_str() + " nested, " +
                 eu.sequence_count().get_str() + " universal sequences)";
    } catch (const Error& ex) {
      c.actual = ex.what();
    }
    rep.checks.push_back(std::move(c));
  }
}

// ---------------------------------------------------------------------------
// Analytic oracle against brute force over the payoff function on finite
// probe reductions.

struct AgreementReport {
  std::string id;
  std::size_t queries = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> samples;
};

namespace verify_detail {

// Opponent probe subsets: prefixes, suffixes, singletons and pairs.
inline std::vector<std::vector<Strategy>> probe_subsets(const std::vector<Strategy>& grid) {
  std::vector<std::vector<Strategy>> out;
  const std::size_t n = grid.size();
  for (std::size_t k = 1; k <= n; ++k) out.emplace_back(grid.begin(), grid.begin() + k);
  for (std::size_t k = 1; k < n; ++k) out.emplace_back(grid.begin() + k, grid.end());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.push_back({grid[a], grid[b]});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline SymbolicSet to_set(const std::vector<Strategy>& xs) {
  std::vector<SetPrimitive> prims;
  for (const auto& s : xs) {
    prims.push_back(s.is_atom() ? SetPrimitive(Atom{s.label()}) : SetPrimitive(Point{s.value()}));
  }
  return SymbolicSet::of(std::move(prims));
}

}  // namespace verify_detail

inline AgreementReport oracle_agreement(const std::string& name) {
  using namespace verify_detail;
  const auto e = instantiate(name);
  const auto& o = e.game.oracle();
  AgreementReport rep;
  rep.id = e.id;
  auto miss = [&rep](std::string what) {
    ++rep.mismatches;
    if (rep.samples.size() < 10) rep.samples.push_back(std::move(what));
  };
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& own = e.probes[i];
    const auto own_set = to_set(own);
    for (const auto& opp : probe_subsets(e.probes[1 - i])) {
      std::vector<SymbolicSet> sets(2);
      sets[i] = own_set;
      sets[1 - i] = to_set(opp);
      const Reduction r(sets);
      auto u = [&](const Strategy& a, const Strategy& x) {
        Profile p(2);
        p[i] = a;
        p[1 - i] = x;
        return o.payoff(i, p);
      };
      auto brute = [&](const Strategy& a, const Strategy& b) {
        return std::all_of(opp.begin(), opp.end(), [&](const Strategy& x) { return u(a, x) < u(b, x); });
      };
      std::vector<Strategy> dominated;
      for (const auto& a : own) {
        std::vector<Strategy> up, down;
        for (const auto& b : own) {
          bool want = brute(a, b);
          ++rep.queries;
          if (o.dominates(i, a, b, r) != want) {
            miss("dominates(" + e.game.players()[i] + ", " + a.to_string() + ", " + b.to_string() +
                 ") at " + r.to_string());
          }
          if (want) up.push_back(b);
          if (brute(b, a)) down.push_back(b);
        }
        if (!up.empty()) dominated.push_back(a);
        rep.queries += 2;
        if (set_intersect(o.dominating_set(i, a, r), own_set) != to_set(up)) {
          miss("dominating_set(" + e.game.players()[i] + ", " + a.to_string() + ") at " + r.to_string());
        }
        if (set_intersect(o.lower_contour_set(i, a, r), own_set) != to_set(down)) {
          miss("lower_contour_set(" + e.game.players()[i] + ", " + a.to_string() + ") at " +
               r.to_string());
        }
      }
      ++rep.queries;
      if (o.dominated_elements(i, own_set, own_set, r) != to_set(dominated)) {
        miss("dominated_elements(" + e.game.players()[i] + ") at " + r.to_string());
      }
    }
  }
  return rep;
}

inline CatalogReport verify_catalog(const std::string& name, const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  const auto e = instantiate(name);
  const Game& g = e.game;
  CatalogReport rep;
  rep.id = e.id;
  auto add = [&rep](std::string n, CheckKind k, bool ok, std::string expected, std::string actual) {
    rep.checks.push_back({std::move(n), k, ok, std::move(expected), std::move(actual)});
  };
  // Runs a check body and records thrown errors as failures.
  auto guarded = [&](std::string n, CheckKind k, std::string expected, auto body) {
    try {
      auto [ok, actual] = body();
      add(std::move(n), k, ok, std::move(expected), std::move(actual));
    } catch (const std::exception& ex) {
      add(std::move(n), k, false, std::move(expected), std::string("error: ") + ex.what());
    }
  };
  const auto empty = Reduction::empty(2);
  const auto one = SymbolicSet::points({Rational(1)});

  if (e.id == "intro_open_interval") {
    guarded("universal remove_all reaches ∅", CheckKind::kInherentlyInfinite, "∅", [&] {
      auto t = run(g, Mode::kUniversal, Policy::remove_all());
      return std::pair{t.final_reduction().is_empty() && t.terminal_maximal, trace_end(t)};
    });
    guarded("nested scripted chain ends at {1/2}", CheckKind::kInherentlyInfinite,
            "{1/2}×{*}, maximal", [&] {
              auto t = run(g, Mode::kNested, intro_script());
              auto want = Reduction({parse_points({make_rational(1, 2)}), SymbolicSet::atoms({"*"})});
              bool ok = t.final_reduction() == want && is_maximal(g, want, Mode::kNested) &&
                        validate_sequence(g, t, Mode::kNested).valid;
              return std::pair{ok, trace_end(t)};
            });
    guarded("nested maximal family is ∅ plus singletons", CheckKind::kInherentlyInfinite,
            "predicate and maximality agree on samples", [&] {
              auto fam = catalog_maximal_set(e.id, Mode::kNested);
              std::vector<std::pair<Reduction, bool>> probes{{empty, true}, {g.full(), false}};
              const int k = opt.sampled_singletons;
              for (int j = 1; j <= k; ++j) {
                auto a = make_rational(j, k + 1);
                probes.push_back({Reduction({parse_points({a}), SymbolicSet::atoms({"*"})}), true});
                probes.push_back({Reduction({SymbolicSet::interval(a / 2, a, true, true),
                                             SymbolicSet::atoms({"*"})}),
                                  false});
              }
              int agree = 0;
              for (const auto& [r, want] : probes) {
                if (fam.contains(r) == want && is_maximal(g, r, Mode::kNested) == want) ++agree;
              }
              return std::pair{agree == static_cast<int>(probes.size()),
                               std::to_string(agree) + "/" + std::to_string(probes.size()) +
                                   " probes agree; family " + fam.schema};
            });
    truncation_checks(e, opt, rep);
  } else if (e.id == "ex1_unbounded_at_limit") {
    const auto want = Reduction({one, SymbolicSet::atoms({"Left"})});
    for (auto m : {Mode::kNested, Mode::kUniversal}) {
      guarded(to_string(m) + " remove_all reaches {1}×{Left}", CheckKind::kInherentlyInfinite,
              want.to_string(), [&] {
                auto t = run(g, m, Policy::remove_all());
                return std::pair{t.final_reduction() == want && t.terminal_maximal, trace_end(t)};
              });
    }
    guarded("hand-built chain is a universal sequence", CheckKind::kInherentlyInfinite, "valid",
            [&] {
              auto t = run(g, Mode::kUniversal, eq4_script());
              auto v = validate_sequence(g, t, Mode::kUniversal);
              return std::pair{v.valid && t.final_reduction() == want, verdict_text(g, v)};
            });
    guarded("hand-built chain fails nested at its last step", CheckKind::kInherentlyInfinite,
            "invalid at stage index 3, player P1, strategy 1/2", [&] {
              auto t = run(g, Mode::kUniversal, eq4_script());
              auto v = validate_sequence(g, t, Mode::kNested);
              bool ok = !v.valid && v.stage_index == 3u && v.player == 0u && v.element &&
                        *v.element == Strategy::number(make_rational(1, 2));
              return std::pair{ok, verdict_text(g, v)};
            });
    guarded("nested and universal classes differ", CheckKind::kInherentlyInfinite, "true", [&] {
      auto t = run(g, Mode::kUniversal, eq4_script());
      bool u = validate_sequence(g, t, Mode::kUniversal).valid;
      bool n = validate_sequence(g, t, Mode::kNested).valid;
      return std::pair{u && !n, std::string(u && !n ? "true: " : "false: ") +
                                    "a universal sequence that is not nested"};
    });
    guarded("second chain stage not completely bounded", CheckKind::kInherentlyInfinite, "false",
            [&] {
              auto t = run(g, Mode::kUniversal, eq4_script());
              auto v = is_completely_bounded(g, t.stages.at(2).reduction);
              return std::pair{!v.holds, yn(v.holds) + " at " + t.stages.at(2).reduction.to_string()};
            });
    truncation_checks(e, opt, rep);
  } else if (e.id == "ex2_order_indep_not_equal") {
    const auto top = Reduction({one, one});
    guarded("nested remove_all reaches {1}×{1} at ω", CheckKind::kInherentlyInfinite,
            "{1}×{1} at stage ω, inductive", [&] {
              auto t = run(g, Mode::kNested, Policy::remove_all());
              const auto& last = t.stages.back();
              bool ok = last.reduction == top && last.stage == Stage{1, 0} && last.certificate &&
                        g.oracle().certify_limit(*last.certificate) && t.terminal_maximal &&
                        validate_sequence(g, t, Mode::kNested).valid;
              std::string cert = last.certificate ? ", " + to_string(last.certificate->certificate) : "";
              return std::pair{ok, trace_end(t) + cert};
            });
    guarded("universal continues to ∅", CheckKind::kInherentlyInfinite, "∅ at stage ω+1", [&] {
      auto t = run(g, Mode::kUniversal, Policy::remove_all());
      bool ok = t.final_reduction().is_empty() && t.final_stage() == Stage{1, 1} &&
                validate_sequence(g, t, Mode::kUniversal).valid;
      return std::pair{ok, trace_end(t)};
    });
    guarded("{1}×{1} locally bounded", CheckKind::kInherentlyInfinite, "true", [&] {
      auto v = is_locally_bounded(g, top);
      return std::pair{v.holds, yn(v.holds)};
    });
    guarded("{1}×{1} not completely bounded", CheckKind::kInherentlyInfinite, "false", [&] {
      auto v = is_completely_bounded(g, top);
      return std::pair{!v.holds, yn(v.holds)};
    });
    guarded("closed under dominance* along the nested chain", CheckKind::kInherentlyInfinite, "true",
            [&] {
              auto t = run(g, Mode::kNested, Policy::remove_all());
              auto v = pairs_dominance_star(g, trace_pairs(t));
              return std::pair{v.holds, yn(v.holds)};
            });
    guarded("randomized nested policies never reach another maximal reduction",
            CheckKind::kInherentlyInfinite, "{1}×{1} or non-terminal for every seed", [&] {
              int reached = 0, open = 0, other = 0;
              for (int s = 0; s < opt.random_seeds; ++s) {
                try {
                  auto t = run(g, Mode::kNested, Policy::random_subset(static_cast<std::uint64_t>(s)));
                  if (t.terminal_maximal && t.final_reduction() == top) {
                    ++reached;
                  } else if (t.terminal_maximal) {
                    ++other;
                  } else {
                    ++open;
                  }
                } catch (const BudgetExhausted&) {
                  ++open;
                }
              }
              return std::pair{other == 0, std::to_string(reached) + " reached {1}×{1}, " +
                                               std::to_string(open) + " non-terminal, " +
                                               std::to_string(other) + " elsewhere"};
            });
    truncation_checks(e, opt, rep);
  } else if (e.id == "ex3_not_all_bounded") {
    for (auto m : {Mode::kNested, Mode::kUniversal, Mode::kGkz}) {
      guarded(to_string(m) + ": A is the unique maximal reduction", CheckKind::kInherentlyInfinite,
              g.full().to_string(), [&] {
                auto t = run(g, m, Policy::remove_all());
                bool ok = is_maximal(g, g.full(), m) && t.final_reduction() == g.full();
                return std::pair{ok, trace_end(t)};
              });
    }
    guarded("[0,1]×{Left} not completely bounded", CheckKind::kInherentlyInfinite, "false", [&] {
      auto r = Reduction({Ex1Oracle::space0(), SymbolicSet::atoms({"Left"})});
      auto v = is_completely_bounded(g, r);
      return std::pair{!v.holds, yn(v.holds)};
    });
    truncation_checks(e, opt, rep);
  } else if (e.id == "ex4_apt_property_C") {
    auto lr = SymbolicSet::atoms({"Left", "Right"});
    const auto hat = Reduction({lr, lr});
    for (auto m : {Mode::kNested, Mode::kUniversal}) {
      guarded(to_string(m) + " remove_all reaches {Left,Right}²", CheckKind::kInherentlyInfinite,
              hat.to_string() + " at stage ω", [&] {
                auto t = run(g, m, Policy::remove_all());
                bool ok = t.final_reduction() == hat && t.final_stage() == Stage{1, 0} &&
                          validate_sequence(g, t, m).valid;
                return std::pair{ok, trace_end(t)};
              });
    }
    guarded("property C fails at {Left,Right}²", CheckKind::kInherentlyInfinite, "false", [&] {
      auto v = property_C_at(g, hat);
      std::string w = v.strategy ? " (player " + g.players()[*v.player] + ", strategy " +
                                       v.strategy->to_string() + ")"
                                 : "";
      return std::pair{!v.holds, yn(v.holds) + w};
    });
    truncation_checks(e, opt, rep);
  } else if (e.id == "ex5_closure_star") {
    const auto sink = Reduction({SymbolicSet::points({Rational(-1)}), one});
    guarded("remove_all chain ends at ∅", CheckKind::kInherentlyInfinite, "∅, nested-maximal", [&] {
      auto t = run(g, Mode::kNested, Policy::remove_all());
      bool ok = t.final_reduction().is_empty() && validate_sequence(g, t, Mode::kNested).valid;
      return std::pair{ok, trace_end(t)};
    });
    guarded("sink-keeping chain ends at {-1}×{1}", CheckKind::kInherentlyInfinite,
            "{-1}×{1}, nested-maximal", [&] {
              auto t = run(g, Mode::kNested, ex5_keep_sink());
              bool ok = t.final_reduction() == sink && is_maximal(g, sink, Mode::kNested) &&
                        validate_sequence(g, t, Mode::kNested).valid;
              return std::pair{ok, trace_end(t)};
            });
    guarded("closure under dominance* fails at a_1 = -1", CheckKind::kInherentlyInfinite,
            "false, player P1, strategy -1", [&] {
              auto t = run(g, Mode::kNested, ex5_keep_sink());
              auto v = pairs_dominance_star(g, trace_pairs(t));
              bool ok = !v.holds && v.player == 0u && v.strategy &&
                        *v.strategy == Strategy::number(Rational(-1));
              std::string w = v.strategy ? ", player " + g.players()[*v.player] + ", strategy " +
                                               v.strategy->to_string()
                                         : "";
              return std::pair{ok, yn(v.holds) + w};
            });
    guarded("every engine-reachable stage locally bounded", CheckKind::kInherentlyInfinite, "true",
            [&] {
              auto a = run(g, Mode::kNested, Policy::remove_all()).reductions();
              auto b = run(g, Mode::kNested, ex5_keep_sink()).reductions();
              a.insert(a.end(), b.begin(), b.end());
              auto v = range_locally_bounded(g, a);
              return std::pair{v.holds, yn(v.holds) + " over " + std::to_string(a.size()) + " stages"};
            });
    truncation_checks(e, opt, rep);
  } else {
    guarded("nested reaches ∅ in one step", CheckKind::kInherentlyInfinite, "∅ at stage 1", [&] {
      auto t = run(g, Mode::kNested, Policy::remove_all());
      return std::pair{t.final_reduction().is_empty() && t.final_stage() == Stage{0, 1}, trace_end(t)};
    });
    guarded("GKZ trace has order type ω+1 with empty limit", CheckKind::kInherentlyInfinite,
            "∅ at stage ω, inductive", [&] {
              auto t = run(g, Mode::kGkz, Policy::remove_all());
              const auto& last = t.stages.back();
              bool ok = last.reduction.is_empty() && last.stage == Stage{1, 0} &&
                        last.certificate && g.oracle().certify_limit(*last.certificate) &&
                        validate_sequence(g, t, Mode::kGkz).valid;
              return std::pair{ok, trace_end(t)};
            });
    guarded("GKZ cannot step to ∅ directly", CheckKind::kInherentlyInfinite, "false", [&] {
      auto v = validate_step(g, g.full(), empty, Mode::kGkz);
      return std::pair{!v.valid, yn(v.valid)};
    });
    truncation_checks(e, opt, rep);
  }
  {
    auto ag = oracle_agreement(e.id);
    add("analytic oracle matches brute force on the probe grid", CheckKind::kTruncationStable,
        ag.mismatches == 0, "0 mismatches",
        std::to_string(ag.mismatches) + " mismatches in " + std::to_string(ag.queries) + " queries" +
            (ag.samples.empty() ? "" : "; first: " + ag.samples.front()));
  }
  return rep;
}

}  // namespace domlab

#endif  // DOMLAB_VERIFY_HPP_
