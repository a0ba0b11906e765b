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

#ifndef DOMLAB_THEOREMS_HPP_
#define DOMLAB_THEOREMS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "domlab/analyzer.hpp"
#include "domlab/engine.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/finite_game.hpp"

// Instance-by-instance checks of the structural results on a finite game,
// using the enumerated sequence classes as ground truth.

namespace domlab {

struct Assertion {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ClassCounts {
  Mode mode = Mode::kNested;
  Integer sequences;
  std::size_t range = 0;
  std::size_t maximal = 0;
};

struct TheoremReport {
  std::string game;
  std::vector<Assertion> assertions;
  std::vector<ClassCounts> counts;

  bool all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.passed; });
  }
};

namespace detail {

inline std::string yn(bool b) { return b ? "yes" : "no"; }

inline std::string masks_text(const FiniteTableOracle& f, const Masks& m) {
  return f.from_masks(m).to_string();
}

inline bool all_equal(std::initializer_list<bool> xs) {
  return std::all_of(xs.begin(), xs.end(), [&](bool x) { return x == *xs.begin(); });
}

}  // namespace detail

inline TheoremReport check_theorems(const Game& g, const EnumerationCaps& caps = {}) {
  const auto& f = require_finite(g);
  const auto& k = f.kernel();
  TheoremReport rep;
  rep.game = g.source();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.assertions.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto en = enumerate_sequences(k, Mode::kNested, caps);
  const auto eu = enumerate_sequences(k, Mode::kUniversal, caps);
  const auto eg = enumerate_sequences(k, Mode::kGkz, caps);
  for (const auto* c : {&en, &eu, &eg}) {
    rep.counts.push_back({c->mode, c->sequence_count(), c->nodes.size(), c->maximal_set().size()});
  }
  const auto max_n = en.maximal_set();
  const auto max_u = eu.maximal_set();
  const auto max_g = eg.maximal_set();

  add("universal order independence", max_u.size() == 1,
      std::to_string(max_u.size()) + " universal maximal reductions");

  {
    bool ok = true;
    std::string why;
    for (const auto& m : max_n) {
      if (!max_u.empty() && !masks_subset(max_u.front(), m)) {
        ok = false;
        why = detail::masks_text(f, max_u.front()) + " ⊄ " + detail::masks_text(f, m);
        break;
      }
    }
    add("universal maximal inside every nested maximal", ok, why);
  }

  {
    bool same_max = max_n == max_u;
    bool max_bounded = true;
    for (const auto& m : max_n) max_bounded = max_bounded && mask_bounded(f, m, BoundKind::kComplete).holds;
    bool n_in_u = class_subset(en, eu);
    add("maximal sets agree iff nested maxima completely bounded iff nested within universal",
        detail::all_equal({same_max, max_bounded, n_in_u}),
        "agree=" + detail::yn(same_max) + " bounded=" + detail::yn(max_bounded) +
            " inclusion=" + detail::yn(n_in_u));
  }

  const bool n_complete = class_boundedness(f, en, BoundKind::kComplete).holds;
  const bool u_complete = class_boundedness(f, eu, BoundKind::kComplete).holds;
  const bool nu_equal = class_equal(en, eu);
  add("class complete boundedness iff class equality",
      detail::all_equal({n_complete, u_complete, nu_equal}),
      "nested=" + detail::yn(n_complete) + " universal=" + detail::yn(u_complete) +
          " equal=" + detail::yn(nu_equal));

  {
    bool g_in_n = class_subset(eg, en);
    bool same_max = max_g == max_n;
    bool g_local = class_boundedness(f, eg, BoundKind::kLocal).holds;
    bool n_local = class_boundedness(f, en, BoundKind::kLocal).holds;
    bool gn_equal = class_equal(eg, en);
    add("gkz class inside nested class", g_in_n);
    add("gkz and nested maximal sets agree", same_max);
    add("class local boundedness iff gkz equals nested",
        detail::all_equal({g_local, n_local, gn_equal}),
        "gkz=" + detail::yn(g_local) + " nested=" + detail::yn(n_local) +
            " equal=" + detail::yn(gn_equal));

    bool forget = is_forgetfulness_proof(f, en).holds;
    add("forgetfulness-proofness iff nested local boundedness", forget == n_local,
        "forgetful-proof=" + detail::yn(forget) + " local=" + detail::yn(n_local));
    bool star = closed_under_dominance_star(f, en).holds;
    add("closure under dominance* implies nested local boundedness", !star || n_local,
        "closed=" + detail::yn(star) + " local=" + detail::yn(n_local));
    add("finite triple equality gkz = nested = universal", gn_equal && nu_equal);
  }

  {
    // Nested edges are universal edges.
    bool ok = true;
    for (std::size_t v = 0; v < en.nodes.size() && ok; ++v) {
      auto u = successors(k, en.nodes[v], Mode::kUniversal);
      for (std::size_t w : en.succ[v]) {
        ok = ok && std::binary_search(u.begin(), u.end(), en.nodes[w]);
      }
    }
    add("nested steps are universal steps", ok);
  }

  const auto subsets = all_product_subsets(k);
  {
    bool all_bounded = true;
    std::string why;
    for (const auto& r : subsets) {
      auto v = mask_bounded(f, r, BoundKind::kComplete);
      if (!v.holds) {
        all_bounded = false;
        why = detail::masks_text(f, r);
        break;
      }
    }
    add("every product subset completely bounded", all_bounded, why);
    add("all reductions bounded implies class equality", !all_bounded || nu_equal);
  }

  {
    bool ok = true;
    std::string why;
    for (const auto& r : subsets) {
      bool n = successors(k, r, Mode::kNested).empty();
      bool gz = successors(k, r, Mode::kGkz).empty();
      if (n != gz || n != masks_maximal(k, r, Mode::kNested)) {
        ok = false;
        why = detail::masks_text(f, r);
        break;
      }
    }
    add("nested maximal iff gkz maximal", ok, why);
  }

  {
    // At a nested maximal reduction no non-empty D(a) has an undominated element.
    bool ok = true;
    std::string why;
    for (const auto& m : max_n) {
      if (masks_empty(m)) continue;
      for (std::size_t i = 0; i < k.players() && ok; ++i) {
        auto rows = k.dominator_rows(i, k.opponent_mask(i, m));
        auto top = detail::undominated_in(rows, k.all(i), k.all(i));
        for (std::size_t a = 0; a < k.count(i); ++a) {
          if ((m[i] >> a & 1) && rows[a] && (rows[a] & top)) {
            ok = false;
            why = detail::masks_text(f, m);
            break;
          }
        }
      }
    }
    add("no undominated dominators at nested maxima", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    for (std::size_t v = 0; v < en.nodes.size() && ok; ++v) {
      Reduction r = f.from_masks(en.nodes[v]);
      for (std::size_t w : en.succ[v]) {
        Reduction s = f.from_masks(en.nodes[w]);
        try {
          auto chain = gkz_interpolate(g, r, s);
          std::size_t bound = 1;
          for (std::size_t i = 0; i < k.players(); ++i) {
            bound += popcount(en.nodes[v][i] & ~en.nodes[w][i]);
          }
          if (chain.front() != r || chain.back() != s || chain.size() > bound) {
            ok = false;
            why = r.to_string() + " -> " + s.to_string();
            break;
          }
        } catch (const Error& e) {
          ok = false;
          why = r.to_string() + " -> " + s.to_string() + ": " + e.what();
          break;
        }
      }
    }
    add("gkz interpolation of every nested step", ok, why);
  }

  {
    bool ok = true;
    for (const auto* c : {&en, &eu, &eg}) {
      for (const auto& r : c->nodes) {
        if (mask_bounded(f, r, BoundKind::kComplete).holds &&
            !mask_bounded(f, r, BoundKind::kLocal).holds) {
          ok = false;
        }
      }
    }
    add("complete boundedness implies local boundedness on every range", ok);
  }
  return rep;
}

// Random finite game with payoffs uniform on {0..max_payoff}.
inline Game random_game(std::uint64_t seed, std::size_t players, std::size_t max_strats,
                        int max_payoff = 4) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  std::vector<std::vector<Strategy>> strategies;
  for (std::size_t i = 0; i < players; ++i) {
    names.push_back("P" + std::to_string(i + 1));
    const std::size_t m = 1 + rng() % max_strats;
    std::vector<Strategy> s;
    for (std::size_t a = 0; a < m; ++a) {
      s.push_back(Strategy::atom("s" + std::to_string(i + 1) + "_" + std::to_string(a)));
    }
    strategies.push_back(std::move(s));
  }
  std::size_t total = 1;
  for (const auto& s : strategies) total *= s.size();
  std::vector<std::vector<Rational>> payoffs(players, std::vector<Rational>(total));
  for (std::size_t i = 0; i < players; ++i) {
    for (auto& x : payoffs[i]) {
      x = static_cast<long>(rng() % static_cast<std::uint64_t>(max_payoff + 1));
    }
  }
  return make_finite_game("random:" + std::to_string(seed), std::move(names),
                          std::move(strategies), std::move(payoffs));
}

}  // namespace domlab

#endif  // DOMLAB_THEOREMS_HPP_
