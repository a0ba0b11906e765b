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

#ifndef DOMLAB_CATALOG_HPP_
#define DOMLAB_CATALOG_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/chain_pattern.hpp"
#include "domlab/engine.hpp"
#include "domlab/error.hpp"
#include "domlab/finite_game.hpp"
#include "domlab/game.hpp"
#include "domlab/rational.hpp"
#include "domlab/sequence.hpp"
#include "domlab/symbolic_set.hpp"

// Infinite example games with closed-form dominance. Each oracle answers
// queries for arbitrary sub-reductions expressible in the set algebra.
//
// Notation below: for player i facing R_j, Q is the numeric part of R_j and
// T its atom part.

namespace domlab {

namespace catalog_detail {

inline Strategy num(long p, long q = 1) { return Strategy::number(make_rational(p, q)); }

inline SymbolicSet point(const Rational& v) { return SymbolicSet::points({v}); }

// Numbers of x strictly below every number of q; every number of x when q
// has none.
inline SymbolicSet below_all(const SymbolicSet& x, const SymbolicSet& q) {
  auto xn = numeric_part(x);
  auto inf = infimum(q);
  if (!inf) return xn;
  if (inf->kind == Bound::Kind::kMinusInfinity) return {};
  if (inf->attained) return strictly_below(xn, inf->value);
  return restrict_numeric(xn, std::nullopt, Cut{inf->value, true});
}

inline bool is_below_all(const Rational& a, const SymbolicSet& q) {
  return !below_all(point(a), q).empty();
}

// Numbers of x strictly below some number of scope.
inline SymbolicSet below_some(const SymbolicSet& x, const SymbolicSet& scope) {
  auto sup = supremum(scope);
  if (!sup) return {};
  return below_bound(numeric_part(x), *sup);
}

// Every number of q is positive.
inline bool all_positive(const SymbolicSet& q) {
  auto inf = infimum(q);
  if (!inf) return true;
  if (inf->kind != Bound::Kind::kFinite) return false;
  return inf->value > 0 || (inf->value == 0 && !inf->attained);
}

inline bool is_number(const Strategy& s, const Rational& v) {
  return s.is_number() && s.value() == v;
}

// Expected shape of one primitive in a certified chain family.
struct Shape {
  PrimitiveTemplate::Kind kind;
  std::string label;
  Rational value;
  std::string seq;
};

inline Shape atom_shape(std::string l) { return {PrimitiveTemplate::Kind::kAtom, std::move(l), 0, ""}; }
inline Shape point_shape(Rational v) { return {PrimitiveTemplate::Kind::kPoint, "", std::move(v), ""}; }
inline Shape tail_shape(std::string seq) { return {PrimitiveTemplate::Kind::kTail, "", 0, std::move(seq)}; }

inline bool matches(const std::vector<PrimitiveTemplate>& templ, const std::vector<Shape>& shape) {
  if (templ.size() != shape.size()) return false;
  for (std::size_t k = 0; k < templ.size(); ++k) {
    const auto& t = templ[k];
    const auto& s = shape[k];
    if (t.kind != s.kind) return false;
    switch (t.kind) {
      case PrimitiveTemplate::Kind::kAtom:
        if (t.label != s.label) return false;
        break;
      case PrimitiveTemplate::Kind::kPoint:
        if (t.value != s.value) return false;
        break;
      case PrimitiveTemplate::Kind::kTail:
        if (t.seq->id() != s.seq || t.start.c != 1) return false;
        break;
      case PrimitiveTemplate::Kind::kInterval:
        return false;
    }
  }
  return true;
}

inline const PrimitiveTemplate& last_tail(const std::vector<PrimitiveTemplate>& templ) {
  return templ.back();
}

}  // namespace catalog_detail

// ---------------------------------------------------------------------------
// Identity payoff on an interval, with a dummy second player.

class IdentityOracle : public DominanceOracle {
 public:
  IdentityOracle(std::string name, SymbolicSet space) : name_(std::move(name)), space_(std::move(space)) {}
  std::string name() const override { return name_; }

  bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                 const Reduction&) const override {
    return i == 0 && a.is_number() && b.is_number() && a.value() < b.value();
  }
  SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                 const SymbolicSet& scope, const Reduction&) const override {
    if (i != 0) return {};
    return catalog_detail::below_some(target, scope);
  }
  SymbolicSet dominating_set(std::size_t i, const Strategy& a, const Reduction&) const override {
    if (i != 0) return {};
    return strictly_above(space_, a.value());
  }
  SymbolicSet lower_contour_set(std::size_t i, const Strategy& a,
                                const Reduction&) const override {
    if (i != 0) return {};
    return strictly_below(space_, a.value());
  }
  Rational payoff(std::size_t i, const Profile& p) const override {
    return i == 0 ? p.at(0).value() : Rational(0);
  }

  // (k/(k+1), 1) -> ((k+1)/(k+2), 1): the largest GKZ step keeping an open
  // upper interval.
  std::optional<Reduction> gkz_step(const Reduction& r) const override {
    if (r.is_empty() || r[0].primitives().size() != 1) return std::nullopt;
    const auto* iv = std::get_if<Interval>(&r[0].primitives().front());
    if (!iv || iv->lo_closed || iv->hi_closed || iv->hi != 1) return std::nullopt;
    auto k = frac_sequence()->index_of(iv->lo, 0);
    if (!k) return std::nullopt;
    auto next = SymbolicSet::interval(frac_sequence()->at(*k + 1), 1, false, false);
    return r.with(0, next);
  }

  // Family (seq(m + c t), 1) x {*}: each link removes a half-open piece whose
  // elements are beaten by the survivors, in every mode.
  bool certify_limit(const ChainPattern& p) const override {
    if (p.players.size() != 2 || p.players[0].size() != 1) return false;
    const auto& t = p.players[0][0];
    if (t.kind != PrimitiveTemplate::Kind::kInterval || t.lo_closed || t.hi_closed) return false;
    if (!t.lo.moving() || t.lo.seq->id() != "frac" || t.lo.index.c < 1) return false;
    if (t.hi.moving() || t.hi.value != 1) return false;
    return p.players[1].size() == 1 && p.players[1][0].kind == PrimitiveTemplate::Kind::kAtom;
  }

 private:
  std::string name_;
  SymbolicSet space_;
};

// ---------------------------------------------------------------------------
// A_1 = [0,1], A_2 = {Left, Center, Right}.
// u_1 = a_1 against Left, 0 against Center, against Right a_1 if a_1 < 1 else 0.
// u_2 = 1, 0, -1 for Left, Center, Right.

namespace catalog_detail {

// Dominance on [0,1] by f(a) < f(b) with f(x) = x for x < 1 and f(1) = 0.
inline SymbolicSet f_dominated(const SymbolicSet& target, const SymbolicSet& scope) {
  const auto one = point(1);
  auto rest = set_difference(scope, one);
  auto out = below_some(set_difference(target, one), rest);
  if (target.contains(num(1)) && !strictly_above(rest, 0).empty()) out = set_union(out, one);
  return out;
}

inline Rational f_value(const Strategy& a) { return a.value() < 1 ? a.value() : Rational(0); }

}  // namespace catalog_detail

class Ex1Oracle : public DominanceOracle {
 public:
  explicit Ex1Oracle(bool with_center) : center_(with_center) {}
  std::string name() const override { return center_ ? "ex1_unbounded_at_limit" : "ex3_not_all_bounded"; }

  // Which of the three payoff rules binds for player 1.
  enum class Rule { kNone, kIdentity, kF, kBelowOne };

  Rule rule(const Reduction& r) const {
    const auto& t = r[1];
    bool l = t.contains(Strategy::atom("Left"));
    bool c = t.contains(Strategy::atom("Center"));
    bool rt = t.contains(Strategy::atom("Right"));
    if (center_) {
      if (c) return Rule::kNone;
      if (l && rt) return Rule::kBelowOne;
      return l ? Rule::kIdentity : Rule::kF;
    }
    // Variant: Right pays 0 throughout.
    if (rt) return Rule::kNone;
    return Rule::kF;
  }

  bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                 const Reduction& r) const override {
    if (i == 1) return center_ && value2(a) < value2(b);
    switch (rule(r)) {
      case Rule::kNone: return false;
      case Rule::kIdentity: return a.value() < b.value();
      case Rule::kF: return catalog_detail::f_value(a) < catalog_detail::f_value(b);
      case Rule::kBelowOne: return a.value() < b.value() && b.value() < 1;
    }
    return false;
  }

  SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                 const SymbolicSet& scope, const Reduction& r) const override {
    using namespace catalog_detail;
    if (i == 1) {
      if (!center_) return {};
      int best = -2;
      for (const auto& s : labels()) {
        if (scope.contains(Strategy::atom(s))) best = std::max(best, value2(Strategy::atom(s)));
      }
      std::vector<std::string> out;
      for (const auto& s : labels()) {
        if (target.contains(Strategy::atom(s)) && value2(Strategy::atom(s)) < best) out.push_back(s);
      }
      return SymbolicSet::atoms(out);
    }
    const auto one = point(1);
    switch (rule(r)) {
      case Rule::kNone: return {};
      case Rule::kIdentity: return below_some(target, scope);
      case Rule::kF: return f_dominated(target, scope);
      case Rule::kBelowOne:
        return below_some(set_difference(target, one), set_difference(scope, one));
    }
    return {};
  }

  SymbolicSet dominating_set(std::size_t i, const Strategy& a, const Reduction& r) const override {
    using namespace catalog_detail;
    if (i == 1) return by_value2(a, +1);
    const SymbolicSet a0 = space0();
    const auto below_one = set_difference(a0, point(1));
    switch (rule(r)) {
      case Rule::kNone: return {};
      case Rule::kIdentity: return strictly_above(a0, a.value());
      case Rule::kF: return strictly_above(below_one, f_value(a));
      case Rule::kBelowOne:
        return a.value() < 1 ? strictly_above(below_one, a.value()) : SymbolicSet();
    }
    return {};
  }

  SymbolicSet lower_contour_set(std::size_t i, const Strategy& a,
                                const Reduction& r) const override {
    using namespace catalog_detail;
    if (i == 1) return by_value2(a, -1);
    const SymbolicSet a0 = space0();
    const auto below_one = set_difference(a0, point(1));
    switch (rule(r)) {
      case Rule::kNone: return {};
      case Rule::kIdentity: return strictly_below(a0, a.value());
      case Rule::kF: {
        auto v = f_value(a);
        auto out = strictly_below(below_one, v);
        if (v > 0) out = set_union(out, point(1));
        return out;
      }
      case Rule::kBelowOne:
        return a.value() < 1 ? strictly_below(a0, a.value()) : SymbolicSet();
    }
    return {};
  }

  Rational payoff(std::size_t i, const Profile& p) const override {
    const auto& a1 = p.at(0).value();
    const auto& a2 = p.at(1).label();
    if (i == 1) return center_ ? Rational(value2(p.at(1))) : Rational(0);
    if (center_) {
      if (a2 == "Left") return a1;
      if (a2 == "Center") return 0;
      return a1 < 1 ? a1 : Rational(0);
    }
    return a1 < 1 && a2 == "Left" ? a1 : Rational(0);
  }

  static SymbolicSet space0() { return SymbolicSet::interval(0, 1, true, true); }
  std::vector<std::string> labels() const {
    if (center_) return {"Left", "Center", "Right"};
    return {"Left", "Right"};
  }

 private:
  static int value2(const Strategy& s) {
    if (s.label() == "Left") return 1;
    if (s.label() == "Center") return 0;
    return -1;
  }
  SymbolicSet by_value2(const Strategy& a, int sign) const {
    if (!center_) return {};
    std::vector<std::string> out;
    for (const auto& s : labels()) {
      int d = value2(Strategy::atom(s)) - value2(a);
      if (d * sign > 0) out.push_back(s);
    }
    return SymbolicSet::atoms(out);
  }
  bool center_;
};

// ---------------------------------------------------------------------------
// A_1 = even ∪ {1}, A_2 = odd ∪ {1}; u_i = 0 at (1,1), else min(a_i, a_j).

class Ex2Oracle : public DominanceOracle {
 public:
  std::string name() const override { return "ex2_order_indep_not_equal"; }

  static SymbolicSet space(std::size_t i) {
    return set_union(catalog_detail::point(1),
                     SymbolicSet::tail(i == 0 ? even_sequence() : odd_sequence(), 0));
  }

  bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                 const Reduction& r) const override {
    using namespace catalog_detail;
    const auto& rj = r[1 - i];
    const auto q = set_difference(rj, point(1));
    const bool has1 = rj.contains(num(1));
    const bool a1 = is_number(a, 1), b1 = is_number(b, 1);
    if (!a1 && !b1) return a.value() < b.value() && is_below_all(a.value(), q);
    if (!a1 && b1) return !has1 && is_below_all(a.value(), q);
    if (a1 && !b1) return q.empty() && b.value() > 0;
    return false;
  }

  SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                 const SymbolicSet& scope, const Reduction& r) const override {
    using namespace catalog_detail;
    const auto one = point(1);
    const auto& rj = r[1 - i];
    const auto q = set_difference(rj, one);
    const bool has1 = rj.contains(num(1));
    const auto t = set_difference(target, one);
    const auto s = set_difference(scope, one);
    auto low = below_all(t, q);
    auto out = below_some(low, s);
    if (scope.contains(num(1)) && !has1) out = set_union(out, low);
    if (target.contains(num(1)) && q.empty() && !strictly_above(s, 0).empty()) {
      out = set_union(out, one);
    }
    return out;
  }

  SymbolicSet dominating_set(std::size_t i, const Strategy& a, const Reduction& r) const override {
    using namespace catalog_detail;
    const auto one = point(1);
    const auto& rj = r[1 - i];
    const auto q = set_difference(rj, one);
    const auto rest = set_difference(space(i), one);
    if (is_number(a, 1)) return q.empty() ? strictly_above(rest, 0) : SymbolicSet();
    if (!is_below_all(a.value(), q)) return {};
    auto out = strictly_above(rest, a.value());
    if (!rj.contains(num(1))) out = set_union(out, one);
    return out;
  }

  SymbolicSet lower_contour_set(std::size_t i, const Strategy& a,
                                const Reduction& r) const override {
    using namespace catalog_detail;
    const auto one = point(1);
    const auto& rj = r[1 - i];
    const auto q = set_difference(rj, one);
    const auto rest = set_difference(space(i), one);
    if (is_number(a, 1)) {
      return rj.contains(num(1)) ? SymbolicSet() : below_all(rest, q);
    }
    auto out = below_all(strictly_below(rest, a.value()), q);
    if (q.empty() && a.value() > 0) out = set_union(out, one);
    return out;
  }

  Rational payoff(std::size_t i, const Profile& p) const override {
    const auto& ai = p.at(i).value();
    const auto& aj = p.at(1 - i).value();
    if (ai == 1 && aj == 1) return 0;
    return std::min(ai, aj);
  }

  // The forced chain: the smaller tail head is the only dominated strategy,
  // so the heads alternate and each tail advances once per two steps.
  bool certify_limit(const ChainPattern& p) const override {
    using namespace catalog_detail;
    if (p.stride != 2 || p.players.size() != 2) return false;
    if (!matches(p.players[0], {point_shape(1), tail_shape("even")})) return false;
    if (!matches(p.players[1], {point_shape(1), tail_shape("odd")})) return false;
    auto d = last_tail(p.players[0]).start.m - last_tail(p.players[1]).start.m;
    return d == 0 || d == 1;
  }
};

// ---------------------------------------------------------------------------
// A_i = {Left, Right} ∪ (even | odd). u_i = min between numbers, a_i against
// an atom, 1 on matching atoms, 0 otherwise.

class Ex4Oracle : public DominanceOracle {
 public:
  std::string name() const override { return "ex4_apt_property_C"; }

  static SymbolicSet space(std::size_t i) {
    return set_union(SymbolicSet::atoms({"Left", "Right"}),
                     SymbolicSet::tail(i == 0 ? even_sequence() : odd_sequence(), 0));
  }

  // The only atom of T when T is a singleton.
  static std::optional<Strategy> single_atom(const SymbolicSet& rj) {
    auto t = atom_part(rj);
    auto e = t.finite_elements();
    if (!e || e->size() != 1) return std::nullopt;
    return e->front();
  }

  bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                 const Reduction& r) const override {
    using namespace catalog_detail;
    const auto& rj = r[1 - i];
    const auto q = numeric_part(rj);
    const auto single = single_atom(rj);
    if (a.is_number() && b.is_number()) return a.value() < b.value() && is_below_all(a.value(), q);
    if (a.is_number()) return q.empty() && single && *single == b;
    if (b.is_number()) return !rj.contains(a) && b.value() > 0 && all_positive(q);
    return q.empty() && single && *single == b && a != b;
  }

  SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                 const SymbolicSet& scope, const Reduction& r) const override {
    using namespace catalog_detail;
    const auto& rj = r[1 - i];
    const auto q = numeric_part(rj);
    const auto single = single_atom(rj);
    const auto tn = numeric_part(target);
    const auto ta = atom_part(target);
    const auto sn = numeric_part(scope);
    const bool atom_wins = q.empty() && single && scope.contains(*single);
    SymbolicSet out = below_some(below_all(tn, q), sn);
    if (atom_wins) out = set_union(out, tn);
    if (all_positive(q) && !strictly_above(sn, 0).empty()) {
      out = set_union(out, set_difference(ta, atom_part(rj)));
    }
    if (atom_wins) out = set_union(out, set_difference(ta, SymbolicSet::singleton(*single)));
    return out;
  }

  SymbolicSet dominating_set(std::size_t i, const Strategy& a, const Reduction& r) const override {
    using namespace catalog_detail;
    const auto& rj = r[1 - i];
    const auto q = numeric_part(rj);
    const auto single = single_atom(rj);
    const auto an = numeric_part(space(i));
    SymbolicSet out;
    if (a.is_number()) {
      if (is_below_all(a.value(), q)) out = strictly_above(an, a.value());
      if (q.empty() && single) out = set_union(out, SymbolicSet::singleton(*single));
      return out;
    }
    if (!rj.contains(a) && all_positive(q)) out = strictly_above(an, 0);
    if (q.empty() && single && *single != a) out = set_union(out, SymbolicSet::singleton(*single));
    return out;
  }

  SymbolicSet lower_contour_set(std::size_t i, const Strategy& a,
                                const Reduction& r) const override {
    using namespace catalog_detail;
    const auto& rj = r[1 - i];
    const auto q = numeric_part(rj);
    const auto single = single_atom(rj);
    const auto an = numeric_part(space(i));
    const auto aa = atom_part(space(i));
    SymbolicSet out;
    if (a.is_number()) {
      out = below_all(strictly_below(an, a.value()), q);
      if (a.value() > 0 && all_positive(q)) out = set_union(out, set_difference(aa, atom_part(rj)));
      return out;
    }
    if (q.empty() && single && *single == a) {
      out = set_union(an, set_difference(aa, SymbolicSet::singleton(a)));
    }
    return out;
  }

  Rational payoff(std::size_t i, const Profile& p) const override {
    const auto& ai = p.at(i);
    const auto& aj = p.at(1 - i);
    if (ai.is_number() && aj.is_number()) return std::min(ai.value(), aj.value());
    if (ai.is_number()) return ai.value();
    if (aj.is_atom() && ai.label() == aj.label()) return 1;
    return 0;
  }

  bool certify_limit(const ChainPattern& p) const override {
    using namespace catalog_detail;
    if (p.stride != 2 || p.players.size() != 2) return false;
    if (!matches(p.players[0], {atom_shape("Left"), atom_shape("Right"), tail_shape("even")})) return false;
    if (!matches(p.players[1], {atom_shape("Left"), atom_shape("Right"), tail_shape("odd")})) return false;
    auto d = last_tail(p.players[0]).start.m - last_tail(p.players[1]).start.m;
    return d == 0 || d == 1;
  }
};

// ---------------------------------------------------------------------------
// A_1 = {-1} ∪ even, A_2 = odd ∪ {1}.
// u_1 = -1 if a_1 = -1, else min. u_2 = a_2 if a_1 = -1, else min.

class Ex5Oracle : public DominanceOracle {
 public:
  std::string name() const override { return "ex5_closure_star"; }

  static SymbolicSet space(std::size_t i) {
    using namespace catalog_detail;
    if (i == 0) return set_union(point(-1), SymbolicSet::tail(even_sequence(), 0));
    return set_union(point(1), SymbolicSet::tail(odd_sequence(), 0));
  }

  bool dominates(std::size_t i, const Strategy& a, const Strategy& b,
                 const Reduction& r) const override {
    using namespace catalog_detail;
    if (i == 0) {
      if (is_number(b, -1)) return false;
      if (is_number(a, -1)) return true;
      return a.value() < b.value() && is_below_all(a.value(), r[1]);
    }
    return a.value() < b.value() && is_below_all(a.value(), set_difference(r[0], point(-1)));
  }

  SymbolicSet dominated_elements(std::size_t i, const SymbolicSet& target,
                                 const SymbolicSet& scope, const Reduction& r) const override {
    using namespace catalog_detail;
    const auto sink = point(-1);
    if (i == 0) {
      const auto s = set_difference(scope, sink);
      auto out = below_some(below_all(set_difference(target, sink), r[1]), s);
      if (target.contains(num(-1)) && !s.empty()) out = set_union(out, sink);
      return out;
    }
    return below_some(below_all(target, set_difference(r[0], sink)), scope);
  }

  SymbolicSet dominating_set(std::size_t i, const Strategy& a, const Reduction& r) const override {
    using namespace catalog_detail;
    const auto sink = point(-1);
    if (i == 0) {
      const auto rest = set_difference(space(0), sink);
      if (is_number(a, -1)) return rest;
      return is_below_all(a.value(), r[1]) ? strictly_above(rest, a.value()) : SymbolicSet();
    }
    return is_below_all(a.value(), set_difference(r[0], sink)) ? strictly_above(space(1), a.value())
                                                              : SymbolicSet();
  }

  SymbolicSet lower_contour_set(std::size_t i, const Strategy& a,
                                const Reduction& r) const override {
    using namespace catalog_detail;
    const auto sink = point(-1);
    if (i == 0) {
      if (is_number(a, -1)) return {};
      const auto rest = set_difference(space(0), sink);
      return set_union(sink, below_all(strictly_below(rest, a.value()), r[1]));
    }
    return below_all(strictly_below(space(1), a.value()), set_difference(r[0], sink));
  }

  Rational payoff(std::size_t i, const Profile& p) const override {
    const auto& a1 = p.at(0).value();
    const auto& a2 = p.at(1).value();
    if (a1 == -1) return i == 0 ? Rational(-1) : a2;
    return std::min(a1, a2);
  }

  // Same alternating chain as the even/odd game; player 1 may keep -1.
  bool certify_limit(const ChainPattern& p) const override {
    using namespace catalog_detail;
    if (p.stride != 2 || p.players.size() != 2) return false;
    bool p0 = matches(p.players[0], {tail_shape("even")}) ||
              matches(p.players[0], {point_shape(-1), tail_shape("even")});
    if (!p0 || !matches(p.players[1], {point_shape(1), tail_shape("odd")})) return false;
    auto d = last_tail(p.players[0]).start.m - last_tail(p.players[1]).start.m;
    return d == 0 || d == 1;
  }
};

// ---------------------------------------------------------------------------
// Entries

struct CatalogEntry {
  std::string id;
  std::string alias;
  std::string title;
  Game game;
  // Probe grid per player for cross-checks against brute force.
  std::vector<std::vector<Strategy>> probes;
  // Finite sub-game of depth n, or null.
  std::function<Game(int)> truncation;
};

inline const std::vector<std::pair<std::string, std::string>>& catalog_ids() {
  static const std::vector<std::pair<std::string, std::string>> ids = {
      {"intro_open_interval", "intro"},
      {"ex1_unbounded_at_limit", "ex1"},
      {"ex2_order_indep_not_equal", "ex2"},
      {"ex3_not_all_bounded", "ex3"},
      {"ex4_apt_property_C", "ex4"},
      {"ex5_closure_star", "ex5"},
      {"gkz_omega_plus_one", "gkz"},
  };
  return ids;
}

inline std::string resolve_catalog_id(const std::string& id) {
  for (const auto& [full, alias] : catalog_ids()) {
    if (id == full || id == alias) return full;
  }
  throw UnknownEntry(id);
}

namespace catalog_detail {

inline std::vector<Strategy> seq_probes(const SequencePtr& s, int n) {
  std::vector<Strategy> out;
  for (int k = 0; k <= n; ++k) out.push_back(Strategy::number(s->at(k)));
  return out;
}

// Endpoints, midpoints and frac(k) for the unit interval.
inline std::vector<Strategy> unit_probes(bool with_ends, int n) {
  std::vector<Strategy> out;
  if (with_ends) out.push_back(num(0));
  for (auto v : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
    out.push_back(Strategy::number(v));
  }
  for (int k = 1; k <= n; ++k) {
    auto v = frac_sequence()->at(k);
    if (v != make_rational(1, 2) && v != make_rational(3, 4)) out.push_back(Strategy::number(v));
  }
  if (with_ends) out.push_back(num(1));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Strategy> atoms_of(std::initializer_list<const char*> labels) {
  std::vector<Strategy> out;
  for (const char* l : labels) out.push_back(Strategy::atom(l));
  return out;
}

inline std::vector<Strategy> concat(std::vector<Strategy> a, const std::vector<Strategy>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// A finite game on the given strategies with payoffs from an analytic oracle.
inline Game restrict_game(std::string source, const DominanceOracle& o,
                          std::vector<std::vector<Strategy>> strategies) {
  auto s = strategies;
  return make_finite_game(std::move(source), {"P1", "P2"}, std::move(strategies),
                          [&o, s](std::size_t i, const std::vector<std::size_t>& idx) {
                            Profile p;
                            for (std::size_t j = 0; j < idx.size(); ++j) p.push_back(s[j][idx[j]]);
                            return o.payoff(i, p);
                          });
}

inline Game make_game(std::string id, std::vector<SymbolicSet> spaces,
                      std::vector<std::vector<Strategy>> order,
                      std::shared_ptr<const DominanceOracle> o) {
  return Game(std::move(id), {"P1", "P2"}, std::move(spaces), std::move(order), std::move(o));
}

}  // namespace catalog_detail

// One-player identity game on [0,1] with a dummy opponent.
inline Game unit_interval_identity_game() {
  auto space = SymbolicSet::interval(0, 1, true, true);
  return catalog_detail::make_game("unit_interval_identity",
                                   {space, SymbolicSet::atoms({"*"})}, {{}, {Strategy::atom("*")}},
                                   std::make_shared<IdentityOracle>("unit_interval_identity", space));
}

inline CatalogEntry instantiate(const std::string& name) {
  using namespace catalog_detail;
  const std::string id = resolve_catalog_id(name);
  CatalogEntry e;
  e.id = id;
  for (const auto& [full, alias] : catalog_ids()) {
    if (full == id) e.alias = alias;
  }
  const auto star = atoms_of({"*"});

  if (id == "intro_open_interval" || id == "gkz_omega_plus_one") {
    auto space = SymbolicSet::interval(0, 1, false, false);
    auto o = std::make_shared<IdentityOracle>(id, space);
    e.title = id == "intro_open_interval" ? "identity payoff on (0,1)"
                                          : "identity payoff on (0,1), GKZ chain of length ω+1";
    e.game = make_game(id, {space, SymbolicSet::atoms({"*"})}, {{}, star}, o);
    e.probes = {unit_probes(false, 12), star};
    e.truncation = [o, id](int n) {
      auto grid = seq_probes(frac_sequence(), n);
      grid.erase(grid.begin());
      return restrict_game(id + "@" + std::to_string(n), *o, {grid, atoms_of({"*"})});
    };
  } else if (id == "ex1_unbounded_at_limit" || id == "ex3_not_all_bounded") {
    const bool ex1 = id == "ex1_unbounded_at_limit";
    auto o = std::make_shared<Ex1Oracle>(ex1);
    std::vector<Strategy> p2;
    for (const auto& l : o->labels()) p2.push_back(Strategy::atom(l));
    e.title = ex1 ? "unit interval against Left/Center/Right" : "unit interval against Left/Right, no dominance";
    std::vector<std::string> labels = o->labels();
    e.game = make_game(id, {Ex1Oracle::space0(), SymbolicSet::atoms(labels)}, {{}, p2}, o);
    e.probes = {unit_probes(true, 12), p2};
    e.truncation = [o, id, p2](int n) {
      return restrict_game(id + "@" + std::to_string(n), *o, {unit_probes(true, n), p2});
    };
  } else if (id == "ex2_order_indep_not_equal") {
    auto o = std::make_shared<Ex2Oracle>();
    e.title = "min payoff on interleaved grids plus 1";
    e.game = make_game(id, {Ex2Oracle::space(0), Ex2Oracle::space(1)}, {}, o);
    e.probes = {concat(seq_probes(even_sequence(), 12), {num(1)}),
                concat(seq_probes(odd_sequence(), 12), {num(1)})};
    e.truncation = [o, id](int n) {
      return restrict_game(id + "@" + std::to_string(n), *o,
                           {concat(seq_probes(even_sequence(), n - 1), {num(1)}),
                            concat(seq_probes(odd_sequence(), n - 1), {num(1)})});
    };
  } else if (id == "ex4_apt_property_C") {
    auto o = std::make_shared<Ex4Oracle>();
    auto lr = atoms_of({"Left", "Right"});
    e.title = "min payoff with Left/Right atoms";
    e.game = make_game(id, {Ex4Oracle::space(0), Ex4Oracle::space(1)}, {lr, lr}, o);
    e.probes = {concat(lr, seq_probes(even_sequence(), 12)), concat(lr, seq_probes(odd_sequence(), 12))};
    e.truncation = [o, id, lr](int n) {
      return restrict_game(id + "@" + std::to_string(n), *o,
                           {concat(lr, seq_probes(even_sequence(), n - 1)),
                            concat(lr, seq_probes(odd_sequence(), n - 1))});
    };
  } else {
    auto o = std::make_shared<Ex5Oracle>();
    e.title = "min payoff with a sink strategy -1";
    e.game = make_game(id, {Ex5Oracle::space(0), Ex5Oracle::space(1)}, {}, o);
    e.probes = {concat({num(-1)}, seq_probes(even_sequence(), 12)),
                concat(seq_probes(odd_sequence(), 12), {num(1)})};
    e.truncation = [o, id](int n) {
      return restrict_game(id + "@" + std::to_string(n), *o,
                           {concat({num(-1)}, seq_probes(even_sequence(), n - 1)),
                            concat(seq_probes(odd_sequence(), n - 1), {num(1)})});
    };
  }
  return e;
}

// A set of maximal reductions: explicit members, or a predicate for an
// uncountable family.
struct ReductionFamily {
  std::vector<Reduction> members;
  std::string schema;
  std::function<bool(const Reduction&)> contains;
  // False when the members are known maximal but the list may be partial.
  bool exhaustive = true;
};

inline ReductionFamily catalog_maximal_set(const std::string& name, Mode mode) {
  using namespace catalog_detail;
  const std::string id = resolve_catalog_id(name);
  auto e = instantiate(id);
  ReductionFamily f;
  auto listed = [&f](std::vector<Reduction> rs) {
    f.members = std::move(rs);
    std::string s = "{";
    for (std::size_t k = 0; k < f.members.size(); ++k) {
      s += (k ? ", " : "") + f.members[k].to_string();
    }
    f.schema = s + "}";
    auto members = f.members;
    f.contains = [members](const Reduction& r) {
      return std::find(members.begin(), members.end(), r) != members.end();
    };
  };
  const auto empty = Reduction::empty(2);
  const auto one = point(1);
  if (id == "intro_open_interval" || id == "gkz_omega_plus_one") {
    if (mode == Mode::kUniversal) {
      listed({empty});
      return f;
    }
    f.members = {empty};
    f.schema = "{∅} ∪ {{a}×{*} : a ∈ (0,1)}";
    f.contains = [](const Reduction& r) {
      if (r.is_empty()) return true;
      auto e = r[0].finite_elements();
      if (!e || e->size() != 1 || !e->front().is_number()) return false;
      const auto& a = e->front().value();
      return a > 0 && a < 1 && r[1] == SymbolicSet::atoms({"*"});
    };
    return f;
  }
  if (id == "ex1_unbounded_at_limit") {
    listed({Reduction({one, SymbolicSet::atoms({"Left"})})});
  } else if (id == "ex2_order_indep_not_equal") {
    listed({mode == Mode::kUniversal ? empty : Reduction({one, one})});
  } else if (id == "ex3_not_all_bounded") {
    listed({e.game.full()});
  } else if (id == "ex4_apt_property_C") {
    auto lr = SymbolicSet::atoms({"Left", "Right"});
    listed({Reduction({lr, lr})});
  } else {
    if (mode == Mode::kUniversal) {
      listed({empty});
    } else {
      listed({empty, Reduction({point(-1), one})});
      f.exhaustive = false;
    }
  }
  return f;
}

}  // namespace domlab

#endif  // DOMLAB_CATALOG_HPP_
