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

#ifndef DOMLAB_SYMBOLIC_SET_HPP_
#define DOMLAB_SYMBOLIC_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "domlab/error.hpp"
#include "domlab/rational.hpp"
#include "domlab/sequence.hpp"

// Exact set algebra over the strategy spaces that occur in the catalog:
// labelled atoms, rational points, rational intervals and infinite tails of
// monotone affine-rational sequences. Every SymbolicSet is kept in a
// canonical normal form. Structural equality is extensional equality except
// when several tails jointly fill another sequence (even and odd versus frac).

namespace domlab {

// A single strategy: either an atom label or an exact rational.
class Strategy {
 public:
  Strategy() : v_(std::string()) {}
  static Strategy atom(std::string label) { return Strategy(std::move(label)); }
  static Strategy number(Rational q) { return Strategy(std::move(q)); }

  bool is_atom() const { return std::holds_alternative<std::string>(v_); }
  bool is_number() const { return !is_atom(); }
  const std::string& label() const { return std::get<std::string>(v_); }
  const Rational& value() const { return std::get<Rational>(v_); }

  std::string to_string() const {
    return is_atom() ? label() : domlab::to_string(value());
  }

  friend bool operator==(const Strategy& x, const Strategy& y) {
    if (x.is_atom() != y.is_atom()) return false;
    return x.is_atom() ? x.label() == y.label() : x.value() == y.value();
  }
  friend bool operator!=(const Strategy& x, const Strategy& y) { return !(x == y); }
  // Atoms sort before numbers.
  friend bool operator<(const Strategy& x, const Strategy& y) {
    if (x.is_atom() != y.is_atom()) return x.is_atom();
    return x.is_atom() ? x.label() < y.label() : x.value() < y.value();
  }

 private:
  explicit Strategy(std::string s) : v_(std::move(s)) {}
  explicit Strategy(Rational q) : v_(std::move(q)) {}
  std::variant<std::string, Rational> v_;
};

struct Atom {
  std::string label;
  bool operator==(const Atom& o) const { return label == o.label; }
};

struct Point {
  Rational value;
  bool operator==(const Point& o) const { return value == o.value; }
};

struct Interval {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool degenerate() const { return lo == hi && lo_closed && hi_closed; }
  bool contains(const Rational& x) const {
    bool above = lo_closed ? x >= lo : x > lo;
    bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
  }
  std::optional<Cut> lower_cut() const { return Cut{lo, lo_closed}; }
  std::optional<Cut> upper_cut() const { return Cut{hi, hi_closed}; }
  bool operator==(const Interval& o) const {
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed &&
           hi_closed == o.hi_closed;
  }
};

// {seq(k) : k >= start}
struct TailFamily {
  SequencePtr seq;
  std::int64_t start = 0;

  Rational first() const { return seq->at(start); }
  bool operator==(const TailFamily& o) const {
    return seq->id() == o.seq->id() && start == o.start;
  }
};

using SetPrimitive = std::variant<Atom, Point, Interval, TailFamily>;

inline std::string primitive_to_string(const SetPrimitive& p) {
  if (auto* a = std::get_if<Atom>(&p)) return "{" + a->label + "}";
  if (auto* q = std::get_if<Point>(&p)) return "{" + to_string(q->value) + "}";
  if (auto* i = std::get_if<Interval>(&p)) {
    return std::string(i->lo_closed ? "[" : "(") + to_string(i->lo) + "," +
           to_string(i->hi) + (i->hi_closed ? "]" : ")");
  }
  const auto& t = std::get<TailFamily>(p);
  return "tail(" + t.seq->id() + "," + std::to_string(t.start) + ")";
}

namespace detail {

// Upper bound on points materialized while splitting tails.
inline constexpr std::int64_t kMaxMaterializedPoints = 1 << 16;

inline bool tail_contains(const TailFamily& t, const Rational& x) {
  return t.seq->index_of(x, t.start).has_value();
}

// Indices of t inside the interval.
inline IndexRange tail_indices_in(const TailFamily& t, const Interval& iv) {
  return indices_between(*t.seq, t.start, iv.lower_cut(), iv.upper_cut());
}

// Removes sorted, clipped index ranges from a tail. The remainder is a finite
// run of points plus, unless some range is unbounded, a shorter tail.
inline void split_tail(const TailFamily& t, std::vector<IndexRange> removed,
                       std::vector<Rational>& points_out,
                       std::optional<TailFamily>& tail_out) {
  std::sort(removed.begin(), removed.end(),
            [](const IndexRange& x, const IndexRange& y) { return x.first < y.first; });
  std::int64_t cursor = t.start;
  tail_out.reset();
  for (const auto& r : removed) {
    if (r.empty()) continue;
    if (r.last && *r.last <= cursor) continue;
    if (r.first > cursor) {
      if (r.first - cursor > kMaxMaterializedPoints) {
        throw UnsupportedCombination("tail split materializes too many points");
      }
      for (std::int64_t k = cursor; k < r.first; ++k) points_out.push_back(t.seq->at(k));
    }
    if (!r.last) return;
    cursor = std::max(cursor, *r.last);
  }
  tail_out = TailFamily{t.seq, cursor};
}

inline Integer exact_div(const Integer& x, const Integer& y) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& x) {
  return d != 0 && mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Index pairs (k, j), k >= start1, j >= start2, with s1(k) == s2(j). Throws
// UnsupportedCombination when the overlap is infinite or too large to decide.
inline std::vector<std::pair<std::int64_t, std::int64_t>> overlap_indices(
    const RationalSequence& s1, std::int64_t start1,
    const RationalSequence& s2, std::int64_t start2) {
  start1 = std::max(start1, s1.domain_start());
  start2 = std::max(start2, s2.domain_start());
  // Cross-multiplying s1(k) == s2(j) gives A*k*j + B*k + C*j + D == 0.
  const Integer A = s1.a() * s2.c() - s2.a() * s1.c();
  const Integer B = s1.a() * s2.d() - s2.b() * s1.c();
  const Integer C = s1.b() * s2.c() - s2.a() * s1.d();
  const Integer D = s1.b() * s2.d() - s2.b() * s1.d();

  std::set<std::pair<std::int64_t, std::int64_t>> found;
  auto try_k = [&](const Integer& k) {
    if (k < start1 || !k.fits_slong_p()) return;
    auto kk = static_cast<std::int64_t>(k.get_si());
    if (auto j = s2.index_of(s1.at(kk), start2)) found.emplace(kk, *j);
  };
  auto try_j = [&](const Integer& j) {
    if (j < start2 || !j.fits_slong_p()) return;
    auto jj = static_cast<std::int64_t>(j.get_si());
    if (auto k = s1.index_of(s2.at(jj), start1)) found.emplace(*k, jj);
  };
  const Integer limit("1000000000000");

  if (A != 0) {
    // (A*k + C) * (A*j + B) == B*C - A*D
    const Integer N = B * C - A * D;
    if (N != 0) {
      Integer n = abs(N);
      if (n > limit) throw UnsupportedCombination("overlap equation too large");
      for (Integer e = 1; e * e <= n; ++e) {
        if (!divides(e, n)) continue;
        for (const Integer& f : {e, Integer(exact_div(n, e))}) {
          for (int sign : {1, -1}) {
            Integer lhs = f * sign;
            Integer rhs = exact_div(N, lhs);
            if (divides(A, lhs - C)) try_k(exact_div(lhs - C, A));
            if (divides(A, rhs - B)) try_j(exact_div(rhs - B, A));
          }
        }
      }
    } else {
      if (divides(A, -C)) try_k(exact_div(-C, A));
      if (divides(A, -B)) try_j(exact_div(-B, A));
    }
  } else if (B == 0 && C != 0) {
    if (divides(C, -D)) try_j(exact_div(-D, C));
  } else if (C == 0 && B != 0) {
    if (divides(B, -D)) try_k(exact_div(-D, B));
  } else if (B != 0 && C != 0) {
    // B*k + C*j == -D: a lattice line. Both indices grow together when
    // B*C < 0, which gives infinitely many common values.
    Integer g;
    mpz_gcd(g.get_mpz_t(), B.get_mpz_t(), C.get_mpz_t());
    if (divides(g, D)) {
      if (B * C < 0) {
        throw UnsupportedCombination("sequences '" + s1.id() + "' and '" + s2.id() +
                                     "' share infinitely many values");
      }
      // k decreases as j grows; walk j until k drops below start1.
      for (std::int64_t j = start2, steps = 0;; ++j, ++steps) {
        if (steps > kMaxMaterializedPoints) {
          throw UnsupportedCombination("overlap enumeration too long");
        }
        Integer num = -D - C * Integer(static_cast<long>(j));
        Rational k(num, B);
        k.canonicalize();
        if (k < start1) break;
        if (is_integer(k)) try_k(k.get_num());
      }
    }
  }
  return {found.begin(), found.end()};
}

// Smallest k0 >= start1 with s1(k) in tail(s2, start2) for every k >= k0,
// when s1 is eventually a subsequence of s2 hitting consecutive indices.
inline std::optional<std::int64_t> covered_from(const RationalSequence& s1,
                                                std::int64_t start1,
                                                const RationalSequence& s2,
                                                std::int64_t start2) {
  start1 = std::max(start1, s1.domain_start());
  start2 = std::max(start2, s2.domain_start());
  const Integer A = s1.a() * s2.c() - s2.a() * s1.c();
  const Integer B = s1.a() * s2.d() - s2.b() * s1.c();
  const Integer C = s1.b() * s2.c() - s2.a() * s1.d();
  const Integer D = s1.b() * s2.d() - s2.b() * s1.d();
  if (A != 0 || B == 0 || C == 0 || B * C > 0) return std::nullopt;
  // j(k) = (-D - B*k) / C must be an integer for every k.
  if (!divides(C, B) || !divides(C, D)) return std::nullopt;
  Rational kmin = Rational(-D - C * Integer(static_cast<long>(start2)), B);
  kmin.canonicalize();
  Integer k0 = B * C < 0 ? Integer(ceil_of(kmin)) : Integer(start1);
  if (k0 < start1) k0 = start1;
  std::int64_t k = to_index(k0);
  for (int guard = 0; guard < 4; ++guard, ++k) {
    Integer j = exact_div(-D - B * Integer(static_cast<long>(k)), C);
    if (j >= start2 && s1.at(k) == s2.at(to_index(j))) return k;
  }
  return std::nullopt;
}

// Indices k in [from, to) with s1(k) in tail(s2, start2), checked one by one.
inline std::vector<std::int64_t> members_between(const RationalSequence& s1,
                                                 std::int64_t from, std::int64_t to,
                                                 const RationalSequence& s2,
                                                 std::int64_t start2) {
  if (to - from > kMaxMaterializedPoints) {
    throw UnsupportedCombination("prefix check too long");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t k = from; k < to; ++k) {
    if (s2.index_of(s1.at(k), start2)) out.push_back(k);
  }
  return out;
}

// Indices of tail t that also lie in tail u, as ranges.
inline std::vector<IndexRange> shared_ranges(const TailFamily& t, const TailFamily& u) {
  std::vector<IndexRange> out;
  if (t.seq->id() == u.seq->id()) {
    out.push_back({std::max(t.start, u.start), std::nullopt});
    return out;
  }
  if (auto k0 = covered_from(*t.seq, t.start, *u.seq, u.start)) {
    for (auto k : members_between(*t.seq, t.start, *k0, *u.seq, u.start)) {
      out.push_back({k, k + 1});
    }
    out.push_back({*k0, std::nullopt});
    return out;
  }
  if (auto j0 = covered_from(*u.seq, u.start, *t.seq, t.start)) {
    // u eventually inside t but not the other way: infinitely many shared
    // values that are not a tail of t.
    (void)j0;
    throw UnsupportedCombination("sequences '" + t.seq->id() + "' and '" + u.seq->id() +
                                 "' share infinitely many values");
  }
  for (const auto& [k, j] : overlap_indices(*t.seq, t.start, *u.seq, u.start)) {
    out.push_back({k, k + 1});
  }
  return out;
}

struct Segment {
  Rational lo, hi;
  bool lo_closed, hi_closed;
};

inline std::vector<Segment> merge_segments(std::vector<Segment> segs) {
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.lo_closed && !y.lo_closed;
  });
  std::vector<Segment> out;
  for (auto& s : segs) {
    if (!out.empty()) {
      Segment& cur = out.back();
      bool touches = s.lo < cur.hi ||
                     (s.lo == cur.hi && (cur.hi_closed || s.lo_closed));
      if (touches) {
        if (s.hi > cur.hi) {
          cur.hi = s.hi;
          cur.hi_closed = s.hi_closed;
        } else if (s.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || s.hi_closed;
        }
        continue;
      }
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

class SymbolicSet;
SymbolicSet normalize(std::vector<SetPrimitive> prims);

class SymbolicSet {
 public:
  SymbolicSet() = default;

  static SymbolicSet of(std::vector<SetPrimitive> prims) {
    return normalize(std::move(prims));
  }
  static SymbolicSet atoms(const std::vector<std::string>& labels) {
    std::vector<SetPrimitive> p;
    for (const auto& l : labels) p.push_back(Atom{l});
    return of(std::move(p));
  }
  static SymbolicSet points(const std::vector<Rational>& values) {
    std::vector<SetPrimitive> p;
    for (const auto& v : values) p.push_back(Point{v});
    return of(std::move(p));
  }
  static SymbolicSet interval(Rational lo, Rational hi, bool lo_closed,
                              bool hi_closed) {
    return of({Interval{std::move(lo), std::move(hi), lo_closed, hi_closed}});
  }
  static SymbolicSet tail(SequencePtr seq, std::int64_t start) {
    return of({TailFamily{std::move(seq), start}});
  }
  static SymbolicSet singleton(const Strategy& s) {
    if (s.is_atom()) return of({Atom{s.label()}});
    return of({Point{s.value()}});
  }

  const std::vector<SetPrimitive>& primitives() const { return prims_; }
  bool empty() const { return prims_.empty(); }

  bool contains(const Strategy& x) const {
    for (const auto& p : prims_) {
      if (x.is_atom()) {
        if (auto* a = std::get_if<Atom>(&p); a && a->label == x.label()) return true;
        continue;
      }
      const Rational& v = x.value();
      if (auto* q = std::get_if<Point>(&p)) {
        if (q->value == v) return true;
      } else if (auto* i = std::get_if<Interval>(&p)) {
        if (i->contains(v)) return true;
      } else if (auto* t = std::get_if<TailFamily>(&p)) {
        if (detail::tail_contains(*t, v)) return true;
      }
    }
    return false;
  }

  // Finite element list, or nullopt when an interval or tail is present.
  std::optional<std::vector<Strategy>> finite_elements() const {
    std::vector<Strategy> out;
    for (const auto& p : prims_) {
      if (auto* a = std::get_if<Atom>(&p)) {
        out.push_back(Strategy::atom(a->label));
      } else if (auto* q = std::get_if<Point>(&p)) {
        out.push_back(Strategy::number(q->value));
      } else {
        return std::nullopt;
      }
    }
    return out;
  }

  bool has_numeric() const {
    for (const auto& p : prims_) {
      if (!std::holds_alternative<Atom>(p)) return true;
    }
    return false;
  }

  std::string to_string() const {
    if (prims_.empty()) return "∅";
    std::ostringstream os;
    // Atoms and points are grouped into brace lists for readability.
    std::vector<std::string> singles;
    std::vector<std::string> parts;
    auto flush = [&]() {
      if (singles.empty()) return;
      std::string s = "{";
      for (std::size_t i = 0; i < singles.size(); ++i) {
        if (i) s += ", ";
        s += singles[i];
      }
      parts.push_back(s + "}");
      singles.clear();
    };
    for (const auto& p : prims_) {
      if (auto* a = std::get_if<Atom>(&p)) {
        singles.push_back(a->label);
      } else if (auto* q = std::get_if<Point>(&p)) {
        singles.push_back(domlab::to_string(q->value));
      } else {
        flush();
        parts.push_back(primitive_to_string(p));
      }
    }
    flush();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << " ∪ ";
      os << parts[i];
    }
    return os.str();
  }

  friend bool operator==(const SymbolicSet& x, const SymbolicSet& y) {
    return x.prims_ == y.prims_;
  }
  friend bool operator!=(const SymbolicSet& x, const SymbolicSet& y) { return !(x == y); }

 private:
  friend SymbolicSet normalize(std::vector<SetPrimitive> prims);
  std::vector<SetPrimitive> prims_;
};

// Canonical form: atoms sorted; intervals maximal and disjoint; points outside
// intervals; tails disjoint from intervals, points and each other, each tail
// extended downward over any explicit points that continue it.
inline SymbolicSet normalize(std::vector<SetPrimitive> prims) {
  std::set<std::string> atoms;
  std::vector<detail::Segment> segs;
  std::map<std::string, TailFamily> tails;

  for (auto& p : prims) {
    if (auto* a = std::get_if<Atom>(&p)) {
      atoms.insert(a->label);
    } else if (auto* q = std::get_if<Point>(&p)) {
      segs.push_back({q->value, q->value, true, true});
    } else if (auto* i = std::get_if<Interval>(&p)) {
      if (i->lo > i->hi) {
        throw MalformedSet("interval with lo > hi: " + primitive_to_string(p));
      }
      if (i->empty()) continue;
      segs.push_back({i->lo, i->hi, i->lo_closed, i->hi_closed});
    } else {
      auto& t = std::get<TailFamily>(p);
      if (!t.seq) throw MalformedSet("tail family without sequence");
      if (t.start < t.seq->domain_start()) {
        throw MalformedSet("tail start below domain start of '" + t.seq->id() + "'");
      }
      auto it = tails.find(t.seq->id());
      if (it == tails.end()) {
        tails.emplace(t.seq->id(), t);
      } else {
        if (!it->second.seq->same_formula(*t.seq)) {
          throw MalformedSet("two sequences named '" + t.seq->id() + "'");
        }
        it->second.start = std::min(it->second.start, t.start);
      }
    }
  }

  std::vector<Interval> intervals;
  std::set<Rational> points;
  auto rebuild = [&](std::vector<detail::Segment> s) {
    intervals.clear();
    points.clear();
    for (auto& m : detail::merge_segments(std::move(s))) {
      if (m.lo == m.hi) {
        points.insert(m.lo);
      } else {
        intervals.push_back({m.lo, m.hi, m.lo_closed, m.hi_closed});
      }
    }
  };
  rebuild(segs);

  // Tails lose the indices that fall inside an interval. Newly exposed
  // points may close an open interval endpoint, so merge once more.
  auto absorb = [&]() {
    std::vector<Rational> fresh;
    std::map<std::string, TailFamily> kept;
    for (auto& [id, t] : tails) {
      std::vector<IndexRange> ranges;
      for (const auto& iv : intervals) ranges.push_back(detail::tail_indices_in(t, iv));
      std::optional<TailFamily> rest;
      detail::split_tail(t, ranges, fresh, rest);
      if (rest) kept.emplace(id, *rest);
    }
    tails = std::move(kept);
    return fresh;
  };
  for (int pass = 0; pass < 2; ++pass) {
    auto fresh = absorb();
    if (fresh.empty()) break;
    std::vector<detail::Segment> s;
    for (const auto& iv : intervals) s.push_back({iv.lo, iv.hi, iv.lo_closed, iv.hi_closed});
    for (const auto& q : points) s.push_back({q, q, true, true});
    for (const auto& q : fresh) s.push_back({q, q, true, true});
    rebuild(std::move(s));
  }

  // Distinct sequences: a tail that eventually covers another owns the shared
  // values, otherwise the smaller id does.
  std::vector<std::string> ids;
  for (const auto& [id, t] : tails) ids.push_back(id);
  for (std::size_t x = 0; x < ids.size(); ++x) {
    for (std::size_t y = x + 1; y < ids.size(); ++y) {
      auto itx = tails.find(ids[x]);
      auto ity = tails.find(ids[y]);
      if (itx == tails.end() || ity == tails.end()) continue;
      const TailFamily& tx = itx->second;
      const TailFamily& ty = ity->second;
      auto loser = ity;
      std::vector<IndexRange> ranges;
      if (detail::covered_from(*tx.seq, tx.start, *ty.seq, ty.start)) {
        loser = itx;
        ranges = detail::shared_ranges(tx, ty);
      } else {
        ranges = detail::shared_ranges(ty, tx);
      }
      if (ranges.empty()) continue;
      std::vector<Rational> fresh;
      std::optional<TailFamily> rest;
      detail::split_tail(loser->second, ranges, fresh, rest);
      if (rest) {
        loser->second = *rest;
      } else {
        tails.erase(loser);
      }
      for (auto& q : fresh) points.insert(q);
    }
  }

  // Points already covered by a tail are dropped; a point just below a
  // tail's start extends it.
  for (auto it = points.begin(); it != points.end();) {
    bool covered = false;
    for (const auto& [id, t] : tails) {
      if (detail::tail_contains(t, *it)) {
        covered = true;
        break;
      }
    }
    it = covered ? points.erase(it) : std::next(it);
  }
  for (auto& [id, t] : tails) {
    while (t.start > t.seq->domain_start()) {
      auto below = points.find(t.seq->at(t.start - 1));
      if (below == points.end()) break;
      points.erase(below);
      --t.start;
    }
  }

  SymbolicSet out;
  for (const auto& a : atoms) out.prims_.push_back(Atom{a});
  std::vector<SetPrimitive> numeric;
  std::size_t pi = 0;
  std::vector<Rational> pts(points.begin(), points.end());
  for (const auto& iv : intervals) {
    while (pi < pts.size() && pts[pi] < iv.lo) out.prims_.push_back(Point{pts[pi++]});
    out.prims_.push_back(iv);
  }
  while (pi < pts.size()) out.prims_.push_back(Point{pts[pi++]});
  for (const auto& [id, t] : tails) out.prims_.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Combination

enum class SetOp { kUnion, kIntersect, kDifference };

namespace detail {

inline std::optional<Interval> intersect_intervals(const Interval& x, const Interval& y) {
  Interval r;
  if (x.lo > y.lo) {
    r.lo = x.lo;
    r.lo_closed = x.lo_closed;
  } else if (y.lo > x.lo) {
    r.lo = y.lo;
    r.lo_closed = y.lo_closed;
  } else {
    r.lo = x.lo;
    r.lo_closed = x.lo_closed && y.lo_closed;
  }
  if (x.hi < y.hi) {
    r.hi = x.hi;
    r.hi_closed = x.hi_closed;
  } else if (y.hi < x.hi) {
    r.hi = y.hi;
    r.hi_closed = y.hi_closed;
  } else {
    r.hi = x.hi;
    r.hi_closed = x.hi_closed && y.hi_closed;
  }
  if (r.empty()) return std::nullopt;
  return r;
}

inline void emit_range(const TailFamily& t, const IndexRange& r,
                       std::vector<SetPrimitive>& out) {
  if (r.empty()) return;
  if (!r.last) {
    out.push_back(TailFamily{t.seq, r.first});
    return;
  }
  if (*r.last - r.first > kMaxMaterializedPoints) {
    throw UnsupportedCombination("range materializes too many points");
  }
  for (std::int64_t k = r.first; k < *r.last; ++k) out.push_back(Point{t.seq->at(k)});
}

inline bool numeric_contains(const SetPrimitive& p, const Rational& v) {
  if (auto* q = std::get_if<Point>(&p)) return q->value == v;
  if (auto* i = std::get_if<Interval>(&p)) return i->contains(v);
  if (auto* t = std::get_if<TailFamily>(&p)) return tail_contains(*t, v);
  return false;
}

inline std::vector<SetPrimitive> intersect_primitives(const SetPrimitive& p,
                                                      const SetPrimitive& q) {
  std::vector<SetPrimitive> out;
  const bool pa = std::holds_alternative<Atom>(p);
  const bool qa = std::holds_alternative<Atom>(q);
  if (pa || qa) {
    if (pa && qa && std::get<Atom>(p) == std::get<Atom>(q)) out.push_back(p);
    return out;
  }
  if (auto* x = std::get_if<Point>(&p)) {
    if (numeric_contains(q, x->value)) out.push_back(p);
    return out;
  }
  if (auto* y = std::get_if<Point>(&q)) {
    if (numeric_contains(p, y->value)) out.push_back(q);
    return out;
  }
  auto* pi = std::get_if<Interval>(&p);
  auto* qi = std::get_if<Interval>(&q);
  if (pi && qi) {
    if (auto r = intersect_intervals(*pi, *qi)) out.push_back(*r);
    return out;
  }
  if (pi || qi) {
    const Interval& iv = pi ? *pi : *qi;
    const TailFamily& t = pi ? std::get<TailFamily>(q) : std::get<TailFamily>(p);
    emit_range(t, tail_indices_in(t, iv), out);
    return out;
  }
  const auto& tp = std::get<TailFamily>(p);
  const auto& tq = std::get<TailFamily>(q);
  const bool flip = tp.seq->id() != tq.seq->id() &&
                    covered_from(*tq.seq, tq.start, *tp.seq, tp.start) &&
                    !covered_from(*tp.seq, tp.start, *tq.seq, tq.start);
  const TailFamily& base = flip ? tq : tp;
  const TailFamily& other = flip ? tp : tq;
  for (const auto& r : shared_ranges(base, other)) emit_range(base, r, out);
  return out;
}

// Interval minus a single rational.
inline void interval_minus_point(const Interval& iv, const Rational& v,
                                 std::vector<Interval>& out) {
  if (!iv.contains(v)) {
    out.push_back(iv);
    return;
  }
  Interval left{iv.lo, v, iv.lo_closed, false};
  Interval right{v, iv.hi, false, iv.hi_closed};
  if (!left.empty()) out.push_back(left);
  if (!right.empty()) out.push_back(right);
}

inline std::vector<SetPrimitive> subtract_primitive(const SetPrimitive& p,
                                                    const SetPrimitive& q) {
  std::vector<SetPrimitive> out;
  const bool pa = std::holds_alternative<Atom>(p);
  const bool qa = std::holds_alternative<Atom>(q);
  if (pa || qa) {
    if (!(pa && qa && std::get<Atom>(p) == std::get<Atom>(q))) out.push_back(p);
    return out;
  }
  if (auto* x = std::get_if<Point>(&p)) {
    if (!numeric_contains(q, x->value)) out.push_back(p);
    return out;
  }
  if (auto* iv = std::get_if<Interval>(&p)) {
    std::vector<Interval> pieces;
    if (auto* y = std::get_if<Point>(&q)) {
      interval_minus_point(*iv, y->value, pieces);
    } else if (auto* jv = std::get_if<Interval>(&q)) {
      auto common = intersect_intervals(*iv, *jv);
      if (!common) {
        pieces.push_back(*iv);
      } else {
        Interval left{iv->lo, common->lo, iv->lo_closed, !common->lo_closed};
        Interval right{common->hi, iv->hi, !common->hi_closed, iv->hi_closed};
        if (!left.empty()) pieces.push_back(left);
        if (!right.empty()) pieces.push_back(right);
      }
    } else {
      const auto& t = std::get<TailFamily>(q);
      IndexRange r = tail_indices_in(t, *iv);
      if (r.infinite()) {
        throw UnsupportedCombination("interval " + primitive_to_string(p) +
                                     " minus infinitely many points of " +
                                     primitive_to_string(q));
      }
      pieces.push_back(*iv);
      if (*r.last - r.first > kMaxMaterializedPoints) {
        throw UnsupportedCombination("interval minus too many points");
      }
      for (std::int64_t k = r.first; k < *r.last; ++k) {
        std::vector<Interval> next;
        for (const auto& piece : pieces) interval_minus_point(piece, t.seq->at(k), next);
        pieces = std::move(next);
      }
    }
    for (auto& piece : pieces) out.push_back(piece);
    return out;
  }
  const auto& t = std::get<TailFamily>(p);
  std::vector<IndexRange> removed;
  if (auto* y = std::get_if<Point>(&q)) {
    if (auto k = t.seq->index_of(y->value, t.start)) removed.push_back({*k, *k + 1});
  } else if (auto* jv = std::get_if<Interval>(&q)) {
    removed.push_back(tail_indices_in(t, *jv));
  } else {
    removed = shared_ranges(t, std::get<TailFamily>(q));
  }
  std::vector<Rational> pts;
  std::optional<TailFamily> rest;
  split_tail(t, removed, pts, rest);
  for (auto& v : pts) out.push_back(Point{v});
  if (rest) out.push_back(*rest);
  return out;
}

}  // namespace detail

inline SymbolicSet set_union(const SymbolicSet& s, const SymbolicSet& t) {
  std::vector<SetPrimitive> all = s.primitives();
  all.insert(all.end(), t.primitives().begin(), t.primitives().end());
  return SymbolicSet::of(std::move(all));
}

inline SymbolicSet set_intersect(const SymbolicSet& s, const SymbolicSet& t) {
  std::vector<SetPrimitive> all;
  for (const auto& p : s.primitives()) {
    for (const auto& q : t.primitives()) {
      auto part = detail::intersect_primitives(p, q);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  return SymbolicSet::of(std::move(all));
}

inline SymbolicSet set_difference(const SymbolicSet& s, const SymbolicSet& t) {
  std::vector<SetPrimitive> all;
  for (const auto& p : s.primitives()) {
    std::vector<SetPrimitive> pieces{p};
    for (const auto& q : t.primitives()) {
      std::vector<SetPrimitive> next;
      for (const auto& piece : pieces) {
        auto part = detail::subtract_primitive(piece, q);
        next.insert(next.end(), part.begin(), part.end());
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    all.insert(all.end(), pieces.begin(), pieces.end());
  }
  return SymbolicSet::of(std::move(all));
}

inline SymbolicSet set_combine(SetOp op, const SymbolicSet& s, const SymbolicSet& t) {
  switch (op) {
    case SetOp::kUnion: return set_union(s, t);
    case SetOp::kIntersect: return set_intersect(s, t);
    case SetOp::kDifference: return set_difference(s, t);
  }
  return {};
}

enum class SetRelation { kEqual, kSubset, kSuperset, kIncomparable };

struct Comparison {
  SetRelation relation;
  bool lhs_empty;
  bool rhs_empty;
};

inline bool is_subset(const SymbolicSet& s, const SymbolicSet& t) {
  return set_difference(s, t).empty();
}

// Proper subset/superset; kEqual when both inclusions hold.
inline Comparison set_compare(const SymbolicSet& s, const SymbolicSet& t) {
  bool sub = is_subset(s, t);
  bool sup = is_subset(t, s);
  SetRelation rel = sub && sup ? SetRelation::kEqual
                    : sub      ? SetRelation::kSubset
                    : sup      ? SetRelation::kSuperset
                               : SetRelation::kIncomparable;
  return {rel, s.empty(), t.empty()};
}

inline std::string to_string(SetRelation r) {
  switch (r) {
    case SetRelation::kEqual: return "equal";
    case SetRelation::kSubset: return "subset";
    case SetRelation::kSuperset: return "superset";
    case SetRelation::kIncomparable: return "incomparable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Order structure of the numeric part

// Supremum or infimum of the numeric part of a set.
struct Bound {
  enum class Kind { kFinite, kPlusInfinity, kMinusInfinity };
  Kind kind = Kind::kFinite;
  Rational value;
  bool attained = false;
};

namespace detail {

inline Bound primitive_sup(const SetPrimitive& p) {
  if (auto* q = std::get_if<Point>(&p)) return {Bound::Kind::kFinite, q->value, true};
  if (auto* i = std::get_if<Interval>(&p)) return {Bound::Kind::kFinite, i->hi, i->hi_closed};
  const auto& t = std::get<TailFamily>(p);
  if (!t.seq->increasing()) return {Bound::Kind::kFinite, t.first(), true};
  const auto& L = t.seq->limit();
  if (L.kind == SequenceLimit::Kind::kFinite) return {Bound::Kind::kFinite, L.value, false};
  return {Bound::Kind::kPlusInfinity, 0, false};
}

inline Bound primitive_inf(const SetPrimitive& p) {
  if (auto* q = std::get_if<Point>(&p)) return {Bound::Kind::kFinite, q->value, true};
  if (auto* i = std::get_if<Interval>(&p)) return {Bound::Kind::kFinite, i->lo, i->lo_closed};
  const auto& t = std::get<TailFamily>(p);
  if (t.seq->increasing()) return {Bound::Kind::kFinite, t.first(), true};
  const auto& L = t.seq->limit();
  if (L.kind == SequenceLimit::Kind::kFinite) return {Bound::Kind::kFinite, L.value, false};
  return {Bound::Kind::kMinusInfinity, 0, false};
}

}  // namespace detail

inline std::optional<Bound> supremum(const SymbolicSet& s) {
  std::optional<Bound> best;
  for (const auto& p : s.primitives()) {
    if (std::holds_alternative<Atom>(p)) continue;
    Bound b = detail::primitive_sup(p);
    if (!best || b.kind == Bound::Kind::kPlusInfinity) {
      best = b;
    } else if (best->kind == Bound::Kind::kFinite && b.kind == Bound::Kind::kFinite) {
      if (b.value > best->value) {
        best = b;
      } else if (b.value == best->value) {
        best->attained = best->attained || b.attained;
      }
    }
  }
  return best;
}

inline std::optional<Bound> infimum(const SymbolicSet& s) {
  std::optional<Bound> best;
  for (const auto& p : s.primitives()) {
    if (std::holds_alternative<Atom>(p)) continue;
    Bound b = detail::primitive_inf(p);
    if (!best || b.kind == Bound::Kind::kMinusInfinity) {
      best = b;
    } else if (best->kind == Bound::Kind::kFinite && b.kind == Bound::Kind::kFinite) {
      if (b.value < best->value) {
        best = b;
      } else if (b.value == best->value) {
        best->attained = best->attained || b.attained;
      }
    }
  }
  return best;
}

// Numeric elements x of s with lower <= x <= upper (cuts may be strict).
inline SymbolicSet restrict_numeric(const SymbolicSet& s, const std::optional<Cut>& lower,
                                    const std::optional<Cut>& upper) {
  std::vector<SetPrimitive> out;
  auto inside = [&](const Rational& v) {
    if (lower && !(lower->inclusive ? v >= lower->value : v > lower->value)) return false;
    if (upper && !(upper->inclusive ? v <= upper->value : v < upper->value)) return false;
    return true;
  };
  for (const auto& p : s.primitives()) {
    if (auto* q = std::get_if<Point>(&p)) {
      if (inside(q->value)) out.push_back(p);
    } else if (auto* i = std::get_if<Interval>(&p)) {
      Interval r = *i;
      if (lower && (lower->value > r.lo || (lower->value == r.lo && !lower->inclusive))) {
        r.lo = lower->value;
        r.lo_closed = lower->inclusive;
      }
      if (upper && (upper->value < r.hi || (upper->value == r.hi && !upper->inclusive))) {
        r.hi = upper->value;
        r.hi_closed = upper->inclusive;
      }
      if (r.lo <= r.hi && !r.empty()) out.push_back(r);
    } else if (auto* t = std::get_if<TailFamily>(&p)) {
      detail::emit_range(*t, indices_between(*t->seq, t->start, lower, upper), out);
    }
  }
  return SymbolicSet::of(std::move(out));
}

inline SymbolicSet strictly_below(const SymbolicSet& s, const Rational& v) {
  return restrict_numeric(s, std::nullopt, Cut{v, false});
}
inline SymbolicSet strictly_above(const SymbolicSet& s, const Rational& v) {
  return restrict_numeric(s, Cut{v, false}, std::nullopt);
}

// Elements below a supremum: {x in s : x < b} for finite b, all numeric
// elements for +inf, nothing for -inf.
inline SymbolicSet below_bound(const SymbolicSet& s, const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::kPlusInfinity: return restrict_numeric(s, std::nullopt, std::nullopt);
    case Bound::Kind::kMinusInfinity: return {};
    case Bound::Kind::kFinite: return strictly_below(s, b.value);
  }
  return {};
}

inline SymbolicSet atom_part(const SymbolicSet& s) {
  std::vector<SetPrimitive> out;
  for (const auto& p : s.primitives()) {
    if (std::holds_alternative<Atom>(p)) out.push_back(p);
  }
  return SymbolicSet::of(std::move(out));
}

inline SymbolicSet numeric_part(const SymbolicSet& s) {
  std::vector<SetPrimitive> out;
  for (const auto& p : s.primitives()) {
    if (!std::holds_alternative<Atom>(p)) out.push_back(p);
  }
  return SymbolicSet::of(std::move(out));
}

// Deterministic representative of a primitive.
inline Strategy representative(const SetPrimitive& p) {
  if (auto* a = std::get_if<Atom>(&p)) return Strategy::atom(a->label);
  if (auto* q = std::get_if<Point>(&p)) return Strategy::number(q->value);
  if (auto* i = std::get_if<Interval>(&p)) {
    if (i->lo_closed) return Strategy::number(i->lo);
    if (i->hi_closed) return Strategy::number(i->hi);
    return Strategy::number((i->lo + i->hi) / 2);
  }
  return Strategy::number(std::get<TailFamily>(p).first());
}

inline std::optional<Strategy> pick_element(const SymbolicSet& s) {
  if (s.empty()) return std::nullopt;
  return representative(s.primitives().front());
}

// Least numeric element, if the infimum is attained.
inline std::optional<Rational> least_number(const SymbolicSet& s) {
  auto inf = infimum(s);
  if (!inf || inf->kind != Bound::Kind::kFinite || !inf->attained) return std::nullopt;
  return inf->value;
}

inline SymbolicSet empty_set() { return {}; }

}  // namespace domlab

#endif  // DOMLAB_SYMBOLIC_SET_HPP_
