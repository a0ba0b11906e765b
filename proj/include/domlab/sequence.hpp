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


#ifndef DOMLAB_SEQUENCE_HPP_
#define DOMLAB_SEQUENCE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/error.hpp"
#include "domlab/rational.hpp"

namespace domlab {

enum class Monotonicity { kIncreasing, kDecreasing };

// Limit of a sequence; infinite limits arise only when c == 0.
struct SequenceLimit {
  enum class Kind { kFinite, kPlusInfinity, kMinusInfinity };
  Kind kind = Kind::kFinite;
  Rational value;

  bool operator==(const SequenceLimit& o) const {
    return kind == o.kind && (kind != Kind::kFinite || value == o.value);
  }
};

// Strict comparison against a value used to cut index ranges.
enum class Relation { kLess, kLessEqual, kGreater, kGreaterEqual };

inline bool holds(const Rational& x, Relation rel, const Rational& v) {
  switch (rel) {
    case Relation::kLess: return x < v;
    case Relation::kLessEqual: return x <= v;
    case Relation::kGreater: return x > v;
    case Relation::kGreaterEqual: return x >= v;
  }
  return false;
}

// k -> (a*k + b) / (c*k + d) for integer k >= domain_start. The denominator
// keeps one sign on the domain, so the map is strictly monotone there.
class RationalSequence {
 public:
  RationalSequence(std::string id, Integer a, Integer b, Integer c, Integer d,
                   std::int64_t domain_start)
      : id_(std::move(id)),
        a_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)),
        d_(std::move(d)),
        domain_start_(domain_start) {
    if (id_.empty()) throw MalformedSet("sequence id must be non-empty");
    Integer den0 = c_ * domain_start_ + d_;
    if (c_ == 0 && d_ == 0) throw MalformedSet(id_ + ": zero denominator");
    if (den0 == 0 || (c_ > 0 && den0 < 0) || (c_ < 0 && den0 > 0)) {
      throw MalformedSet(id_ + ": denominator vanishes or changes sign on the domain");
    }
    Integer det = a_ * d_ - b_ * c_;
    if (det == 0) throw MalformedSet(id_ + ": constant sequence");
    // sign(d/dk) = sign(det) * sign(den)^2 = sign(det)
    monotonicity_ = det > 0 ? Monotonicity::kIncreasing : Monotonicity::kDecreasing;
    if (c_ != 0) {
      limit_.kind = SequenceLimit::Kind::kFinite;
      limit_.value = make_rational(a_, c_);
    } else {
      bool up = (a_ > 0) == (d_ > 0);
      limit_.kind = up ? SequenceLimit::Kind::kPlusInfinity
                       : SequenceLimit::Kind::kMinusInfinity;
    }
  }

  const std::string& id() const { return id_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  std::int64_t domain_start() const { return domain_start_; }
  Monotonicity monotonicity() const { return monotonicity_; }
  bool increasing() const { return monotonicity_ == Monotonicity::kIncreasing; }
  const SequenceLimit& limit() const { return limit_; }

  Rational at(std::int64_t k) const {
    if (k < domain_start_) {
      throw MalformedSet(id_ + ": index " + std::to_string(k) + " below domain start");
    }
    Integer kk(static_cast<long>(k));
    return make_rational(a_ * kk + b_, c_ * kk + d_);
  }

  // Real solution k* of at(k*) == v, if any.
  std::optional<Rational> solve(const Rational& v) const {
    Rational denom = Rational(a_) - v * Rational(c_);
    if (denom == 0) return std::nullopt;
    Rational k = (v * Rational(d_) - Rational(b_)) / denom;
    k.canonicalize();
    return k;
  }

  // Index k >= from with at(k) == v.
  std::optional<std::int64_t> index_of(const Rational& v,
                                       std::int64_t from) const {
    auto k = solve(v);
    if (!k || !is_integer(*k)) return std::nullopt;
    Integer z = k->get_num();
    if (z < std::max(from, domain_start_)) return std::nullopt;
    if (!z.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
  }

  // Whether at(k) rel v holds for all sufficiently large k.
  bool eventually(Relation rel, const Rational& v) const {
    const bool up = increasing();
    if (limit_.kind == SequenceLimit::Kind::kPlusInfinity) {
      return rel == Relation::kGreater || rel == Relation::kGreaterEqual;
    }
    if (limit_.kind == SequenceLimit::Kind::kMinusInfinity) {
      return rel == Relation::kLess || rel == Relation::kLessEqual;
    }
    const Rational& L = limit_.value;
    // The limit itself is never attained.
    switch (rel) {
      case Relation::kGreater:
      case Relation::kGreaterEqual:
        return up ? L > v : L >= v;
      case Relation::kLess:
      case Relation::kLessEqual:
        return up ? L <= v : L < v;
    }
    return false;
  }

  // Smallest k >= from with at(k) rel v, where the predicate is eventually
  // true and monotone in k (an up-set). nullopt if it never holds.
  std::optional<std::int64_t> first_index(Relation rel, const Rational& v,
                                          std::int64_t from) const {
    from = std::max(from, domain_start_);
    if (holds(at(from), rel, v)) return from;
    if (!eventually(rel, v)) return std::nullopt;
    auto ks = solve(v);
    std::int64_t cand = from;
    if (ks) {
      Integer c = ceil_of(*ks);
      if (c > from && c.fits_slong_p()) cand = static_cast<std::int64_t>(c.get_si());
    }
    while (cand > from && holds(at(cand - 1), rel, v)) --cand;
    for (int guard = 0; !holds(at(cand), rel, v); ++guard) {
      if (guard > 8) throw MalformedSet(id_ + ": index search did not converge");
      ++cand;
    }
    return cand;
  }

  bool same_formula(const RationalSequence& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_ &&
           domain_start_ == o.domain_start_;
  }

 private:
  std::string id_;
  Integer a_, b_, c_, d_;
  std::int64_t domain_start_;
  Monotonicity monotonicity_;
  SequenceLimit limit_;
};

using SequencePtr = std::shared_ptr<const RationalSequence>;

// Indices [first, last) of a sequence; `last` absent means unbounded.
struct IndexRange {
  std::int64_t first = 0;
  std::optional<std::int64_t> last;

  bool empty() const { return last && *last <= first; }
  bool infinite() const { return !last.has_value(); }
};

// Indices k >= from with lower-cut and upper-cut on at(k). A missing cut is
// unbounded on that side.
struct Cut {
  Rational value;
  bool inclusive = true;
};

inline IndexRange indices_between(const RationalSequence& s, std::int64_t from,
                                  const std::optional<Cut>& lower,
                                  const std::optional<Cut>& upper) {
  from = std::max(from, s.domain_start());
  auto lower_rel = [](const Cut& c) {
    return c.inclusive ? Relation::kGreaterEqual : Relation::kGreater;
  };
  auto upper_rel = [](const Cut& c) {
    return c.inclusive ? Relation::kLessEqual : Relation::kLess;
  };
  auto negate = [](Relation r) {
    switch (r) {
      case Relation::kLess: return Relation::kGreaterEqual;
      case Relation::kLessEqual: return Relation::kGreater;
      case Relation::kGreater: return Relation::kLessEqual;
      case Relation::kGreaterEqual: return Relation::kLess;
    }
    return r;
  };
  // For an increasing sequence the lower cut is an up-set in k and the upper
  // cut a down-set; a decreasing sequence swaps the roles.
  std::optional<Cut> up_cut = s.increasing() ? lower : upper;
  std::optional<Cut> down_cut = s.increasing() ? upper : lower;
  auto up_rel = [&](const Cut& c) {
    return s.increasing() ? lower_rel(c) : upper_rel(c);
  };
  auto down_rel = [&](const Cut& c) {
    return s.increasing() ? upper_rel(c) : lower_rel(c);
  };

  IndexRange r;
  if (up_cut) {
    auto f = s.first_index(up_rel(*up_cut), up_cut->value, from);
    if (!f) return IndexRange{from, from};
    r.first = *f;
  } else {
    r.first = from;
  }
  if (down_cut) {
    // The down-set ends where its negation (an up-set) starts.
    auto e = s.first_index(negate(down_rel(*down_cut)), down_cut->value, from);
    if (e) r.last = std::max(*e, r.first);
  }
  return r;
}

// Named sequences available to set construction and JSON decoding.
class SequenceRegistry {
 public:
  SequenceRegistry() = default;

  SequencePtr add(RationalSequence seq) {
    auto it = by_id_.find(seq.id());
    if (it != by_id_.end()) {
      if (!it->second->same_formula(seq)) {
        throw MalformedSet("conflicting definitions for sequence '" + seq.id() + "'");
      }
      return it->second;
    }
    auto ptr = std::make_shared<const RationalSequence>(std::move(seq));
    by_id_.emplace(ptr->id(), ptr);
    return ptr;
  }

  SequencePtr get(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw MalformedSet("unknown sequence id '" + id + "'");
    return it->second;
  }

  bool has(const std::string& id) const { return by_id_.count(id) > 0; }

  Rational value(const std::string& id, std::int64_t k) const {
    return get(id)->at(k);
  }

  std::vector<SequencePtr> all() const {
    std::vector<SequencePtr> out;
    for (const auto& [id, p] : by_id_) out.push_back(p);
    return out;
  }

 private:
  std::map<std::string, SequencePtr> by_id_;
};

// Sequences used by the worked examples.
inline SequencePtr even_sequence() {
  static const auto s = std::make_shared<const RationalSequence>("even", 2, 0, 2, 1, 0);
  return s;
}
inline SequencePtr odd_sequence() {
  static const auto s = std::make_shared<const RationalSequence>("odd", 2, 1, 2, 2, 0);
  return s;
}
inline SequencePtr frac_sequence() {
  static const auto s = std::make_shared<const RationalSequence>("frac", 1, 0, 1, 1, 0);
  return s;
}

inline SequenceRegistry standard_registry() {
  SequenceRegistry r;
  r.add(*even_sequence());
  r.add(*odd_sequence());
  r.add(*frac_sequence());
  return r;
}

}  // namespace domlab

#endif  // DOMLAB_SEQUENCE_HPP_
