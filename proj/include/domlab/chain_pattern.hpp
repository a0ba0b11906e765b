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

#ifndef DOMLAB_CHAIN_PATTERN_HPP_
#define DOMLAB_CHAIN_PATTERN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domlab/game.hpp"
#include "domlab/sequence.hpp"
#include "domlab/symbolic_set.hpp"

// Affine templates for shrinking chains of reductions. A chain whose shape is
// fixed and whose tail starts and interval endpoints move affinely in a step
// variable t can be intersected exactly.

namespace domlab {

enum class Certificate { kWindowOnly, kInductive };

inline std::string to_string(Certificate c) {
  return c == Certificate::kInductive ? "inductive" : "window-only";
}

struct AffineIndex {
  std::int64_t m = 0;
  std::int64_t c = 0;
  std::int64_t at(std::int64_t t) const { return m + c * t; }
  bool operator==(const AffineIndex&) const = default;
};

// An interval endpoint: a constant, or seq(m + c t).
struct Endpoint {
  Rational value;
  SequencePtr seq;
  AffineIndex index;

  bool moving() const { return seq != nullptr; }
  Rational at(std::int64_t t) const { return seq ? seq->at(index.at(t)) : value; }
};

struct PrimitiveTemplate {
  enum class Kind { kAtom, kPoint, kInterval, kTail };
  Kind kind = Kind::kAtom;
  std::string label;
  Rational value;
  Endpoint lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;
  SequencePtr seq;
  AffineIndex start;

  bool moving() const {
    if (kind == Kind::kTail) return start.c != 0;
    if (kind == Kind::kInterval) return lo.moving() || hi.moving();
    return false;
  }

  SetPrimitive at(std::int64_t t) const {
    switch (kind) {
      case Kind::kAtom: return Atom{label};
      case Kind::kPoint: return Point{value};
      case Kind::kInterval: return Interval{lo.at(t), hi.at(t), lo_closed, hi_closed};
      case Kind::kTail: return TailFamily{seq, start.at(t)};
    }
    return Atom{label};
  }
};

struct ChainPattern {
  // Position in the history of instance t = 0, and history steps per t.
  std::int64_t base_stage = 0;
  std::int64_t stride = 1;
  std::vector<std::vector<PrimitiveTemplate>> players;
  int verified_window = 0;
  Certificate certificate = Certificate::kWindowOnly;

  bool constant() const {
    for (const auto& p : players) {
      for (const auto& t : p) {
        if (t.moving()) return false;
      }
    }
    return true;
  }
};

inline SymbolicSet instance(const std::vector<PrimitiveTemplate>& templ, std::int64_t t) {
  std::vector<SetPrimitive> prims;
  for (const auto& p : templ) prims.push_back(p.at(t));
  return SymbolicSet::of(std::move(prims));
}

inline Reduction instance(const ChainPattern& p, std::int64_t t) {
  std::vector<SymbolicSet> sets;
  for (const auto& templ : p.players) sets.push_back(instance(templ, t));
  return Reduction(std::move(sets));
}

namespace detail {

inline std::optional<AffineIndex> fit_affine(const std::vector<std::int64_t>& xs) {
  if (xs.empty()) return std::nullopt;
  AffineIndex a{xs[0], xs.size() > 1 ? xs[1] - xs[0] : 0};
  for (std::size_t t = 0; t < xs.size(); ++t) {
    if (a.at(static_cast<std::int64_t>(t)) != xs[t]) return std::nullopt;
  }
  if (a.c < 0) return std::nullopt;
  return a;
}

inline std::optional<Endpoint> fit_endpoint(const std::vector<Rational>& values,
                                            const SequenceRegistry& registry) {
  bool same = true;
  for (const auto& v : values) same = same && v == values.front();
  if (same) return Endpoint{values.front(), nullptr, {}};
  for (const auto& seq : registry.all()) {
    std::vector<std::int64_t> idx;
    for (const auto& v : values) {
      auto k = seq->index_of(v, seq->domain_start());
      if (!k) break;
      idx.push_back(*k);
    }
    if (idx.size() != values.size()) continue;
    if (auto a = fit_affine(idx); a && a->c >= 1) return Endpoint{0, seq, *a};
  }
  return std::nullopt;
}

inline std::optional<std::vector<PrimitiveTemplate>> fit_player(
    const std::vector<SymbolicSet>& sets, const SequenceRegistry& registry) {
  const auto& first = sets.front().primitives();
  for (const auto& s : sets) {
    if (s.primitives().size() != first.size()) return std::nullopt;
  }
  std::vector<PrimitiveTemplate> out;
  for (std::size_t k = 0; k < first.size(); ++k) {
    PrimitiveTemplate tp;
    const auto& p0 = first[k];
    for (const auto& s : sets) {
      if (s.primitives()[k].index() != p0.index()) return std::nullopt;
    }
    if (auto* a = std::get_if<Atom>(&p0)) {
      tp.kind = PrimitiveTemplate::Kind::kAtom;
      tp.label = a->label;
      for (const auto& s : sets) {
        if (!(std::get<Atom>(s.primitives()[k]) == *a)) return std::nullopt;
      }
    } else if (auto* q = std::get_if<Point>(&p0)) {
      tp.kind = PrimitiveTemplate::Kind::kPoint;
      tp.value = q->value;
      for (const auto& s : sets) {
        if (!(std::get<Point>(s.primitives()[k]) == *q)) return std::nullopt;
      }
    } else if (auto* iv = std::get_if<Interval>(&p0)) {
      tp.kind = PrimitiveTemplate::Kind::kInterval;
      tp.lo_closed = iv->lo_closed;
      tp.hi_closed = iv->hi_closed;
      std::vector<Rational> los, his;
      for (const auto& s : sets) {
        const auto& x = std::get<Interval>(s.primitives()[k]);
        if (x.lo_closed != iv->lo_closed || x.hi_closed != iv->hi_closed) return std::nullopt;
        los.push_back(x.lo);
        his.push_back(x.hi);
      }
      auto lo = fit_endpoint(los, registry);
      auto hi = fit_endpoint(his, registry);
      if (!lo || !hi) return std::nullopt;
      tp.lo = *lo;
      tp.hi = *hi;
    } else {
      const auto& t0 = std::get<TailFamily>(p0);
      tp.kind = PrimitiveTemplate::Kind::kTail;
      tp.seq = t0.seq;
      std::vector<std::int64_t> starts;
      for (const auto& s : sets) {
        const auto& x = std::get<TailFamily>(s.primitives()[k]);
        if (x.seq->id() != t0.seq->id()) return std::nullopt;
        starts.push_back(x.start);
      }
      auto a = fit_affine(starts);
      if (!a) return std::nullopt;
      tp.start = *a;
    }
    out.push_back(std::move(tp));
  }
  return out;
}

}  // namespace detail

// Looks for a template reproducing the last `window` entries of the history
// taken every `stride` steps, for strides 1..max_stride. Returns the first
// fit whose instances are non-increasing.
inline std::optional<ChainPattern> detect_affine_pattern(const std::vector<Reduction>& history,
                                                         int window,
                                                         const SequenceRegistry& registry,
                                                         int max_stride = 3) {
  if (window < 3 || history.empty()) return std::nullopt;
  const auto n = static_cast<std::int64_t>(history.size());
  for (std::int64_t stride = 1; stride <= max_stride; ++stride) {
    const std::int64_t span = stride * (window - 1);
    if (span >= n) break;
    const std::int64_t base = n - 1 - span;
    std::vector<Reduction> picks;
    for (int t = 0; t < window; ++t) picks.push_back(history[base + stride * t]);

    ChainPattern p;
    p.base_stage = base;
    p.stride = stride;
    p.verified_window = window;
    bool ok = true;
    bool any_empty = false;
    for (const auto& r : picks) any_empty = any_empty || r.is_empty();
    if (any_empty) {
      // Only an all-empty window is a valid (constant) chain.
      for (const auto& r : picks) ok = ok && r.is_empty();
      if (!ok) continue;
      p.players.assign(history.back().size(), {});
      return p;
    }
    const std::size_t players = picks.front().size();
    for (std::size_t i = 0; i < players && ok; ++i) {
      std::vector<SymbolicSet> sets;
      for (const auto& r : picks) sets.push_back(r[i]);
      auto templ = detail::fit_player(sets, registry);
      if (!templ) {
        ok = false;
        break;
      }
      p.players.push_back(std::move(*templ));
    }
    if (!ok) continue;
    for (int t = 0; t < window && ok; ++t) {
      ok = instance(p, t) == picks[t];
      if (ok && t > 0) ok = reduction_subset(picks[t], picks[t - 1]);
    }
    if (ok) return p;
  }
  return std::nullopt;
}

namespace detail {

// Intersection over t of a single template primitive. A moving endpoint
// converges monotonically to the sequence limit, which is never attained, so
// the limit set is closed there.
inline std::optional<SetPrimitive> primitive_limit(const PrimitiveTemplate& tp) {
  switch (tp.kind) {
    case PrimitiveTemplate::Kind::kAtom: return Atom{tp.label};
    case PrimitiveTemplate::Kind::kPoint: return Point{tp.value};
    case PrimitiveTemplate::Kind::kTail:
      if (tp.start.c >= 1) return std::nullopt;
      return TailFamily{tp.seq, tp.start.m};
    case PrimitiveTemplate::Kind::kInterval: {
      Interval iv{tp.lo.value, tp.hi.value, tp.lo_closed, tp.hi_closed};
      if (tp.lo.moving()) {
        const auto& L = tp.lo.seq->limit();
        if (L.kind != SequenceLimit::Kind::kFinite) return std::nullopt;
        iv.lo = L.value;
        iv.lo_closed = true;
      }
      if (tp.hi.moving()) {
        const auto& L = tp.hi.seq->limit();
        if (L.kind != SequenceLimit::Kind::kFinite) return std::nullopt;
        iv.hi = L.value;
        iv.hi_closed = true;
      }
      if (iv.lo > iv.hi || iv.empty()) return std::nullopt;
      return iv;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline Reduction chain_limit(const ChainPattern& p) {
  std::vector<SymbolicSet> sets;
  for (const auto& templ : p.players) {
    std::vector<SetPrimitive> prims;
    for (const auto& tp : templ) {
      if (auto lim = detail::primitive_limit(tp)) prims.push_back(*lim);
    }
    sets.push_back(SymbolicSet::of(std::move(prims)));
  }
  return Reduction(std::move(sets));
}

}  // namespace domlab

#endif  // DOMLAB_CHAIN_PATTERN_HPP_
