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


#ifndef DOMLAB_RATIONAL_HPP_
#define DOMLAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "domlab/error.hpp"

namespace domlab {

// Exact arithmetic throughout; strategy values and payoffs never touch
// floating point.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MalformedSet("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "p/q" and finite decimals such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational {
    throw MalformedSet("not a rational: '" + s + "'");
  };
  if (s.empty()) return fail();
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!is_int(n) || !is_int(d)) return fail();
    Integer den = to_int(d);
    if (den == 0) return fail();
    return make_rational(to_int(n), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    if (!is_int(whole) || frac.empty()) return fail();
    for (char c : frac) {
      if (c < '0' || c > '9') return fail();
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = to_int(whole);
    if (w < 0) w = -w;
    Rational q = make_rational(w * scale + Integer(frac, 10), scale);
    return neg ? Rational(-q) : q;
  }
  if (!is_int(s)) return fail();
  return Rational(to_int(s));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::int64_t to_index(const Integer& z) {
  if (!z.fits_slong_p()) throw MalformedSet("index out of range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace domlab

#endif  // DOMLAB_RATIONAL_HPP_
