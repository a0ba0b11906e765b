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

#ifndef DOMLAB_TEXT_SYNTAX_HPP_
#define DOMLAB_TEXT_SYNTAX_HPP_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/error.hpp"
#include "domlab/game.hpp"
#include "domlab/rational.hpp"
#include "domlab/sequence.hpp"
#include "domlab/symbolic_set.hpp"

// Plain-text sets and reductions, as printed by to_string():
//
//   set       := "∅" | "empty" | term ("∪" term | "U" term)*
//   term      := "{" element ("," element)* "}" | "{}"
//              | ("[" | "(") rational "," rational ("]" | ")")
//              | "tail(" seq-id "," index ")"
//   element   := rational | label | '"' label '"'
//   reduction := "∅" | set (("×" | "x" | "X" | "*") set)*

namespace domlab {

namespace text_detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline bool is_empty_word(const std::string& s) { return s == "∅" || s == "empty" || s == "{}"; }

// Splits at top-level occurrences of any separator.
inline std::vector<std::string> split_top(std::string_view s, const std::vector<std::string>& seps) {
  std::vector<std::string> out;
  int depth = 0;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size();) {
    char c = s[i];
    if (c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '{' || c == '[' || c == '(') ++depth;
      if (c == '}' || c == ']' || c == ')') --depth;
    }
    if (!quoted && depth == 0) {
      bool hit = false;
      for (const auto& sep : seps) {
        if (s.substr(i, sep.size()) == sep) {
          out.push_back(trim(s.substr(start, i - start)));
          i += sep.size();
          start = i;
          hit = true;
          break;
        }
      }
      if (hit) continue;
    }
    ++i;
  }
  if (depth != 0 || quoted) throw MalformedSet("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

inline bool looks_numeric(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  return i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '.');
}

inline SymbolicSet parse_term(const std::string& t, const SequenceRegistry& reg) {
  if (is_empty_word(t)) return {};
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') {
    std::vector<SetPrimitive> prims;
    for (auto& e : split_top(std::string_view(t).substr(1, t.size() - 2), {","})) {
      if (e.empty()) throw MalformedSet("empty element in '" + t + "'");
      if (e.size() >= 2 && e.front() == '"' && e.back() == '"') {
        prims.push_back(Atom{e.substr(1, e.size() - 2)});
      } else if (looks_numeric(e)) {
        prims.push_back(Point{parse_rational(e)});
      } else {
        prims.push_back(Atom{e});
      }
    }
    return SymbolicSet::of(std::move(prims));
  }
  if (t.size() >= 2 && (t.front() == '[' || t.front() == '(') && (t.back() == ']' || t.back() == ')')) {
    auto ends = split_top(std::string_view(t).substr(1, t.size() - 2), {","});
    if (ends.size() != 2) throw MalformedSet("interval needs two endpoints: '" + t + "'");
    return SymbolicSet::interval(parse_rational(ends[0]), parse_rational(ends[1]), t.front() == '[',
                                 t.back() == ']');
  }
  if (t.rfind("tail(", 0) == 0 && t.back() == ')') {
    auto args = split_top(std::string_view(t).substr(5, t.size() - 6), {","});
    if (args.size() != 2) throw MalformedSet("tail needs a sequence id and an index: '" + t + "'");
    auto k = parse_rational(args[1]);
    if (k.get_den() != 1 || !k.get_num().fits_slong_p()) {
      throw MalformedSet("tail index must be an integer: '" + t + "'");
    }
    return SymbolicSet::tail(reg.get(args[0]), k.get_num().get_si());
  }
  throw MalformedSet("cannot parse set term '" + t + "'");
}

}  // namespace text_detail

inline SymbolicSet parse_set(std::string_view text,
                             const SequenceRegistry& reg = standard_registry()) {
  auto t = text_detail::trim(text);
  if (t.empty()) throw MalformedSet("empty set text");
  SymbolicSet out;
  for (const auto& term : text_detail::split_top(t, {"∪", "U"})) {
    if (term.empty()) throw MalformedSet("dangling union in '" + t + "'");
    out = set_union(out, text_detail::parse_term(term, reg));
  }
  return out;
}

inline Reduction parse_reduction(std::string_view text, std::size_t players,
                                 const SequenceRegistry& reg = standard_registry()) {
  auto t = text_detail::trim(text);
  if (text_detail::is_empty_word(t)) return Reduction::empty(players);
  auto parts = text_detail::split_top(t, {"×", "x", "X", "*"});
  if (parts.size() != players) {
    throw MalformedSet("reduction '" + t + "' has " + std::to_string(parts.size()) +
                       " factors, expected " + std::to_string(players));
  }
  std::vector<SymbolicSet> sets;
  for (const auto& p : parts) sets.push_back(parse_set(p, reg));
  return Reduction(std::move(sets));
}

}  // namespace domlab

#endif  // DOMLAB_TEXT_SYNTAX_HPP_
