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

#ifndef DOMLAB_SERIALIZE_HPP_
#define DOMLAB_SERIALIZE_HPP_

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "domlab/analyzer.hpp"
#include "domlab/chain_pattern.hpp"
#include "domlab/engine.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/error.hpp"
#include "domlab/finite_game.hpp"
#include "domlab/game.hpp"
#include "domlab/symbolic_set.hpp"
#include "domlab/text_syntax.hpp"
#include "domlab/theorems.hpp"
#include "domlab/verify.hpp"

namespace domlab {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Sets and sequences

inline Json strategy_to_json(const Strategy& s) {
  if (s.is_atom()) return Json(s.label());
  return rational_to_json(s.value());
}

inline Json sequence_to_json(const RationalSequence& s) {
  Json j;
  j["id"] = s.id();
  j["a"] = s.a().get_str();
  j["b"] = s.b().get_str();
  j["c"] = s.c().get_str();
  j["d"] = s.d().get_str();
  j["domain_start"] = s.domain_start();
  return j;
}

inline RationalSequence sequence_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(where, "sequence must be an object");
  for (const char* k : {"id", "a", "b", "c", "d"}) {
    if (!j.contains(k)) throw FormatError(where, std::string("missing \"") + k + "\"");
  }
  auto z = [&](const char* k) { return detail::json_integer(j.at(k), where + "." + k); };
  std::int64_t start = j.value("domain_start", std::int64_t{0});
  try {
    return RationalSequence(j.at("id").get<std::string>(), z("a"), z("b"), z("c"), z("d"), start);
  } catch (const MalformedSet& e) {
    throw FormatError(where, e.what());
  }
}

inline Json registry_to_json(const SequenceRegistry& reg) {
  Json arr = Json::array();
  for (const auto& s : reg.all()) arr.push_back(sequence_to_json(*s));
  return arr;
}

// Adds the listed sequences to a copy of `base`.
inline SequenceRegistry registry_from_json(const Json& j, SequenceRegistry base = standard_registry()) {
  if (!j.is_array()) throw FormatError("sequences", "expected an array");
  for (std::size_t k = 0; k < j.size(); ++k) {
    base.add(sequence_from_json(j[k], "sequences[" + std::to_string(k) + "]"));
  }
  return base;
}

inline Json primitive_to_json(const SetPrimitive& p) {
  Json j;
  if (auto* a = std::get_if<Atom>(&p)) {
    j["type"] = "atom";
    j["label"] = a->label;
  } else if (auto* q = std::get_if<Point>(&p)) {
    j["type"] = "point";
    j["value"] = rational_to_json(q->value);
  } else if (auto* i = std::get_if<Interval>(&p)) {
    j["type"] = "interval";
    j["lo"] = rational_to_json(i->lo);
    j["hi"] = rational_to_json(i->hi);
    j["lo_closed"] = i->lo_closed;
    j["hi_closed"] = i->hi_closed;
  } else {
    const auto& t = std::get<TailFamily>(p);
    j["type"] = "tail";
    j["seq"] = t.seq->id();
    j["start"] = t.start;
  }
  return j;
}

inline Json set_to_json(const SymbolicSet& s) {
  Json arr = Json::array();
  for (const auto& p : s.primitives()) arr.push_back(primitive_to_json(p));
  return arr;
}

inline SetPrimitive primitive_from_json(const Json& j, const std::string& where,
                                        const SequenceRegistry& reg) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw FormatError(where, "primitive needs a \"type\" tag");
  }
  const auto type = j.at("type").get<std::string>();
  auto need = [&](const char* k) -> const Json& {
    if (!j.contains(k)) throw FormatError(where, std::string("missing \"") + k + "\"");
    return j.at(k);
  };
  if (type == "atom") {
    if (!need("label").is_string()) throw FormatError(where + ".label", "expected a string");
    return Atom{j.at("label").get<std::string>()};
  }
  if (type == "point") return Point{json_to_rational(need("value"), where + ".value")};
  if (type == "interval") {
    Interval iv{json_to_rational(need("lo"), where + ".lo"), json_to_rational(need("hi"), where + ".hi"),
                need("lo_closed").get<bool>(), need("hi_closed").get<bool>()};
    return iv;
  }
  if (type == "tail") {
    try {
      return TailFamily{reg.get(need("seq").get<std::string>()), need("start").get<std::int64_t>()};
    } catch (const MalformedSet& e) {
      throw FormatError(where, e.what());
    }
  }
  throw FormatError(where + ".type", "unknown primitive type '" + type + "'");
}

// Accepts the tagged array form or the text syntax.
inline SymbolicSet set_from_json(const Json& j, const std::string& where,
                                 const SequenceRegistry& reg = standard_registry()) {
  try {
    if (j.is_string()) return parse_set(j.get<std::string>(), reg);
    if (!j.is_array()) throw FormatError(where, "set must be an array of primitives or a string");
    std::vector<SetPrimitive> prims;
    for (std::size_t k = 0; k < j.size(); ++k) {
      prims.push_back(primitive_from_json(j[k], where + "[" + std::to_string(k) + "]", reg));
    }
    return SymbolicSet::of(std::move(prims));
  } catch (const MalformedSet& e) {
    throw FormatError(where, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(where, e.what());
  }
}

// ---------------------------------------------------------------------------
// Reductions, stages, traces

inline Json reduction_to_json(const Game& g, const Reduction& r) {
  Json j = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    j[g.players()[i]] = r.is_empty() ? Json::array() : set_to_json(r[i]);
  }
  return j;
}

inline Reduction reduction_from_json(const Game& g, const Json& j, const std::string& where,
                                     const SequenceRegistry& reg = standard_registry()) {
  if (j.is_string()) {
    try {
      return parse_reduction(j.get<std::string>(), g.num_players(), reg);
    } catch (const MalformedSet& e) {
      throw FormatError(where, e.what());
    }
  }
  if (!j.is_object()) throw FormatError(where, "reduction must be an object keyed by player");
  std::vector<SymbolicSet> sets(g.num_players());
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto i = g.player_index(it.key());
    if (!i) throw FormatError(where + "." + it.key(), "unknown player");
  }
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const auto& name = g.players()[i];
    if (!j.contains(name)) throw FormatError(where, "missing player " + name);
    sets[i] = set_from_json(j.at(name), where + "." + name, reg);
  }
  return Reduction(std::move(sets));
}

inline Json stage_to_json(const Stage& s) {
  Json j;
  j["k"] = s.k;
  j["n"] = s.n;
  return j;
}

inline Json endpoint_to_json(const Endpoint& e) {
  Json j;
  if (e.moving()) {
    j["seq"] = e.seq->id();
    j["m"] = e.index.m;
    j["c"] = e.index.c;
  } else {
    j["value"] = rational_to_json(e.value);
  }
  return j;
}

inline Endpoint endpoint_from_json(const Json& j, const std::string& where,
                                   const SequenceRegistry& reg) {
  Endpoint e;
  if (j.contains("seq")) {
    e.seq = reg.get(j.at("seq").get<std::string>());
    e.index = {j.at("m").get<std::int64_t>(), j.at("c").get<std::int64_t>()};
  } else {
    e.value = json_to_rational(j.at("value"), where + ".value");
  }
  return e;
}

inline Json template_to_json(const PrimitiveTemplate& t) {
  Json j;
  switch (t.kind) {
    case PrimitiveTemplate::Kind::kAtom:
      j["type"] = "atom";
      j["label"] = t.label;
      break;
    case PrimitiveTemplate::Kind::kPoint:
      j["type"] = "point";
      j["value"] = rational_to_json(t.value);
      break;
    case PrimitiveTemplate::Kind::kInterval:
      j["type"] = "interval";
      j["lo"] = endpoint_to_json(t.lo);
      j["hi"] = endpoint_to_json(t.hi);
      j["lo_closed"] = t.lo_closed;
      j["hi_closed"] = t.hi_closed;
      break;
    case PrimitiveTemplate::Kind::kTail:
      j["type"] = "tail";
      j["seq"] = t.seq->id();
      j["m"] = t.start.m;
      j["c"] = t.start.c;
      break;
  }
  return j;
}

inline PrimitiveTemplate template_from_json(const Json& j, const std::string& where,
                                            const SequenceRegistry& reg) {
  PrimitiveTemplate t;
  const auto type = j.at("type").get<std::string>();
  if (type == "atom") {
    t.kind = PrimitiveTemplate::Kind::kAtom;
    t.label = j.at("label").get<std::string>();
  } else if (type == "point") {
    t.kind = PrimitiveTemplate::Kind::kPoint;
    t.value = json_to_rational(j.at("value"), where + ".value");
  } else if (type == "interval") {
    t.kind = PrimitiveTemplate::Kind::kInterval;
    t.lo = endpoint_from_json(j.at("lo"), where + ".lo", reg);
    t.hi = endpoint_from_json(j.at("hi"), where + ".hi", reg);
    t.lo_closed = j.at("lo_closed").get<bool>();
    t.hi_closed = j.at("hi_closed").get<bool>();
  } else if (type == "tail") {
    t.kind = PrimitiveTemplate::Kind::kTail;
    t.seq = reg.get(j.at("seq").get<std::string>());
    t.start = {j.at("m").get<std::int64_t>(), j.at("c").get<std::int64_t>()};
  } else {
    throw FormatError(where + ".type", "unknown template type '" + type + "'");
  }
  return t;
}

inline Json pattern_to_json(const Game& g, const ChainPattern& p) {
  Json j;
  j["base_stage"] = p.base_stage;
  j["stride"] = p.stride;
  j["verified_window"] = p.verified_window;
  j["certificate"] = to_string(p.certificate);
  Json players = Json::object();
  for (std::size_t i = 0; i < p.players.size(); ++i) {
    Json arr = Json::array();
    for (const auto& t : p.players[i]) arr.push_back(template_to_json(t));
    players[g.players()[i]] = arr;
  }
  j["players"] = players;
  return j;
}

inline ChainPattern pattern_from_json(const Game& g, const Json& j, const std::string& where,
                                      const SequenceRegistry& reg) {
  try {
    ChainPattern p;
    p.base_stage = j.at("base_stage").get<std::int64_t>();
    p.stride = j.at("stride").get<std::int64_t>();
    p.verified_window = j.at("verified_window").get<int>();
    p.certificate = j.value("certificate", std::string()) == "inductive" ? Certificate::kInductive
                                                                         : Certificate::kWindowOnly;
    p.players.resize(g.num_players());
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      const auto& arr = j.at("players").at(g.players()[i]);
      for (std::size_t k = 0; k < arr.size(); ++k) {
        p.players[i].push_back(template_from_json(
            arr[k], where + ".players." + g.players()[i] + "[" + std::to_string(k) + "]", reg));
      }
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(where, e.what());
  } catch (const MalformedSet& e) {
    throw FormatError(where, e.what());
  }
}

inline Json trace_entry_to_json(const Game& g, const TraceEntry& e) {
  Json j;
  j["stage"] = stage_to_json(e.stage);
  j["reduction"] = reduction_to_json(g, e.reduction);
  Json removed = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    removed[g.players()[i]] = i < e.removed.size() ? set_to_json(e.removed[i]) : Json::array();
  }
  j["removed"] = removed;
  Json ws = Json::array();
  for (const auto& w : e.witnesses) {
    Json x;
    x["player"] = g.players()[w.player];
    x["removed"] = set_to_json(w.removed);
    x["dominator"] = strategy_to_json(w.dominator);
    x["sample"] = strategy_to_json(w.sample);
    ws.push_back(x);
  }
  j["witnesses"] = ws;
  if (e.certificate) j["certificate"] = pattern_to_json(g, *e.certificate);
  return j;
}

inline std::string trace_to_jsonl(const Game& g, const EliminationTrace& t) {
  std::string out;
  for (const auto& e : t.stages) out += trace_entry_to_json(g, e).dump() + "\n";
  return out;
}

inline Strategy strategy_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return Strategy::atom(j.get<std::string>());
  return Strategy::number(json_to_rational(j, where));
}

// Reads a JSON-lines trace. Witnesses are metadata and are read back as-is.
inline EliminationTrace trace_from_jsonl(const Game& g, const std::string& text, Mode mode,
                                         const SequenceRegistry& reg = standard_registry()) {
  EliminationTrace t;
  t.mode = mode;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text_detail::trim(line).empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(where, std::string("invalid JSON: ") + e.what());
    }
    try {
      TraceEntry e;
      e.stage = {j.at("stage").at("k").get<std::int64_t>(), j.at("stage").at("n").get<std::int64_t>()};
      e.reduction = reduction_from_json(g, j.at("reduction"), where + ".reduction", reg);
      if (j.contains("removed")) {
        for (std::size_t i = 0; i < g.num_players(); ++i) {
          const auto& name = g.players()[i];
          e.removed.push_back(j.at("removed").contains(name)
                                  ? set_from_json(j.at("removed").at(name), where + ".removed." + name, reg)
                                  : SymbolicSet());
        }
      }
      if (j.contains("witnesses")) {
        for (const auto& w : j.at("witnesses")) {
          auto i = g.player_index(w.at("player").get<std::string>());
          if (!i) throw FormatError(where + ".witnesses", "unknown player");
          Witness x{*i, set_from_json(w.at("removed"), where + ".witnesses.removed", reg),
                    strategy_from_json(w.contains("sample") ? w.at("sample") : w.at("dominator"), where),
                    strategy_from_json(w.at("dominator"), where)};
          e.witnesses.push_back(std::move(x));
        }
      }
      if (j.contains("certificate")) {
        e.certificate = pattern_from_json(g, j.at("certificate"), where + ".certificate", reg);
      }
      t.stages.push_back(std::move(e));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(where, e.what());
    }
  }
  if (!t.stages.empty()) t.terminal_maximal = is_maximal(g, t.final_reduction(), mode);
  return t;
}

// ---------------------------------------------------------------------------
// Policy scripts: {"steps": [{player: set}...], "then": {"policy": name, "protect": {player: set}}}

inline Policy policy_from_name(const std::string& name, std::uint64_t seed) {
  if (name == "remove-all" || name == "remove_all") return Policy::remove_all();
  if (name == "remove-one" || name == "remove_one") return Policy::remove_one();
  if (name == "random-subset" || name == "random_subset") return Policy::random_subset(seed);
  throw FormatError("policy", "unknown policy '" + name + "'");
}

inline std::vector<SymbolicSet> protect_from_json(const Game& g, const Json& j, const std::string& where,
                                                  const SequenceRegistry& reg) {
  std::vector<SymbolicSet> out(g.num_players());
  if (!j.is_object()) throw FormatError(where, "protect must be an object keyed by player");
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto i = g.player_index(it.key());
    if (!i) throw FormatError(where + "." + it.key(), "unknown player");
    out[*i] = set_from_json(it.value(), where + "." + it.key(), reg);
  }
  return out;
}

inline Policy script_from_json(const Game& g, const Json& doc, std::uint64_t seed = 0,
                               const SequenceRegistry& reg = standard_registry()) {
  if (!doc.is_object() || !doc.contains("steps") || !doc.at("steps").is_array()) {
    throw FormatError("$", "script needs a \"steps\" array");
  }
  std::vector<std::vector<SymbolicSet>> steps;
  const auto& arr = doc.at("steps");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "steps[" + std::to_string(k) + "]";
    if (!arr[k].is_object()) throw FormatError(where, "step must be an object keyed by player");
    steps.push_back(protect_from_json(g, arr[k], where, reg));
  }
  std::shared_ptr<const Policy> then;
  if (doc.contains("then")) {
    const auto& t = doc.at("then");
    if (!t.is_object() || !t.contains("policy") || !t.at("policy").is_string()) {
      throw FormatError("then", "needs a \"policy\" name");
    }
    Policy p = policy_from_name(t.at("policy").get<std::string>(), seed);
    if (t.contains("protect")) p.protect = protect_from_json(g, t.at("protect"), "then.protect", reg);
    then = std::make_shared<const Policy>(std::move(p));
  }
  return Policy::scripted(std::move(steps), std::move(then));
}

// ---------------------------------------------------------------------------
// Verdicts and reports

inline Json verdict_to_json(const Game& g, const Verdict& v) {
  Json j;
  j["valid"] = v.valid;
  if (!v.valid) {
    j["violation"] = v.violation;
    if (v.stage_index) j["stage_index"] = *v.stage_index;
    if (v.player) j["player"] = g.players()[*v.player];
    if (v.element) j["strategy"] = strategy_to_json(*v.element);
  }
  return j;
}

inline Json boundedness_to_json(const Game& g, const BoundednessVerdict& v) {
  Json j;
  j["check"] = v.check;
  j["holds"] = v.holds;
  j["scope"] = v.scope_note;
  if (!v.holds) {
    Json w;
    w["clause"] = v.clause;
    if (v.player) w["player"] = g.players()[*v.player];
    if (v.strategy) w["strategy"] = strategy_to_json(*v.strategy);
    if (v.dominating) w["dominating_set"] = v.dominating->to_string();
    if (v.reduction) w["reduction"] = v.reduction->to_string();
    if (v.later) w["later"] = v.later->to_string();
    j["witness"] = w;
  }
  return j;
}

inline Json theorem_report_to_json(const TheoremReport& r) {
  Json j;
  j["game"] = r.game;
  j["passed"] = r.all_passed();
  Json counts = Json::array();
  for (const auto& c : r.counts) {
    Json x;
    x["mode"] = to_string(c.mode);
    x["sequences"] = c.sequences.get_str();
    x["range"] = c.range;
    x["maximal"] = c.maximal;
    counts.push_back(x);
  }
  j["counts"] = counts;
  Json as = Json::array();
  for (const auto& a : r.assertions) {
    Json x;
    x["name"] = a.name;
    x["passed"] = a.passed;
    if (!a.detail.empty()) x["detail"] = a.detail;
    as.push_back(x);
  }
  j["assertions"] = as;
  return j;
}

inline Json catalog_report_to_json(const CatalogReport& r) {
  Json j;
  j["id"] = r.id;
  j["passed"] = r.all_passed();
  Json cs = Json::array();
  for (const auto& c : r.checks) {
    Json x;
    x["name"] = c.name;
    x["kind"] = to_string(c.kind);
    x["passed"] = c.passed;
    x["expected"] = c.expected;
    x["actual"] = c.actual;
    cs.push_back(x);
  }
  j["checks"] = cs;
  return j;
}

inline Json sequence_class_to_json(const FiniteTableOracle& f, const SequenceClass& c,
                                   std::size_t list_limit) {
  Json j;
  j["mode"] = to_string(c.mode);
  j["sequences"] = c.sequence_count().get_str();
  j["range"] = c.nodes.size();
  Json maxi = Json::array();
  for (const auto& m : c.maximal_set()) maxi.push_back(f.from_masks(m).to_string());
  j["maximal"] = maxi;
  if (list_limit > 0) {
    Json seqs = Json::array();
    for (const auto& s : c.list(list_limit)) {
      Json chain = Json::array();
      for (std::size_t v : s) chain.push_back(f.from_masks(c.nodes[v]).to_string());
      seqs.push_back(chain);
    }
    j["listed"] = seqs;
  }
  return j;
}

}  // namespace domlab

#endif  // DOMLAB_SERIALIZE_HPP_
