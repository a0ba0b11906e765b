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

// domlab command-line front end.
//
// Exit codes:
//   0  success (run reached a maximal reduction, all checks hold, ...)
//   1  negative result (invalid sequence, failed check, non-maximal end)
//   2  illegal configuration or malformed input
//   3  budget or enumeration caps exhausted
//   4  query not supported by the game's dominance oracle

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domlab/domlab.hpp"

namespace {

using domlab::Json;

enum Exit { kOk = 0, kNegative = 1, kConfig = 2, kBudget = 3, kUnsupported = 4 };

// Config errors raised by the front end itself.
class ConfigError : public domlab::Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

struct Output {
  bool json = true;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw domlab::FormatError(path, std::string("invalid JSON: ") + e.what());
  }
}

// Fixed-width text table.
void print_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  auto width = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  std::vector<std::size_t> w(head.size(), 0);
  for (std::size_t c = 0; c < head.size(); ++c) w[c] = width(head[c]);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], width(r[c]));
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(w[c] - width(r[c]) + 2, ' ');
    }
    std::cout << s << "\n";
  };
  line(head);
  std::vector<std::string> rule;
  for (auto x : w) rule.push_back(std::string(x, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// "max_strategies=8,max_sequences=1000,max_nodes=10"
domlab::EnumerationCaps caps_from_env() {
  domlab::EnumerationCaps caps;
  const char* env = std::getenv("DOMLAB_CAPS");
  if (!env || !*env) return caps;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("DOMLAB_CAPS: expected key=value, got '" + item + "'");
    auto key = item.substr(0, eq);
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("DOMLAB_CAPS: bad value in '" + item + "'");
    }
    if (key == "max_strategies") {
      caps.max_strategies_total = v;
    } else if (key == "max_sequences") {
      caps.max_sequences = v;
    } else if (key == "max_nodes") {
      caps.max_nodes = v;
    } else {
      throw ConfigError("DOMLAB_CAPS: unknown key '" + key + "'");
    }
  }
  return caps;
}

struct GameSource {
  std::string file;
  std::string catalog;

  void add_to(CLI::App* app) {
    app->add_option("--game", file, "finite game file (JSON)");
    app->add_option("--catalog", catalog, "catalog entry id");
  }

  domlab::Game load() const {
    if (file.empty() == catalog.empty()) throw ConfigError("give exactly one of --game or --catalog");
    if (!catalog.empty()) return domlab::instantiate(catalog).game;
    return domlab::load_finite_game(parse_json_file(file), file);
  }
};

domlab::Mode mode_of(const std::string& s) {
  auto m = domlab::parse_mode(s);
  if (!m) throw ConfigError("unknown mode '" + s + "' (nested, universal, gkz)");
  return *m;
}

std::string maximal_line(const domlab::EliminationTrace& t) {
  return "maximal: " + t.final_reduction().to_string() + " at " + t.final_stage().to_string();
}

// ---------------------------------------------------------------------------
// run

struct RunArgs {
  GameSource src;
  std::string mode = "nested";
  std::string policy = "remove-all";
  std::optional<std::uint64_t> seed;
  std::string script;
  std::string out;
  int max_steps = 64;
  int max_limits = 3;
  int window = 5;
  bool heuristic = false;
};

int cmd_run(const RunArgs& a, const Output& o) {
  Stopwatch sw;
  auto g = a.src.load();
  auto mode = mode_of(a.mode);
  const bool random = a.policy == "random-subset" || a.policy == "random_subset";
  if (random != a.seed.has_value()) throw ConfigError("--seed is required exactly for random-subset");
  domlab::Policy policy;
  if (a.policy == "scripted") {
    if (a.script.empty()) throw ConfigError("scripted policy needs --script");
    policy = domlab::script_from_json(g, parse_json_file(a.script), a.seed.value_or(0));
  } else {
    if (!a.script.empty()) throw ConfigError("--script only applies to the scripted policy");
    policy = domlab::policy_from_name(a.policy, a.seed.value_or(0));
  }
  domlab::Budget budget{a.max_steps, a.max_limits, a.window, a.heuristic};

  domlab::EliminationTrace trace;
  int code = kOk;
  std::string error;
  try {
    trace = domlab::run(g, mode, policy, budget);
    if (!trace.terminal_maximal) code = kNegative;
  } catch (const domlab::BudgetExhausted& e) {
    trace = e.partial();
    code = kBudget;
    error = e.what();
  }
  if (!a.out.empty()) write_file(a.out, domlab::trace_to_jsonl(g, trace));

  std::string summary = trace.terminal_maximal ? maximal_line(trace)
                                               : "stopped: " + trace.final_reduction().to_string() +
                                                     " at " + trace.final_stage().to_string();
  if (o.json) {
    Json j;
    j["game"] = g.source();
    j["mode"] = domlab::to_string(mode);
    j["policy"] = domlab::to_string(policy.kind);
    j["terminal_maximal"] = trace.terminal_maximal;
    j["final_stage"] = trace.final_stage().to_string();
    j["final_reduction"] = trace.final_reduction().to_string();
    j["stages"] = trace.stages.size();
    j["summary"] = summary;
    if (!error.empty()) j["error"] = error;
    if (o.timing) j["timing_ms"] = sw.ms();
    emit(j);
  } else {
    std::cout << summary << "\n";
    if (!error.empty()) std::cerr << "domlab: " << error << "\n";
    if (o.timing) std::cout << "time: " << sw.ms() << " ms\n";
  }
  return code;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
  GameSource src;
  std::string mode = "nested";
  std::string trace;
  std::string script;
  bool heuristic = false;
};

// Applies the script's removal sets literally, without legality checks.
domlab::EliminationTrace literal_trace(const domlab::Game& g, const domlab::Policy& p) {
  domlab::EliminationTrace t;
  t.stages.push_back({domlab::Stage{0, 0}, g.full(), {}, {}, std::nullopt});
  std::int64_t n = 0;
  for (const auto& step : p.script) {
    const auto& r = t.stages.back().reduction;
    std::vector<domlab::SymbolicSet> next, removed;
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      auto cur = r.is_empty() ? domlab::SymbolicSet() : r[i];
      auto drop = i < step.size() ? domlab::set_intersect(step[i], cur) : domlab::SymbolicSet();
      next.push_back(domlab::set_difference(cur, drop));
      removed.push_back(drop);
    }
    t.stages.push_back({domlab::Stage{0, ++n}, domlab::Reduction(next), removed, {}, std::nullopt});
  }
  return t;
}

int cmd_validate(const ValidateArgs& a, const Output& o) {
  auto g = a.src.load();
  if (a.trace.empty() && a.script.empty()) {
    // Game check only.
    if (o.json) {
      Json j;
      j["game"] = g.source();
      j["valid"] = true;
      j["players"] = g.players();
      emit(j);
    } else {
      std::cout << "game OK: " << g.full().to_string() << "\n";
    }
    return kOk;
  }
  if (!a.trace.empty() && !a.script.empty()) throw ConfigError("give one of --trace or --script");
  auto mode = mode_of(a.mode);
  domlab::EliminationTrace t;
  if (!a.trace.empty()) {
    t = domlab::trace_from_jsonl(g, read_file(a.trace), mode);
  } else {
    auto p = domlab::script_from_json(g, parse_json_file(a.script));
    t = p.fallback ? domlab::run(g, domlab::Mode::kUniversal, p) : literal_trace(g, p);
  }
  t.mode = mode;
  auto v = domlab::validate_sequence(g, t, mode, a.heuristic);
  if (o.json) {
    Json j;
    j["game"] = g.source();
    j["mode"] = domlab::to_string(mode);
    j["stages"] = t.stages.size();
    j["verdict"] = domlab::verdict_to_json(g, v);
    emit(j);
  } else if (v.valid) {
    std::cout << "valid " << domlab::to_string(mode) << " elimination sequence ("
              << t.stages.size() << " stages, " << maximal_line(t) << ")\n";
  } else {
    std::cout << "not a " << domlab::to_string(mode) << " elimination sequence\n";
    if (v.stage_index) {
      std::cout << "  stage index " << *v.stage_index << " ("
                << t.stages.at(*v.stage_index).stage.to_string() << ")\n";
    }
    std::cout << "  violated: " << v.violation << "\n";
    if (v.player) std::cout << "  player: " << g.players()[*v.player] << "\n";
    if (v.element) std::cout << "  strategy: " << v.element->to_string() << "\n";
  }
  return v.valid ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  GameSource src;
  std::string reduction;
  std::string later;
  std::vector<std::string> checks;
  std::string klass;
};

int cmd_analyze(const AnalyzeArgs& a, const Output& o) {
  using namespace domlab;
  Stopwatch sw;
  auto g = a.src.load();
  std::vector<BoundednessVerdict> verdicts;
  std::string target;
  auto checks = a.checks;

  if (!a.klass.empty()) {
    if (!a.reduction.empty()) throw ConfigError("--class and --reduction are exclusive");
    auto mode = mode_of(a.klass);
    const auto& f = require_finite(g);
    auto c = enumerate_sequences(f.kernel(), mode, caps_from_env());
    target = "class " + to_string(mode);
    if (checks.empty()) {
      checks = {"complete-boundedness", "local-boundedness", "property-C", "forgetfulness", "dominance-star"};
    }
    for (const auto& name : checks) {
      if (name == "complete-boundedness") {
        verdicts.push_back(class_boundedness(f, c, BoundKind::kComplete));
      } else if (name == "local-boundedness") {
        verdicts.push_back(class_boundedness(f, c, BoundKind::kLocal));
      } else if (name == "property-C") {
        verdicts.push_back(satisfies_property_C(f, c));
      } else if (name == "forgetfulness") {
        verdicts.push_back(is_forgetfulness_proof(f, c));
      } else if (name == "dominance-star") {
        verdicts.push_back(closed_under_dominance_star(f, c));
      } else {
        throw ConfigError("unknown check '" + name + "'");
      }
    }
  } else {
    if (a.reduction.empty()) throw ConfigError("analyze needs --reduction or --class");
    Reduction r;
    try {
      r = parse_reduction(a.reduction, g.num_players());
    } catch (const MalformedSet& e) {
      throw FormatError("--reduction", e.what());
    }
    if (!g.contains(r)) throw ConfigError("reduction is not inside the strategy space");
    target = r.to_string();
    if (checks.empty()) {
      checks = {"complete-boundedness", "local-boundedness", "property-C"};
      if (!a.later.empty()) checks.push_back("dominance-star");
    }
    for (const auto& name : checks) {
      if (name == "complete-boundedness") {
        verdicts.push_back(is_completely_bounded(g, r));
      } else if (name == "local-boundedness") {
        verdicts.push_back(is_locally_bounded(g, r));
      } else if (name == "property-C") {
        verdicts.push_back(property_C_at(g, r));
      } else if (name == "forgetfulness") {
        verdicts.push_back(forgetfulness_at(g, r));
      } else if (name == "dominance-star") {
        if (a.later.empty()) throw ConfigError("dominance-star needs --later");
        Reduction s;
        try {
          s = parse_reduction(a.later, g.num_players());
        } catch (const MalformedSet& e) {
          throw FormatError("--later", e.what());
        }
        if (!reduction_subset(s, r)) throw ConfigError("--later must be inside --reduction");
        verdicts.push_back(dominance_star_at(g, r, s));
      } else {
        throw ConfigError("unknown check '" + name + "'");
      }
    }
  }

  bool all = true;
  for (const auto& v : verdicts) all = all && v.holds;
  if (o.json) {
    Json j;
    j["game"] = g.source();
    j["target"] = target;
    Json vs = Json::array();
    for (const auto& v : verdicts) vs.push_back(boundedness_to_json(g, v));
    j["verdicts"] = vs;
    if (o.timing) j["timing_ms"] = sw.ms();
    emit(j);
  } else {
    std::cout << g.source() << " at " << target << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : verdicts) rows.push_back({v.check, v.holds ? "holds" : "fails", v.scope_note});
    print_table({"check", "result", "scope"}, rows);
    for (const auto& v : verdicts) {
      if (v.holds) continue;
      std::cout << "\n" << v.check << " fails: " << v.clause << "\n";
      if (v.player) std::cout << "  player " << g.players()[*v.player];
      if (v.strategy) std::cout << ", strategy " << v.strategy->to_string();
      if (v.dominating) std::cout << ", dominators " << v.dominating->to_string();
      std::cout << "\n";
      if (v.reduction) std::cout << "  at " << v.reduction->to_string() << "\n";
      if (v.later) std::cout << "  later " << v.later->to_string() << "\n";
    }
  }
  return all ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
  GameSource src;
  std::string mode = "nested";
  std::size_t list = 0;
};

int cmd_enumerate(const EnumerateArgs& a, const Output& o) {
  Stopwatch sw;
  auto g = a.src.load();
  auto mode = mode_of(a.mode);
  const auto& f = domlab::require_finite(g);
  auto c = domlab::enumerate_sequences(f.kernel(), mode, caps_from_env());
  if (o.json) {
    Json j;
    j["game"] = g.source();
    auto body = domlab::sequence_class_to_json(f, c, a.list);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    if (o.timing) j["timing_ms"] = sw.ms();
    emit(j);
  } else {
    std::cout << g.source() << " " << domlab::to_string(mode) << ": " << c.sequence_count().get_str()
              << " sequences, " << c.nodes.size() << " reductions in range\n";
    for (const auto& m : c.maximal_set()) std::cout << "maximal: " << f.from_masks(m).to_string() << "\n";
    for (const auto& s : c.list(a.list)) {
      std::string line;
      for (std::size_t k = 0; k < s.size(); ++k) {
        line += (k ? " -> " : "") + f.from_masks(c.nodes[s[k]]).to_string();
      }
      std::cout << "  " << line << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// check-theorems and catalog verify

struct TheoremArgs {
  GameSource src;
  std::size_t random = 0;
  std::size_t players = 2;
  std::size_t max_strats = 3;
  std::uint64_t seed = 0;
};

int report_catalog(const std::vector<std::string>& ids, const Output& o) {
  Stopwatch sw;
  std::vector<domlab::CatalogReport> reps;
  for (const auto& id : ids) reps.push_back(domlab::verify_catalog(id));
  bool all = true;
  for (const auto& r : reps) all = all && r.all_passed();
  if (o.json) {
    Json j;
    j["passed"] = all;
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(domlab::catalog_report_to_json(r));
    j["entries"] = arr;
    if (o.timing) j["timing_ms"] = sw.ms();
    emit(j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reps) {
      for (const auto& c : r.checks) {
        rows.push_back({r.id, c.passed ? "PASS" : "FAIL", to_string(c.kind), c.name, c.actual});
      }
    }
    print_table({"entry", "status", "kind", "check", "observed"}, rows);
    if (o.timing) std::cout << "time: " << sw.ms() << " ms\n";
  }
  return all ? kOk : kNegative;
}

std::vector<std::string> catalog_selection(const std::string& id) {
  std::vector<std::string> ids;
  if (id == "all") {
    for (const auto& [full, alias] : domlab::catalog_ids()) ids.push_back(full);
  } else {
    ids.push_back(domlab::resolve_catalog_id(id));
  }
  return ids;
}

int cmd_check_theorems(const TheoremArgs& a, const Output& o) {
  if (!a.src.catalog.empty()) {
    if (!a.src.file.empty() || a.random) throw ConfigError("--catalog excludes --game and --random");
    return report_catalog(catalog_selection(a.src.catalog), o);
  }
  Stopwatch sw;
  const auto caps = caps_from_env();
  std::vector<domlab::TheoremReport> reps;
  if (a.random) {
    if (!a.src.file.empty()) throw ConfigError("--random excludes --game");
    if (a.players < 2 || a.max_strats < 1) throw ConfigError("need --players >= 2 and --max-strats >= 1");
    for (std::size_t k = 0; k < a.random; ++k) {
      reps.push_back(domlab::check_theorems(domlab::random_game(a.seed + k, a.players, a.max_strats), caps));
    }
  } else {
    reps.push_back(domlab::check_theorems(a.src.load(), caps));
  }
  bool all = true;
  for (const auto& r : reps) all = all && r.all_passed();
  if (o.json) {
    Json j;
    j["games"] = reps.size();
    j["passed"] = all;
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(domlab::theorem_report_to_json(r));
    j["reports"] = arr;
    if (o.timing) j["timing_ms"] = sw.ms();
    emit(j);
  } else {
    // One row per assertion, aggregated over games.
    std::vector<std::string> names;
    std::vector<std::size_t> pass;
    std::vector<std::string> first_fail;
    for (const auto& r : reps) {
      for (std::size_t k = 0; k < r.assertions.size(); ++k) {
        if (names.size() <= k) {
          names.push_back(r.assertions[k].name);
          pass.push_back(0);
          first_fail.emplace_back();
        }
        if (r.assertions[k].passed) {
          ++pass[k];
        } else if (first_fail[k].empty()) {
          first_fail[k] = r.game + " " + r.assertions[k].detail;
        }
      }
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < names.size(); ++k) {
      rows.push_back({pass[k] == reps.size() ? "PASS" : "FAIL", names[k],
                      std::to_string(pass[k]) + "/" + std::to_string(reps.size()), first_fail[k]});
    }
    print_table({"status", "assertion", "games", "first failure"}, rows);
    if (o.timing) std::cout << "time: " << sw.ms() << " ms\n";
  }
  return all ? kOk : kNegative;
}

int cmd_catalog_list(const Output& o) {
  if (o.json) {
    Json arr = Json::array();
    for (const auto& [id, alias] : domlab::catalog_ids()) {
      auto e = domlab::instantiate(id);
      Json x;
      x["id"] = id;
      x["alias"] = alias;
      x["title"] = e.title;
      x["strategies"] = e.game.full().to_string();
      arr.push_back(x);
    }
    emit(arr);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [id, alias] : domlab::catalog_ids()) {
      auto e = domlab::instantiate(id);
      rows.push_back({id, alias, e.title});
    }
    print_table({"id", "alias", "game"}, rows);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// interpolate-gkz

struct InterpolateArgs {
  GameSource src;
  std::string from;
  std::string to;
};

int cmd_interpolate(const InterpolateArgs& a, const Output& o) {
  auto g = a.src.load();
  domlab::Reduction r, s;
  try {
    r = a.from.empty() ? g.full() : domlab::parse_reduction(a.from, g.num_players());
    s = domlab::parse_reduction(a.to, g.num_players());
  } catch (const domlab::MalformedSet& e) {
    throw domlab::FormatError("--from/--to", e.what());
  }
  auto chain = domlab::gkz_interpolate(g, r, s);
  if (o.json) {
    Json j;
    j["game"] = g.source();
    Json arr = Json::array();
    for (const auto& x : chain) arr.push_back(x.to_string());
    j["chain"] = arr;
    emit(j);
  } else {
    for (std::size_t k = 0; k < chain.size(); ++k) std::cout << k << "  " << chain[k].to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domlab: iterated elimination of strictly dominated strategies"};
  app.require_subcommand(1);
  std::string format;
  Output out;
  app.add_option("--format", format, "json or table (default: table on a terminal)")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--timing", out.timing, "include wall-clock timings");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "run an elimination procedure");
  run.src.add_to(run_cmd);
  run_cmd->add_option("--mode", run.mode, "nested, universal or gkz");
  run_cmd->add_option("--policy", run.policy, "remove-all, remove-one, random-subset or scripted");
  run_cmd->add_option("--seed", run.seed, "seed for random-subset");
  run_cmd->add_option("--script", run.script, "policy script (JSON)");
  run_cmd->add_option("--out", run.out, "write the JSON-lines trace here");
  run_cmd->add_option("--max-steps", run.max_steps, "successor steps per limit block");
  run_cmd->add_option("--max-limits", run.max_limits, "limit stages");
  run_cmd->add_option("--window", run.window, "pattern detection window");
  run_cmd->add_flag("--allow-heuristic-limits", run.heuristic, "accept window-only limit certificates");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "validate a game file, trace or script");
  val.src.add_to(val_cmd);
  val_cmd->add_option("--mode", val.mode, "nested, universal or gkz");
  val_cmd->add_option("--trace", val.trace, "JSON-lines trace");
  val_cmd->add_option("--script", val.script, "policy script (JSON)");
  val_cmd->add_flag("--allow-heuristic-limits", val.heuristic, "accept window-only limit certificates");

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "boundedness conditions at a reduction or on a class");
  an.src.add_to(an_cmd);
  an_cmd->add_option("--reduction", an.reduction, "reduction, e.g. \"[0,1]×{Left}\"");
  an_cmd->add_option("--later", an.later, "second reduction for dominance-star");
  an_cmd->add_option("--check", an.checks,
                     "complete-boundedness, local-boundedness, property-C, forgetfulness, dominance-star");
  an_cmd->add_option("--class", an.klass, "analyze the enumerated class of this mode (finite games)");

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "enumerate a sequence class of a finite game");
  en.src.add_to(en_cmd);
  en_cmd->add_option("--mode", en.mode, "nested, universal or gkz");
  en_cmd->add_option("--list", en.list, "list up to this many sequences");

  TheoremArgs th;
  auto* th_cmd = app.add_subcommand("check-theorems", "check the structural results instance by instance");
  th.src.add_to(th_cmd);
  th_cmd->add_option("--random", th.random, "number of random games");
  th_cmd->add_option("--players", th.players, "players per random game");
  th_cmd->add_option("--max-strats", th.max_strats, "strategies per player, at most");
  th_cmd->add_option("--seed", th.seed, "first seed");

  auto* cat_cmd = app.add_subcommand("catalog", "worked example games");
  cat_cmd->require_subcommand(1);
  auto* cat_list = cat_cmd->add_subcommand("list", "list entries");
  std::string cat_id;
  auto* cat_verify = cat_cmd->add_subcommand("verify", "verify the fixtures of an entry");
  cat_verify->add_option("id", cat_id, "entry id, alias or all")->required();

  InterpolateArgs ip;
  auto* ip_cmd = app.add_subcommand("interpolate-gkz", "refine a nested step into GKZ steps");
  ip.src.add_to(ip_cmd);
  ip_cmd->add_option("--from", ip.from, "start reduction (default: the full game)");
  ip_cmd->add_option("--to", ip.to, "end reduction")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }
  out.json = format.empty() ? !isatty(STDOUT_FILENO) : format == "json";

  try {
    if (run_cmd->parsed()) return cmd_run(run, out);
    if (val_cmd->parsed()) return cmd_validate(val, out);
    if (an_cmd->parsed()) return cmd_analyze(an, out);
    if (en_cmd->parsed()) return cmd_enumerate(en, out);
    if (th_cmd->parsed()) return cmd_check_theorems(th, out);
    if (cat_list->parsed()) return cmd_catalog_list(out);
    if (cat_verify->parsed()) return report_catalog(catalog_selection(cat_id), out);
    if (ip_cmd->parsed()) return cmd_interpolate(ip, out);
  } catch (const domlab::BudgetExhausted& e) {
    std::cerr << "domlab: " << e.what() << "\n";
    return kBudget;
  } catch (const domlab::EnumerationTooLarge& e) {
    std::cerr << "domlab: " << e.what() << "\n";
    return kBudget;
  } catch (const domlab::UnsupportedQuery& e) {
    std::cerr << "domlab: " << e.what() << "\n";
    return kUnsupported;
  } catch (const domlab::UnsupportedCombination& e) {
    std::cerr << "domlab: " << e.what() << "\n";
    return kUnsupported;
  } catch (const domlab::UndefinedRelation& e) {
    std::cerr << "domlab: " << e.what() << "\n";
    return kUnsupported;
  } catch (const domlab::Error& e) {
    std::cerr << "domlab: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
