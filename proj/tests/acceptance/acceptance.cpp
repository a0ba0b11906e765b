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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any
// criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "domlab/domlab.hpp"
#include "set_suite.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
}

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

void catalog_criteria() {
  const std::vector<std::pair<std::string, double>> limits = {
      {"intro", 1}, {"ex1", 1}, {"ex2", 10}, {"ex3", 1}, {"ex4", 30}, {"ex5", 5}, {"gkz", 1}};
  for (const auto& [id, limit] : limits) {
    auto t0 = Clock::now();
    domlab::CatalogReport rep;
    std::string error;
    try {
      rep = domlab::verify_catalog(id);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double s = seconds_since(t0);
    std::size_t passed = 0;
    std::string first_fail;
    for (const auto& c : rep.checks) {
      if (c.passed) {
        ++passed;
      } else if (first_fail.empty()) {
        first_fail = c.name + " (expected " + c.expected + ", got " + c.actual + ")";
      }
    }
    std::string detail = std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + " checks in " +
                         fmt_s(s) + ", limit " + fmt_s(limit);
    if (!error.empty()) detail += "; error: " + error;
    if (!first_fail.empty()) detail += "; first failure: " + first_fail;
    report("catalog " + id, error.empty() && !rep.checks.empty() && rep.all_passed() && s < limit, detail);
  }
}

void theorem_criterion() {
  auto t0 = Clock::now();
  std::size_t games = 0, bad = 0, assertions = 0;
  std::string first;
  for (std::uint64_t seed = 7; seed < 7 + 200; ++seed) {
    auto rep = domlab::check_theorems(domlab::random_game(seed, 2, 3));
    ++games;
    assertions += rep.assertions.size();
    if (!rep.all_passed()) {
      ++bad;
      for (const auto& a : rep.assertions) {
        if (!a.passed && first.empty()) first = rep.game + ": " + a.name + " " + a.detail;
      }
    }
  }
  const double s = seconds_since(t0);
  std::string detail = std::to_string(games - bad) + "/" + std::to_string(games) + " games, " +
                       std::to_string(assertions) + " assertions in " + fmt_s(s) + ", limit 300 s";
  if (!first.empty()) detail += "; first failure: " + first;
  report("theorem suite", bad == 0 && s < 300, detail);
}

void oracle_criterion() {
  auto t0 = Clock::now();
  std::size_t queries = 0, mismatches = 0;
  std::string first;
  for (const auto& [id, alias] : domlab::catalog_ids()) {
    auto a = domlab::oracle_agreement(id);
    queries += a.queries;
    mismatches += a.mismatches;
    if (first.empty() && !a.samples.empty()) first = id + ": " + a.samples.front();
  }
  const double s = seconds_since(t0);
  std::string detail = std::to_string(queries - mismatches) + "/" + std::to_string(queries) +
                       " probe queries agree in " + fmt_s(s) + ", limit 60 s";
  if (!first.empty()) detail += "; first mismatch: " + first;
  report("oracle equivalence", queries > 0 && mismatches == 0 && s < 60, detail);
}

void set_criterion() {
  namespace t = domlab::testing;
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, t::SuiteResult>> parts;
  parts.emplace_back("normalization", t::normalization_cases(101, 4000));
  parts.emplace_back("soundness", t::soundness_cases(202, 4000));
  parts.emplace_back("subset/difference", t::compare_cases(303, 3000));
  std::size_t detected = 0;
  parts.emplace_back("chain limit", t::chain_limit_cases(404, 2000, &detected));
  const double s = seconds_since(t0);
  std::size_t cases = 0, fails = 0, skipped = 0;
  std::string notes;
  for (const auto& [name, r] : parts) {
    cases += r.cases;
    fails += r.failures;
    skipped += r.skipped;
    if (!r.notes.empty() && notes.empty()) notes = name + ": " + r.notes.front();
  }
  const std::size_t checked = cases - skipped;
  std::string detail = std::to_string(checked) + " cases checked (" + std::to_string(skipped) +
                       " refused differences), " + std::to_string(fails) + " failures, " +
                       std::to_string(detected) + " chain patterns, " + fmt_s(s) + ", limit 60 s";
  if (!notes.empty()) detail += "; first failure: " + notes;
  report("set algebra", fails == 0 && checked >= 10000 && s < 60, detail);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Capture {
  int code = -1;
  std::string out;
  std::string trace;
};

Capture invoke(const std::string& args, const fs::path& dir, int k, bool with_trace) {
  auto out = dir / ("out" + std::to_string(k));
  auto trace = dir / ("trace" + std::to_string(k) + ".jsonl");
  std::string cmd = "'" + std::string(DOMLAB_CLI_PATH) + "' " + args;
  if (with_trace) cmd += " --out '" + trace.string() + "'";
  cmd += " > '" + out.string() + "' 2>/dev/null";
  int status = std::system(cmd.c_str());
  Capture c;
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  c.out = slurp(out);
  if (with_trace) c.trace = slurp(trace);
  return c;
}

void determinism_criterion() {
  const std::string data = DOMLAB_DATA_DIR;
  const std::vector<std::pair<std::string, bool>> commands = {
      {"--format json run --catalog ex2 --mode nested --policy remove-all", true},
      {"--format json run --catalog ex5 --mode nested --policy random-subset --seed 11", true},
      {"--format json run --game '" + data + "/games/dominance_2x2.json' --mode gkz --policy remove-one", true},
      {"--format json check-theorems --random 20 --players 2 --max-strats 3 --seed 7", false},
      {"--format json catalog verify ex4", false},
  };
  auto dir = fs::temp_directory_path() / ("domlab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::size_t same = 0;
  std::string first;
  int k = 0;
  for (const auto& [args, trace] : commands) {
    auto a = invoke(args, dir, k++, trace);
    auto b = invoke(args, dir, k++, trace);
    bool ok = a.code == b.code && a.code == 0 && !a.out.empty() && a.out == b.out && a.trace == b.trace &&
              (!trace || !a.trace.empty());
    if (ok) {
      ++same;
    } else if (first.empty()) {
      first = args + " (exit " + std::to_string(a.code) + "/" + std::to_string(b.code) + ")";
    }
  }
  fs::remove_all(dir);
  std::string detail = std::to_string(same) + "/" + std::to_string(commands.size()) +
                       " commands byte-identical across repeated runs";
  if (!first.empty()) detail += "; first difference: " + first;
  report("determinism", same == commands.size(), detail);
}

}  // namespace

int main() {
  catalog_criteria();
  theorem_criterion();
  oracle_criterion();
  set_criterion();
  determinism_criterion();
  std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " criteria not met") << std::endl;
  return failures == 0 ? 0 : 1;
}
