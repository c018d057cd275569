// Copyright 2026 The ogame Authors
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

// ogame: analyze game files, run the law suites, format game files.
//
// Exit codes: 0 success; 1 usage, parse or elaboration error, unknown game;
// 2 budget exceeded; 3 law violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ogame/gamedsl.hpp"
#include "ogame/laws.hpp"
#include "ogame/report.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitLaws = 3;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(output, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int fail(const std::string& msg, int code) {
  std::cerr << "ogame: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compositional game analysis: equilibria of open games and checks of their laws."};
  app.set_version_flag("--version", ogame::kToolVersion);
  app.require_subcommand(1);

  std::string file, output;
  bool pretty = false;
  ogame::AnalyzeOptions analyze;
  std::string game, context;
  std::size_t budget = ogame::kDefaultBudget;
  bool timing = false;

  auto* cmd_analyze = app.add_subcommand("analyze", "Report the equilibria of the games in a file");
  cmd_analyze->add_option("file", file, "Game file (.og)")->required();
  cmd_analyze->add_option("--game", game, "Only analyze this game");
  cmd_analyze->add_option("--context", context,
                          "Context for a non-scalar game: HISTORY:FUNCTION (set mode) or FUNCTION (dcpo mode)");
  cmd_analyze->add_option("--budget", budget, "Largest strategy or context space to enumerate")->capture_default_str();
  cmd_analyze->add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  cmd_analyze->add_flag("--timing", timing, "Include wall-clock times (breaks byte-determinism)");
  cmd_analyze->add_option("--output", output, "Write to this file instead of stdout");

  ogame::LawOptions laws;
  bool corrupt = false;
  auto* cmd_laws = app.add_subcommand("laws", "Run the randomized law suites");
  cmd_laws->add_option("--seed", laws.seed, "Generator seed")->capture_default_str();
  cmd_laws->add_option("--instances", laws.instances, "Instances per law")->capture_default_str();
  cmd_laws->add_option("--max-atoms", laws.max_atoms, "Largest carrier size")
      ->check(CLI::Range(std::size_t{1}, std::size_t{3}))
      ->capture_default_str();
  cmd_laws->add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  cmd_laws->add_option("--output", output, "Write to this file instead of stdout");
  cmd_laws->add_flag("--corrupt-compose", corrupt, "Break lens composition (negative control)")->group("");

  auto* cmd_fmt = app.add_subcommand("fmt", "Print a game file in canonical form");
  cmd_fmt->add_option("file", file, "Game file (.og)")->required();
  cmd_fmt->add_option("--output", output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  if (*cmd_laws) {
    laws.corrupt_compose = corrupt;
    auto results = ogame::run_laws(laws);
    auto report = ogame::laws_report(laws, results);
    for (const auto& r : results) {
      if (!r.passed) std::cerr << "law " << r.name << " violated:\n" << r.counterexample << "\n";
    }
    if (!emit(pretty ? ogame::render_laws(report) : report.dump(2) + "\n", output)) {
      return fail("cannot write " + output, kExitError);
    }
    return report["passed"].get<bool>() ? 0 : kExitLaws;
  }

  auto text = read_file(file);
  if (!text) return fail("cannot read " + file, kExitError);

  try {
    if (*cmd_fmt) {
      if (!emit(ogame::dsl::pretty(ogame::dsl::parse(*text)), output)) return fail("cannot write " + output, kExitError);
      return 0;
    }
    if (!game.empty()) analyze.game = game;
    if (!context.empty()) analyze.context = context;
    analyze.budget = budget;
    analyze.timing = timing;
    auto report = ogame::analyze_report(file, *text, analyze);
    if (!emit(pretty ? ogame::render_analysis(report) : report.dump(2) + "\n", output)) {
      return fail("cannot write " + output, kExitError);
    }
    return 0;
  } catch (const ogame::dsl::DslError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return e.kind() == ogame::dsl::DslError::Kind::budget ? kExitBudget : kExitError;
  } catch (const ogame::BudgetExceeded& e) {
    return fail(e.what(), kExitBudget);
  } catch (const ogame::Error& e) {
    return fail(e.what(), kExitError);
  }
}
