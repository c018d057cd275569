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

#pragma once

// JSON reports for the command-line tool. Key order is fixed and nothing
// time-dependent is emitted unless asked for, so a report is a function of
// (input, options, tool version).

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <json.hpp>

#include "ogame/base.hpp"
#include "ogame/context.hpp"
#include "ogame/gamedsl.hpp"
#include "ogame/laws.hpp"
#include "ogame/opengame.hpp"

namespace ogame {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

class UnknownGame : public Error {
 public:
  using Error::Error;
};

struct AnalyzeOptions {
  std::optional<std::string> game;
  // Lens games: "HISTORY:FN" with FN : Y -> R. Int games: "FN" with
  // FN : Y × S -> X × R. Tables are reshaped up to re-bracketing.
  std::optional<std::string> context;
  std::size_t budget = kDefaultBudget;
  bool timing = false;
};

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline Json tool_json() { return Json{{"name", "ogame"}, {"version", kToolVersion}}; }

namespace report_detail {

inline FnTable reshape(const FnTable& t, const Carrier& src, const Carrier& dst, const std::string& what) {
  if (!Carrier::leaf_equivalent(t.src(), src) || !Carrier::leaf_equivalent(t.dst(), dst)) {
    throw InterfaceMismatch(what + " must have shape " + src.type_name() + " -> " + dst.type_name() + ", got " +
                            t.src().type_name() + " -> " + t.dst().type_name());
  }
  return compose_tables(canonical_map(t.dst(), dst), compose_tables(t, canonical_map(src, t.src())));
}

inline const FnTable& table(const dsl::Environment& env, const std::string& name) {
  auto it = env.tables.find(name);
  if (it == env.tables.end()) throw ValidationError("context names undeclared function '" + name + "'");
  return it->second;
}

inline LensContext lens_context(const dsl::Environment& env, const Interface& src, const Interface& dst, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ValidationError("lens contexts are written HISTORY:FUNCTION");
  auto hist = dsl::Elaborator::resolve_element(env.mode, src.fwd, dsl::parse_element(spec.substr(0, colon)));
  auto cont = reshape(table(env, spec.substr(colon + 1)), dst.fwd, dst.bwd, "continuation");
  return LensContext(src, dst, hist, cont);
}

inline TracedContext int_context(const dsl::Environment& env, const Interface& src, const Interface& dst, const std::string& spec) {
  auto t = reshape(table(env, spec), product(dst.fwd, src.bwd), product(src.fwd, dst.bwd), "context");
  return {IntMorphism(dst, src, t)};
}

template <class Cat>
Json analyze_game(const std::string& name, const OpenGame<Cat>& g, const dsl::Environment& env, const AnalyzeOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Json out;
  out["name"] = name;
  out["mode"] = to_string(env.mode);
  out["src"] = g.src().show();
  out["dst"] = g.dst().show();
  out["strategy_count"] = g.strategy_count();
  Json players = Json::array();
  for (const auto& l : g.leaves()) {
    players.push_back(Json{{"path", l.path}, {"kind", l.kind}, {"strategies", l.size()}});
  }
  out["players"] = players;

  std::optional<typename Cat::Context> k;
  if (opt.context) {
    if constexpr (std::is_same_v<Cat, LensCat>) {
      k = lens_context(env, g.src(), g.dst(), *opt.context);
    } else {
      k = int_context(env, g.src(), g.dst(), *opt.context);
    }
    out["context"] = k->show();
  } else if (g.src().is_trivial() && g.dst().is_trivial()) {
    k = trivial_context<Cat>(g.src(), g.dst());
    out["context"] = "trivial";
  } else {
    out["skipped"] = "game is not scalar; pass --context";
    return out;
  }

  Json eqs = Json::array();
  for (const auto& p : og_equilibria(g, *k, opt.budget)) {
    Json e;
    e["profile"] = g.show_profile(p);
    if constexpr (std::is_same_v<Cat, IntCat>) {
      Trace trace;
      g.equilibrium(p, *k, &trace);
      Json plays = Json::array();
      for (const auto& r : trace) plays.push_back(Json{{"path", r.path}, {"x", r.x}, {"y", r.y}, {"r", r.r}, {"s", r.s}});
      e["plays"] = plays;
    }
    eqs.push_back(std::move(e));
  }
  out["equilibrium_count"] = eqs.size();
  out["equilibria"] = std::move(eqs);
  if (opt.timing) {
    out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

}  // namespace report_detail

// Parses, elaborates and analyzes a game file. Throws dsl::DslError,
// UnknownGame, BudgetExceeded or other ogame::Error subclasses.
inline Json analyze_report(const std::string& path, std::string_view text, const AnalyzeOptions& opt) {
  auto env = dsl::load(text, opt.budget);
  std::vector<std::string> names = env.game_order;
  if (opt.game) {
    if (!env.games.count(*opt.game)) throw UnknownGame("unknown game '" + *opt.game + "'");
    names = {*opt.game};
  } else if (opt.context) {
    throw ValidationError("--context needs --game");
  }
  Json games = Json::array();
  for (const auto& name : names) {
    std::visit([&](const auto& g) { games.push_back(report_detail::analyze_game(name, g, env, opt)); }, env.games.at(name));
  }
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["tool"] = tool_json();
  out["input"] = Json{{"path", path}, {"fnv1a64", hex64(fnv1a64(text))}};
  out["mode"] = to_string(env.mode);
  out["games"] = std::move(games);
  return out;
}

inline Json laws_report(const LawOptions& opt, const std::vector<LawResult>& results) {
  Json laws = Json::array();
  bool passed = true;
  for (const auto& r : results) {
    Json j{{"name", r.name}, {"instances", r.instances}, {"passed", r.passed}};
    if (!r.passed) j["counterexample"] = r.counterexample;
    passed = passed && r.passed;
    laws.push_back(std::move(j));
  }
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["tool"] = tool_json();
  out["seed"] = opt.seed;
  out["instances"] = opt.instances;
  out["max_atoms"] = opt.max_atoms;
  out["passed"] = passed;
  out["laws"] = std::move(laws);
  return out;
}

// Human-readable rendering of an analysis report.
inline std::string render_analysis(const Json& report) {
  std::string out;
  for (const auto& g : report["games"]) {
    out += "game " + g["name"].get<std::string>() + " [" + g["mode"].get<std::string>() + "] " + g["src"].get<std::string>() +
           " -> " + g["dst"].get<std::string>() + "\n";
    out += "  strategy profiles: " + std::to_string(g["strategy_count"].get<std::uint64_t>()) + "\n";
    for (const auto& p : g["players"]) {
      const auto path = p["path"].get<std::string>();
      out += "  player " + (path.empty() ? std::string("(root)") : path) + ": " + p["kind"].get<std::string>() + ", " +
             std::to_string(p["strategies"].get<std::size_t>()) + " strategies\n";
    }
    if (g.contains("skipped")) {
      out += "  skipped: " + g["skipped"].get<std::string>() + "\n";
      continue;
    }
    out += "  equilibria: " + std::to_string(g["equilibrium_count"].get<std::size_t>()) + "\n";
    for (const auto& e : g["equilibria"]) {
      out += "   ";
      for (const auto& s : e["profile"]) out += " " + s.get<std::string>();
      out += "\n";
      if (e.contains("plays")) {
        for (const auto& r : e["plays"]) {
          out += "      play " + r["path"].get<std::string>() + ": x=" + r["x"].get<std::string>() + " y=" +
                 r["y"].get<std::string>() + " r=" + r["r"].get<std::string>() + " s=" + r["s"].get<std::string>() + "\n";
        }
      }
    }
  }
  return out;
}

inline std::string render_laws(const Json& report) {
  std::string out;
  for (const auto& l : report["laws"]) {
    out += (l["passed"].get<bool>() ? "pass " : "FAIL ") + l["name"].get<std::string>() + " (" +
           std::to_string(l["instances"].get<std::size_t>()) + " instances)\n";
    if (l.contains("counterexample")) out += l["counterexample"].get<std::string>() + "\n";
  }
  return out;
}

}  // namespace ogame
