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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "support.hpp"

namespace ogame {
namespace {

namespace fs = std::filesystem;
using dsl::GExpr;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path source_dir() { return fs::path(OGAME_SOURCE_DIR); }

std::string fixture(const std::string& name) { return slurp(source_dir() / "games" / name); }

std::vector<fs::path> files_in(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const GExpr& game_body(const dsl::GameFile& f, const std::string& name) {
  for (const auto& d : f.decls) {
    if (auto* g = std::get_if<dsl::GameDecl>(&d); g && g->name == name) return g->body;
  }
  throw std::runtime_error("no game " + name);
}

std::string error_of(std::string_view text) {
  try {
    dsl::load(text, kDefaultBudget);
  } catch (const dsl::DslError& e) {
    return e.what();
  }
  return "no error";
}

template <class Game>
std::set<std::vector<std::string>> shown_equilibria(const Game& g) {
  using Cat = std::conditional_t<std::is_same_v<Game, LensGame>, LensCat, IntCat>;
  std::set<std::vector<std::string>> out;
  for (const auto& p : og_equilibria(g, trivial_context<Cat>(g.src(), g.dst()))) out.insert(g.show_profile(p));
  return out;
}

TEST(Parse, SingleDecision) {
  auto f = dsl::parse("#mode set\ngame g = decision(X, Y)\n");
  ASSERT_EQ(f.decls.size(), 1u);
  const auto& g = game_body(f, "g");
  EXPECT_EQ(g.kind, GExpr::Kind::decision);
  EXPECT_EQ(dsl::pretty(g.types[0]), "X");
  EXPECT_EQ(dsl::pretty(g.types[1]), "Y");
}

TEST(Parse, FixtureIsFeedbackOverTwoDecisions) {
  auto f = dsl::parse(fixture("fixpoint_pennies.og"));
  EXPECT_EQ(f.mode, Mode::dcpo);
  const auto& g = game_body(f, "g");
  ASSERT_EQ(g.kind, GExpr::Kind::feedback);
  EXPECT_EQ(dsl::pretty(g.types[0]), "Y * X");
  const auto& inner = g.args[0];
  ASSERT_EQ(inner.kind, GExpr::Kind::seq);
  EXPECT_EQ(inner.args[0].name, "players");
  const auto& players = game_body(f, "players");
  ASSERT_EQ(players.kind, GExpr::Kind::par);
  EXPECT_EQ(players.args[0].kind, GExpr::Kind::decision);
  EXPECT_EQ(players.args[1].kind, GExpr::Kind::decision);
}

TEST(Parse, Precedence) {
  auto f = dsl::parse("#mode set\ngame g = a || b ; c || d ; e\n");
  const auto& g = game_body(f, "g");
  // ((a || b) ; (c || d)) ; e
  ASSERT_EQ(g.kind, GExpr::Kind::seq);
  EXPECT_EQ(g.args[1].name, "e");
  ASSERT_EQ(g.args[0].kind, GExpr::Kind::seq);
  EXPECT_EQ(g.args[0].args[0].kind, GExpr::Kind::par);
  EXPECT_EQ(g.args[0].args[1].kind, GExpr::Kind::par);
  auto h = game_body(dsl::parse("#mode set\ngame h = a || b || c\n"), "h");
  ASSERT_EQ(h.kind, GExpr::Kind::par);
  EXPECT_EQ(h.args[0].kind, GExpr::Kind::par);
}

TEST(Parse, UnbalancedParenthesisReportsPosition) {
  try {
    dsl::parse("#mode set\ngame g = (decision(1, X)\n");
    FAIL();
  } catch (const dsl::DslError& e) {
    EXPECT_EQ(e.kind(), dsl::DslError::Kind::syntax);
    EXPECT_EQ(e.pos().line, 3);
    EXPECT_EQ(e.pos().col, 1);
  }
}

TEST(Parse, CommentsAndWhitespace) {
  auto a = dsl::parse("#mode set // pragma\n\n// comment\ndomain X = {a,b}\n");
  auto b = dsl::parse("#mode set\ndomain X = { a , b }");
  EXPECT_EQ(a, b);
}

TEST(Elaborate, FixtureIsScalarWithFullStrategySpace) {
  auto env = dsl::load(fixture("fixpoint_pennies.og"), kDefaultBudget);
  const auto& g = std::get<IntGame>(env.games.at("g"));
  EXPECT_TRUE(g.src().is_trivial());
  EXPECT_TRUE(g.dst().is_trivial());
  EXPECT_EQ(g.strategy_count(), 121u);
  EXPECT_EQ(shown_equilibria(g), shown_equilibria(og_fixpoint_pennies()));
}

TEST(Elaborate, BimatrixFixturesMatchBuilder) {
  auto env = dsl::load(fixture("bimatrix_pennies.og"), kDefaultBudget);
  EXPECT_TRUE(shown_equilibria(std::get<LensGame>(env.games.at("pennies"))).empty());
  auto pd = dsl::load(fixture("prisoners_dilemma.og"), kDefaultBudget);
  EXPECT_EQ(shown_equilibria(std::get<LensGame>(pd.games.at("dilemma"))),
            (std::set<std::vector<std::string>>{{"D", "D"}}));
  auto co = dsl::load(fixture("coordination.og"), kDefaultBudget);
  const auto& side = co.domains.at("Side");
  EXPECT_EQ(shown_equilibria(std::get<LensGame>(co.games.at("meet"))), shown_equilibria(og_bimatrix(co.tables.at("U"))));
  EXPECT_EQ(side.size(), 2u);
}

TEST(Elaborate, ThreatFixtureMatchesBuilder) {
  auto env = dsl::load(fixture("entry_deterrence.og"), kDefaultBudget);
  const auto& u = env.tables.at("U");
  auto built = og_sequential(identity_table(env.domains.at("Entry")), u);
  const auto& g = std::get<LensGame>(env.games.at("threat"));
  EXPECT_EQ(g.strategy_count(), 8u);
  EXPECT_EQ(shown_equilibria(g), shown_equilibria(built));
}

TEST(Elaborate, SequentialTyping) {
  const std::string head =
      "#mode set\ndomain X = {x}\ndomain Y = {a, b}\ndomain Z = {c}\n"
      "payoff U(Y, Y) {\n (a, a) -> (1, 1)\n (a, b) -> (0, 0)\n (b, a) -> (0, 0)\n (b, b) -> (1, 1)\n}\n";
  auto env = dsl::load(head + "game ok = decision(X, Y) ; id(Y, Real)\n", kDefaultBudget);
  const auto& ok = std::get<LensGame>(env.games.at("ok"));
  EXPECT_EQ(ok.src().fwd.type_name(), "X");
  auto msg = error_of(head + "game bad = decision(X, Y) ; id(Z, Real)\n");
  EXPECT_NE(msg.find("(Y, Real)"), std::string::npos) << msg;
  EXPECT_NE(msg.find("(Z, Real)"), std::string::npos) << msg;
}

TEST(Elaborate, TensorTwistsInterfaces) {
  auto env = dsl::load("#mode set\ndomain X = {a}\ndomain Y = {b}\ngame g = decision(X, Y) || id(Y, X)\n", kDefaultBudget);
  const auto& g = std::get<LensGame>(env.games.at("g"));
  EXPECT_EQ(g.src().show(), "(X * Y, X * 1)");
  EXPECT_EQ(g.dst().show(), "(Y * Y, X * Real)");
}

TEST(Elaborate, ModeErrors) {
  EXPECT_NE(error_of("#mode set\ndomain X = {a}\ngame g = transpose(decision(X, X))\n").find("transpose needs #mode dcpo"),
            std::string::npos);
  EXPECT_NE(error_of("#mode set\ndomain X = {a}\ngame g = feedback(X, decision(X, X))\n").find("feedback needs #mode dcpo"),
            std::string::npos);
}

TEST(Elaborate, OmittedBottomEntriesDefaultToBottom) {
  auto env = dsl::load("#mode dcpo\ndomain X = {a, b}\nfn f : X -> X {\n a -> b\n b -> a\n}\n", kDefaultBudget);
  const auto& f = env.tables.at("f");
  EXPECT_EQ(f.image(), (std::vector<Elem>{0, 2, 1}));
}

TEST(Elaborate, LazyTablesNeedTheirBottomRow) {
  auto msg = error_of("#mode dcpo\ndomain X = {a, b}\nfn f : X -> X {\n _ -> a\n a -> a\n}\n");
  EXPECT_NE(msg.find("missing entry for b"), std::string::npos) << msg;
}

TEST(Elaborate, PayoffDomainCollectsLiterals) {
  auto env = dsl::load(fixture("prisoners_dilemma.og"), kDefaultBudget);
  EXPECT_EQ(env.real.atoms(), (std::vector<std::string>{"-3", "-2", "-1", "0"}));
}

TEST(Elaborate, BudgetIsReported) {
  try {
    dsl::load(fixture("fixpoint_pennies.og"), 5);
    FAIL();
  } catch (const dsl::DslError& e) {
    EXPECT_EQ(e.kind(), dsl::DslError::Kind::budget);
  }
}

TEST(Diagnostics, GoldenMessages) {
  const auto files = files_in(source_dir() / "tests" / "data" / "malformed", ".og");
  ASSERT_GE(files.size(), 20u);
  for (const auto& f : files) {
    auto expected = slurp(fs::path(f).replace_extension(".expected"));
    while (!expected.empty() && expected.back() == '\n') expected.pop_back();
    EXPECT_EQ(error_of(slurp(f)), expected) << f.filename();
  }
}

TEST(Pretty, FixturesRoundTrip) {
  for (const auto& f : files_in(source_dir() / "games", ".og")) {
    auto ast = dsl::parse(slurp(f));
    auto once = dsl::pretty(ast);
    EXPECT_EQ(dsl::parse(once), ast) << f.filename();
    EXPECT_EQ(dsl::pretty(dsl::parse(once)), once) << f.filename();
  }
}

TEST(Pretty, CanonicalLayout) {
  auto text = dsl::pretty(dsl::parse("#mode dcpo\ndomain X={a,b} game g=(decision(X,X)||copy(X));lift f"));
  EXPECT_EQ(text, "#mode dcpo\n\ndomain X = {a, b}\n\ngame g = decision(X, X) || copy(X) ; lift f\n");
}

// Random syntax trees: names avoid keywords, tuples have two or more items.
struct AstGen {
  Rng rng;
  std::string ident() {
    static const char* names[] = {"X", "Y", "Coin", "a", "b", "f", "g2", "U'", "_x"};
    return names[rng.below(std::size(names))];
  }
  dsl::TypeExpr type(int depth) {
    dsl::TypeExpr t;
    auto r = rng.below(depth > 0 ? 4 : 2);
    if (r == 0) {
      t.kind = dsl::TypeExpr::Kind::unit;
    } else if (r == 1) {
      t.name = ident();
    } else {
      t.kind = dsl::TypeExpr::Kind::product;
      t.parts = {type(depth - 1), type(depth - 1)};
    }
    return t;
  }
  dsl::ElemExpr elem(int depth) {
    dsl::ElemExpr e;
    switch (rng.below(depth > 0 ? 5 : 4)) {
      case 0: e.kind = dsl::ElemExpr::Kind::atom; e.text = ident(); break;
      case 1: e.kind = dsl::ElemExpr::Kind::bottom; e.text = "_"; break;
      case 2: e.kind = dsl::ElemExpr::Kind::number; e.text = rng.below(2) ? "-3" : "7/2"; break;
      case 3: e.kind = dsl::ElemExpr::Kind::star; e.text = "*"; break;
      default:
        e.kind = dsl::ElemExpr::Kind::tuple;
        for (std::size_t i = 0, n = 2 + rng.below(2); i < n; ++i) e.items.push_back(elem(depth - 1));
    }
    return e;
  }
  GExpr game(int depth) {
    using K = GExpr::Kind;
    GExpr g;
    const K leafs[] = {K::decision, K::lift, K::liftop, K::copy, K::del, K::counit, K::id, K::ref};
    const K nodes[] = {K::seq, K::par, K::transpose, K::feedback};
    g.kind = depth > 0 && rng.below(2) ? nodes[rng.below(4)] : leafs[rng.below(8)];
    switch (g.kind) {
      case K::seq: case K::par: g.args = {game(depth - 1), game(depth - 1)}; break;
      case K::transpose: g.args = {game(depth - 1)}; break;
      case K::feedback: g.types = {type(2)}; g.args = {game(depth - 1)}; break;
      case K::decision: case K::id: g.types = {type(2), type(2)}; break;
      case K::copy: case K::del: case K::counit: g.types = {type(2)}; break;
      default: g.name = ident();
    }
    return g;
  }
  dsl::GameFile file() {
    dsl::GameFile f;
    f.mode = rng.below(2) ? Mode::set : Mode::dcpo;
    for (std::size_t i = 0, n = rng.below(5); i < n; ++i) {
      switch (rng.below(4)) {
        case 0: f.decls.push_back(dsl::DomainDecl{ident(), {ident(), ident()}, {}}); break;
        case 1: f.decls.push_back(dsl::FnDecl{ident(), type(2), type(2), {{elem(2), elem(2)}}, {}}); break;
        case 2: f.decls.push_back(dsl::PayoffDecl{ident(), {type(1), type(1)}, {{elem(2), elem(2)}, {elem(1), elem(1)}}, {}}); break;
        default: f.decls.push_back(dsl::GameDecl{ident(), game(4), {}});
      }
    }
    return f;
  }
};

TEST(Pretty, RandomTreesRoundTrip) {
  AstGen gen{Rng(21)};
  for (int i = 0; i < 3000; ++i) {
    auto f = gen.file();
    auto text = dsl::pretty(f);
    dsl::GameFile back;
    ASSERT_NO_THROW(back = dsl::parse(text)) << text;
    ASSERT_EQ(back, f) << text;
  }
}

TEST(Fuzz, ArbitraryBytesNeverCrash) {
  Rng rng(22);
  const std::string alphabet = "#mode set dcpo domain fn payoff game decision lift copy ( ) { } , ; || -> * _ 1 a X\n/";
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    for (std::size_t n = rng.below(80); n > 0; --n) {
      text += rng.below(4) ? alphabet[rng.below(alphabet.size())] : static_cast<char>(rng.below(256));
    }
    try {
      dsl::load(text, 10000);
    } catch (const dsl::DslError&) {
    }
  }
}

}  // namespace
}  // namespace ogame
