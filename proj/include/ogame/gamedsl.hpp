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

// The game description language.
//
//   file    := "#mode" ("set" | "dcpo") decl*
//   decl    := "domain" ID "=" "{" ID ("," ID)* "}"
//            | "fn" ID ":" type "->" type "{" (elem "->" elem)+ "}"
//            | "payoff" ID "(" type ("," type)* ")" "{" (elem "->" elem)+ "}"
//            | "game" ID "=" gexpr
//   gexpr   := gexpr ";" gexpr | gexpr "||" gexpr
//            | "decision" "(" type "," type ")" | "lift" ID | "liftop" ID
//            | "copy" "(" type ")" | "delete" "(" type ")" | "counit" "(" type ")"
//            | "id" "(" type "," type ")"
//            | "transpose" "(" gexpr ")" | "feedback" "(" type "," gexpr ")"
//            | ID | "(" gexpr ")"
//   type    := type "*" type | ID | "1" | "(" type ")"
//   elem    := ID | "_" | NUMBER | "*" | "(" elem ("," elem)* ")"
//
// ";" binds looser than "||"; both associate to the left. "_" is ⊥, "*" the
// unit element, and "Real" the payoff domain made of every number literal in
// the file. Comments run from "//" to the end of the line.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ogame/base.hpp"
#include "ogame/context.hpp"
#include "ogame/intcat.hpp"
#include "ogame/lens.hpp"
#include "ogame/opengame.hpp"

namespace ogame::dsl {

struct Pos {
  int line = 1;
  int col = 1;
};

class DslError : public Error {
 public:
  enum class Kind { syntax, elaboration, budget };

  DslError(Kind kind, Pos pos, const std::string& message)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": error: " + message),
        kind_(kind),
        pos_(pos),
        message_(message) {}

  Kind kind() const { return kind_; }
  Pos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  Pos pos_;
  std::string message_;
};

// --- syntax tree ----------------------------------------------------------------
// Equality is structural: positions are ignored.

struct TypeExpr {
  enum class Kind { name, unit, product };
  Kind kind = Kind::name;
  std::string name;
  std::vector<TypeExpr> parts;  // product: {left, right}
  Pos pos;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b) {
    return a.kind == b.kind && a.name == b.name && a.parts == b.parts;
  }
};

struct ElemExpr {
  enum class Kind { atom, bottom, number, star, tuple };
  Kind kind = Kind::atom;
  std::string text;
  std::vector<ElemExpr> items;
  Pos pos;

  friend bool operator==(const ElemExpr& a, const ElemExpr& b) {
    return a.kind == b.kind && a.text == b.text && a.items == b.items;
  }
};

struct Entry {
  ElemExpr in, out;
  friend bool operator==(const Entry&, const Entry&) = default;
};

struct DomainDecl {
  std::string name;
  std::vector<std::string> atoms;
  Pos pos;
  friend bool operator==(const DomainDecl& a, const DomainDecl& b) { return a.name == b.name && a.atoms == b.atoms; }
};

struct FnDecl {
  std::string name;
  TypeExpr src, dst;
  std::vector<Entry> entries;
  Pos pos;
  friend bool operator==(const FnDecl& a, const FnDecl& b) {
    return a.name == b.name && a.src == b.src && a.dst == b.dst && a.entries == b.entries;
  }
};

struct PayoffDecl {
  std::string name;
  std::vector<TypeExpr> params;
  std::vector<Entry> entries;
  Pos pos;
  friend bool operator==(const PayoffDecl& a, const PayoffDecl& b) {
    return a.name == b.name && a.params == b.params && a.entries == b.entries;
  }
};

struct GExpr {
  enum class Kind { seq, par, decision, lift, liftop, copy, del, counit, id, transpose, feedback, ref };
  Kind kind = Kind::ref;
  std::string name;
  std::vector<TypeExpr> types;
  std::vector<GExpr> args;
  Pos pos;

  friend bool operator==(const GExpr& a, const GExpr& b) {
    return a.kind == b.kind && a.name == b.name && a.types == b.types && a.args == b.args;
  }
};

struct GameDecl {
  std::string name;
  GExpr body;
  Pos pos;
  friend bool operator==(const GameDecl& a, const GameDecl& b) { return a.name == b.name && a.body == b.body; }
};

using Decl = std::variant<DomainDecl, FnDecl, PayoffDecl, GameDecl>;

struct GameFile {
  Mode mode = Mode::set;
  std::vector<Decl> decls;
  friend bool operator==(const GameFile& a, const GameFile& b) { return a.mode == b.mode && a.decls == b.decls; }
};

inline const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> k = {"domain", "fn",     "payoff", "game",      "decision",
                                                       "lift",   "liftop", "copy",   "delete",    "counit",
                                                       "id",     "transpose", "feedback"};
  return k;
}

// --- lexer ------------------------------------------------------------------------

enum class Tok { ident, number, lbrace, rbrace, lparen, rparen, comma, colon, arrow, semi, bars, star, equals, bottom, pragma, end };

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::ident:
      return "'" + t.text + "'";
    case Tok::number:
      return "number " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Pos at = pos_;
      if (i_ >= text_.size()) {
        out.push_back({Tok::end, "", at});
        return out;
      }
      char c = text_[i_];
      auto single = [&](Tok kind) {
        advance();
        out.push_back({kind, std::string(1, c), at});
      };
      switch (c) {
        case '{': single(Tok::lbrace); continue;
        case '}': single(Tok::rbrace); continue;
        case '(': single(Tok::lparen); continue;
        case ')': single(Tok::rparen); continue;
        case ',': single(Tok::comma); continue;
        case ':': single(Tok::colon); continue;
        case ';': single(Tok::semi); continue;
        case '*': single(Tok::star); continue;
        case '=': single(Tok::equals); continue;
        default: break;
      }
      if (c == '|') {
        if (peek(1) != '|') fail(at, "expected '||'");
        advance();
        advance();
        out.push_back({Tok::bars, "||", at});
      } else if (c == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::arrow, "->", at});
      } else if (c == '-' || is_digit(c)) {
        out.push_back({Tok::number, number(at), at});
      } else if (c == '#') {
        advance();
        std::string word = ident_chars();
        if (word != "mode") fail(at, "unknown directive '#" + word + "'");
        out.push_back({Tok::pragma, "#mode", at});
      } else if (c == '_' && !is_ident_char(peek(1))) {
        single(Tok::bottom);
      } else if (is_ident_start(c)) {
        out.push_back({Tok::ident, ident_chars(), at});
      } else {
        fail(at, "unexpected character " + show_byte(static_cast<unsigned char>(c)));
      }
    }
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c) || c == '\''; }

  static std::string show_byte(unsigned char c) {
    if (c >= 0x20 && c < 0x7f) return std::string("'") + static_cast<char>(c) + "'";
    static const char* hex = "0123456789abcdef";
    return std::string("byte 0x") + hex[c >> 4] + hex[c & 15];
  }

  [[noreturn]] static void fail(Pos at, const std::string& msg) { throw DslError(DslError::Kind::syntax, at, msg); }

  char peek(std::size_t k) const { return i_ + k < text_.size() ? text_[i_ + k] : '\0'; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string ident_chars() {
    std::string s;
    while (i_ < text_.size() && is_ident_char(text_[i_])) {
      s += text_[i_];
      advance();
    }
    return s;
  }

  std::string number(Pos at) {
    std::string s;
    if (text_[i_] == '-') {
      s += '-';
      advance();
    }
    auto digits = [&] {
      std::size_t n = 0;
      while (i_ < text_.size() && is_digit(text_[i_])) {
        s += text_[i_];
        advance();
        ++n;
      }
      return n;
    };
    if (digits() == 0) fail(at, "malformed number");
    if (i_ < text_.size() && text_[i_] == '/') {
      s += '/';
      advance();
      if (digits() == 0) fail(at, "malformed number");
    }
    if (i_ < text_.size() && is_ident_char(text_[i_])) fail(at, "malformed number");
    return s;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Pos pos_;
};

// --- parser -----------------------------------------------------------------------

inline constexpr int kMaxNesting = 128;
inline constexpr std::size_t kMaxNodes = 4096;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  GameFile file() {
    GameFile f;
    if (cur().kind != Tok::pragma) fail(cur().pos, "expected '#mode' at start of file");
    next();
    Token m = expect(Tok::ident, "'set' or 'dcpo'");
    if (m.text == "set") {
      f.mode = Mode::set;
    } else if (m.text == "dcpo") {
      f.mode = Mode::dcpo;
    } else {
      fail(m.pos, "unknown mode '" + m.text + "', expected 'set' or 'dcpo'");
    }
    while (cur().kind != Tok::end) f.decls.push_back(decl());
    return f;
  }

  ElemExpr lone_element() {
    ElemExpr e = elem();
    expect(Tok::end, "end of element");
    return e;
  }

 private:
  [[noreturn]] static void fail(Pos at, const std::string& msg) { throw DslError(DslError::Kind::syntax, at, msg); }

  const Token& cur() const { return toks_[i_]; }
  Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool at_word(std::string_view w) const { return cur().kind == Tok::ident && cur().text == w; }

  Token expect(Tok kind, const std::string& what) {
    if (cur().kind != kind) fail(cur().pos, "expected " + what + ", found " + describe(cur()));
    return next();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail(cur().pos, "expected '" + std::string(w) + "', found " + describe(cur()));
    next();
  }

  Token name(const std::string& what) {
    Token t = expect(Tok::ident, what);
    if (keywords().count(t.text)) fail(t.pos, "'" + t.text + "' is a reserved word");
    return t;
  }

  void count_node(Pos at) {
    if (++nodes_ > kMaxNodes) fail(at, "declaration too large");
  }

  struct Nest {
    Parser& p;
    Nest(Parser& parser, Pos at) : p(parser) {
      if (++p.depth_ > kMaxNesting) fail(at, "nesting too deep");
    }
    ~Nest() { --p.depth_; }
  };

  Decl decl() {
    nodes_ = 0;
    const Token kw = cur();
    if (at_word("domain")) {
      next();
      DomainDecl d;
      d.pos = kw.pos;
      d.name = name("domain name").text;
      expect(Tok::equals, "'='");
      expect(Tok::lbrace, "'{'");
      d.atoms.push_back(name("atom").text);
      while (cur().kind == Tok::comma) {
        next();
        count_node(cur().pos);
        d.atoms.push_back(name("atom").text);
      }
      expect(Tok::rbrace, "'}' or ','");
      return d;
    }
    if (at_word("fn")) {
      next();
      FnDecl d;
      d.pos = kw.pos;
      d.name = name("function name").text;
      expect(Tok::colon, "':'");
      d.src = type();
      expect(Tok::arrow, "'->'");
      d.dst = type();
      d.entries = entries();
      return d;
    }
    if (at_word("payoff")) {
      next();
      PayoffDecl d;
      d.pos = kw.pos;
      d.name = name("payoff name").text;
      expect(Tok::lparen, "'('");
      d.params.push_back(type());
      while (cur().kind == Tok::comma) {
        next();
        d.params.push_back(type());
      }
      expect(Tok::rparen, "')' or ','");
      d.entries = entries();
      return d;
    }
    if (at_word("game")) {
      next();
      GameDecl d;
      d.pos = kw.pos;
      d.name = name("game name").text;
      expect(Tok::equals, "'='");
      d.body = gexpr();
      return d;
    }
    fail(kw.pos, "expected a declaration, found " + describe(kw));
  }

  std::vector<Entry> entries() {
    expect(Tok::lbrace, "'{'");
    std::vector<Entry> out;
    do {
      Entry e;
      e.in = elem();
      expect(Tok::arrow, "'->'");
      e.out = elem();
      out.push_back(std::move(e));
    } while (cur().kind != Tok::rbrace && cur().kind != Tok::end);
    expect(Tok::rbrace, "'}'");
    return out;
  }

  TypeExpr type() {
    TypeExpr left = type_atom();
    while (cur().kind == Tok::star) {
      Pos at = next().pos;
      count_node(at);
      TypeExpr right = type_atom();
      TypeExpr p;
      p.kind = TypeExpr::Kind::product;
      p.pos = at;
      p.parts.push_back(std::move(left));
      p.parts.push_back(std::move(right));
      left = std::move(p);
    }
    return left;
  }

  TypeExpr type_atom() {
    const Token t = cur();
    count_node(t.pos);
    TypeExpr e;
    e.pos = t.pos;
    if (t.kind == Tok::number && t.text == "1") {
      next();
      e.kind = TypeExpr::Kind::unit;
      return e;
    }
    if (t.kind == Tok::lparen) {
      Nest n(*this, t.pos);
      next();
      TypeExpr inner = type();
      expect(Tok::rparen, "')'");
      return inner;
    }
    e.kind = TypeExpr::Kind::name;
    e.name = name("a type").text;
    return e;
  }

  ElemExpr elem() {
    const Token t = cur();
    count_node(t.pos);
    ElemExpr e;
    e.pos = t.pos;
    switch (t.kind) {
      case Tok::ident:
        e.kind = ElemExpr::Kind::atom;
        e.text = name("an element").text;
        return e;
      case Tok::bottom:
        next();
        e.kind = ElemExpr::Kind::bottom;
        e.text = "_";
        return e;
      case Tok::star:
        next();
        e.kind = ElemExpr::Kind::star;
        e.text = "*";
        return e;
      case Tok::number:
        next();
        e.kind = ElemExpr::Kind::number;
        e.text = t.text;
        return e;
      case Tok::lparen: {
        Nest n(*this, t.pos);
        next();
        std::vector<ElemExpr> items;
        items.push_back(elem());
        while (cur().kind == Tok::comma) {
          next();
          items.push_back(elem());
        }
        expect(Tok::rparen, "')' or ','");
        if (items.size() == 1) return std::move(items.front());
        e.kind = ElemExpr::Kind::tuple;
        e.items = std::move(items);
        return e;
      }
      default:
        fail(t.pos, "expected an element, found " + describe(t));
    }
  }

  GExpr gexpr() {
    GExpr left = par();
    while (cur().kind == Tok::semi) {
      Pos at = next().pos;
      GExpr right = par();
      left = binary(GExpr::Kind::seq, at, std::move(left), std::move(right));
    }
    return left;
  }

  GExpr par() {
    GExpr left = prim();
    while (cur().kind == Tok::bars) {
      Pos at = next().pos;
      GExpr right = prim();
      left = binary(GExpr::Kind::par, at, std::move(left), std::move(right));
    }
    return left;
  }

  GExpr binary(GExpr::Kind kind, Pos at, GExpr l, GExpr r) {
    count_node(at);
    GExpr e;
    e.kind = kind;
    e.pos = at;
    e.args.push_back(std::move(l));
    e.args.push_back(std::move(r));
    return e;
  }

  GExpr prim() {
    const Token t = cur();
    count_node(t.pos);
    GExpr e;
    e.pos = t.pos;
    if (t.kind == Tok::lparen) {
      Nest n(*this, t.pos);
      next();
      GExpr inner = gexpr();
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (t.kind != Tok::ident) fail(t.pos, "expected a game expression, found " + describe(t));
    using K = GExpr::Kind;
    static const std::map<std::string, K, std::less<>> kinds = {
        {"decision", K::decision}, {"lift", K::lift},     {"liftop", K::liftop},     {"copy", K::copy},
        {"delete", K::del},        {"counit", K::counit}, {"id", K::id},             {"transpose", K::transpose},
        {"feedback", K::feedback}};
    auto it = kinds.find(t.text);
    if (it == kinds.end()) {
      if (keywords().count(t.text)) fail(t.pos, "expected a game expression, found " + describe(t));
      next();
      e.kind = K::ref;
      e.name = t.text;
      return e;
    }
    next();
    e.kind = it->second;
    switch (e.kind) {
      case K::lift:
      case K::liftop:
        e.name = name("a function name").text;
        return e;
      case K::copy:
      case K::del:
      case K::counit: {
        Nest n(*this, t.pos);
        expect(Tok::lparen, "'('");
        e.types.push_back(type());
        expect(Tok::rparen, "')'");
        return e;
      }
      case K::decision:
      case K::id: {
        Nest n(*this, t.pos);
        expect(Tok::lparen, "'('");
        e.types.push_back(type());
        expect(Tok::comma, "','");
        e.types.push_back(type());
        expect(Tok::rparen, "')'");
        return e;
      }
      case K::transpose: {
        Nest n(*this, t.pos);
        expect(Tok::lparen, "'('");
        e.args.push_back(gexpr());
        expect(Tok::rparen, "')'");
        return e;
      }
      case K::feedback: {
        Nest n(*this, t.pos);
        expect(Tok::lparen, "'('");
        e.types.push_back(type());
        expect(Tok::comma, "','");
        e.args.push_back(gexpr());
        expect(Tok::rparen, "')'");
        return e;
      }
      default:
        fail(t.pos, "internal: unhandled game form");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int depth_ = 0;
  std::size_t nodes_ = 0;
};

inline GameFile parse(std::string_view text) { return Parser(Lexer(text).run()).file(); }

// A single element literal, e.g. "(a, _)".
inline ElemExpr parse_element(std::string_view text) { return Parser(Lexer(text).run()).lone_element(); }

// --- pretty printer ---------------------------------------------------------------

inline std::string pretty(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::name:
      return t.name;
    case TypeExpr::Kind::unit:
      return "1";
    case TypeExpr::Kind::product: {
      std::string r = pretty(t.parts[1]);
      if (t.parts[1].kind == TypeExpr::Kind::product) r = "(" + r + ")";
      return pretty(t.parts[0]) + " * " + r;
    }
  }
  return {};
}

inline std::string pretty(const ElemExpr& e) {
  if (e.kind != ElemExpr::Kind::tuple) return e.text;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) out += (i ? ", " : "") + pretty(e.items[i]);
  return out + ")";
}

// level: 0 inside ";" (or top), 1 inside "||", 2 operand position.
inline std::string pretty(const GExpr& g, int level = 0) {
  using K = GExpr::Kind;
  auto wrap = [](bool yes, std::string s) { return yes ? "(" + s + ")" : s; };
  switch (g.kind) {
    case K::seq:
      return wrap(level > 0, pretty(g.args[0], 0) + " ; " + pretty(g.args[1], 1));
    case K::par:
      return wrap(level > 1, pretty(g.args[0], 1) + " || " + pretty(g.args[1], 2));
    case K::decision:
      return "decision(" + pretty(g.types[0]) + ", " + pretty(g.types[1]) + ")";
    case K::id:
      return "id(" + pretty(g.types[0]) + ", " + pretty(g.types[1]) + ")";
    case K::lift:
      return "lift " + g.name;
    case K::liftop:
      return "liftop " + g.name;
    case K::copy:
      return "copy(" + pretty(g.types[0]) + ")";
    case K::del:
      return "delete(" + pretty(g.types[0]) + ")";
    case K::counit:
      return "counit(" + pretty(g.types[0]) + ")";
    case K::transpose:
      return "transpose(" + pretty(g.args[0]) + ")";
    case K::feedback:
      return "feedback(" + pretty(g.types[0]) + ", " + pretty(g.args[0]) + ")";
    case K::ref:
      return g.name;
  }
  return {};
}

inline std::string pretty(const GameFile& f) {
  std::string out = "#mode " + std::string(to_string(f.mode)) + "\n";
  auto entries = [&](const std::vector<Entry>& es) {
    std::string s = " {\n";
    for (const auto& e : es) s += "  " + pretty(e.in) + " -> " + pretty(e.out) + "\n";
    return s + "}\n";
  };
  for (const auto& d : f.decls) {
    out += "\n";
    if (auto* dom = std::get_if<DomainDecl>(&d)) {
      out += "domain " + dom->name + " = {";
      for (std::size_t i = 0; i < dom->atoms.size(); ++i) out += (i ? ", " : "") + dom->atoms[i];
      out += "}\n";
    } else if (auto* fn = std::get_if<FnDecl>(&d)) {
      out += "fn " + fn->name + " : " + pretty(fn->src) + " -> " + pretty(fn->dst) + entries(fn->entries);
    } else if (auto* pay = std::get_if<PayoffDecl>(&d)) {
      out += "payoff " + pay->name + "(";
      for (std::size_t i = 0; i < pay->params.size(); ++i) out += (i ? ", " : "") + pretty(pay->params[i]);
      out += ")" + entries(pay->entries);
    } else if (auto* game = std::get_if<GameDecl>(&d)) {
      out += "game " + game->name + " = " + pretty(game->body) + "\n";
    }
  }
  return out;
}

// --- elaboration ------------------------------------------------------------------

using AnyGame = std::variant<LensGame, IntGame>;

struct Environment {
  Mode mode = Mode::set;
  Carrier real;
  std::map<std::string, Carrier> domains;
  std::map<std::string, FnTable> tables;
  std::vector<std::string> game_order;
  std::map<std::string, AnyGame> games;
};

// Largest table the elaborator will build.
inline constexpr std::size_t kMaxCells = std::size_t{1} << 20;

class Elaborator {
 public:
  explicit Elaborator(std::size_t budget) : budget_(budget) {}

  Environment run(const GameFile& f) {
    env_.mode = f.mode;
    env_.real = Carrier::payoff(f.mode, collect_numbers(f), "Real");
    for (const auto& d : f.decls) std::visit([&](const auto& x) { declare(x); }, d);
    return std::move(env_);
  }

 private:
  [[noreturn]] static void fail(Pos at, const std::string& msg) { throw DslError(DslError::Kind::elaboration, at, msg); }

  // Runs f, attaching the position to library errors.
  template <class F>
  static auto at(Pos pos, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const DslError&) {
      throw;
    } catch (const BudgetExceeded& e) {
      throw DslError(DslError::Kind::budget, pos, e.what());
    } catch (const Error& e) {
      throw DslError(DslError::Kind::elaboration, pos, e.what());
    }
  }

  static std::optional<Rational> number_value(const ElemExpr& e) {
    auto v = parse_rational(e.text);
    if (!v) fail(e.pos, "invalid number " + e.text);
    return v;
  }

  static void numbers_in(const ElemExpr& e, std::vector<Rational>& out) {
    if (e.kind == ElemExpr::Kind::number) out.push_back(*number_value(e));
    for (const auto& i : e.items) numbers_in(i, out);
  }

  static std::vector<Rational> collect_numbers(const GameFile& f) {
    std::vector<Rational> out;
    for (const auto& d : f.decls) {
      const std::vector<Entry>* es = nullptr;
      if (auto* fn = std::get_if<FnDecl>(&d)) es = &fn->entries;
      if (auto* pay = std::get_if<PayoffDecl>(&d)) es = &pay->entries;
      if (!es) continue;
      for (const auto& e : *es) {
        numbers_in(e.in, out);
        numbers_in(e.out, out);
      }
    }
    return out;
  }

  Carrier type(const TypeExpr& t) {
    switch (t.kind) {
      case TypeExpr::Kind::unit:
        return Carrier::unit(env_.mode);
      case TypeExpr::Kind::name: {
        if (t.name == "Real") return env_.real;
        auto it = env_.domains.find(t.name);
        if (it == env_.domains.end()) fail(t.pos, "undeclared domain '" + t.name + "'");
        return it->second;
      }
      case TypeExpr::Kind::product: {
        auto l = type(t.parts[0]);
        auto r = type(t.parts[1]);
        auto p = at(t.pos, [&] { return product(l, r); });
        if (p.size() > kMaxCells) throw DslError(DslError::Kind::budget, t.pos, "type " + p.type_name() + " is too large");
        return p;
      }
    }
    fail(t.pos, "internal: unhandled type form");
  }

  static void flatten(const ElemExpr& e, std::vector<const ElemExpr*>& out) {
    if (e.kind == ElemExpr::Kind::tuple) {
      for (const auto& i : e.items) flatten(i, out);
    } else {
      out.push_back(&e);
    }
  }

  Elem element(const Carrier& c, const ElemExpr& e) const { return resolve_element(env_.mode, c, e); }

 public:
  // Tuples are matched against the leaves of the type; unit leaves may be
  // left out.
  static Elem resolve_element(Mode mode, const Carrier& c, const ElemExpr& e) {
    std::vector<const ElemExpr*> parts;
    flatten(e, parts);
    std::vector<std::size_t> slots;
    if (parts.size() == c.leaf_count()) {
      for (std::size_t k = 0; k < c.leaf_count(); ++k) slots.push_back(k);
    } else if (parts.size() == c.factor_count()) {
      slots = c.non_unit_leaves();
    } else {
      fail(e.pos, "element " + pretty(e) + " has " + std::to_string(parts.size()) + " components but " + c.type_name() +
                      " has " + std::to_string(c.factor_count()));
    }
    Elem out = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::size_t k = slots[i];
      const Carrier leaf = c.leaf(k);
      out += digit(mode, leaf, *parts[i]) * c.stride(k);
    }
    return out;
  }

 private:
  static Elem digit(Mode mode, const Carrier& leaf, const ElemExpr& e) {
    switch (e.kind) {
      case ElemExpr::Kind::bottom:
        if (mode != Mode::dcpo) fail(e.pos, "'_' (bottom) needs #mode dcpo");
        return 0;
      case ElemExpr::Kind::star:
        if (!leaf.is_unit()) fail(e.pos, "'*' is not an element of " + leaf.type_name());
        return 0;
      case ElemExpr::Kind::number:
      case ElemExpr::Kind::atom: {
        std::string atom = e.text;
        if (e.kind == ElemExpr::Kind::number) atom = format_rational(*number_value(e));
        auto d = leaf.find_atom(atom);
        if (!d) fail(e.pos, "'" + e.text + "' is not an element of " + leaf.type_name());
        return *d;
      }
      case ElemExpr::Kind::tuple:
        break;
    }
    fail(e.pos, "internal: nested tuple");
  }

  FnTable table(const std::string& what, const Carrier& src, const Carrier& dst, const std::vector<Entry>& entries, Pos pos) {
    if (src.size() > kMaxCells) throw DslError(DslError::Kind::budget, pos, what + " has too many inputs");
    std::vector<std::optional<Elem>> image(src.size());
    for (const auto& e : entries) {
      Elem x = element(src, e.in);
      Elem y = element(dst, e.out);
      if (image[x]) fail(e.in.pos, what + ": duplicate entry for " + src.show(x));
      image[x] = y;
    }
    std::vector<Elem> full(src.size());
    for (Elem x = 0; x < src.size(); ++x) {
      if (image[x]) {
        full[x] = *image[x];
        continue;
      }
      bool partial = false;
      for (std::size_t k = 0; k < src.leaf_count(); ++k) {
        partial = partial || (src.is_dcpo() && src.radix(k) > 1 && src.digit(x, k) == 0);
      }
      if (!partial) fail(pos, what + ": missing entry for " + src.show(x));
      full[x] = 0;  // undefined inputs default to ⊥
    }
    return at(pos, [&] { return FnTable(src, dst, std::move(full)); });
  }

  void declare(const DomainDecl& d) {
    if (d.name == "Real") fail(d.pos, "'Real' is reserved for the payoff domain");
    if (env_.domains.count(d.name)) fail(d.pos, "domain '" + d.name + "' is already declared");
    env_.domains.emplace(d.name, at(d.pos, [&] { return Carrier::atomic(env_.mode, d.name, d.atoms); }));
  }

  void declare_table(const std::string& name, Pos pos) {
    if (env_.tables.count(name)) fail(pos, "function '" + name + "' is already declared");
  }

  void declare(const FnDecl& d) {
    declare_table(d.name, d.pos);
    auto src = type(d.src);
    auto dst = type(d.dst);
    env_.tables.emplace(d.name, table("fn " + d.name, src, dst, d.entries, d.pos));
  }

  void declare(const PayoffDecl& d) {
    declare_table(d.name, d.pos);
    std::vector<Carrier> params;
    for (const auto& p : d.params) params.push_back(type(p));
    auto src = product_of(params, env_.mode);
    std::vector<const ElemExpr*> first;
    flatten(d.entries.front().out, first);
    std::vector<Carrier> reals(first.size(), env_.real);
    auto dst = product_of(reals, env_.mode);
    env_.tables.emplace(d.name, table("payoff " + d.name, src, dst, d.entries, d.pos));
  }

  void declare(const GameDecl& d) {
    if (env_.games.count(d.name)) fail(d.pos, "game '" + d.name + "' is already declared");
    AnyGame g = env_.mode == Mode::set ? AnyGame(game<LensCat>(d.body)) : AnyGame(game<IntCat>(d.body));
    env_.games.emplace(d.name, std::move(g));
    env_.game_order.push_back(d.name);
  }

  template <class Cat>
  static OpenGame<Cat> pure(const Lens& l) {
    if constexpr (std::is_same_v<Cat, LensCat>) {
      return og_pure<LensCat>(l);
    } else {
      return og_pure<IntCat>(lens_to_int(l));
    }
  }

  static void guard(const Interface& src, const Interface& dst, Pos pos) {
    auto cells = [](const Carrier& a, const Carrier& b) { return static_cast<double>(a.size()) * static_cast<double>(b.size()); };
    if (cells(src.fwd, dst.bwd) > kMaxCells || cells(dst.fwd, src.bwd) > kMaxCells) {
      throw DslError(DslError::Kind::budget, pos, "game " + src.show() + " -> " + dst.show() + " is too large");
    }
  }

  const FnTable& lookup_table(const GExpr& e) {
    auto it = env_.tables.find(e.name);
    if (it == env_.tables.end()) fail(e.pos, "undeclared function '" + e.name + "'");
    return it->second;
  }

  template <class Cat>
  OpenGame<Cat> game(const GExpr& e) {
    OpenGame<Cat> g = at(e.pos, [&] { return game_inner<Cat>(e); });
    guard(g.src(), g.dst(), e.pos);
    return g;
  }

  template <class Cat>
  OpenGame<Cat> game_inner(const GExpr& e) {
    using K = GExpr::Kind;
    const Carrier one = Carrier::unit(env_.mode);
    auto typed = [&](std::size_t i) {
      auto c = type(e.types[i]);
      return c;
    };
    switch (e.kind) {
      case K::seq: {
        auto l = game<Cat>(e.args[0]);
        auto r = game<Cat>(e.args[1]);
        return og_seq_auto(l, r);
      }
      case K::par: {
        auto l = game<Cat>(e.args[0]);
        auto r = game<Cat>(e.args[1]);
        guard(tensor(l.src(), r.src()), tensor(l.dst(), r.dst()), e.pos);
        return og_tensor(l, r);
      }
      case K::decision: {
        auto x = typed(0), y = typed(1);
        guard({x, one}, {y, env_.real}, e.pos);
        return og_decision<Cat>(x, y, env_.real, budget_);
      }
      case K::id: {
        Interface i{typed(0), typed(1)};
        guard(i, i, e.pos);
        return pure<Cat>(lens_id(i));
      }
      case K::lift:
        return pure<Cat>(lift(lookup_table(e), Variance::cov));
      case K::liftop:
        return pure<Cat>(lift(lookup_table(e), Variance::contra));
      case K::copy:
      case K::del:
      case K::counit: {
        auto x = typed(0);
        guard({x, x}, {product(x, x), x}, e.pos);
        const auto kind = e.kind == K::copy ? Structural::copy : e.kind == K::del ? Structural::del : Structural::counit;
        return pure<Cat>(lens_structural(kind, x));
      }
      case K::transpose:
        if constexpr (std::is_same_v<Cat, IntCat>) {
          return og_transpose(game<Cat>(e.args[0]));
        } else {
          fail(e.pos, "transpose needs #mode dcpo");
        }
      case K::feedback:
        if constexpr (std::is_same_v<Cat, IntCat>) {
          return feedback(typed(0), game<Cat>(e.args[0]), e.pos);
        } else {
          fail(e.pos, "feedback needs #mode dcpo");
        }
      case K::ref: {
        auto it = env_.games.find(e.name);
        if (it == env_.games.end()) fail(e.pos, "undeclared game '" + e.name + "'");
        return std::get<OpenGame<Cat>>(it->second);
      }
    }
    fail(e.pos, "internal: unhandled game form");
  }

  // The interface A with A ⊗ (T, 1) equal to i up to re-bracketing.
  static std::optional<Interface> strip_loop(const Interface& i, const Carrier& t) {
    auto lead = i.fwd.non_unit_leaves();
    auto loop = t.non_unit_leaves();
    if (lead.size() < loop.size()) return std::nullopt;
    std::vector<Carrier> front;
    for (std::size_t k = 0; k + loop.size() < lead.size(); ++k) front.push_back(i.fwd.leaf(lead[k]));
    Interface a{product_of(front, i.mode()), i.bwd};
    if (!leaf_equivalent(tensor(a, Interface{t, Carrier::unit(i.mode())}), i)) return std::nullopt;
    return a;
  }

  static IntGame feedback(const Carrier& t, const IntGame& g, Pos pos) {
    const Interface loop{t, Carrier::unit(Mode::dcpo)};
    auto a = strip_loop(g.src(), t);
    auto b = strip_loop(g.dst(), t);
    if (!a) fail(pos, "feedback over " + t.type_name() + ": game source " + g.src().show() + " does not end with " + loop.show());
    if (!b) fail(pos, "feedback over " + t.type_name() + ": game target " + g.dst().show() + " does not end with " + loop.show());
    auto wrapped = og_seq_auto(og_seq_auto(og_canonical<IntCat>(tensor(*a, loop), g.src()), g),
                               og_canonical<IntCat>(g.dst(), tensor(*b, loop)));
    return og_feedback(wrapped);
  }

  std::size_t budget_;
  Environment env_;
};

inline Environment elaborate(const GameFile& f, std::size_t budget = kDefaultBudget) { return Elaborator(budget).run(f); }

inline Environment load(std::string_view text, std::size_t budget = kDefaultBudget) { return elaborate(parse(text), budget); }

}  // namespace ogame::dsl
