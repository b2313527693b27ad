// Copyright (c) 2026 The s2w Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "s2w/wfst/grammar_compiler.h"

#include <cctype>
#include <charconv>
#include <optional>

#include "s2w/core/error.h"
#include "s2w/core/tag_io.h"
#include "s2w/wfst/shortest_path.h"

namespace s2w::wfst {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind {
  kIdent,
  kString,
  kNumber,
  kEquals,
  kSemicolon,
  kColon,
  kBar,
  kQuestion,
  kSlash,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kComma,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    for (;;) {
      SkipSpaceAndComments();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::kEnd, "", line_, column_});
        return tokens;
      }
      tokens.push_back(Next());
    }
  }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        break;
      }
    }
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  Token Next() {
    const std::size_t line = line_, column = column_;
    char c = text_[pos_];
    auto single = [&](TokenKind kind) {
      Advance();
      return Token{kind, std::string(1, c), line, column};
    };
    switch (c) {
      case '=': return single(TokenKind::kEquals);
      case ';': return single(TokenKind::kSemicolon);
      case ':': return single(TokenKind::kColon);
      case '|': return single(TokenKind::kBar);
      case '?': return single(TokenKind::kQuestion);
      case '/': return single(TokenKind::kSlash);
      case '(': return single(TokenKind::kLParen);
      case ')': return single(TokenKind::kRParen);
      case '{': return single(TokenKind::kLBrace);
      case '}': return single(TokenKind::kRBrace);
      case ',': return single(TokenKind::kComma);
      default: break;
    }
    if (c == '"') {
      Advance();
      std::string value;
      for (;;) {
        if (pos_ >= text_.size() || text_[pos_] == '\n') {
          throw ParseError("unterminated string literal", line, column, source_);
        }
        char d = text_[pos_];
        if (d == '"') {
          Advance();
          break;
        }
        if (d == '\\' && pos_ + 1 < text_.size()) {
          Advance();
          d = text_[pos_];
        }
        value += d;
        Advance();
      }
      return {TokenKind::kString, value, line, column};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string value;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.')) {
        value += text_[pos_];
        Advance();
      }
      return {TokenKind::kNumber, value, line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string value;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        value += text_[pos_];
        Advance();
      }
      return {TokenKind::kIdent, value, line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     column, source_);
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ---------------------------------------------------------------------------
// Syntax tree

struct Expr {
  enum class Kind { kLiteral, kRef, kSeq, kUnion, kOptional, kRepeat, kWeight };

  Kind kind = Kind::kLiteral;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<Expr> children;
  std::string input;   // kLiteral
  std::string output;  // kLiteral
  std::string name;    // kRef
  std::size_t min = 0, max = 0;  // kRepeat
  double weight = 0.0;           // kWeight
};

Expr MakeExpr(Expr::Kind kind, const Token &at) {
  Expr e;
  e.kind = kind;
  e.line = at.line;
  e.column = at.column;
  return e;
}

struct Rule {
  std::string name;
  std::string source;
  std::size_t line = 0;
  std::size_t column = 0;
  Expr body;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string source)
      : tokens_(std::move(tokens)), source_(std::move(source)) {}

  std::vector<Rule> ParseRules() {
    std::vector<Rule> rules;
    while (Peek().kind != TokenKind::kEnd) {
      const Token &name = Expect(TokenKind::kIdent, "rule name");
      Expect(TokenKind::kEquals, "'='");
      Expr body = ParseUnion();
      Expect(TokenKind::kSemicolon, "';'");
      rules.push_back({name.text, source_, name.line, name.column, std::move(body)});
    }
    return rules;
  }

 private:
  const Token &Peek() const { return tokens_[pos_]; }
  const Token &Take() { return tokens_[pos_++]; }

  [[noreturn]] void Fail(const Token &at, const std::string &what) const {
    std::string found = at.kind == TokenKind::kEnd ? "end of input"
                                                   : "'" + at.text + "'";
    throw ParseError("expected " + what + ", found " + found, at.line,
                     at.column, source_);
  }

  const Token &Expect(TokenKind kind, const std::string &what) {
    if (Peek().kind != kind) Fail(Peek(), what);
    return Take();
  }

  static bool StartsAtom(TokenKind kind) {
    return kind == TokenKind::kString || kind == TokenKind::kIdent ||
           kind == TokenKind::kLParen;
  }

  Expr ParseUnion() {
    const Token &first = Peek();
    Expr seq = ParseSeq();
    if (Peek().kind != TokenKind::kBar) return seq;
    Expr u = MakeExpr(Expr::Kind::kUnion, first);
    u.children.push_back(std::move(seq));
    while (Peek().kind == TokenKind::kBar) {
      Take();
      u.children.push_back(ParseSeq());
    }
    return u;
  }

  Expr ParseSeq() {
    const Token &first = Peek();
    if (!StartsAtom(first.kind)) Fail(first, "expression");
    Expr seq = MakeExpr(Expr::Kind::kSeq, first);
    while (StartsAtom(Peek().kind)) seq.children.push_back(ParsePostfix());
    if (seq.children.size() == 1) return std::move(seq.children.front());
    return seq;
  }

  std::size_t ParseCount() {
    const Token &t = Expect(TokenKind::kNumber, "repetition count");
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError("bad repetition count '" + t.text + "'", t.line,
                       t.column, source_);
    }
    return value;
  }

  Expr ParsePostfix() {
    Expr e = ParseAtom();
    for (;;) {
      const Token &t = Peek();
      if (t.kind == TokenKind::kQuestion) {
        Take();
        Expr opt = MakeExpr(Expr::Kind::kOptional, t);
        opt.children.push_back(std::move(e));
        e = std::move(opt);
      } else if (t.kind == TokenKind::kLBrace) {
        Take();
        Expr rep = MakeExpr(Expr::Kind::kRepeat, t);
        rep.min = ParseCount();
        rep.max = rep.min;
        if (Peek().kind == TokenKind::kComma) {
          Take();
          rep.max = ParseCount();
        }
        Expect(TokenKind::kRBrace, "'}'");
        if (rep.max < rep.min) {
          throw ParseError("repetition bounds out of order", t.line, t.column,
                           source_);
        }
        rep.children.push_back(std::move(e));
        e = std::move(rep);
      } else if (t.kind == TokenKind::kSlash) {
        Take();
        const Token &num = Expect(TokenKind::kNumber, "weight");
        Expr w = MakeExpr(Expr::Kind::kWeight, t);
        try {
          std::size_t used = 0;
          w.weight = std::stod(num.text, &used);
          if (used != num.text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception &) {
          throw ParseError("bad weight '" + num.text + "'", num.line,
                           num.column, source_);
        }
        w.children.push_back(std::move(e));
        e = std::move(w);
      } else {
        return e;
      }
    }
  }

  Expr ParseAtom() {
    const Token &t = Take();
    switch (t.kind) {
      case TokenKind::kString: {
        Expr lit = MakeExpr(Expr::Kind::kLiteral, t);
        lit.input = t.text;
        lit.output = t.text;
        if (Peek().kind == TokenKind::kColon) {
          Take();
          lit.output = Expect(TokenKind::kString, "string after ':'").text;
        }
        return lit;
      }
      case TokenKind::kIdent: {
        Expr ref = MakeExpr(Expr::Kind::kRef, t);
        ref.name = t.text;
        return ref;
      }
      case TokenKind::kLParen: {
        Expr inner = ParseUnion();
        Expect(TokenKind::kRParen, "')'");
        return inner;
      }
      default:
        Fail(t, "expression");
    }
  }

  std::vector<Token> tokens_;
  std::string source_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Thompson-style constructions. Every builder returns an FST whose start
// state has index 0.

StateId CopyInto(Fst &dst, const Fst &src) {
  const auto offset = static_cast<StateId>(dst.NumStates());
  for (StateId s = 0; s < src.NumStates(); ++s) {
    StateId d = dst.AddState();
    dst.SetFinal(d, src.Final(s));
  }
  for (StateId s = 0; s < src.NumStates(); ++s) {
    for (Arc arc : src.Arcs(s)) {
      arc.nextstate += offset;
      dst.AddArc(s + offset, arc);
    }
  }
  return offset;
}

Fst EpsilonFst(const std::shared_ptr<const SymbolTable> &symbols) {
  Fst f(symbols);
  f.SetStart(f.AddState());
  f.SetFinal(0, TropicalWeight::One());
  return f;
}

Fst Concat(const Fst &a, const Fst &b) {
  Fst out(a.symbols());
  CopyInto(out, a);
  const StateId b_start = CopyInto(out, b) + b.start();
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (!a.IsFinal(s)) continue;
    out.AddArc(s, {kEpsilon, kEpsilon, a.Final(s), b_start});
    out.SetFinal(s, TropicalWeight::Zero());
  }
  out.SetStart(a.start());
  return out;
}

Fst UnionAll(const std::vector<Fst> &parts,
             const std::shared_ptr<const SymbolTable> &symbols) {
  Fst out(symbols);
  out.SetStart(out.AddState());
  for (const Fst &p : parts) {
    StateId start = CopyInto(out, p) + p.start();
    out.AddArc(0, {kEpsilon, kEpsilon, TropicalWeight::One(), start});
  }
  return out;
}

Fst Optional(const Fst &a) {
  Fst out = UnionAll({a}, a.symbols());
  out.SetFinal(0, TropicalWeight::One());
  return out;
}

Fst Repeat(const Fst &a, std::size_t min, std::size_t max) {
  // a{m,n} = a^m (a (a (...)?)?)? so every count has exactly one path.
  Fst tail = EpsilonFst(a.symbols());
  for (std::size_t k = min; k < max; ++k) {
    tail = k == min ? Optional(a) : Optional(Concat(a, tail));
  }
  Fst out = tail;
  for (std::size_t k = 0; k < min; ++k) out = Concat(a, out);
  return out;
}

Fst Weighted(const Fst &a, double weight) {
  Fst out(a.symbols());
  CopyInto(out, a);
  StateId final = out.AddState();
  out.SetFinal(final, TropicalWeight::One());
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (!a.IsFinal(s)) continue;
    out.AddArc(s, {kEpsilon, kEpsilon,
                   Times(a.Final(s), TropicalWeight(weight)), final});
    out.SetFinal(s, TropicalWeight::Zero());
  }
  out.SetStart(a.start());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

struct GrammarCompiler::Impl {
  std::shared_ptr<SymbolTable> symbols;
  std::map<std::string, Rule, std::less<>> rules;
  std::map<std::string, Fst, std::less<>> compiled;
  std::set<std::string, std::less<>> in_progress;

  Fst Literal(const Expr &e) {
    std::vector<Label> in, out;
    for (const std::string &w : SplitWords(e.input)) {
      in.push_back(symbols->AddSymbol(w));
    }
    for (const std::string &c : Utf8Chars(e.output)) {
      out.push_back(symbols->AddSymbol(c));
    }
    Fst f(symbols);
    f.SetStart(f.AddState());
    StateId cur = 0;
    for (std::size_t i = 0; i < std::max(in.size(), out.size()); ++i) {
      StateId next = f.AddState();
      f.AddArc(cur, {i < in.size() ? in[i] : kEpsilon,
                     i < out.size() ? out[i] : kEpsilon, TropicalWeight::One(),
                     next});
      cur = next;
    }
    f.SetFinal(cur, TropicalWeight::One());
    return f;
  }

  Fst Build(const Expr &e, const Rule &rule) {
    switch (e.kind) {
      case Expr::Kind::kLiteral:
        return Literal(e);
      case Expr::Kind::kRef:
        return Resolve(e.name, &e, rule);
      case Expr::Kind::kSeq: {
        Fst out = Build(e.children.front(), rule);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
          out = Concat(out, Build(e.children[i], rule));
        }
        return out;
      }
      case Expr::Kind::kUnion: {
        std::vector<Fst> parts;
        for (const Expr &c : e.children) parts.push_back(Build(c, rule));
        return UnionAll(parts, symbols);
      }
      case Expr::Kind::kOptional:
        return Optional(Build(e.children.front(), rule));
      case Expr::Kind::kRepeat:
        return Repeat(Build(e.children.front(), rule), e.min, e.max);
      case Expr::Kind::kWeight:
        return Weighted(Build(e.children.front(), rule), e.weight);
    }
    throw Error("unreachable expression kind");
  }

  // Compiled body of rule `name`, untrimmed. `at`/`from` locate the
  // reference for error messages (null for a top-level request).
  Fst Resolve(std::string_view name, const Expr *at, const Rule &from) {
    auto done = compiled.find(name);
    if (done != compiled.end()) return done->second;
    auto it = rules.find(name);
    if (it == rules.end()) {
      if (at == nullptr) throw ParseError("undefined rule '" + std::string(name) + "'");
      throw ParseError("undefined rule '" + std::string(name) + "'", at->line,
                       at->column, from.source);
    }
    if (in_progress.count(name)) {
      std::string what = "recursive reference to rule '" + std::string(name) + "'";
      if (at == nullptr) throw ParseError(what);
      throw ParseError(what, at->line, at->column, from.source);
    }
    in_progress.emplace(name);
    Fst f = Build(it->second.body, it->second);
    in_progress.erase(in_progress.find(name));
    compiled.emplace(std::string(name), f);
    return f;
  }
};

GrammarCompiler::GrammarCompiler(std::shared_ptr<SymbolTable> symbols)
    : impl_(std::make_unique<Impl>()) {
  impl_->symbols = std::move(symbols);
}

GrammarCompiler::~GrammarCompiler() = default;
GrammarCompiler::GrammarCompiler(GrammarCompiler &&) noexcept = default;
GrammarCompiler &GrammarCompiler::operator=(GrammarCompiler &&) noexcept =
    default;

void GrammarCompiler::AddSource(std::string_view text,
                                std::string_view source_name) {
  std::string source(source_name);
  auto rules = Parser(Lexer(text, source).Run(), source).ParseRules();
  for (Rule &r : rules) {
    if (impl_->rules.count(r.name)) {
      throw ParseError("rule '" + r.name + "' is already defined", r.line,
                       r.column, source);
    }
    std::string name = r.name;
    impl_->rules.emplace(std::move(name), std::move(r));
  }
}

bool GrammarCompiler::HasRule(std::string_view name) const {
  return impl_->rules.find(name) != impl_->rules.end();
}

std::vector<std::string> GrammarCompiler::RuleNames() const {
  std::vector<std::string> names;
  for (const auto &[name, rule] : impl_->rules) names.push_back(name);
  return names;
}

Fst GrammarCompiler::Compile(std::string_view rule) {
  Rule top;
  top.name = std::string(rule);
  Fst f = Trim(impl_->Resolve(rule, nullptr, top));
  f.SetTapes(TapeKind::kWord, TapeKind::kChar);
  RequireAcceptingPath(f, rule);
  return f;
}

Fst CompileGrammar(std::string_view source, std::string_view entry) {
  GrammarCompiler compiler(std::make_shared<SymbolTable>());
  compiler.AddSource(source);
  return compiler.Compile(entry);
}

void RequireAcceptingPath(const Fst &fst, std::string_view name) {
  if (fst.NumStates() == 0 || fst.start() == kNoState ||
      Trim(fst).NumStates() == 0) {
    throw ParseError("grammar '" + std::string(name) + "' accepts nothing");
  }
}

}  // namespace s2w::wfst
