/* Copyright 2026 The holc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "holc/parse.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <utility>

#include "holc/print.h"
#include "holc/typing.h"

namespace holc {

namespace {

struct Alias {
  std::string_view utf8;
  Tok kind;
  std::string_view text;
};

constexpr std::array<Alias, 17> kUnicode{{
    {"∀", Tok::Ident, "forall"},
    {"∃", Tok::Ident, "exists"},
    {"λ", Tok::Sym, "\\"},
    {"∧", Tok::Sym, "/\\"},
    {"∨", Tok::Sym, "\\/"},
    {"¬", Tok::Sym, "~"},
    {"⟶", Tok::Sym, "-->"},
    {"⟷", Tok::Sym, "<->"},
    {"↔", Tok::Sym, "<->"},
    {"→", Tok::Sym, "->"},
    {"∈", Tok::Ident, "in"},
    {"∘", Tok::Sym, "o"},
    {"⊤", Tok::Ident, "True"},
    {"⊥", Tok::Ident, "False"},
    {"⊢", Tok::Sym, "|-"},
    {"∅", Tok::Ident, "empty"},
    {"≡", Tok::Sym, "="},
}};

constexpr std::array<std::string_view, 22> kSymbols{
    "<->", "-->", "->", "/\\", "\\/", "|-", "\\", "(", ")", "[", "]",
    "{",   "}",   ":",  ".",   ",",   "|",  ";", "@", "=", "~", "*"};

constexpr std::array<std::string_view, 6> kOperators{"-->", "<->", "/\\", "\\/", "~", "="};

constexpr std::array<std::string_view, 20> kReserved{
    "forall", "exists",   "in",      "theorem", "lemma",  "proof",  "qed",
    "def",    "axiom",    "const",   "type",    "typesyn", "datatype", "typedef",
    "import", "lattice",  "by",      "unwind",  "end",    "constant"};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

class Lexer {
 public:
  Lexer(std::string_view text, std::string file, int line, int col)
      : s_(text), file_(std::move(file)), line_(line), col_(col) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= s_.size()) break;
      out.push_back(token());
    }
    out.push_back({Tok::End, "", span_here()});
    return out;
  }

 private:
  SourceSpan span_here() const { return {file_, line_, col_, line_, col_}; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, msg, span_here());
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < s_.size(); ++k) {
      if (s_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(s_[i_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++i_;
    }
  }

  bool starts(std::string_view p) const { return s_.substr(i_, p.size()) == p; }

  void skip_space() {
    while (i_ < s_.size()) {
      unsigned char c = static_cast<unsigned char>(s_[i_]);
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance(1);
      } else if (starts("--") && !starts("-->")) {
        while (i_ < s_.size() && s_[i_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  Token make(Tok kind, std::string text, int line, int col) const {
    return {kind, std::move(text), {file_, line, col, line_, col_}};
  }

  Token token() {
    int line = line_, col = col_;
    unsigned char c = static_cast<unsigned char>(s_[i_]);
    if (ident_start(c)) {
      std::size_t j = i_;
      while (j < s_.size() && ident_char(static_cast<unsigned char>(s_[j]))) ++j;
      std::string word(s_.substr(i_, j - i_));
      advance(j - i_);
      return make(Tok::Ident, word, line, col);
    }
    if (c == '\'') {
      std::size_t j = i_ + 1;
      if (j >= s_.size() || !ident_start(static_cast<unsigned char>(s_[j])))
        error("expected a type variable name after '");
      while (j < s_.size() && ident_char(static_cast<unsigned char>(s_[j]))) ++j;
      std::string name(s_.substr(i_ + 1, j - i_ - 1));
      advance(j - i_);
      return make(Tok::TyVar, name, line, col);
    }
    if (std::isdigit(c)) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      std::string digits(s_.substr(i_, j - i_));
      advance(j - i_);
      return make(Tok::Number, digits, line, col);
    }
    if (c == '`' || c == '"') {
      char close = static_cast<char>(c);
      std::size_t j = s_.find(close, i_ + 1);
      if (j == std::string_view::npos)
        error(c == '`' ? "unterminated quotation" : "unterminated string");
      std::string body(s_.substr(i_ + 1, j - i_ - 1));
      advance(1);
      Token t = make(c == '`' ? Tok::Quote : Tok::String, body, line, col);
      advance(j - i_ + 1);
      t.span.end_line = line_;
      t.span.end_col = col_;
      return t;
    }
    if (c == '$') {
      advance(1);
      if (i_ >= s_.size()) error("expected an operator after $");
      Token inner = token();
      if (inner.kind == Tok::Ident ||
          (inner.kind == Tok::Sym &&
           std::find(kOperators.begin(), kOperators.end(), inner.text) != kOperators.end()))
        return make(Tok::Dollar, inner.text, line, col);
      error("`$` must precede a constant name or a logical operator");
    }
    for (const auto& a : kUnicode) {
      if (starts(a.utf8)) {
        advance(a.utf8.size());
        return make(a.kind, std::string(a.text), line, col);
      }
    }
    for (auto sym : kSymbols) {
      if (starts(sym)) {
        advance(sym.size());
        return make(Tok::Sym, std::string(sym), line, col);
      }
    }
    if (c >= 0x80) error("unexpected character");
    error(std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  std::string_view s_;
  std::string file_;
  int line_;
  int col_;
  std::size_t i_ = 0;
};

SourceSpan join_spans(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan s = a;
  s.end_line = b.end_line;
  s.end_col = b.end_col;
  return s;
}

PreTerm op(std::string name, const SourceSpan& span) {
  return {PreTerm::Kind::Op, std::move(name), std::nullopt, {}, span};
}

PreTerm app(PreTerm f, PreTerm a) {
  SourceSpan span = join_spans(f.span, a.span);
  return {PreTerm::Kind::App, "", std::nullopt, {std::move(f), std::move(a)}, span};
}

PreTerm binop(const std::string& name, const SourceSpan& at, PreTerm l, PreTerm r) {
  return app(app(op(name, at), std::move(l)), std::move(r));
}

struct DepthGuard {
  explicit DepthGuard(int& d, const Parser& p) : d_(d) {
    if (++d_ > 400) p.error("expression nested too deeply");
  }
  ~DepthGuard() { --d_; }
  int& d_;
};

}  // namespace

std::vector<Token> lex(std::string_view text, const std::string& file, int line, int col) {
  return Lexer(text, file, line, col).run();
}

bool is_reserved(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

// ---------------------------------------------------------------------------
// Parser

Parser::Parser(const TheoryEnv& env, std::vector<Token> tokens)
    : env_(env), tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != Tok::End)
    tokens_.push_back({Tok::End, "", tokens_.empty() ? SourceSpan{} : tokens_.back().span});
}

const Token& Parser::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token Parser::next() {
  Token t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool Parser::at_sym(std::string_view s) const {
  return peek().kind == Tok::Sym && peek().text == s;
}

bool Parser::at_word(std::string_view w) const {
  return peek().kind == Tok::Ident && peek().text == w;
}

void Parser::error(const std::string& message) const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of input" : "`" + t.text + "`";
  fail(ErrorKind::SyntaxError, message + ", found " + found, t.span);
}

void Parser::expect_sym(std::string_view s) {
  if (!at_sym(s)) error("expected `" + std::string(s) + "`");
  next();
}

void Parser::expect_word(std::string_view w) {
  if (!at_word(w)) error("expected `" + std::string(w) + "`");
  next();
}

std::string Parser::ident() {
  if (peek().kind != Tok::Ident || is_reserved(peek().text)) error("expected a name");
  return next().text;
}

Type Parser::former_type(const std::string& name, const SourceSpan& span) {
  if (const TypeSynonym* syn = env_.synonym(name)) {
    TypeSubst s;
    for (const auto& p : syn->params) s.emplace(p, type_atom());
    return type_subst(syn->body, s);
  }
  auto k = env_.former_kind(name);
  if (!k) fail(ErrorKind::UnregisteredFormer, "unknown type `" + name + "`", span);
  std::vector<Type> args;
  for (unsigned i = 0; i < k->arity; ++i) args.push_back(type_atom());
  return former_app(name, args);
}

Type Parser::type_atom() {
  DepthGuard g(depth_, *this);
  const Token& t = peek();
  if (t.kind == Tok::TyVar) return Type::var(next().text);
  if (at_sym("(")) {
    next();
    Type ty = type();
    expect_sym(")");
    return ty;
  }
  if (t.kind == Tok::Ident && !is_reserved(t.text)) {
    Token name = next();
    const TypeSynonym* syn = env_.synonym(name.text);
    auto k = env_.former_kind(name.text);
    if ((syn && !syn->params.empty()) || (k && k->arity > 0))
      fail(ErrorKind::SyntaxError,
           "type `" + name.text + "` takes arguments here; parenthesise it", name.span);
    return former_type(name.text, name.span);
  }
  error("expected a type");
}

Type Parser::type() {
  DepthGuard g(depth_, *this);
  Type head = [&] {
    const Token& t = peek();
    if (t.kind == Tok::Ident && !is_reserved(t.text)) {
      Token name = next();
      return former_type(name.text, name.span);
    }
    return type_atom();
  }();
  if (at_sym("->")) {
    next();
    return fun_type(head, type());
  }
  return head;
}

bool Parser::at_binder() const {
  return at_word("forall") || at_word("exists") || at_sym("\\");
}

bool Parser::at_atom_start() const {
  const Token& t = peek();
  if (t.kind == Tok::Ident) return !is_reserved(t.text);
  if (t.kind == Tok::Dollar) return true;
  return at_sym("(") || at_sym("{");
}

PreTerm Parser::pre_term() {
  DepthGuard g(depth_, *this);
  if (at_binder()) return binder();
  return iff_level();
}

PreTerm Parser::operand(PreTerm (Parser::*level)()) {
  if (at_binder()) return binder();
  return (this->*level)();
}

PreTerm Parser::binder() {
  Token kw = next();
  std::vector<std::pair<std::string, std::optional<Type>>> vars;
  std::vector<SourceSpan> spans;
  if (at_sym("(")) {
    while (at_sym("(")) {
      next();
      spans.push_back(peek().span);
      std::string x = ident();
      expect_sym(":");
      vars.emplace_back(x, type());
      expect_sym(")");
    }
  } else {
    while (true) {
      spans.push_back(peek().span);
      std::string x = ident();
      std::optional<Type> ty;
      if (at_sym(":")) {
        next();
        ty = type();
      }
      vars.emplace_back(x, ty);
      if (!at_sym(",")) break;
      next();
    }
  }
  expect_sym(".");
  PreTerm body = pre_term();
  for (std::size_t i = vars.size(); i-- > 0;) {
    SourceSpan span = join_spans(spans[i], body.span);
    PreTerm lam{PreTerm::Kind::Lam, vars[i].first, vars[i].second, {std::move(body)}, span};
    if (kw.text == "\\") {
      body = std::move(lam);
    } else {
      body = app(op(kw.text, kw.span), std::move(lam));
      body.span = join_spans(kw.span, body.span);
    }
  }
  return body;
}

PreTerm Parser::iff_level() {
  PreTerm l = imp_level();
  if (at_sym("<->")) {
    Token t = next();
    return binop(names::kIff, t.span, std::move(l), operand(&Parser::iff_level));
  }
  return l;
}

PreTerm Parser::imp_level() {
  PreTerm l = or_level();
  if (at_sym("-->") || at_sym("->")) {
    Token t = next();
    return binop(names::kImp, t.span, std::move(l), operand(&Parser::imp_level));
  }
  return l;
}

PreTerm Parser::or_level() {
  PreTerm l = and_level();
  if (at_sym("\\/")) {
    Token t = next();
    return binop(names::kOr, t.span, std::move(l), operand(&Parser::or_level));
  }
  return l;
}

PreTerm Parser::and_level() {
  PreTerm l = eq_level();
  if (at_sym("/\\")) {
    Token t = next();
    return binop(names::kAnd, t.span, std::move(l), operand(&Parser::and_level));
  }
  return l;
}

PreTerm Parser::eq_level() {
  PreTerm l = comp_level();
  if (at_sym("=")) {
    Token t = next();
    PreTerm r = operand(&Parser::comp_level);
    if (at_sym("=") || at_word("in")) error("`=` does not associate; add parentheses");
    return binop(names::kEq, t.span, std::move(l), std::move(r));
  }
  if (at_word("in")) {
    next();
    PreTerm r = operand(&Parser::comp_level);
    if (at_sym("=") || at_word("in")) error("`in` does not associate; add parentheses");
    return app(std::move(r), std::move(l));
  }
  return l;
}

PreTerm Parser::comp_level() {
  PreTerm l = unary_level();
  while (at_sym("o")) {
    Token t = next();
    l = binop("comp", t.span, std::move(l), unary_level());
  }
  return l;
}

PreTerm Parser::unary_level() {
  DepthGuard g(depth_, *this);
  if (at_sym("~")) {
    Token t = next();
    PreTerm body = operand(&Parser::unary_level);
    PreTerm out = app(op(names::kNot, t.span), std::move(body));
    return out;
  }
  return app_level();
}

PreTerm Parser::app_level() {
  auto head = atom();
  if (!head) error("expected a term");
  PreTerm f = std::move(*head);
  while (at_atom_start()) f = app(std::move(f), std::move(*atom()));
  return f;
}

std::optional<PreTerm> Parser::atom() {
  DepthGuard g(depth_, *this);
  const Token& t = peek();
  if (t.kind == Tok::Ident && !is_reserved(t.text)) {
    Token n = next();
    return PreTerm{PreTerm::Kind::Name, n.text, std::nullopt, {}, n.span};
  }
  if (t.kind == Tok::Dollar) {
    Token n = next();
    return op(n.text, n.span);
  }
  if (at_sym("(")) {
    Token open = next();
    if (peek().kind == Tok::Ident && !is_reserved(peek().text) && peek(1).kind == Tok::Sym &&
        peek(1).text == ":") {
      Token n = next();
      next();
      Type ty = type();
      SourceSpan span = join_spans(open.span, peek().span);
      expect_sym(")");
      return PreTerm{PreTerm::Kind::Annot, n.text, ty, {}, span};
    }
    PreTerm inner = pre_term();
    if (at_sym(":")) {
      next();
      Type ty = type();
      SourceSpan span = join_spans(open.span, peek().span);
      expect_sym(")");
      return PreTerm{PreTerm::Kind::Typed, "", ty, {std::move(inner)}, span};
    }
    expect_sym(")");
    return inner;
  }
  if (at_sym("{")) {
    Token open = next();
    std::string x = ident();
    expect_sym(":");
    Type ty = type();
    expect_sym("|");
    PreTerm body = pre_term();
    SourceSpan span = join_spans(open.span, peek().span);
    expect_sym("}");
    return PreTerm{PreTerm::Kind::Lam, x, ty, {std::move(body)}, span};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

bool is_meta(const Type& t) { return t.is_var() && !t.name().empty() && t.name()[0] == '?'; }

class Elaborator {
 public:
  Elaborator(const TheoryEnv& env, const FreeScope& scope) : env_(env), known_(scope) {}

  Term run(const PreTerm& pt) {
    auto [t, ty] = infer(pt);
    (void)ty;
    return t;
  }

  Term finish(const Term& t, const SourceSpan& span) {
    TypeSubst full;
    for (const auto& [k, v] : subst_) full.emplace(k, resolve(v));
    Term out = term_type_subst(t, full);
    for (const auto& a : ftv(out))
      if (!a.empty() && a[0] == '?')
        fail(ErrorKind::TypeError, "cannot infer " + undetermined(out) + "; add a type annotation",
             span);
    try {
      type_of(env_, out);
    } catch (const Error& e) {
      fail(ErrorKind::TypeError, std::string(error_kind_name(e.kind())) + ": " + e.detail(), span);
    }
    return out;
  }

 private:
  std::string undetermined(const Term& t) {
    switch (t.tag()) {
      case Term::Tag::Var:
      case Term::Tag::Const: {
        for (const auto& a : ftv(t.annotation()))
          if (a[0] == '?')
            return std::string(t.is_var() ? "the type of variable `" : "the type instance of `") +
                   t.name() + "`";
        return "";
      }
      case Term::Tag::App: {
        std::string s = undetermined(t.fun());
        return s.empty() ? undetermined(t.arg()) : s;
      }
      case Term::Tag::Lam:
        return undetermined(t.body());
    }
    return "";
  }

  Type fresh() { return Type::var("?" + std::to_string(counter_++)); }

  Type resolve(const Type& t) {
    switch (t.tag()) {
      case Type::Tag::Var: {
        if (!is_meta(t)) return t;
        auto it = subst_.find(t.name());
        if (it == subst_.end()) return t;
        Type r = resolve(it->second);
        it->second = r;
        return r;
      }
      case Type::Tag::Former:
        return t;
      case Type::Tag::App:
        return Type::app(resolve(t.head()), resolve(t.arg()));
    }
    return t;
  }

  bool occurs(const std::string& m, const Type& t) {
    Type r = resolve(t);
    return ftv(r).count(m) > 0;
  }

  bool unify(const Type& a0, const Type& b0) {
    Type a = resolve(a0), b = resolve(b0);
    if (a == b) return true;
    if (is_meta(a)) {
      if (occurs(a.name(), b)) return false;
      subst_.insert_or_assign(a.name(), b);
      return true;
    }
    if (is_meta(b)) return unify(b, a);
    if (a.is_app() && b.is_app()) return unify(a.head(), b.head()) && unify(a.arg(), b.arg());
    return false;
  }

  std::string show(const Type& t) { return print_type(resolve(t)); }

  Type instance(const Type& generic) {
    TypeSubst s;
    for (const auto& a : ftv(generic)) s.emplace(a, fresh());
    return type_subst(generic, s);
  }

  const Type* bound_type(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  std::pair<Term, Type> infer(const PreTerm& pt) {
    switch (pt.kind) {
      case PreTerm::Kind::Name: {
        if (const Type* b = bound_type(pt.name)) return {Term::var(pt.name, *b), *b};
        if (auto it = known_.find(pt.name); it != known_.end() && !it->second.empty()) {
          if (it->second.size() > 1)
            fail(ErrorKind::TypeError,
                 "variable `" + pt.name + "` is used at several types; annotate it", pt.span);
          return {Term::var(pt.name, it->second[0]), it->second[0]};
        }
        if (auto g = env_.constant_type(pt.name)) {
          Type ty = instance(*g);
          return {Term::constant(pt.name, ty), ty};
        }
        auto [it, inserted] = metas_.try_emplace(pt.name, Type::var(""));
        if (inserted) it->second = fresh();
        return {Term::var(pt.name, it->second), it->second};
      }
      case PreTerm::Kind::Annot: {
        const Type& ty = *pt.type;
        for (const auto& [bn, bt] : bound_)
          if (bn == pt.name && bt == ty) return {Term::var(pt.name, ty), ty};
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
          if (it->first == pt.name && is_meta(resolve(it->second)) && unify(it->second, ty))
            return {Term::var(pt.name, it->second), ty};
        if (!bound_type(pt.name)) {
          if (auto g = env_.constant_type(pt.name)) {
            TypeSubst s;
            if (match_type(*g, ty, s)) return {Term::constant(pt.name, ty), ty};
          }
        }
        auto& types = known_[pt.name];
        if (std::find(types.begin(), types.end(), ty) == types.end()) types.push_back(ty);
        if (auto it = metas_.find(pt.name); it != metas_.end()) unify(it->second, ty);
        return {Term::var(pt.name, ty), ty};
      }
      case PreTerm::Kind::Op: {
        auto g = env_.constant_type(pt.name);
        if (!g) fail(ErrorKind::UnregisteredConstant, "unknown constant `" + pt.name + "`", pt.span);
        Type ty = instance(*g);
        return {Term::constant(pt.name, ty), ty};
      }
      case PreTerm::Kind::App: {
        auto [f, tf] = infer(pt.kids[0]);
        auto [a, ta] = infer(pt.kids[1]);
        Type r = fresh();
        if (!unify(tf, fun_type(ta, r))) {
          Type rf = resolve(tf);
          if (is_fun_type(rf))
            fail(ErrorKind::TypeError,
                 "argument has type " + show(ta) + " but the function expects " +
                     show(fun_dom(rf)),
                 pt.kids[1].span);
          fail(ErrorKind::TypeError, "a term of type " + show(tf) + " is applied to an argument",
               pt.kids[0].span);
        }
        return {Term::app(f, a), r};
      }
      case PreTerm::Kind::Lam: {
        Type bt = pt.type ? *pt.type : fresh();
        bound_.emplace_back(pt.name, bt);
        auto [b, tb] = infer(pt.kids[0]);
        bound_.pop_back();
        return {Term::lam(pt.name, bt, b), fun_type(bt, tb)};
      }
      case PreTerm::Kind::Typed: {
        auto [t, tt] = infer(pt.kids[0]);
        if (!unify(tt, *pt.type))
          fail(ErrorKind::TypeError,
               "expected type " + print_type(*pt.type) + " but the term has type " + show(tt),
               pt.span);
        return {t, *pt.type};
      }
    }
    fail(ErrorKind::SyntaxError, "malformed term", pt.span);
  }

  const TheoryEnv& env_;
  FreeScope known_;
  std::map<std::string, Type> metas_;
  std::map<std::string, Type> subst_;
  std::vector<std::pair<std::string, Type>> bound_;
  int counter_ = 0;
};

}  // namespace

std::vector<Term> elaborate(const TheoryEnv& env, const std::vector<PreTerm>& terms,
                            const FreeScope& scope) {
  Elaborator el(env, scope);
  std::vector<Term> raw;
  for (const auto& pt : terms) raw.push_back(el.run(pt));
  std::vector<Term> out;
  for (std::size_t i = 0; i < raw.size(); ++i) out.push_back(el.finish(raw[i], terms[i].span));
  return out;
}

Term parse_term(const TheoryEnv& env, std::string_view text, const FreeScope& scope,
                const std::string& file) {
  Parser p(env, lex(text, file));
  PreTerm pt = p.pre_term();
  if (!p.at_end()) p.error("unexpected input after the term");
  return elaborate(env, {pt}, scope)[0];
}

Type parse_type(const TheoryEnv& env, std::string_view text) {
  Parser p(env, lex(text));
  Type ty = p.type();
  if (!p.at_end()) p.error("unexpected input after the type");
  return ty;
}

Term parse_formula(const TheoryEnv& env, std::string_view text, const FreeScope& scope) {
  Parser p(env, lex(text));
  PreTerm pt = p.pre_term();
  if (!p.at_end()) p.error("unexpected input after the formula");
  PreTerm typed{PreTerm::Kind::Typed, "", prop_type(), {pt}, pt.span};
  return elaborate(env, {typed}, scope)[0];
}

FreeScope free_scope(const std::vector<Term>& terms) {
  FreeScope out;
  for (const auto& t : terms) {
    for (const auto& v : t.free_vars()) {
      auto& types = out[v.name];
      if (std::find(types.begin(), types.end(), v.type) == types.end()) types.push_back(v.type);
    }
  }
  return out;
}

}  // namespace holc
