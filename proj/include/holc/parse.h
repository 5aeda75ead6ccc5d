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


// Surface syntax: lexer, type and term parser with instance inference.
// The grammar is documented in docs/grammar.md.

#ifndef HOLC_PARSE_H_
#define HOLC_PARSE_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holc/env.h"
#include "holc/error.h"
#include "holc/syntax.h"

namespace holc {

enum class Tok { Ident, TyVar, Dollar, Quote, String, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

// Throws SyntaxError. Positions start at (line, col).
std::vector<Token> lex(std::string_view text, const std::string& file = "",
                       int line = 1, int col = 1);

// Words that never denote variables or constants.
bool is_reserved(std::string_view word);

// An unelaborated term as written.
struct PreTerm {
  enum class Kind { Name, Annot, Op, App, Lam, Typed };
  Kind kind;
  std::string name;           // Name, Annot, Op, Lam binder
  std::optional<Type> type;   // Annot, Lam binder, Typed
  std::vector<PreTerm> kids;  // App: fun, arg. Lam: body. Typed: term
  SourceSpan span;
};

// Free variables already known to the caller, by name.
using FreeScope = std::map<std::string, std::vector<Type>>;

// Recursive-descent parser over a token stream. Stops at the first token
// that cannot continue the current phrase.
class Parser {
 public:
  Parser(const TheoryEnv& env, std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_sym(std::string_view s) const;
  bool at_word(std::string_view w) const;
  bool at_end() const { return peek().kind == Tok::End; }
  void expect_sym(std::string_view s);
  void expect_word(std::string_view w);
  std::string ident();
  [[noreturn]] void error(const std::string& message) const;

  Type type();
  // A type atom: variable, nullary former, or parenthesised type.
  Type type_atom();
  PreTerm pre_term();

 private:
  PreTerm binder();
  PreTerm iff_level();
  PreTerm imp_level();
  PreTerm or_level();
  PreTerm and_level();
  PreTerm eq_level();
  PreTerm comp_level();
  PreTerm unary_level();
  PreTerm app_level();
  std::optional<PreTerm> atom();
  PreTerm operand(PreTerm (Parser::*level)());
  bool at_binder() const;
  bool at_atom_start() const;
  Type former_type(const std::string& name, const SourceSpan& span);

  const TheoryEnv& env_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Elaborates several pre-terms together so that their free variables are
// shared. Throws TypeError (or a kinding error) with a span.
std::vector<Term> elaborate(const TheoryEnv& env, const std::vector<PreTerm>& terms,
                            const FreeScope& scope = {});

// Whole-input conveniences; trailing tokens are a SyntaxError.
Term parse_term(const TheoryEnv& env, std::string_view text,
                const FreeScope& scope = {}, const std::string& file = "");
Type parse_type(const TheoryEnv& env, std::string_view text);
// Parses a formula of type Prop.
Term parse_formula(const TheoryEnv& env, std::string_view text,
                   const FreeScope& scope = {});

// Free variables of the given terms, grouped by name.
FreeScope free_scope(const std::vector<Term>& terms);

}  // namespace holc

#endif  // HOLC_PARSE_H_
