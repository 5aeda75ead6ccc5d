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

#include "holc/proof_io.h"

#include <map>
#include <sstream>

#include "holc/error.h"
#include "holc/kernel.h"
#include "holc/parse.h"
#include "holc/print.h"

namespace holc {

namespace {

constexpr std::string_view kHeader = "holc-proof 1";

std::string quote(const std::string& s) { return "`" + s + "`"; }

std::string params_text(const TheoryEnv& env, const RuleParams& p) {
  std::string s;
  auto add = [&s](const std::string& part) { s += " " + part; };
  if (p.context) {
    add("ctx");
    for (const auto& t : *p.context) add(quote(print_term(env, t)));
  }
  for (const auto& t : p.terms) add("term " + quote(print_term(env, t)));
  for (const auto& v : p.vars) add("var " + v.name + " " + quote(print_type(v.type)));
  for (const auto& a : p.type_vars) add("tyvar " + a);
  for (const auto& ty : p.types) add("type " + quote(print_type(ty)));
  if (p.label) add("label " + env.lattice().name(*p.label));
  if (!p.name.empty()) add("name " + p.name);
  return s;
}

class Writer {
 public:
  explicit Writer(const TheoryEnv& env) : env_(env) {}

  int node(const ProofPtr& p) {
    auto it = ids_.find(p.get());
    if (it != ids_.end()) return it->second;
    std::vector<int> kids;
    for (const auto& q : p->premises) kids.push_back(node(q));
    int id = static_cast<int>(ids_.size());
    ids_[p.get()] = id;
    out_ << id << " " << rule_name(p->rule);
    for (int k : kids) out_ << " " << k;
    out_ << " |" << params_text(env_, p->params) << "\n";
    return id;
  }
  std::string str() const { return out_.str(); }

 private:
  const TheoryEnv& env_;
  std::map<const ProofNode*, int> ids_;
  std::ostringstream out_;
};

struct LineReader {
  const TheoryEnv& env;
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[std::min(pos, toks.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos < toks.size() - 1) ++pos;
    return t;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, msg, peek().span);
  }
  std::string word() {
    if (peek().kind != Tok::Ident) error("expected a name");
    return next().text;
  }
  std::string quoted() {
    if (peek().kind != Tok::Quote) error("expected a backquoted term or type");
    return next().text;
  }
  Term term(const std::string& text) { return parse_term(env, text); }

  RuleParams params() {
    RuleParams p;
    while (peek().kind != Tok::End) {
      std::string key = word();
      if (key == "ctx") {
        std::vector<Term> ctx;
        while (peek().kind == Tok::Quote) ctx.push_back(term(next().text));
        p.context = std::move(ctx);
      } else if (key == "term") {
        p.terms.push_back(term(quoted()));
      } else if (key == "var") {
        std::string x = word();
        p.vars.push_back({x, parse_type(env, quoted())});
      } else if (key == "tyvar") {
        p.type_vars.push_back(word());
      } else if (key == "type") {
        p.types.push_back(parse_type(env, quoted()));
      } else if (key == "label") {
        p.label = env.lattice().label(word());
      } else if (key == "name") {
        p.name = word();
      } else {
        error("unknown field `" + key + "`");
      }
    }
    return p;
  }
};

}  // namespace

std::string export_proof(const TheoryEnv& env, const Thm& th) {
  Writer w(env);
  w.node(th.proof());
  RuleParams claim;
  claim.context = th.context();
  claim.terms = {th.formula()};
  claim.label = th.label();
  return std::string(kHeader) + "\n" + w.str() + "claim |" + params_text(env, claim) + "\n";
}

ImportedProof import_proof(const TheoryEnv& env, std::string_view text, const std::string& file) {
  std::vector<ProofPtr> nodes;
  std::optional<ImportedProof> claim;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      if (line != kHeader)
        fail(ErrorKind::SyntaxError, "expected `" + std::string(kHeader) + "`",
             SourceSpan{file, lineno, 1, lineno, 1});
      header = true;
      continue;
    }
    if (claim) fail(ErrorKind::SyntaxError, "input after the claim", SourceSpan{file, lineno, 1, lineno, 1});
    LineReader r{env, lex(line, file, lineno)};
    if (r.peek().kind == Tok::Ident && r.peek().text == "claim") {
      r.next();
      if (!(r.peek().kind == Tok::Sym && r.peek().text == "|")) r.error("expected `|`");
      r.next();
      RuleParams p = r.params();
      if (!p.context || p.terms.size() != 1 || !p.label) r.error("a claim needs ctx, term and label");
      if (nodes.empty()) r.error("a claim needs a proof");
      claim = ImportedProof{nodes.back(), make_context(*p.context), p.terms[0], *p.label};
      continue;
    }
    if (r.peek().kind != Tok::Number || std::stoul(r.peek().text) != nodes.size())
      r.error("expected node id " + std::to_string(nodes.size()));
    r.next();
    auto rule = rule_from_name(r.word());
    if (!rule) r.error("unknown rule");
    auto node = std::make_shared<ProofNode>();
    node->rule = *rule;
    while (r.peek().kind == Tok::Number) {
      std::size_t k = std::stoul(r.next().text);
      if (k >= nodes.size()) r.error("premise refers to a later node");
      node->premises.push_back(nodes[k]);
    }
    if (!(r.peek().kind == Tok::Sym && r.peek().text == "|")) r.error("expected `|`");
    r.next();
    node->params = r.params();
    nodes.push_back(std::move(node));
  }
  if (!header) fail(ErrorKind::SyntaxError, "empty proof file", SourceSpan{file, 1, 1, 1, 1});
  if (!claim) fail(ErrorKind::SyntaxError, "missing claim line", SourceSpan{file, lineno, 1, lineno, 1});
  return *claim;
}

Thm certify(const TheoryEnv& env, std::string_view text, const std::string& file) {
  ImportedProof p = import_proof(env, text, file);
  Thm th = replay(env, p.root);
  if (th.label() != p.label || !(th.formula() == p.formula) ||
      !context_equal(th.context(), p.context))
    fail(ErrorKind::ReplayError, "the proof establishes a different judgement than claimed");
  return th;
}

}  // namespace holc
