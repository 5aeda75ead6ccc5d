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

#include "holc/script.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "holc/derived.h"
#include "holc/logic.h"
#include "holc/print.h"
#include "holc/theory.h"
#include "holc/typing.h"

namespace holc {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kCommandWords[] = {
    "lattice", "import", "type",    "typesyn", "const", "axiom",
    "def",     "datatype", "typedef", "theorem", "lemma", "unwind"};

bool is_command_word(const Token& t) {
  if (t.kind != Tok::Ident) return false;
  for (auto w : kCommandWords)
    if (t.text == w) return true;
  return false;
}

class ScriptParser {
 public:
  ScriptParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<ScriptCommand> run() {
    std::vector<ScriptCommand> out;
    while (peek().kind != Tok::End) out.push_back(command());
    return out;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, msg, peek().span);
  }
  bool at_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  void expect_sym(std::string_view s) {
    if (!at_sym(s)) error("expected `" + std::string(s) + "`");
    next();
  }
  std::string name() {
    if (peek().kind != Tok::Ident || is_reserved(peek().text)) error("expected a name");
    return next().text;
  }
  std::string string_lit() {
    if (peek().kind != Tok::String) error("expected a quoted path");
    return next().text;
  }
  std::vector<std::string> tyvars() {
    std::vector<std::string> out;
    while (peek().kind == Tok::TyVar) out.push_back(next().text);
    return out;
  }

  // Tokens up to (not including) a stop token at bracket depth zero, the
  // next command or the end; an End token closes the slice.
  template <typename Stop>
  std::vector<Token> slice(Stop stop, const char* what) {
    std::vector<Token> out;
    int depth = 0;
    bool in_binder = false;  // commas separate binder variables
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      if (depth == 0 && !in_binder && (stop(t) || is_command_word(t))) break;
      if ((t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) ||
          (t.kind == Tok::Sym && t.text == "\\"))
        in_binder = true;
      if (t.kind == Tok::Sym && t.text == ".") in_binder = false;
      if (t.kind == Tok::Sym && (t.text == "(" || t.text == "[" || t.text == "{")) ++depth;
      if (t.kind == Tok::Sym && (t.text == ")" || t.text == "]" || t.text == "}")) {
        if (depth == 0) error("unbalanced `" + t.text + "`");
        --depth;
      }
      out.push_back(next());
    }
    if (out.empty()) error(std::string("expected ") + what);
    if (depth > 0) error("unclosed bracket");
    out.push_back({Tok::End, "", peek().span});
    return out;
  }
  std::vector<Token> slice_to_command(const char* what) {
    return slice([](const Token&) { return false; }, what);
  }

  std::optional<std::vector<Token>> type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::TyVar) return std::vector<Token>{next(), {Tok::End, "", t.span}};
    if (t.kind == Tok::Ident && !is_reserved(t.text) && t.text != "rec") {
      return std::vector<Token>{next(), {Tok::End, "", t.span}};
    }
    if (at_sym("(")) {
      std::vector<Token> out;
      int depth = 0;
      do {
        const Token& u = peek();
        if (u.kind == Tok::End) error("unbalanced `(`");
        if (u.kind == Tok::Sym && u.text == "(") ++depth;
        if (u.kind == Tok::Sym && u.text == ")") --depth;
        out.push_back(next());
      } while (depth > 0);
      out.push_back({Tok::End, "", peek().span});
      return out;
    }
    return std::nullopt;
  }

  ScriptCommand command() {
    if (!is_command_word(peek())) error("expected a command");
    Token head = next();
    ScriptCommand c;
    c.span = head.span;
    const std::string& w = head.text;
    if (w == "lattice" || w == "import") {
      c.kind = w == "lattice" ? ScriptCommand::Kind::Lattice : ScriptCommand::Kind::Import;
      c.path = string_lit();
    } else if (w == "type") {
      c.kind = ScriptCommand::Kind::Type;
      c.name = name();
      c.params = tyvars();
    } else if (w == "typesyn") {
      c.kind = ScriptCommand::Kind::TypeSyn;
      c.name = name();
      c.params = tyvars();
      expect_sym("=");
      c.body = slice_to_command("a type");
    } else if (w == "const") {
      c.kind = ScriptCommand::Kind::Const;
      c.name = name();
      expect_sym(":");
      c.body = slice_to_command("a type");
    } else if (w == "axiom") {
      c.kind = ScriptCommand::Kind::Axiom;
      c.name = name();
      if (at_sym("@")) {
        next();
        c.label = name();
      }
      expect_sym(":");
      c.body = slice_to_command("a formula");
    } else if (w == "def") {
      c.kind = ScriptCommand::Kind::Def;
      c.name = name();
      if (at_sym(":")) {
        next();
        c.annotation = slice([](const Token& t) { return t.kind == Tok::Sym && t.text == "="; }, "a type");
      }
      expect_sym("=");
      c.body = slice_to_command("a term");
    } else if (w == "datatype") {
      c.kind = ScriptCommand::Kind::Datatype;
      c.name = name();
      c.params = tyvars();
      expect_sym("=");
      while (true) {
        ScriptCommand::Ctor k;
        k.name = name();
        while (auto a = type_atom()) k.args.push_back(std::move(*a));
        c.ctors.push_back(std::move(k));
        if (!at_sym("|")) break;
        next();
      }
      if (at_word("rec")) {
        next();
        c.recursor = name();
      }
    } else if (w == "typedef") {
      c.kind = ScriptCommand::Kind::Typedef;
      c.name = name();
      expect_sym("=");
      c.body = slice([](const Token& t) { return t.kind == Tok::Ident && t.text == "by"; },
                     "a predicate");
      if (!at_word("by")) error("expected `by` and a witness theorem");
      next();
      c.witness = name();
      if (at_word("inj")) {
        next();
        c.inj = name();
      }
      if (at_word("proj")) {
        next();
        c.proj = name();
      }
    } else if (w == "theorem" || w == "lemma") {
      c.kind = ScriptCommand::Kind::Theorem;
      c.name = name();
      expect_sym("@");
      c.label = name();
      expect_sym(":");
      auto is_sep = [](const Token& t) {
        return (t.kind == Tok::Sym && (t.text == "|-" || t.text == ",")) ||
               (t.kind == Tok::Ident && t.text == "proof");
      };
      if (at_sym("|-")) {
        next();
      } else {
        std::vector<std::vector<Token>> parts{slice(is_sep, "a formula")};
        while (at_sym(",")) {
          next();
          parts.push_back(slice(is_sep, "a hypothesis"));
        }
        if (at_sym("|-")) {
          next();
          c.hyps = std::move(parts);
        } else if (parts.size() == 1) {
          c.body = std::move(parts[0]);
        } else {
          error("expected `|-` after the hypotheses");
        }
      }
      if (c.body.empty())
        c.body = slice([](const Token& t) { return t.kind == Tok::Ident && t.text == "proof"; },
                       "a formula");
      if (!at_word("proof")) error("expected `proof`");
      next();
      std::vector<Token> tac;
      while (!at_word("qed")) {
        if (peek().kind == Tok::End) error("expected `qed`");
        tac.push_back(next());
      }
      tac.push_back({Tok::End, "", peek().span});
      next();
      TheoryEnv empty;
      Parser p(empty, std::move(tac));
      if (p.at_end()) p.error("expected a tactic");
      c.tactic = parse_tactic(p);
      if (!p.at_end()) p.error("unexpected input in the proof");
    } else {
      c.kind = ScriptCommand::Kind::Unwind;
      c.source = name();
      if (!at_word("as")) error("expected `as`");
      next();
      c.name = name();
    }
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Type parse_type_slice(const TheoryEnv& env, const std::vector<Token>& toks) {
  Parser p(env, toks);
  Type ty = p.type();
  if (!p.at_end()) p.error("unexpected input after the type");
  check_type(env, ty);
  return ty;
}

PreTerm pre_term_slice(const TheoryEnv& env, const std::vector<Token>& toks,
                       std::optional<Type> expected) {
  Parser p(env, toks);
  PreTerm pt = p.pre_term();
  if (!p.at_end()) p.error("unexpected input after the term");
  if (expected) pt = PreTerm{PreTerm::Kind::Typed, "", *expected, {pt}, pt.span};
  return pt;
}

void flatten(const TacticExpr& t, std::vector<const TacticExpr*>& out) {
  if (t.kind == TacticExpr::Kind::Then) {
    flatten(t.kids[0], out);
    flatten(t.kids[1], out);
  } else {
    out.push_back(&t);
  }
}

bool same_lattice(const TaintLattice& a, const TaintLattice& b) {
  if (a.size() != b.size()) return false;
  for (auto l : a.members())
    if (a.name(l) != b.name(l)) return false;
  return a.order_pairs() == b.order_pairs() && a.bottom() == b.bottom();
}

std::string judgement_text(const TheoryEnv& env, const Thm& th) {
  std::vector<Term> all(th.context().begin(), th.context().end());
  all.push_back(th.formula());
  FreeScope scope = free_scope(all);
  std::string s;
  for (std::size_t i = 0; i < th.context().size(); ++i)
    s += (i ? ", " : "") + print_term(env, th.context()[i], scope);
  s += s.empty() ? "|- " : " |- ";
  return s + print_term(env, th.formula(), scope);
}

std::string params_text(const std::vector<std::string>& ps) {
  std::string s;
  for (const auto& p : ps) s += " '" + p;
  return s;
}

}  // namespace

std::vector<ScriptCommand> parse_script(std::string_view text, const std::string& file) {
  return ScriptParser(lex(text, file)).run();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScriptSession::ScriptSession(TheoryEnv env) : env_(std::move(env)) {}

std::string ScriptSession::report_text() const {
  std::string s;
  for (const auto& l : report_) s += l + "\n";
  return s;
}

void ScriptSession::run(const std::vector<ScriptCommand>& commands, const ScriptOptions& opts) {
  for (const auto& c : commands) {
    try {
      command(c, opts);
    } catch (const Error& e) {
      if (e.span()) throw;
      throw Error(e.kind(), e.detail(), c.span);
    } catch (const std::exception& e) {
      throw Error(ErrorKind::ScriptError, e.what(), c.span);
    }
  }
}

void ScriptSession::run_text(std::string_view text, const std::string& file,
                             const ScriptOptions& opts) {
  run(parse_script(text, file), opts);
}

void ScriptSession::run_file(const std::string& path) {
  std::string key = fs::weakly_canonical(fs::path(path)).string();
  loading_.push_back(key);
  ScriptOptions opts;
  opts.base_dir = fs::path(path).parent_path().string();
  if (opts.base_dir.empty()) opts.base_dir = ".";
  try {
    run_text(read_file(path), path, opts);
  } catch (...) {
    loading_.pop_back();
    throw;
  }
  loading_.pop_back();
  loaded_.insert(key);
}

void ScriptSession::import(const ScriptCommand& c, const ScriptOptions& opts) {
  fs::path local = fs::path(opts.base_dir) / c.path;
  std::string key, text, shown;
  ScriptOptions inner = opts;
  if (fs::exists(local)) {
    key = fs::weakly_canonical(local).string();
    shown = (opts.base_dir == "." ? fs::path(c.path) : local).lexically_normal().string();
    inner.base_dir = local.parent_path().string();
    if (inner.base_dir.empty()) inner.base_dir = ".";
  } else if (auto e = embedded_file(fs::path(c.path).filename().string())) {
    key = "<lib>/" + fs::path(c.path).filename().string();
    shown = key;
    text = *e;
  } else {
    fail(ErrorKind::IoError, "cannot find `" + c.path + "`", c.span);
  }
  report_.push_back("import " + c.path);
  if (loaded_.count(key)) return;
  for (const auto& k : loading_)
    if (k == key) fail(ErrorKind::ScriptError, "import cycle through `" + c.path + "`", c.span);
  if (text.empty()) text = read_file(local.string());
  loading_.push_back(key);
  std::size_t lines = report_.size();
  try {
    run_text(text, shown, inner);
  } catch (...) {
    loading_.pop_back();
    throw;
  }
  loading_.pop_back();
  loaded_.insert(key);
  // Imported files report their own commands only when checked directly.
  report_.resize(lines);
}

void ScriptSession::command(const ScriptCommand& c, const ScriptOptions& opts) {
  using K = ScriptCommand::Kind;
  if (c.kind == K::Import) return import(c, opts);

  TheoryEnv next = env_;
  std::string line;
  const TaintLattice& lat = next.lattice();
  auto label_of = [&](const std::optional<std::string>& name) {
    return name ? lat.label(*name) : lat.bottom();
  };

  switch (c.kind) {
    case K::Lattice: {
      fs::path local = fs::path(opts.base_dir) / c.path;
      std::string text;
      if (fs::exists(local)) {
        text = read_file(local.string());
      } else if (auto e = embedded_file(fs::path(c.path).filename().string())) {
        text = *e;
      } else {
        fail(ErrorKind::IoError, "cannot find `" + c.path + "`", c.span);
      }
      auto loaded = std::make_shared<const TaintLattice>(TaintLattice::load(text));
      static const std::size_t pristine = TheoryEnv().history().size();
      if (next.history().size() == pristine) {
        next = TheoryEnv(loaded);
      } else if (!same_lattice(*loaded, lat)) {
        fail(ErrorKind::ScriptError, "a different lattice must be declared before any other command");
      }
      line = "lattice " + c.path + ":";
      for (auto l : next.lattice().members()) line += " " + next.lattice().name(l);
      break;
    }
    case K::Type:
      next.add_former(c.name, Kind{static_cast<unsigned>(c.params.size())});
      line = "type " + c.name + params_text(c.params);
      break;
    case K::TypeSyn: {
      Type body = parse_type_slice(next, c.body);
      std::set<std::string> allowed(c.params.begin(), c.params.end());
      for (const auto& v : ftv(body))
        if (!allowed.count(v))
          fail(ErrorKind::TypeVariableEscape, "type variable '" + v + "' is not a parameter");
      next.add_synonym(c.name, c.params, body);
      line = "typesyn " + c.name + params_text(c.params) + " = " + print_type(body);
      break;
    }
    case K::Const: {
      Type ty = parse_type_slice(next, c.body);
      next.add_constant(c.name, ty);
      line = "const " + c.name + " : " + print_type(ty);
      break;
    }
    case K::Axiom: {
      Label l = label_of(c.label);
      Term phi = normalize_iff(elaborate(next, {pre_term_slice(next, c.body, prop_type())})[0]);
      check_formula(next, phi);
      next.add_axiom(c.name, phi, l, "axiom");
      line = "axiom " + c.name + " @ " + lat.name(l) + " : " + print_term(next, phi);
      break;
    }
    case K::Def: {
      std::optional<Type> ty;
      if (!c.annotation.empty()) ty = parse_type_slice(next, c.annotation);
      Term t = elaborate(next, {pre_term_slice(next, c.body, ty)})[0];
      define_constant(next, c.name, t);
      line = "def " + c.name + " : " + print_type(*next.constant_type(c.name));
      break;
    }
    case K::Datatype: {
      DatatypeSpec spec;
      spec.name = c.name;
      spec.params = c.params;
      spec.recursor = c.recursor;
      TheoryEnv scratch = next;
      scratch.add_former(c.name, Kind{static_cast<unsigned>(c.params.size())});
      for (const auto& k : c.ctors) {
        DatatypeSpec::Constructor ctor{k.name, {}};
        for (const auto& a : k.args) {
          Parser p(scratch, a);
          Type ty = p.type_atom();
          if (!p.at_end()) p.error("unexpected input after the type");
          ctor.args.push_back(ty);
        }
        spec.constructors.push_back(std::move(ctor));
      }
      const DatatypeBundle& b = declare_datatype(next, spec);
      line = "datatype " + b.former + params_text(b.params) + " =";
      for (std::size_t i = 0; i < b.constructors.size(); ++i)
        line += (i ? " | " : " ") + b.constructors[i].first;
      line += " rec " + b.recursor.first + " (" +
              std::to_string(b.distinctness.size() + b.injectivity.size() + b.recursion.size() + 1) +
              " axioms)";
      break;
    }
    case K::Typedef: {
      Thm w = lookup_fact(next, c.witness);
      auto ex = dest_exists(w.formula());
      if (!ex) fail(ErrorKind::WitnessShapeError, "`" + c.witness + "` is not an existential");
      Type want = fun_type(ex->first.type, prop_type());
      Term pred = elaborate(next, {pre_term_slice(next, c.body, want)})[0];
      const TypedefBundle& b = typedef_type(next, c.name, pred, w, c.inj, c.proj);
      line = "typedef " + b.former + params_text(b.params) + " @ " + lat.name(b.label) +
             (b.conjectured_label ? " (conjectured label)" : "") + " : " + b.inj + ", " + b.proj;
      break;
    }
    case K::Theorem: {
      Label l = lat.label(*c.label);
      std::vector<PreTerm> pts;
      for (const auto& h : c.hyps) pts.push_back(pre_term_slice(next, h, prop_type()));
      pts.push_back(pre_term_slice(next, c.body, prop_type()));
      std::vector<Term> ts = elaborate(next, pts);
      Goal goal{make_context({ts.begin(), ts.end() - 1}), ts.back(), l};
      auto shared = std::make_shared<const TheoryEnv>(next);
      ProofState st(shared, goal);
      std::vector<const TacticExpr*> steps;
      flatten(c.tactic, steps);
      for (const TacticExpr* s : steps) {
        try {
          st.apply(*s);
        } catch (const Error& e) {
          throw Error(e.kind(), e.detail(), s->span);
        }
      }
      Thm th = st.qed();
      next.add_theorem(c.name, th);
      line = "theorem " + c.name + " @ " + lat.name(th.label()) + " : " + judgement_text(next, th);
      break;
    }
    case K::Unwind: {
      Thm src = lookup_fact(next, c.source);
      Thm th = unwind_classical(next, src);
      next.add_theorem(c.name, th);
      line = "theorem " + c.name + " @ " + lat.name(th.label()) + " : " + judgement_text(next, th) +
             " (unwound from " + c.source + ")";
      break;
    }
    case K::Import:
      break;
  }
  env_ = std::move(next);
  report_.push_back(std::move(line));
}

ScriptResult run_script(const TheoryEnv& env, const std::vector<ScriptCommand>& commands,
                        const ScriptOptions& opts) {
  ScriptSession s(env);
  s.run(commands, opts);
  return {s.env(), s.report()};
}

}  // namespace holc
