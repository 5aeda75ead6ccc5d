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

#include "holc/tactic.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "holc/derived.h"
#include "holc/kernel.h"
#include "holc/logic.h"
#include "holc/print.h"
#include "holc/typing.h"

namespace holc {

namespace {

using Justify = ProofState::Justify;

[[noreturn]] void tfail(const std::string& tactic, const std::string& msg) {
  fail(ErrorKind::TacticFails, tactic + ": " + msg);
}

const std::map<std::string, std::string> kSignatures = {
    {"assumption", ""}, {"trivial", ""},    {"refl", ""},      {"lem", ""},
    {"wem", ""},        {"choice", ""},     {"choice_with", "T"},
    {"false_e", ""},    {"sym", ""},        {"trans", "T"},    {"abs_cong", ""},
    {"app_cong", ""},   {"beta", ""},       {"eta", ""},       {"neg_i", ""},
    {"contra", "T"},    {"iff_i", ""},      {"iff_e1", "T"},   {"iff_e2", "T"},
    {"conj_i", ""},     {"conj_e1", "T"},   {"conj_e2", "T"},  {"disj_i1", ""},
    {"disj_i2", ""},    {"disj_e", "T"},    {"intro", ""},     {"imp_i", ""},
    {"all_i", ""},      {"mp", "T"},        {"all_e", "TT"},   {"exists", "T"},
    {"ex_e", "T"},      {"clear", "T"},     {"subst", "TTT"},  {"raa", ""},
    {"case_split", "T"}, {"cut", "T"},      {"lift_to", "L"},  {"exact", "N"},
    {"apply", "H"},     {"apply_assum", ""}, {"use", "N"},     {"rewrite", "N"},
    {"rewrite_rev", "N"}, {"unfold", "N"},  {"ext", ""},       {"set_ext", ""},
    {"split_hyps", ""},
};

// ---------------------------------------------------------------------------
// Parsing.

TacticExpr parse_seq(Parser& p);

bool seq_stop(const Parser& p) {
  return p.at_end() || p.at_word("qed") || p.at_sym(")") || p.at_sym("|");
}

TacticExpr parse_unary(Parser& p) {
  const Token& t = p.peek();
  if (p.at_sym("(")) {
    p.next();
    TacticExpr inner = parse_seq(p);
    p.expect_sym(")");
    return inner;
  }
  if (t.kind != Tok::Ident) p.error("expected a tactic");
  Token word = p.next();
  TacticExpr e;
  e.span = word.span;
  if (word.text == "repeat" || word.text == "try" || word.text == "all") {
    e.kind = word.text == "repeat" ? TacticExpr::Kind::Repeat
             : word.text == "try"  ? TacticExpr::Kind::Try
                                   : TacticExpr::Kind::All;
    e.kids.push_back(parse_unary(p));
    return e;
  }
  if (word.text == "id") {
    e.kind = TacticExpr::Kind::Id;
    return e;
  }
  if (word.text == "fail") {
    e.kind = TacticExpr::Kind::Fail;
    return e;
  }
  auto sig = kSignatures.find(word.text);
  if (sig == kSignatures.end())
    fail(ErrorKind::SyntaxError, "unknown tactic `" + word.text + "`", word.span);
  e.kind = TacticExpr::Kind::Basic;
  e.name = word.text;
  for (char k : sig->second) {
    const Token& a = p.peek();
    bool quote = a.kind == Tok::Quote;
    bool name = a.kind == Tok::Ident && !is_reserved(a.text);
    bool ok = k == 'T' ? quote : k == 'H' ? (quote || name) : name;
    if (!ok)
      fail(ErrorKind::SyntaxError,
           "`" + e.name + "` expects " +
               (k == 'T' ? "a backquoted term" : k == 'L' ? "a label" : "a name"),
           a.span);
    Token tok = p.next();
    e.args.push_back({quote ? TacticArg::Kind::Term : TacticArg::Kind::Name, tok.text, tok.span});
  }
  return e;
}

TacticExpr parse_alt(Parser& p) {
  TacticExpr l = parse_unary(p);
  while (p.at_sym("|")) {
    p.next();
    TacticExpr r = parse_unary(p);
    TacticExpr e;
    e.kind = TacticExpr::Kind::OrElse;
    e.span = l.span;
    e.kids = {std::move(l), std::move(r)};
    l = std::move(e);
  }
  return l;
}

TacticExpr parse_seq(Parser& p) {
  TacticExpr l = parse_alt(p);
  while (true) {
    if (p.at_sym(";")) {
      p.next();
    } else if (seq_stop(p)) {
      break;
    }
    if (seq_stop(p)) break;
    TacticExpr r = parse_alt(p);
    TacticExpr e;
    e.kind = TacticExpr::Kind::Then;
    e.span = l.span;
    e.kids = {std::move(l), std::move(r)};
    l = std::move(e);
  }
  return l;
}

// ---------------------------------------------------------------------------
// Helpers for basic tactics.

struct Outcome {
  std::vector<Goal> subgoals;
  Justify justify;
  bool relabels = false;
};

std::set<VarRef> goal_fv(const Goal& g) {
  std::set<VarRef> out = context_fv(g.context);
  for (const auto& v : fv(g.formula)) out.insert(v);
  return out;
}

// Avoids names of every type, so that goals never show one name at two
// types.
VarRef fresh(const std::string& base, const Type& ty, const std::set<VarRef>& avoid) {
  std::set<std::string> names;
  for (const auto& v : avoid) names.insert(v.name);
  return {variant_name(base, names), ty};
}

Goal with_formula(const Goal& g, Term f) { return {g.context, normalize_iff(std::move(f)), g.label}; }

Goal with_hyp(const Goal& g, const Term& h, Term f) {
  return {context_insert(g.context, normalize_iff(h)), normalize_iff(std::move(f)), g.label};
}

// Closes a goal from a theorem whose formula agrees with the goal up to
// beta-conversion.
Thm close_up_to_beta(const TheoryEnv& env, const Goal& g, Thm th) {
  if (th.formula() == g.formula) return lift_to(env, weaken_to(env, th, g.context), g.label);
  auto a = beta_norm_conv(env, th.context())(th.formula());
  if (a) {
    auto [eq, t1] = lift_pair(env, *a, th);
    th = kernel::iff_elim1(env, eq, t1);
  }
  th = weaken_to(env, th, g.context);
  auto b = beta_norm_conv(env, g.context)(g.formula);
  if (b) {
    auto [eq, t2] = lift_pair(env, *b, th);
    th = kernel::iff_elim2(env, eq, t2);
  }
  return lift_to(env, th, g.label);
}

class Basic {
 public:
  Basic(const TheoryEnv& env, const Goal& goal, const TacticExpr& t)
      : env_(env), g_(goal), t_(t) {}

  Outcome run();

 private:
  [[noreturn]] void no(const std::string& msg) const { tfail(t_.name, msg); }

  Term term_arg(std::size_t i, std::optional<Type> expected) const {
    const TacticArg& a = t_.args.at(i);
    Parser p(env_, lex(a.text, a.span.file, a.span.start_line, a.span.start_col + 1));
    PreTerm pt = p.pre_term();
    if (!p.at_end()) p.error("unexpected input after the term");
    if (expected) pt = PreTerm{PreTerm::Kind::Typed, "", *expected, {pt}, pt.span};
    std::vector<Term> all(g_.context.begin(), g_.context.end());
    all.push_back(g_.formula);
    return elaborate(env_, {pt}, free_scope(all))[0];
  }
  Term formula_arg(std::size_t i) const { return normalize_iff(term_arg(i, prop_type())); }

  Outcome leaf(std::function<Thm()> make) {
    return {{}, [make](const std::vector<Thm>&) { return make(); }};
  }

  Outcome conversion(std::function<Conv(const Context&)> make_conv, bool hyps);
  Outcome apply_lemma(const Thm& lemma, bool open_types);

  const TheoryEnv& env_;
  const Goal& g_;
  const TacticExpr& t_;
};

Outcome Basic::conversion(std::function<Conv(const Context&)> make_conv, bool hyps) {
  const TheoryEnv& env = env_;
  const Goal g = g_;
  std::vector<std::pair<Term, Term>> changed;
  Context ctx = g.context;
  if (hyps) {
    for (const auto& h : g.context) {
      auto eq = make_conv(ctx)(h);
      if (!eq) continue;
      Term h2 = normalize_iff(dest_eq(eq->formula())->second);
      if (h2 == h) continue;
      changed.emplace_back(h, h2);
      ctx = context_insert(context_erase(ctx, h), h2);
    }
  }
  auto geq = make_conv(ctx)(g.formula);
  Term phi2 = geq ? normalize_iff(dest_eq(geq->formula())->second) : g.formula;
  if (changed.empty() && phi2 == g.formula) no("nothing to rewrite");
  Goal sub{ctx, phi2, g.label};
  Justify j = [&env, g, sub, changed, make_conv](const std::vector<Thm>& ths) {
    Thm th = ths[0];
    if (!(sub.formula == g.formula)) {
      auto eq = make_conv(sub.context)(g.formula);
      th = kernel::iff_elim2(env, lift_to(env, *eq, g.label), th);
    }
    // Undo the hypothesis rewrites from the last to the first.
    std::vector<Context> stages{g.context};
    for (const auto& [h, h2] : changed)
      stages.push_back(context_insert(context_erase(stages.back(), h), h2));
    for (std::size_t i = changed.size(); i-- > 0;) {
      const Context& before = stages[i];
      const auto& [h, h2] = changed[i];
      auto eq = make_conv(before)(h);
      Thm got = kernel::iff_elim1(env, lift_to(env, *eq, g.label),
                                  lift_to(env, kernel::init(env, before, h), g.label));
      th = cut(env, got, weaken_to(env, th, context_insert(before, h2)));
    }
    return th;
  };
  return {{sub}, j};
}

Outcome Basic::apply_lemma(const Thm& lemma, bool open_types) {
  const TheoryEnv& env = env_;
  const Goal g = g_;
  OpenLemma ol{lemma, {}, {}};
  std::set<VarRef> avoid = goal_fv(g);
  if (open_types) {
    std::set<std::string> tys = ftv(g.formula);
    for (const auto& h : g.context)
      for (const auto& a : ftv(h)) tys.insert(a);
    ol = open_lemma(env, lemma, avoid, tys, false);
  }
  // Fewest universals opened first, then most premises first.
  do {
    std::vector<Term> prems;
    Term concl = ol.thm.formula();
    while (auto d = dest_imp(concl)) {
      prems.push_back(d->first);
      concl = d->second;
    }
    for (std::size_t k = prems.size() + 1; k-- > 0;) {
      Term c = ol.thm.formula();
      for (std::size_t i = 0; i < k; ++i) c = dest_imp(c)->second;
      auto m = match_term(c, g.formula, ol.vars, ol.tyvars);
      if (!m) continue;
      bool schematic = false;
      for (std::size_t i = 0; i < k; ++i)
        for (const auto& v : fv(prems[i]))
          if (ol.vars.count(v) && !std::any_of(m->terms.begin(), m->terms.end(),
                                               [&](const auto& kv) { return kv.first == v; }))
            schematic = true;
      if (schematic) continue;
      Thm inst = instantiate(env, ol, *m);
      std::vector<Goal> subs;
      Term f = inst.formula();
      for (std::size_t i = 0; i < k; ++i) {
        auto d = dest_imp(f);
        subs.push_back(with_formula(g, d->first));
        f = d->second;
      }
      if (!context_subset(inst.context(), g.context))
        no("the lemma's hypotheses are not in the context");
      Justify j = [&env, g, inst](const std::vector<Thm>& ths) {
        Thm th = lift_to(env, weaken_to(env, inst, g.context), g.label);
        for (const auto& p : ths) th = kernel::imp_elim(env, th, p);
        return th;
      };
      return {subs, j};
    }
  } while (open_forall(env, ol, avoid));
  no("the lemma does not match the goal");
}

Outcome Basic::run() {
  const TheoryEnv& env = env_;
  const Goal g = g_;
  const std::string& n = t_.name;
  const Term& phi = g.formula;
  const Label l = g.label;
  const TaintLattice& lat = env.lattice();

  if (n == "assumption") {
    if (!context_contains(g.context, phi)) no("the goal is not a hypothesis");
    return leaf([&env, g] { return lift_to(env, kernel::init(env, g.context, g.formula), g.label); });
  }
  if (n == "trivial") {
    if (!is_true(phi)) no("the goal is not True");
    return leaf([&env, g] { return lift_to(env, kernel::true_intro(env, g.context), g.label); });
  }
  if (n == "refl") {
    auto eq = dest_eq(phi);
    if (!eq || !(eq->first == eq->second)) no("the goal is not an equation between equal sides");
    Term r = eq->first;
    return leaf([&env, g, r] { return lift_to(env, kernel::refl(env, g.context, r), g.label); });
  }
  if (n == "lem" || n == "wem") {
    auto d = dest_or(phi);
    if (!d) no("the goal is not a disjunction");
    Term a = d->first;
    if (n == "wem") {
      auto na = dest_not(a);
      if (!na) no("the goal is not of the form ~p \\/ ~~p");
      a = *na;
    }
    bool is_lem = n == "lem";
    Thm probe = is_lem ? kernel::lem(env, g.context, a) : kernel::wem(env, g.context, a);
    if (!(probe.formula() == phi)) no("the goal is not an instance of the scheme");
    if (!lat.leq(probe.label(), l))
      fail(ErrorKind::TacticFails, n + ": NotAbove: the scheme lives at " + lat.name(probe.label()) +
                                       ", not below " + lat.name(l));
    return leaf([&env, g, a, is_lem] {
      return lift_to(env, is_lem ? kernel::lem(env, g.context, a) : kernel::wem(env, g.context, a),
                     g.label);
    });
  }
  if (n == "choice" || n == "choice_with") {
    Term rel = Term::var("_", prop_type());
    if (n == "choice_with") {
      rel = term_arg(0, std::nullopt);
    } else {
      auto d = dest_imp(phi);
      auto q = d ? dest_forall(d->first) : std::nullopt;
      auto e = q ? dest_exists(q->second) : std::nullopt;
      if (!e) no("the goal is not of the form (forall x. exists y. R x y) --> ...");
      rel = Term::lam(q->first, Term::lam(e->first, e->second));
    }
    Thm probe = kernel::choice(env, g.context, rel);
    if (!lat.leq(probe.label(), l))
      fail(ErrorKind::TacticFails, n + ": NotAbove: choice lives at " + lat.name(probe.label()) +
                                       ", not below " + lat.name(l));
    return leaf([&env, g, rel] { return close_up_to_beta(env, g, kernel::choice(env, g.context, rel)); });
  }
  if (n == "false_e") {
    return {{with_formula(g, mk_false())},
            [&env, phi](const std::vector<Thm>& t) { return kernel::false_elim(env, t[0], phi); }};
  }
  if (n == "sym") {
    auto eq = dest_eq(phi);
    if (!eq) no("the goal is not an equation");
    return {{with_formula(g, mk_eq(eq->second, eq->first))},
            [&env](const std::vector<Thm>& t) { return kernel::sym(env, t[0]); }};
  }
  if (n == "trans") {
    auto eq = dest_eq(phi);
    if (!eq) no("the goal is not an equation");
    Term s = term_arg(0, type_of(env, eq->first));
    return {{with_formula(g, mk_eq(eq->first, s)), with_formula(g, mk_eq(s, eq->second))},
            [&env](const std::vector<Thm>& t) { return kernel::trans(env, t[0], t[1]); }};
  }
  if (n == "abs_cong") {
    auto eq = dest_eq(phi);
    if (!eq || !eq->first.is_lam() || !eq->second.is_lam()) no("the goal is not an equation of abstractions");
    const Term& a = eq->first;
    const Term& b = eq->second;
    if (!(a.annotation() == b.annotation())) no("binder types differ");
    std::set<VarRef> avoid = goal_fv(g);
    VarRef x = a.var_ref();
    x = fresh(x.name, x.type, avoid);
    Term lb = term_subst(a.body(), a.var_ref(), Term::var(x));
    Term rb = term_subst(b.body(), b.var_ref(), Term::var(x));
    return {{with_formula(g, mk_eq(lb, rb))},
            [&env, x](const std::vector<Thm>& t) { return kernel::lam_cong(env, t[0], x); }};
  }
  if (n == "app_cong") {
    auto eq = dest_eq(phi);
    if (!eq || !eq->first.is_app() || !eq->second.is_app()) no("the goal is not an equation of applications");
    const Term& a = eq->first;
    const Term& b = eq->second;
    if (!(type_of(env, a.fun()) == type_of(env, b.fun()))) no("the functions have different types");
    return {{with_formula(g, mk_eq(a.fun(), b.fun())), with_formula(g, mk_eq(a.arg(), b.arg()))},
            [&env](const std::vector<Thm>& t) { return kernel::app_cong(env, t[0], t[1]); }};
  }
  if (n == "beta") {
    return conversion([&env](const Context& c) { return beta_norm_conv(env, c); }, true);
  }
  if (n == "eta") {
    auto eq = dest_eq(phi);
    if (!eq) no("the goal is not an equation");
    Term lam = eq->first;
    return leaf([&env, g, lam] { return lift_to(env, kernel::eta(env, g.context, lam), g.label); });
  }
  if (n == "neg_i" || (n == "intro" && dest_not(phi))) {
    auto a = dest_not(phi);
    if (!a) no("the goal is not a negation");
    Term p = *a;
    Context ctx = g.context;
    return {{with_hyp(g, p, mk_false())},
            [&env, p, ctx](const std::vector<Thm>& t) { return kernel::neg_intro(env, t[0], p, ctx); }};
  }
  if (n == "contra") {
    if (!is_false(phi)) no("the goal is not False");
    Term p = formula_arg(0);
    return {{with_formula(g, p), with_formula(g, mk_not(p))},
            [&env](const std::vector<Thm>& t) { return kernel::neg_elim(env, t[0], t[1]); }};
  }
  if (n == "iff_i") {
    auto d = dest_iff(phi);
    if (!d) no("the goal is not a bi-implication");
    Context ctx = g.context;
    return {{with_hyp(g, d->second, d->first), with_hyp(g, d->first, d->second)},
            [&env, ctx](const std::vector<Thm>& t) { return kernel::iff_intro(env, t[0], t[1], ctx); }};
  }
  if (n == "iff_e1") {
    Term p = formula_arg(0);
    return {{with_formula(g, mk_iff(p, phi)), with_formula(g, p)},
            [&env](const std::vector<Thm>& t) { return kernel::iff_elim1(env, t[0], t[1]); }};
  }
  if (n == "iff_e2") {
    Term q = formula_arg(0);
    return {{with_formula(g, mk_iff(phi, q)), with_formula(g, q)},
            [&env](const std::vector<Thm>& t) { return kernel::iff_elim2(env, t[0], t[1]); }};
  }
  if (n == "conj_i") {
    auto d = dest_and(phi);
    if (!d) no("the goal is not a conjunction");
    return {{with_formula(g, d->first), with_formula(g, d->second)},
            [&env](const std::vector<Thm>& t) { return kernel::conj_intro(env, t[0], t[1]); }};
  }
  if (n == "conj_e1") {
    Term q = formula_arg(0);
    return {{with_formula(g, mk_and(phi, q))},
            [&env](const std::vector<Thm>& t) { return kernel::conj_elim1(env, t[0]); }};
  }
  if (n == "conj_e2") {
    Term p = formula_arg(0);
    return {{with_formula(g, mk_and(p, phi))},
            [&env](const std::vector<Thm>& t) { return kernel::conj_elim2(env, t[0]); }};
  }
  if (n == "disj_i1" || n == "disj_i2") {
    auto d = dest_or(phi);
    if (!d) no("the goal is not a disjunction");
    bool left = n == "disj_i1";
    Term other = left ? d->second : d->first;
    return {{with_formula(g, left ? d->first : d->second)},
            [&env, left, other](const std::vector<Thm>& t) {
              return left ? kernel::disj_intro1(env, t[0], other) : kernel::disj_intro2(env, t[0], other);
            }};
  }
  if (n == "disj_e") {
    Term d = formula_arg(0);
    auto parts = dest_or(d);
    if (!parts) no("the argument is not a disjunction");
    return {{with_formula(g, d), with_hyp(g, parts->first, phi), with_hyp(g, parts->second, phi)},
            [&env](const std::vector<Thm>& t) { return kernel::disj_elim(env, t[0], t[1], t[2]); }};
  }
  if (n == "imp_i" || (n == "intro" && dest_imp(phi))) {
    auto d = dest_imp(phi);
    if (!d) no("the goal is not an implication");
    Term p = d->first;
    Context ctx = g.context;
    return {{with_hyp(g, p, d->second)},
            [&env, p, ctx](const std::vector<Thm>& t) { return kernel::imp_intro(env, t[0], p, ctx); }};
  }
  if (n == "all_i" || (n == "intro" && dest_forall(phi))) {
    auto q = dest_forall(phi);
    if (!q) no("the goal is not a universal");
    std::set<VarRef> avoid = goal_fv(g);
    VarRef x = q->first;
    x = fresh(x.name, x.type, avoid);
    Term body = term_subst(q->second, q->first, Term::var(x));
    return {{with_formula(g, body)},
            [&env, x](const std::vector<Thm>& t) { return kernel::all_intro(env, t[0], x); }};
  }
  if (n == "intro") no("the goal is not an implication, negation or universal");
  if (n == "mp") {
    Term p = formula_arg(0);
    return {{with_formula(g, mk_imp(p, phi)), with_formula(g, p)},
            [&env](const std::vector<Thm>& t) { return kernel::imp_elim(env, t[0], t[1]); }};
  }
  if (n == "all_e") {
    Term all = formula_arg(0);
    auto q = dest_forall(all);
    if (!q) no("the argument is not a universal");
    Term r = term_arg(1, q->first.type);
    return {{with_formula(g, all)},
            [&env, r](const std::vector<Thm>& t) { return kernel::all_elim(env, t[0], r); }};
  }
  if (n == "exists") {
    auto q = dest_exists(phi);
    if (!q) no("the goal is not an existential");
    Term r = term_arg(0, q->first.type);
    VarRef x = q->first;
    Term body = q->second;
    return {{with_formula(g, term_subst(body, x, r))},
            [&env, x, body, r](const std::vector<Thm>& t) { return kernel::ex_intro(env, t[0], x, body, r); }};
  }
  if (n == "ex_e") {
    Term ex = formula_arg(0);
    auto q = dest_exists(ex);
    if (!q) no("the argument is not an existential");
    std::set<VarRef> avoid = goal_fv(g);
    for (const auto& v : fv(ex)) avoid.insert(v);
    VarRef y = q->first;
    y = fresh(y.name, y.type, avoid);
    Term hyp = term_subst(q->second, q->first, Term::var(y));
    return {{with_formula(g, ex), with_hyp(g, hyp, phi)},
            [&env, y](const std::vector<Thm>& t) { return kernel::ex_elim(env, t[0], t[1], y); }};
  }
  if (n == "clear") {
    Term h = formula_arg(0);
    if (!context_contains(g.context, h)) no("not a hypothesis");
    return {{{context_erase(g.context, h), phi, l}},
            [&env, h](const std::vector<Thm>& t) { return kernel::weaken(env, t[0], h); }};
  }
  if (n == "subst") {
    Term pattern = formula_arg(0);
    Term xv = term_arg(1, std::nullopt);
    if (!xv.is_var()) no("the second argument must be a variable");
    VarRef x = xv.var_ref();
    Term r = term_arg(2, x.type);
    if (context_fv(g.context).count(x)) no("the variable is free in the context");
    return {{with_formula(g, pattern)},
            [&env, x, r](const std::vector<Thm>& t) { return kernel::subst(env, t[0], x, r); }};
  }
  if (n == "raa" || n == "case_split") {
    Label c = classical_label(env);
    if (!lat.leq(c, l))
      fail(ErrorKind::TacticFails, n + ": NotAbove: classical reasoning needs " + lat.name(c) +
                                       " but the goal is at " + lat.name(l));
    Context ctx = g.context;
    if (n == "raa") {
      return {{with_hyp(g, mk_not(phi), mk_false())},
              [&env, phi, ctx](const std::vector<Thm>& t) { return raa(env, t[0], phi, ctx); }};
    }
    Term p = formula_arg(0);
    return {{with_hyp(g, p, phi), with_hyp(g, mk_not(p), phi)},
            [&env, p, ctx](const std::vector<Thm>& t) { return case_split(env, t[0], t[1], p, ctx); }};
  }
  if (n == "cut") {
    Term p = formula_arg(0);
    return {{with_formula(g, p), with_hyp(g, p, phi)},
            [&env](const std::vector<Thm>& t) { return cut(env, t[0], t[1]); }};
  }
  if (n == "lift_to") {
    Label target = lat.label(t_.args[0].text);
    if (!lat.leq(target, l))
      fail(ErrorKind::NotBelow, "lift_to: " + lat.name(target) + " is not below " + lat.name(l));
    Outcome o{{{g.context, phi, target}},
              [&env, l](const std::vector<Thm>& t) { return lift_to(env, t[0], l); }};
    o.relabels = true;
    return o;
  }
  if (n == "exact") {
    Thm lemma = lookup_fact(env, t_.args[0].text);
    if (!lat.leq(lemma.label(), l))
      fail(ErrorKind::TacticFails, "exact: NotAbove: `" + t_.args[0].text + "` is at " +
                                       lat.name(lemma.label()) + ", above " + lat.name(l));
    Outcome o = apply_lemma(lemma, true);
    if (!o.subgoals.empty()) no("the lemma does not prove the goal outright");
    return o;
  }
  if (n == "apply") {
    const TacticArg& a = t_.args[0];
    if (a.kind == TacticArg::Kind::Term) {
      Term h = formula_arg(0);
      if (!context_contains(g.context, h)) no("the term is not a hypothesis");
      return apply_lemma(kernel::init(env, g.context, h), false);
    }
    Thm lemma = lookup_fact(env, a.text);
    if (!lat.leq(lemma.label(), l))
      fail(ErrorKind::TacticFails, "apply: NotAbove: `" + a.text + "` is at " +
                                       lat.name(lemma.label()) + ", above " + lat.name(l));
    return apply_lemma(lemma, true);
  }
  if (n == "apply_assum") {
    for (const auto& h : g.context) {
      try {
        return apply_lemma(kernel::init(env, g.context, h), false);
      } catch (const Error&) {
      }
    }
    no("no hypothesis applies");
  }
  if (n == "use") {
    Thm lemma = lookup_fact(env, t_.args[0].text);
    if (!lemma.context().empty()) no("the lemma has hypotheses");
    if (!lat.leq(lemma.label(), l))
      fail(ErrorKind::TacticFails, "use: NotAbove: `" + t_.args[0].text + "` is at " +
                                       lat.name(lemma.label()) + ", above " + lat.name(l));
    return {{with_hyp(g, lemma.formula(), phi)},
            [&env, lemma, g](const std::vector<Thm>& t) {
              return cut(env, lift_to(env, weaken_to(env, lemma, g.context), g.label), t[0]);
            }};
  }
  if (n == "rewrite" || n == "rewrite_rev") {
    Thm lemma = lookup_fact(env, t_.args[0].text);
    if (!lat.leq(lemma.label(), l))
      fail(ErrorKind::TacticFails, n + ": NotAbove: `" + t_.args[0].text + "` is at " +
                                       lat.name(lemma.label()) + ", above " + lat.name(l));
    if (n == "rewrite_rev") {
      OpenLemma ol = open_lemma(env, lemma, {}, {});
      Thm th = ol.thm;
      if (!dest_eq(th.formula())) no("the lemma is not an equation");
      lemma = kernel::sym(env, th);
    }
    return conversion(
        [&env, lemma](const Context& c) {
          return once_depth_conv(env, c, rewrite_conv(env, c, lemma));
        },
        false);
  }
  if (n == "unfold") {
    std::string c = t_.args[0].text;
    if (!env.definition(c)) no("`" + c + "` is not a defined constant");
    return conversion(
        [&env, c](const Context& ctx) {
          return then_conv(env, unfold_conv(env, ctx, c), beta_norm_conv(env, ctx));
        },
        true);
  }
  if (n == "ext" || n == "set_ext") {
    auto eq = dest_eq(phi);
    if (!eq) no("the goal is not an equation");
    Type ty = type_of(env, eq->first);
    if (!is_fun_type(ty)) no("the sides are not functions");
    std::set<VarRef> avoid = goal_fv(g);
    VarRef x = fresh("x", fun_dom(ty), avoid);
    Term lhs = Term::app(eq->first, Term::var(x));
    Term rhs = Term::app(eq->second, Term::var(x));
    bool set = n == "set_ext";
    if (set && !(fun_cod(ty) == prop_type())) no("the sides are not sets");
    return {{with_formula(g, set ? mk_iff(lhs, rhs) : mk_eq(lhs, rhs))},
            [&env, set](const std::vector<Thm>& t) { return set ? set_ext(env, t[0]) : ext(env, t[0]); }};
  }
  if (n == "split_hyps") {
    std::vector<Term> conj;
    for (const auto& h : g.context)
      if (dest_and(h)) conj.push_back(h);
    if (conj.empty()) no("no conjunctive hypotheses");
    Context ctx = g.context;
    for (const auto& h : conj) {
      auto d = dest_and(h);
      ctx = context_insert(context_insert(context_erase(ctx, h), d->first), d->second);
    }
    return {{{ctx, phi, l}},
            [&env, g, conj](const std::vector<Thm>& t) {
              std::vector<Context> stages{g.context};
              for (const auto& h : conj) {
                auto d = dest_and(h);
                stages.push_back(
                    context_insert(context_insert(context_erase(stages.back(), h), d->first), d->second));
              }
              Thm th = t[0];
              for (std::size_t i = conj.size(); i-- > 0;) {
                const Context& before = stages[i];
                const Term& h = conj[i];
                Thm hh = lift_to(env, kernel::init(env, before, h), g.label);
                Thm a = kernel::conj_elim1(env, hh);
                Thm b = kernel::conj_elim2(env, hh);
                Context with_a = context_insert(before, a.formula());
                Thm step = cut(env, weaken_to(env, b, with_a),
                               weaken_to(env, th, context_insert(with_a, b.formula())));
                th = cut(env, a, step);
              }
              return th;
            }};
  }
  no("unknown tactic");
}

std::string arg_text(const TacticArg& a) {
  return a.kind == TacticArg::Kind::Term ? "`" + a.text + "`" : a.text;
}

std::string print_prec(const TacticExpr& t, int prec) {
  switch (t.kind) {
    case TacticExpr::Kind::Basic: {
      std::string s = t.name;
      for (const auto& a : t.args) s += " " + arg_text(a);
      return s;
    }
    case TacticExpr::Kind::Id:
      return "id";
    case TacticExpr::Kind::Fail:
      return "fail";
    case TacticExpr::Kind::Repeat:
    case TacticExpr::Kind::Try:
    case TacticExpr::Kind::All: {
      const char* kw = t.kind == TacticExpr::Kind::Repeat ? "repeat "
                       : t.kind == TacticExpr::Kind::Try  ? "try "
                                                          : "all ";
      return kw + print_prec(t.kids[0], 2);
    }
    case TacticExpr::Kind::OrElse: {
      std::string s = print_prec(t.kids[0], 1) + " | " + print_prec(t.kids[1], 2);
      return prec > 1 ? "(" + s + ")" : s;
    }
    case TacticExpr::Kind::Then: {
      std::string s = print_prec(t.kids[0], 0) + "; " + print_prec(t.kids[1], 1);
      return prec > 0 ? "(" + s + ")" : s;
    }
  }
  return "";
}

bool same_goal(const Goal& a, const Goal& b) {
  return a.label == b.label && a.formula == b.formula && context_equal(a.context, b.context);
}

}  // namespace

const std::map<std::string, std::string>& tactic_signatures() { return kSignatures; }

TacticExpr parse_tactic(Parser& p) { return parse_seq(p); }

TacticExpr parse_tactic(std::string_view text, const std::string& file) {
  TheoryEnv empty;
  Parser p(empty, lex(text, file));
  TacticExpr t = parse_seq(p);
  if (!p.at_end()) p.error("unexpected input after the tactic");
  return t;
}

std::string print_tactic(const TacticExpr& t) { return print_prec(t, 0); }

Thm lookup_fact(const TheoryEnv& env, const std::string& name) {
  if (const Thm* th = env.theorem(name)) return *th;
  if (env.axiom(name)) return kernel::axiom(env, name);
  if (env.definition(name)) return kernel::defn(env, name);
  fail(ErrorKind::UnknownName, "no theorem, axiom or definition named `" + name + "`");
}

// ---------------------------------------------------------------------------
// Proof states.

struct TacticRunner {
  ProofState& st;
  ProofState::Snapshot& s;
  std::size_t budget = 2000;

  const Goal& goal_at(std::size_t i) const { return st.table_[s.open[i]]; }

  void basic(const TacticExpr& t, std::size_t i) {
    if (i >= s.open.size()) fail(ErrorKind::NoGoals, t.name + ": no goals");
    if (budget == 0) tfail(t.name, "step limit reached");
    --budget;
    const TheoryEnv& env = *st.env_;
    const Goal g = goal_at(i);
    Outcome o;
    try {
      o = Basic(env, g, t).run();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TacticFails || e.kind() == ErrorKind::NotBelow ||
          e.kind() == ErrorKind::NoGoals)
        throw;
      tfail(t.name, std::string(error_kind_name(e.kind())) + ": " + e.detail());
    }
    std::vector<Thm> holes;
    for (auto& sg : o.subgoals) {
      if (!o.relabels && sg.label != g.label)
        fail(ErrorKind::JustificationMismatch, t.name + ": subgoal label differs from the goal's");
      try {
        holes.push_back(kernel::placeholder(env, sg.context, sg.formula, sg.label));
      } catch (const Error& e) {
        tfail(t.name, "ill-formed subgoal: " + std::string(error_kind_name(e.kind())) + ": " + e.detail());
      }
    }
    try {
      Thm probe = o.justify(holes);
      Thm want = kernel::placeholder(env, g.context, g.formula, g.label);
      if (!probe.same_judgement(want)) tfail(t.name, "the step does not prove the goal");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TacticFails) throw;
      tfail(t.name, std::string(error_kind_name(e.kind())) + ": " + e.detail());
    }
    auto step = std::make_shared<ProofState::Step>();
    step->justify = std::move(o.justify);
    std::vector<std::size_t> ids;
    for (auto& sg : o.subgoals) {
      ids.push_back(st.table_.size());
      st.table_.push_back(std::move(sg));
    }
    step->children = ids;
    st.steps_[s.open[i]] = std::move(step);
    s.open.erase(s.open.begin() + static_cast<std::ptrdiff_t>(i));
    s.open.insert(s.open.begin() + static_cast<std::ptrdiff_t>(i), ids.begin(), ids.end());
  }

  // Runs `t` at goal position i.
  void run(const TacticExpr& t, std::size_t i) {
    switch (t.kind) {
      case TacticExpr::Kind::Basic:
        basic(t, i);
        return;
      case TacticExpr::Kind::Id:
        return;
      case TacticExpr::Kind::Fail:
        fail(ErrorKind::TacticFails, "fail");
      case TacticExpr::Kind::Then:
        run(t.kids[0], i);
        run(t.kids[1], i);
        return;
      case TacticExpr::Kind::OrElse:
      case TacticExpr::Kind::Try: {
        std::optional<ProofState::Snapshot> saved;
        if (t.kids[0].kind != TacticExpr::Kind::Basic) saved = s;
        try {
          run(t.kids[0], i);
        } catch (const Error&) {
          if (budget == 0) throw;
          if (saved) s = std::move(*saved);
          if (t.kind == TacticExpr::Kind::OrElse) run(t.kids[1], i);
        }
        return;
      }
      case TacticExpr::Kind::All: {
        for (std::size_t k = s.open.size(); k-- > i;) run(t.kids[0], k);
        return;
      }
      case TacticExpr::Kind::Repeat:
        repeat(t.kids[0], i);
        return;
    }
  }

  // Applies `t` at position i, then recursively to each goal it produced.
  // Stops at a goal where `t` fails or makes no progress.
  void repeat(const TacticExpr& t, std::size_t i) {
    if (i >= s.open.size()) return;
    const Goal before = goal_at(i);
    const std::size_t before_id = s.open[i];
    std::size_t size = s.open.size();
    // A failing basic tactic leaves the state alone, so only composite
    // tactics need a copy to roll back to.
    const bool simple = t.kind == TacticExpr::Kind::Basic;
    std::optional<ProofState::Snapshot> saved;
    if (!simple) saved = s;
    try {
      run(t, i);
    } catch (const Error& e) {
      if (saved) s = std::move(*saved);
      if (budget == 0) throw;
      return;
    }
    std::ptrdiff_t produced = static_cast<std::ptrdiff_t>(s.open.size()) -
                              static_cast<std::ptrdiff_t>(size) + 1;
    if (produced == 1 && same_goal(goal_at(i), before)) {
      if (saved) {
        s = std::move(*saved);
      } else {
        s.open[i] = before_id;
      }
      return;
    }
    for (std::ptrdiff_t k = produced; k-- > 0;) repeat(t, i + static_cast<std::size_t>(k));
  }
};

namespace {

Goal checked_goal(const TheoryEnv& e, const Goal& g) {
  if (!e.lattice().contains(g.label))
    fail(ErrorKind::UnknownLabel, "goal label is not in the active lattice");
  std::vector<Term> ctx;
  for (const auto& h : g.context) {
    check_formula(e, h);
    ctx.push_back(normalize_iff(h));
  }
  check_formula(e, g.formula);
  return {make_context(std::move(ctx)), normalize_iff(g.formula), g.label};
}

}  // namespace

ProofState::ProofState(std::shared_ptr<const TheoryEnv> env, Goal conjecture)
    : env_(std::move(env)), conjecture_(checked_goal(*env_, conjecture)) {
  table_.push_back(conjecture_);
  current_.open = {0};
}

std::vector<Goal> ProofState::goals() const {
  std::vector<Goal> out;
  for (auto id : current_.open) out.push_back(table_[id]);
  return out;
}

void ProofState::apply(const TacticExpr& t) {
  if (current_.open.empty()) fail(ErrorKind::NoGoals, "no goals left");
  Snapshot work = current_;
  TacticRunner runner{*this, work};
  runner.run(t, 0);
  undo_.push_back(std::move(current_));
  current_ = std::move(work);
}

void ProofState::apply(std::string_view text) {
  Parser p(*env_, lex(text));
  TacticExpr t = parse_tactic(p);
  if (!p.at_end()) p.error("unexpected input after the tactic");
  apply(t);
}

bool ProofState::undo() {
  if (undo_.empty()) return false;
  current_ = std::move(undo_.back());
  undo_.pop_back();
  return true;
}

Thm ProofState::build(std::size_t id) const {
  auto it = steps_.find(id);
  if (it == steps_.end()) fail(ErrorKind::OpenGoals, "a goal is still open");
  std::vector<Thm> kids;
  for (auto c : it->second->children) kids.push_back(build(c));
  return it->second->justify(kids);
}

Thm ProofState::qed() const {
  if (!current_.open.empty())
    fail(ErrorKind::OpenGoals, std::to_string(current_.open.size()) + " goal(s) remain");
  Thm th = build(0);
  const Goal& c = conjecture_;
  if (th.provisional() || th.label() != c.label || !(th.formula() == c.formula) ||
      !context_equal(th.context(), c.context))
    fail(ErrorKind::JustificationMismatch, "the assembled theorem differs from the conjecture");
  Thm again = replay(*env_, th.proof());
  if (!again.same_judgement(th))
    fail(ErrorKind::JustificationMismatch, "replay gives a different judgement");
  return th;
}

std::vector<RenderedGoal> ProofState::render() const {
  std::vector<RenderedGoal> out;
  for (const auto& g : goals()) {
    RenderedGoal r;
    std::vector<Term> all(g.context.begin(), g.context.end());
    all.push_back(g.formula);
    FreeScope scope = free_scope(all);
    for (const auto& [name, types] : scope)
      for (const auto& ty : types) r.variables.push_back(name + ":" + print_type(ty));
    for (const auto& h : g.context) r.context.push_back(print_term(*env_, h, scope));
    r.formula = print_term(*env_, g.formula, scope);
    r.label = env_->lattice().name(g.label);
    out.push_back(std::move(r));
  }
  return out;
}

std::string ProofState::render_text() const {
  std::ostringstream os;
  auto gs = render();
  if (gs.empty()) os << "No goals.\n";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    os << "Goal " << i + 1 << " of " << gs.size() << " [" << gs[i].label << "]\n";
    if (!gs[i].variables.empty()) {
      os << "  for";
      for (const auto& v : gs[i].variables) os << " " << v;
      os << "\n";
    }
    for (const auto& h : gs[i].context) os << "  " << h << "\n";
    os << "  |- " << gs[i].formula << "\n";
  }
  return os.str();
}

Thm prove(std::shared_ptr<const TheoryEnv> env, const Goal& goal, const TacticExpr& script) {
  ProofState st(std::move(env), goal);
  st.apply(script);
  return st.qed();
}

}  // namespace holc
