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

#include "holc/kernel.h"

#include <map>

#include "holc/error.h"
#include "holc/logic.h"
#include "holc/typing.h"

namespace holc {

struct KernelAccess {
  static Thm make(Rule rule, const std::vector<Thm>& premises, RuleParams params,
                  const Context& ctx, const Term& formula, Label label,
                  bool provisional = false) {
    auto node = std::make_shared<ProofNode>();
    node->rule = rule;
    for (const auto& p : premises) {
      node->premises.push_back(p.proof());
      provisional = provisional || p.provisional();
    }
    node->params = std::move(params);
    std::vector<Term> members;
    members.reserve(ctx.size());
    for (const auto& t : ctx) members.push_back(normalize_iff(t));
    auto data = std::make_shared<Thm::Data>(Thm::Data{
        make_context(std::move(members)), normalize_iff(formula), label,
        std::move(node), provisional});
    Thm thm(std::move(data));
    detail::notify_thm(thm);
    return thm;
  }
};

namespace {

[[noreturn]] void side(Rule rule, const std::string& what) {
  fail(ErrorKind::SideConditionViolated,
       std::string(rule_name(rule)) + ": " + what);
}

Type typed(const TheoryEnv& env, Rule rule, const Term& t) {
  try {
    return type_of(env, t);
  } catch (const Error& e) {
    fail(ErrorKind::TypeError, std::string(rule_name(rule)) + ": " + e.detail());
  }
}

void formula_typed(const TheoryEnv& env, Rule rule, const Term& t) {
  if (!(typed(env, rule, t) == prop_type()))
    fail(ErrorKind::TypeError,
         std::string(rule_name(rule)) + ": expected a formula of type Prop");
}

void type_ok(const TheoryEnv& env, Rule rule, const Type& ty) {
  try {
    check_type(env, ty);
  } catch (const Error& e) {
    fail(ErrorKind::TypeError, std::string(rule_name(rule)) + ": " + e.detail());
  }
}

Context valid_context(const TheoryEnv& env, Rule rule,
                      const std::optional<Context>& ctx) {
  if (!ctx) fail(ErrorKind::ArityError, std::string(rule_name(rule)) + ": missing context");
  std::vector<Term> members;
  for (const auto& t : *ctx) {
    formula_typed(env, rule, t);
    members.push_back(normalize_iff(t));
  }
  return make_context(std::move(members));
}

void arity(Rule rule, const std::vector<Thm>& premises, std::size_t n,
           const RuleParams& p, std::size_t terms, std::size_t vars = 0) {
  if (premises.size() != n)
    fail(ErrorKind::ArityError, std::string(rule_name(rule)) + ": expected " +
                                    std::to_string(n) + " premise(s), got " +
                                    std::to_string(premises.size()));
  if (p.terms.size() < terms || p.vars.size() < vars)
    fail(ErrorKind::ArityError,
         std::string(rule_name(rule)) + ": missing rule parameters");
}

Label shared_label(Rule rule, const std::vector<Thm>& premises) {
  Label l = premises.front().label();
  for (const auto& p : premises)
    if (p.label() != l)
      fail(ErrorKind::LabelMismatch,
           std::string(rule_name(rule)) +
               ": premise labels differ; lift the premises first");
  return l;
}

void same_context(Rule rule, const Thm& a, const Thm& b) {
  if (!context_equal(a.context(), b.context()))
    side(rule, "premise contexts differ");
}

std::pair<Term, Term> need_eq(Rule rule, const Thm& th) {
  auto e = dest_eq(th.formula());
  if (!e) side(rule, "premise is not an equation");
  return *e;
}

Term need_formula(Rule rule, std::optional<Term> t, const char* what) {
  if (!t) side(rule, std::string("premise is not ") + what);
  return *t;
}

std::pair<Term, Term> need_pair(Rule rule, std::optional<std::pair<Term, Term>> t,
                                const char* what) {
  if (!t) side(rule, std::string("premise is not ") + what);
  return *t;
}

// Conclusion context for a rule discharging `hyp` from `premise`.
Context discharge_context(const TheoryEnv& env, Rule rule, const Thm& premise,
                          const Term& hyp, const std::optional<Context>& given) {
  Context gamma = given ? valid_context(env, rule, given)
                        : context_erase(premise.context(), hyp);
  if (!context_equal(premise.context(), context_insert(gamma, hyp)))
    side(rule, "premise context is not the conclusion context plus the "
               "discharged hypothesis");
  return gamma;
}

Term subst_checked(const TheoryEnv& env, Rule rule, const Term& t,
                   const VarRef& x, const Term& r) {
  if (!(typed(env, rule, r) == x.type))
    fail(ErrorKind::TypeError, std::string(rule_name(rule)) +
                                   ": substituted term has the wrong type");
  return term_subst(t, x, r);
}

Label scheme(const TheoryEnv& env, Rule rule) {
  auto l = env.lattice().scheme_label(rule_name(rule));
  if (!l)
    fail(ErrorKind::UnboundScheme, std::string(rule_name(rule)) +
                                       " is not bound in the active lattice");
  return *l;
}

}  // namespace

Term choice_statement(const Term& rel) {
  const auto& ty = rel.structural_type();
  if (!ty) fail(ErrorKind::TypeError, "Choice: ill-typed relation");
  auto [args, res] = strip_fun_type(*ty);
  if (args.size() != 2 || !(res == prop_type()))
    fail(ErrorKind::TypeError, "Choice: relation must have type a -> b -> Prop");
  const Type& a = args[0];
  const Type& b = args[1];
  std::set<VarRef> avoid = rel.free_vars();
  VarRef x{variant_name("x", a, avoid), a};
  avoid.insert(x);
  VarRef y{variant_name("y", b, avoid), b};
  avoid.insert(y);
  Type fty = fun_type(a, b);
  VarRef f{variant_name("f", fty, avoid), fty};
  Term tx = Term::var(x), ty_ = Term::var(y), tf = Term::var(f);
  Term lhs = mk_forall(x, mk_exists(y, Term::app(rel, {tx, ty_})));
  Term rhs = mk_exists(f, mk_forall(x, Term::app(rel, {tx, Term::app(tf, tx)})));
  return mk_imp(lhs, rhs);
}

Thm apply_rule(const TheoryEnv& env, Rule rule, const std::vector<Thm>& premises,
               const RuleParams& params) {
  const TaintLattice& lat = env.lattice();
  const Label bottom = lat.bottom();
  auto make = [&](const Context& ctx, const Term& formula, Label label) {
    return KernelAccess::make(rule, premises, params, ctx, formula, label);
  };
  for (const auto& p : premises)
    if (!lat.contains(p.label()))
      fail(ErrorKind::UnknownLabel, "premise label outside the active lattice");

  switch (rule) {
    case Rule::Ninit: {
      arity(rule, premises, 0, params, 1);
      Context ctx = valid_context(env, rule, params.context);
      Term phi = normalize_iff(params.terms[0]);
      if (!context_contains(ctx, phi)) side(rule, "formula is not in the context");
      return make(ctx, phi, bottom);
    }
    case Rule::NtrueI: {
      arity(rule, premises, 0, params, 0);
      return make(valid_context(env, rule, params.context), mk_true(), bottom);
    }
    case Rule::NfalseE: {
      arity(rule, premises, 1, params, 1);
      const Thm& th = premises[0];
      if (!is_false(th.formula())) side(rule, "premise is not False");
      formula_typed(env, rule, params.terms[0]);
      return make(th.context(), params.terms[0], th.label());
    }
    case Rule::Nlift: {
      arity(rule, premises, 1, params, 0);
      if (!params.label) fail(ErrorKind::ArityError, "Nlift: missing target label");
      Label target = *params.label;
      if (!lat.contains(target))
        fail(ErrorKind::UnknownLabel, "Nlift: target outside the active lattice");
      const Thm& th = premises[0];
      if (!lat.leq(th.label(), target))
        fail(ErrorKind::NotAbove, "Nlift: " + lat.name(target) +
                                      " is not above " + lat.name(th.label()));
      return make(th.context(), th.formula(), target);
    }
    case Rule::Nrefl: {
      arity(rule, premises, 0, params, 1);
      Context ctx = valid_context(env, rule, params.context);
      typed(env, rule, params.terms[0]);
      return make(ctx, mk_eq(params.terms[0], params.terms[0]), bottom);
    }
    case Rule::Nsym: {
      arity(rule, premises, 1, params, 0);
      auto [r, s] = need_eq(rule, premises[0]);
      return make(premises[0].context(), mk_eq(s, r), premises[0].label());
    }
    case Rule::Ntrans: {
      arity(rule, premises, 2, params, 0);
      Label l = shared_label(rule, premises);
      same_context(rule, premises[0], premises[1]);
      auto [r, s] = need_eq(rule, premises[0]);
      auto [s2, t] = need_eq(rule, premises[1]);
      if (!(s == s2)) side(rule, "middle terms differ");
      return make(premises[0].context(), mk_eq(r, t), l);
    }
    case Rule::Nlcong: {
      arity(rule, premises, 1, params, 0, 1);
      const VarRef& x = params.vars[0];
      type_ok(env, rule, x.type);
      if (context_fv(premises[0].context()).count(x))
        side(rule, "bound variable " + x.name + " is free in the context");
      auto [r, s] = need_eq(rule, premises[0]);
      return make(premises[0].context(), mk_eq(Term::lam(x, r), Term::lam(x, s)),
                  premises[0].label());
    }
    case Rule::Nacong: {
      arity(rule, premises, 2, params, 0);
      Label l = shared_label(rule, premises);
      same_context(rule, premises[0], premises[1]);
      auto [f, g] = need_eq(rule, premises[0]);
      auto [r, s] = need_eq(rule, premises[1]);
      Term fr = Term::app(f, r);
      typed(env, rule, fr);
      return make(premises[0].context(), mk_eq(fr, Term::app(g, s)), l);
    }
    case Rule::Nsubst: {
      arity(rule, premises, 1, params, 1, 1);
      const VarRef& x = params.vars[0];
      const Term& r = params.terms[0];
      const Thm& th = premises[0];
      Term phi = subst_checked(env, rule, th.formula(), x, r);
      std::vector<Term> ctx;
      for (const auto& h : th.context()) ctx.push_back(term_subst(h, x, r));
      return make(make_context(std::move(ctx)), phi, th.label());
    }
    case Rule::Nbeta: {
      arity(rule, premises, 0, params, 1);
      Context ctx = valid_context(env, rule, params.context);
      const Term& redex = params.terms[0];
      if (!redex.is_app() || !redex.fun().is_lam()) side(rule, "term is not a beta-redex");
      typed(env, rule, redex);
      const Term& lam = redex.fun();
      Term reduct = term_subst(lam.body(), lam.var_ref(), redex.arg());
      return make(ctx, mk_eq(redex, reduct), bottom);
    }
    case Rule::Ninst: {
      arity(rule, premises, 1, params, 0);
      if (params.type_vars.empty() || params.types.empty())
        fail(ErrorKind::ArityError, "Ninst: missing type instantiation");
      const std::string& beta = params.type_vars[0];
      const Type& tau = params.types[0];
      type_ok(env, rule, tau);
      const Thm& th = premises[0];
      std::vector<Term> ctx;
      for (const auto& h : th.context()) ctx.push_back(term_type_subst(h, beta, tau));
      return make(make_context(std::move(ctx)),
                  term_type_subst(th.formula(), beta, tau), th.label());
    }
    case Rule::Neta: {
      arity(rule, premises, 0, params, 1);
      Context ctx = valid_context(env, rule, params.context);
      const Term& lam = params.terms[0];
      if (!lam.is_lam() || !lam.body().is_app() || !lam.body().arg().is_var() ||
          !(lam.body().arg().var_ref() == lam.var_ref()))
        side(rule, "term is not of the form \\x. f x");
      const Term& f = lam.body().fun();
      if (free_in(lam.var_ref(), f)) side(rule, "bound variable is free in the function");
      typed(env, rule, lam);
      return make(ctx, mk_eq(lam, f), bottom);
    }
    case Rule::NnegI: {
      arity(rule, premises, 1, params, 1);
      const Thm& th = premises[0];
      if (!is_false(th.formula())) side(rule, "premise is not False");
      Term phi = normalize_iff(params.terms[0]);
      formula_typed(env, rule, phi);
      Context gamma = discharge_context(env, rule, th, phi, params.context);
      return make(gamma, mk_not(phi), th.label());
    }
    case Rule::NnegE: {
      arity(rule, premises, 2, params, 0);
      Label l = shared_label(rule, premises);
      same_context(rule, premises[0], premises[1]);
      Term neg = need_formula(rule, dest_not(premises[1].formula()), "a negation");
      if (!(neg == premises[0].formula())) side(rule, "negation does not match");
      return make(premises[0].context(), mk_false(), l);
    }
    case Rule::NiffE1:
    case Rule::NiffE2: {
      arity(rule, premises, 2, params, 0);
      Label l = shared_label(rule, premises);
      same_context(rule, premises[0], premises[1]);
      auto [phi, psi] = need_pair(rule, dest_iff(premises[0].formula()), "a bi-implication");
      const Term& from = rule == Rule::NiffE1 ? phi : psi;
      const Term& to = rule == Rule::NiffE1 ? psi : phi;
      if (!(from == premises[1].formula())) side(rule, "second premise does not match");
      return make(premises[0].context(), to, l);
    }
    case Rule::NiffI: {
      arity(rule, premises, 2, params, 0);
      Label l = shared_label(rule, premises);
      const Thm& a = premises[0];
      const Thm& b = premises[1];
      const Term& phi = a.formula();
      const Term& psi = b.formula();
      Context gamma;
      if (params.context) {
        gamma = valid_context(env, rule, params.context);
      } else {
        gamma = context_erase(a.context(), psi);
        for (const auto& h : context_erase(b.context(), phi))
          gamma = context_insert(std::move(gamma), h);
      }
      if (!context_equal(a.context(), context_insert(gamma, psi)) ||
          !context_equal(b.context(), context_insert(gamma, phi)))
        side(rule, "premise contexts do not match the discharged hypotheses");
      return make(gamma, mk_iff(phi, psi), l);
    }
    case Rule::Nwk: {
      arity(rule, premises, 1, params, 1);
      formula_typed(env, rule, params.terms[0]);
      const Thm& th = premises[0];
      return make(context_insert(th.context(), normalize_iff(params.terms[0])),
                  th.formula(), th.label());
    }
    case Rule::NconjI: {
      arity(rule, premises, 2, params, 0);
      Label l = shared_label(rule, premises);
      same_context(rule, premises[0], premises[1]);
      return make(premises[0].context(),
                  mk_and(premises[0].formula(), premises[1].formula()), l);
    }
    case Rule::NconjE1:
    case Rule::NconjE2: {
      arity(rule, premises, 1, params, 0);
      auto [p, q] = need_pair(rule, dest_and(premises[0].formula()), "a conjunction");
      return make(premises[0].context(), rule == Rule::NconjE1 ? p : q,
                  premises[0].label());
    }
    case Rule::NdisjI1:
    case Rule::NdisjI2: {
      arity(rule, premises, 1, params, 1);
      formula_typed(env, rule, params.terms[0]);
      const Thm& th = premises[0];
      Term d = rule == Rule::NdisjI1 ? mk_or(th.formula(), params.terms[0])
                                     : mk_or(params.terms[0], th.formula());
      return make(th.context(), d, th.label());
    }
    case Rule::NdisjE: {
      arity(rule, premises, 3, params, 0);
      Label l = shared_label(rule, premises);
      auto [phi, psi] = need_pair(rule, dest_or(premises[0].formula()), "a disjunction");
      const Context& gamma = premises[0].context();
      if (!context_equal(premises[1].context(), context_insert(gamma, phi)) ||
          !context_equal(premises[2].context(), context_insert(gamma, psi)))
        side(rule, "case contexts must extend the disjunction's context by "
                   "the respective disjunct");
      if (!(premises[1].formula() == premises[2].formula()))
        side(rule, "cases prove different conclusions");
      return make(gamma, premises[1].formula(), l);
    }
    case Rule::NimpI: {
      arity(rule, premises, 1, params, 1);
      Term phi = normalize_iff(params.terms[0]);
      formula_typed(env, rule, phi);
      const Thm& th = premises[0];
      Context gamma = discharge_context(env, rule, th, phi, params.context);
      return make(gamma, mk_imp(phi, th.formula()), th.label());
    }
    case Rule::NimpE: {
      arity(rule, premises, 2, params, 0);
      Label l = shared_label(rule, premises);
      same_context(rule, premises[0], premises[1]);
      auto [phi, psi] = need_pair(rule, dest_imp(premises[0].formula()), "an implication");
      if (!(phi == premises[1].formula())) side(rule, "antecedent does not match");
      return make(premises[0].context(), psi, l);
    }
    case Rule::NallE: {
      arity(rule, premises, 1, params, 1);
      auto q = dest_forall(premises[0].formula());
      if (!q) side(rule, "premise is not a universal");
      Term phi = subst_checked(env, rule, q->second, q->first, params.terms[0]);
      return make(premises[0].context(), phi, premises[0].label());
    }
    case Rule::NallI: {
      arity(rule, premises, 1, params, 0, 1);
      const VarRef& x = params.vars[0];
      type_ok(env, rule, x.type);
      if (context_fv(premises[0].context()).count(x))
        side(rule, "variable " + x.name + " is free in the context");
      return make(premises[0].context(), mk_forall(x, premises[0].formula()),
                  premises[0].label());
    }
    case Rule::NexI: {
      arity(rule, premises, 1, params, 2, 1);
      const VarRef& x = params.vars[0];
      type_ok(env, rule, x.type);
      Term body = normalize_iff(params.terms[0]);
      formula_typed(env, rule, body);
      Term inst = normalize_iff(subst_checked(env, rule, body, x, params.terms[1]));
      if (!(inst == premises[0].formula()))
        side(rule, "premise is not the body instantiated at the witness");
      return make(premises[0].context(), mk_exists(x, body), premises[0].label());
    }
    case Rule::NexE: {
      arity(rule, premises, 2, params, 0, 1);
      Label l = shared_label(rule, premises);
      const VarRef& y = params.vars[0];
      auto q = dest_exists(premises[0].formula());
      if (!q) side(rule, "first premise is not an existential");
      const auto& [x, phi] = *q;
      if (!(y.type == x.type)) side(rule, "witness variable has the wrong type");
      const Context& gamma = premises[0].context();
      if (context_fv(gamma).count(y) || free_in(y, premises[0].formula()))
        side(rule, "witness variable " + y.name + " is not fresh");
      if (free_in(y, premises[1].formula()))
        side(rule, "witness variable " + y.name + " is free in the conclusion");
      Term hyp = normalize_iff(term_subst(phi, x, Term::var(y)));
      if (!context_equal(premises[1].context(), context_insert(gamma, hyp)))
        side(rule, "second premise context must be the context plus the "
                   "instantiated body");
      return make(gamma, premises[1].formula(), l);
    }
    case Rule::Nlem:
    case Rule::WEM: {
      arity(rule, premises, 0, params, 1);
      Label l = scheme(env, rule);
      Context ctx = valid_context(env, rule, params.context);
      Term phi = params.terms[0];
      formula_typed(env, rule, phi);
      Term inst = rule == Rule::Nlem ? mk_or(phi, mk_not(phi))
                                     : mk_or(mk_not(phi), mk_not(mk_not(phi)));
      return make(ctx, inst, l);
    }
    case Rule::Choice: {
      arity(rule, premises, 0, params, 1);
      Label l = scheme(env, rule);
      Context ctx = valid_context(env, rule, params.context);
      typed(env, rule, params.terms[0]);
      return make(ctx, choice_statement(params.terms[0]), l);
    }
    case Rule::Axiom: {
      arity(rule, premises, 0, params, 0);
      const AxiomInfo* ax = env.axiom(params.name);
      if (!ax) fail(ErrorKind::UnknownName, "no axiom named `" + params.name + "`");
      return make({}, ax->formula, ax->label);
    }
    case Rule::Defn: {
      arity(rule, premises, 0, params, 0);
      const Term* eq = env.definition(params.name);
      if (!eq) fail(ErrorKind::UnknownName, "no definition named `" + params.name + "`");
      return make({}, *eq, bottom);
    }
    case Rule::Placeholder: {
      arity(rule, premises, 0, params, 1);
      if (!params.label || !lat.contains(*params.label))
        fail(ErrorKind::UnknownLabel, "Placeholder: missing or foreign label");
      Context ctx = valid_context(env, rule, params.context);
      formula_typed(env, rule, params.terms[0]);
      return KernelAccess::make(rule, premises, params, ctx, params.terms[0],
                                *params.label, true);
    }
  }
  fail(ErrorKind::ArityError, "unknown rule");
}

namespace {

Thm replay_at(const TheoryEnv& env, const ProofPtr& node, const std::string& path,
              std::map<const ProofNode*, Thm>& memo) {
  if (!node) fail(ErrorKind::ReplayError, "at " + path + ": missing proof node");
  if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
  if (node->rule == Rule::Placeholder)
    fail(ErrorKind::ReplayError, "at " + path + ": unsolved placeholder");
  std::vector<Thm> premises;
  premises.reserve(node->premises.size());
  for (std::size_t i = 0; i < node->premises.size(); ++i)
    premises.push_back(replay_at(env, node->premises[i],
                                 path + (path == "/" ? "" : "/") + std::to_string(i),
                                 memo));
  try {
    Thm th = apply_rule(env, node->rule, premises, node->params);
    memo.emplace(node.get(), th);
    return th;
  } catch (const Error& e) {
    fail(e.kind(), "at " + path + " (" + std::string(rule_name(node->rule)) +
                       "): " + e.detail());
  }
}

}  // namespace

Thm replay(const TheoryEnv& env, const ProofPtr& proof) {
  ReplayMemo memo;
  return replay_at(env, proof, "/", memo);
}

Thm replay(const TheoryEnv& env, const ProofPtr& proof, ReplayMemo& memo) {
  return replay_at(env, proof, "/", memo);
}

namespace kernel {

namespace {
RuleParams with_ctx(const Context& ctx, std::vector<Term> terms = {}) {
  RuleParams p;
  p.context = ctx;
  p.terms = std::move(terms);
  return p;
}
RuleParams with_terms(std::vector<Term> terms) {
  RuleParams p;
  p.terms = std::move(terms);
  return p;
}
RuleParams with_var(const VarRef& v, std::vector<Term> terms = {}) {
  RuleParams p;
  p.vars = {v};
  p.terms = std::move(terms);
  return p;
}
}  // namespace

Thm init(const TheoryEnv& env, const Context& ctx, const Term& phi) {
  return apply_rule(env, Rule::Ninit, {}, with_ctx(ctx, {phi}));
}
Thm true_intro(const TheoryEnv& env, const Context& ctx) {
  return apply_rule(env, Rule::NtrueI, {}, with_ctx(ctx));
}
Thm false_elim(const TheoryEnv& env, const Thm& th, const Term& phi) {
  return apply_rule(env, Rule::NfalseE, {th}, with_terms({phi}));
}
Thm lift(const TheoryEnv& env, const Thm& th, Label target) {
  RuleParams p;
  p.label = target;
  return apply_rule(env, Rule::Nlift, {th}, p);
}
Thm refl(const TheoryEnv& env, const Context& ctx, const Term& r) {
  return apply_rule(env, Rule::Nrefl, {}, with_ctx(ctx, {r}));
}
Thm sym(const TheoryEnv& env, const Thm& th) {
  return apply_rule(env, Rule::Nsym, {th}, {});
}
Thm trans(const TheoryEnv& env, const Thm& rs, const Thm& st) {
  return apply_rule(env, Rule::Ntrans, {rs, st}, {});
}
Thm lam_cong(const TheoryEnv& env, const Thm& th, const VarRef& x) {
  return apply_rule(env, Rule::Nlcong, {th}, with_var(x));
}
Thm app_cong(const TheoryEnv& env, const Thm& fg, const Thm& rs) {
  return apply_rule(env, Rule::Nacong, {fg, rs}, {});
}
Thm subst(const TheoryEnv& env, const Thm& th, const VarRef& x, const Term& r) {
  return apply_rule(env, Rule::Nsubst, {th}, with_var(x, {r}));
}
Thm beta(const TheoryEnv& env, const Context& ctx, const Term& redex) {
  return apply_rule(env, Rule::Nbeta, {}, with_ctx(ctx, {redex}));
}
Thm inst(const TheoryEnv& env, const Thm& th, const std::string& tyvar,
         const Type& ty) {
  RuleParams p;
  p.type_vars = {tyvar};
  p.types = {ty};
  return apply_rule(env, Rule::Ninst, {th}, p);
}
Thm eta(const TheoryEnv& env, const Context& ctx, const Term& lam) {
  return apply_rule(env, Rule::Neta, {}, with_ctx(ctx, {lam}));
}
Thm neg_intro(const TheoryEnv& env, const Thm& th, const Term& phi,
              std::optional<Context> ctx) {
  RuleParams p = with_terms({phi});
  p.context = std::move(ctx);
  return apply_rule(env, Rule::NnegI, {th}, p);
}
Thm neg_elim(const TheoryEnv& env, const Thm& phi, const Thm& not_phi) {
  return apply_rule(env, Rule::NnegE, {phi, not_phi}, {});
}
Thm iff_elim1(const TheoryEnv& env, const Thm& iff, const Thm& phi) {
  return apply_rule(env, Rule::NiffE1, {iff, phi}, {});
}
Thm iff_elim2(const TheoryEnv& env, const Thm& iff, const Thm& psi) {
  return apply_rule(env, Rule::NiffE2, {iff, psi}, {});
}
Thm iff_intro(const TheoryEnv& env, const Thm& to_phi, const Thm& to_psi,
              std::optional<Context> ctx) {
  RuleParams p;
  p.context = std::move(ctx);
  return apply_rule(env, Rule::NiffI, {to_phi, to_psi}, p);
}
Thm weaken(const TheoryEnv& env, const Thm& th, const Term& psi) {
  return apply_rule(env, Rule::Nwk, {th}, with_terms({psi}));
}
Thm conj_intro(const TheoryEnv& env, const Thm& a, const Thm& b) {
  return apply_rule(env, Rule::NconjI, {a, b}, {});
}
Thm conj_elim1(const TheoryEnv& env, const Thm& th) {
  return apply_rule(env, Rule::NconjE1, {th}, {});
}
Thm conj_elim2(const TheoryEnv& env, const Thm& th) {
  return apply_rule(env, Rule::NconjE2, {th}, {});
}
Thm disj_intro1(const TheoryEnv& env, const Thm& th, const Term& psi) {
  return apply_rule(env, Rule::NdisjI1, {th}, with_terms({psi}));
}
Thm disj_intro2(const TheoryEnv& env, const Thm& th, const Term& phi) {
  return apply_rule(env, Rule::NdisjI2, {th}, with_terms({phi}));
}
Thm disj_elim(const TheoryEnv& env, const Thm& disj, const Thm& left,
              const Thm& right) {
  return apply_rule(env, Rule::NdisjE, {disj, left, right}, {});
}
Thm imp_intro(const TheoryEnv& env, const Thm& th, const Term& phi,
              std::optional<Context> ctx) {
  RuleParams p = with_terms({phi});
  p.context = std::move(ctx);
  return apply_rule(env, Rule::NimpI, {th}, p);
}
Thm imp_elim(const TheoryEnv& env, const Thm& imp, const Thm& phi) {
  return apply_rule(env, Rule::NimpE, {imp, phi}, {});
}
Thm all_elim(const TheoryEnv& env, const Thm& th, const Term& r) {
  return apply_rule(env, Rule::NallE, {th}, with_terms({r}));
}
Thm all_intro(const TheoryEnv& env, const Thm& th, const VarRef& x) {
  return apply_rule(env, Rule::NallI, {th}, with_var(x));
}
Thm ex_intro(const TheoryEnv& env, const Thm& th, const VarRef& x,
             const Term& body, const Term& witness) {
  return apply_rule(env, Rule::NexI, {th}, with_var(x, {body, witness}));
}
Thm ex_elim(const TheoryEnv& env, const Thm& ex, const Thm& th, const VarRef& y) {
  return apply_rule(env, Rule::NexE, {ex, th}, with_var(y));
}
Thm lem(const TheoryEnv& env, const Context& ctx, const Term& phi) {
  return apply_rule(env, Rule::Nlem, {}, with_ctx(ctx, {phi}));
}
Thm wem(const TheoryEnv& env, const Context& ctx, const Term& phi) {
  return apply_rule(env, Rule::WEM, {}, with_ctx(ctx, {phi}));
}
Thm choice(const TheoryEnv& env, const Context& ctx, const Term& rel) {
  return apply_rule(env, Rule::Choice, {}, with_ctx(ctx, {rel}));
}
Thm axiom(const TheoryEnv& env, const std::string& name) {
  RuleParams p;
  p.name = name;
  return apply_rule(env, Rule::Axiom, {}, p);
}
Thm defn(const TheoryEnv& env, const std::string& name) {
  RuleParams p;
  p.name = name;
  return apply_rule(env, Rule::Defn, {}, p);
}
Thm placeholder(const TheoryEnv& env, const Context& ctx, const Term& phi,
                Label label) {
  RuleParams p = with_ctx(ctx, {phi});
  p.label = label;
  return apply_rule(env, Rule::Placeholder, {}, p);
}

}  // namespace kernel

}  // namespace holc
