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

#include "holc/derived.h"

#include <map>
#include <memory>

#include "holc/error.h"
#include "holc/logic.h"
#include "holc/typing.h"

namespace holc {

namespace {

Term rhs_of(const Thm& th) { return dest_eq(th.formula())->second; }

std::set<std::string> context_ftv(const Context& ctx) {
  std::set<std::string> out;
  for (const auto& t : ctx) {
    auto f = ftv(t);
    out.insert(f.begin(), f.end());
  }
  return out;
}

}  // namespace

Thm lift_to(const TheoryEnv& env, const Thm& th, Label target) {
  if (th.label() == target) return th;
  return kernel::lift(env, th, target);
}

Thm weaken_to(const TheoryEnv& env, const Thm& th, const Context& ctx) {
  if (!context_subset(th.context(), ctx))
    fail(ErrorKind::SideConditionViolated,
         "theorem depends on hypotheses outside the goal context");
  Thm out = th;
  for (const auto& h : ctx)
    if (!context_contains(out.context(), h)) out = kernel::weaken(env, out, h);
  return out;
}

Label classical_label(const TheoryEnv& env) {
  auto l = env.lattice().scheme_label(kSchemeLem);
  if (!l) fail(ErrorKind::UnboundScheme, "Nlem is not bound in the active lattice");
  return *l;
}

std::pair<Thm, Thm> lift_pair(const TheoryEnv& env, const Thm& a, const Thm& b) {
  Label m = env.lattice().join(a.label(), b.label());
  return {lift_to(env, a, m), lift_to(env, b, m)};
}

Thm raa(const TheoryEnv& env, const Thm& th, const Term& phi_in,
        std::optional<Context> ctx) {
  const TaintLattice& lat = env.lattice();
  Label c = classical_label(env);
  if (!is_false(th.formula()))
    fail(ErrorKind::SideConditionViolated, "raa: premise is not False");
  Term phi = normalize_iff(phi_in);
  Term not_phi = mk_not(phi);
  Thm body = context_contains(th.context(), not_phi) ? th
                                                      : kernel::weaken(env, th, not_phi);
  Context gamma = ctx ? make_context(*ctx) : context_erase(body.context(), not_phi);
  Label m = lat.join(th.label(), c);
  Thm lem = lift_to(env, kernel::lem(env, gamma, phi), m);
  Thm pos = lift_to(env, kernel::init(env, context_insert(gamma, phi), phi), m);
  Thm neg = lift_to(env, kernel::false_elim(env, body, phi), m);
  return kernel::disj_elim(env, lem, pos, neg);
}

Thm case_split(const TheoryEnv& env, const Thm& pos_in, const Thm& neg_in,
               const Term& phi_in, std::optional<Context> ctx) {
  const TaintLattice& lat = env.lattice();
  Label c = classical_label(env);
  Term phi = normalize_iff(phi_in);
  Term not_phi = mk_not(phi);
  Thm pos = context_contains(pos_in.context(), phi) ? pos_in
                                                     : kernel::weaken(env, pos_in, phi);
  Thm neg = context_contains(neg_in.context(), not_phi)
                ? neg_in
                : kernel::weaken(env, neg_in, not_phi);
  Context gamma = ctx ? make_context(*ctx) : context_erase(pos.context(), phi);
  Label m = lat.join(lat.join(pos.label(), neg.label()), c);
  Thm lem = lift_to(env, kernel::lem(env, gamma, phi), m);
  return kernel::disj_elim(env, lem, lift_to(env, pos, m), lift_to(env, neg, m));
}

Thm cut(const TheoryEnv& env, const Thm& lemma, const Thm& th) {
  const Context& gamma = lemma.context();
  const Term& phi = lemma.formula();
  Thm body = weaken_to(env, th, context_insert(gamma, phi));
  Thm imp = kernel::imp_intro(env, body, phi, gamma);
  auto [i, l] = lift_pair(env, imp, lemma);
  return kernel::imp_elim(env, i, l);
}

Thm join_conj(const TheoryEnv& env, const Thm& a, const Thm& b) {
  auto [x, y] = lift_pair(env, a, b);
  return kernel::conj_intro(env, x, y);
}

Thm join_disj_elim(const TheoryEnv& env, const Thm& disj, const Thm& left,
                   const Thm& right) {
  const TaintLattice& lat = env.lattice();
  Label m = lat.join(lat.join(disj.label(), left.label()), right.label());
  return kernel::disj_elim(env, lift_to(env, disj, m), lift_to(env, left, m),
                           lift_to(env, right, m));
}

Thm ext(const TheoryEnv& env, const Thm& th) {
  auto eq = dest_eq(th.formula());
  if (!eq) fail(ErrorKind::SideConditionViolated, "ext: premise is not an equation");
  const auto& [l, r] = *eq;
  if (!l.is_app() || !r.is_app() || !l.arg().is_var() || !(l.arg().var_ref() == r.arg().var_ref()) ||
      !identical(l.arg(), r.arg()))
    fail(ErrorKind::SideConditionViolated, "ext: premise is not of the form f x = g x");
  VarRef x = l.arg().var_ref();
  const Term& f = l.fun();
  const Term& g = r.fun();
  if (free_in(x, f) || free_in(x, g))
    fail(ErrorKind::SideConditionViolated, "ext: " + x.name + " is free in a function");
  const Context& gamma = th.context();
  Thm cong = kernel::lam_cong(env, th, x);
  Thm eta_f = lift_to(env, kernel::eta(env, gamma, Term::lam(x, l)), th.label());
  Thm eta_g = lift_to(env, kernel::eta(env, gamma, Term::lam(x, r)), th.label());
  Thm f_to = kernel::trans(env, kernel::sym(env, eta_f), cong);
  return kernel::trans(env, f_to, eta_g);
}

Thm set_ext(const TheoryEnv& env, const Thm& th) {
  auto iff = dest_iff(th.formula());
  if (!iff) fail(ErrorKind::SideConditionViolated, "set_ext: premise is not a bi-implication");
  const auto& ty = iff->first.is_app() ? iff->first.fun().structural_type() : std::nullopt;
  if (!ty || !is_fun_type(*ty) || !(fun_cod(*ty) == prop_type()))
    fail(ErrorKind::SideConditionViolated, "set_ext: sides are not memberships");
  return ext(env, th);
}

// ---------------------------------------------------------------------------
// Conversions.

Thm trans_join(const TheoryEnv& env, const Thm& a, const Thm& b) {
  auto [x, y] = lift_pair(env, a, b);
  return kernel::trans(env, x, y);
}

Conv beta_conv(const TheoryEnv& env, const Context& ctx) {
  return [&env, ctx](const Term& t) -> std::optional<Thm> {
    if (t.is_app() && t.fun().is_lam()) return kernel::beta(env, ctx, t);
    return std::nullopt;
  };
}

Conv sub_conv(const TheoryEnv& env, const Context& ctx, Conv c) {
  return [&env, ctx, c](const Term& t) -> std::optional<Thm> {
    if (t.is_app()) {
      auto rf = c(t.fun());
      auto ra = c(t.arg());
      if (!rf && !ra) return std::nullopt;
      Thm f = rf ? *rf : kernel::refl(env, ctx, t.fun());
      Thm a = ra ? *ra : kernel::refl(env, ctx, t.arg());
      auto [x, y] = lift_pair(env, f, a);
      return kernel::app_cong(env, x, y);
    }
    if (t.is_lam()) {
      VarRef x = t.var_ref();
      Term body = t.body();
      std::set<VarRef> cfv = context_fv(ctx);
      if (cfv.count(x)) {
        std::set<VarRef> avoid = cfv;
        avoid.insert(body.free_vars().begin(), body.free_vars().end());
        VarRef fresh{variant_name(x.name, x.type, avoid), x.type};
        body = term_subst(body, x, Term::var(fresh));
        x = fresh;
      }
      auto rb = c(body);
      if (!rb) return std::nullopt;
      return kernel::lam_cong(env, *rb, x);
    }
    return std::nullopt;
  };
}

Conv once_depth_conv(const TheoryEnv& env, const Context& ctx, Conv c) {
  auto self = std::make_shared<Conv>();
  *self = [&env, ctx, c, weak = std::weak_ptr<Conv>(self)](const Term& t) -> std::optional<Thm> {
    if (auto r = c(t)) return r;
    auto me = weak.lock();
    return sub_conv(env, ctx, [me](const Term& u) { return (*me)(u); })(t);
  };
  return [self](const Term& t) { return (*self)(t); };
}

Conv redepth_conv(const TheoryEnv& env, const Context& ctx, Conv c) {
  auto self = std::make_shared<Conv>();
  *self = [&env, ctx, c, weak = std::weak_ptr<Conv>(self)](const Term& t) -> std::optional<Thm> {
    auto me = weak.lock();
    Conv rec = [me](const Term& u) { return (*me)(u); };
    std::optional<Thm> r1 = sub_conv(env, ctx, rec)(t);
    Term t1 = r1 ? rhs_of(*r1) : t;
    std::optional<Thm> r2 = c(t1);
    if (!r2) return r1;
    Thm acc = r1 ? trans_join(env, *r1, *r2) : *r2;
    if (auto r3 = rec(rhs_of(*r2))) acc = trans_join(env, acc, *r3);
    return acc;
  };
  return [self](const Term& t) { return (*self)(t); };
}

Conv then_conv(const TheoryEnv& env, Conv a, Conv b) {
  return [&env, a, b](const Term& t) -> std::optional<Thm> {
    auto ra = a(t);
    auto rb = b(ra ? rhs_of(*ra) : t);
    if (ra && rb) return trans_join(env, *ra, *rb);
    return ra ? ra : rb;
  };
}

Conv orelse_conv(Conv a, Conv b) {
  return [a, b](const Term& t) -> std::optional<Thm> {
    if (auto r = a(t)) return r;
    return b(t);
  };
}

Conv beta_norm_conv(const TheoryEnv& env, const Context& ctx) {
  return redepth_conv(env, ctx, beta_conv(env, ctx));
}

Conv rewrite_conv(const TheoryEnv& env, const Context& ctx, const Thm& lemma) {
  if (!lemma.context().empty())
    fail(ErrorKind::SideConditionViolated, "rewrite: lemma has hypotheses");
  return [&env, ctx, lemma](const Term& t) -> std::optional<Thm> {
    std::set<VarRef> avoid = context_fv(ctx);
    avoid.insert(t.free_vars().begin(), t.free_vars().end());
    std::set<std::string> avoid_types = context_ftv(ctx);
    for (const auto& a : ftv(t)) avoid_types.insert(a);
    OpenLemma ol = open_lemma(env, lemma, avoid, avoid_types);
    auto eq = dest_eq(ol.thm.formula());
    if (!eq) fail(ErrorKind::SideConditionViolated, "rewrite: lemma is not an equation");
    auto m = match_term(eq->first, t, ol.vars, ol.tyvars);
    if (!m) return std::nullopt;
    Thm inst = instantiate(env, ol, *m);
    if (!(dest_eq(inst.formula())->first == t)) return std::nullopt;
    return weaken_to(env, inst, ctx);
  };
}

Conv unfold_conv(const TheoryEnv& env, const Context& ctx, const std::string& name) {
  return once_depth_conv(env, ctx, rewrite_conv(env, ctx, kernel::defn(env, name)));
}

// ---------------------------------------------------------------------------
// Matching and lemma instantiation.

namespace {

struct Matcher {
  const std::set<VarRef>& vars;
  const std::set<std::string>& tyvars;
  Match m;
  std::vector<VarRef> pat_scope, tgt_scope;

  bool types(const Type& p, const Type& t) {
    TypeSubst trial = m.types;
    if (!match_type(p, t, trial)) return false;
    for (const auto& [k, v] : trial)
      if (!tyvars.count(k) && !(v == Type::var(k))) return false;
    m.types = std::move(trial);
    return true;
  }

  static int index_of(const std::vector<VarRef>& scope, const VarRef& v) {
    for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i)
      if (scope[i] == v) return static_cast<int>(scope.size()) - 1 - i;
    return -1;
  }

  bool go(const Term& p, const Term& t) {
    switch (p.tag()) {
      case Term::Tag::Var: {
        VarRef pv = p.var_ref();
        int pi = index_of(pat_scope, pv);
        if (pi >= 0)
          return t.is_var() && index_of(tgt_scope, t.var_ref()) == pi;
        if (vars.count(pv)) {
          for (const auto& v : t.free_vars())
            if (index_of(tgt_scope, v) >= 0) return false;
          if (!t.structural_type() || !types(pv.type, *t.structural_type())) return false;
          for (const auto& [k, v] : m.terms)
            if (k == pv) return v == t;
          m.terms.emplace_back(pv, t);
          return true;
        }
        return t.is_var() && index_of(tgt_scope, t.var_ref()) < 0 &&
               t.name() == pv.name && types(pv.type, t.annotation());
      }
      case Term::Tag::Const:
        if (!t.is_const()) return false;
        // Stored formulas use <-> for equality at Prop.
        if (p.name() == names::kEq && t.name() == names::kIff)
          return types(p.annotation(), t.annotation());
        return t.name() == p.name() && types(p.annotation(), t.annotation());
      case Term::Tag::App:
        return t.is_app() && go(p.fun(), t.fun()) && go(p.arg(), t.arg());
      case Term::Tag::Lam: {
        if (!t.is_lam() || !types(p.annotation(), t.annotation())) return false;
        pat_scope.push_back(p.var_ref());
        tgt_scope.push_back(t.var_ref());
        bool ok = go(p.body(), t.body());
        pat_scope.pop_back();
        tgt_scope.pop_back();
        return ok;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<Match> match_term(const Term& pattern, const Term& target,
                                const std::set<VarRef>& vars,
                                const std::set<std::string>& tyvars) {
  Matcher mt{vars, tyvars, {}, {}, {}};
  if (!mt.go(pattern, target)) return std::nullopt;
  return mt.m;
}

OpenLemma open_lemma(const TheoryEnv& env, const Thm& lemma,
                     const std::set<VarRef>& avoid,
                     const std::set<std::string>& avoid_types, bool strip_foralls) {
  if (!lemma.context().empty())
    fail(ErrorKind::SideConditionViolated, "lemma has hypotheses");
  OpenLemma out{lemma, {}, {}};
  std::set<std::string> used = avoid_types;
  std::set<std::string> own = ftv(lemma.formula());
  used.insert(own.begin(), own.end());
  for (const auto& a : own) {
    if (!avoid_types.count(a)) {
      out.tyvars.insert(a);
      continue;
    }
    std::string fresh = variant_name(a, used);
    used.insert(fresh);
    out.thm = kernel::inst(env, out.thm, a, Type::var(fresh));
    out.tyvars.insert(fresh);
  }
  std::set<VarRef> taken = avoid;
  for (const auto& v : out.thm.formula().free_vars()) taken.insert(v);
  for (const auto& v : fv(out.thm.formula())) {
    if (!avoid.count(v)) {
      out.vars.insert(v);
      continue;
    }
    VarRef fresh{variant_name(v.name, v.type, taken), v.type};
    taken.insert(fresh);
    out.thm = kernel::subst(env, out.thm, v, Term::var(fresh));
    out.vars.insert(fresh);
  }
  if (strip_foralls)
    while (open_forall(env, out, taken)) {
    }
  return out;
}

bool open_forall(const TheoryEnv& env, OpenLemma& lemma, const std::set<VarRef>& avoid) {
  auto q = dest_forall(lemma.thm.formula());
  if (!q) return false;
  std::set<VarRef> taken = avoid;
  taken.insert(lemma.vars.begin(), lemma.vars.end());
  for (const auto& v : lemma.thm.formula().free_vars()) taken.insert(v);
  for (const auto& h : lemma.thm.context())
    for (const auto& v : h.free_vars()) taken.insert(v);
  VarRef fresh{variant_name(q->first.name, q->first.type, taken), q->first.type};
  lemma.thm = kernel::all_elim(env, lemma.thm, Term::var(fresh));
  lemma.vars.insert(fresh);
  return true;
}

Thm instantiate(const TheoryEnv& env, const OpenLemma& lemma, const Match& m) {
  Thm th = lemma.thm;
  for (const auto& [a, ty] : m.types)
    if (lemma.tyvars.count(a) && !(ty == Type::var(a))) th = kernel::inst(env, th, a, ty);
  for (const auto& [v, t] : m.terms) {
    VarRef key{v.name, type_subst(v.type, m.types)};
    th = kernel::subst(env, th, key, t);
  }
  return th;
}

// ---------------------------------------------------------------------------
// Unwinding.

Term excluded_middle_statement() {
  VarRef p{"p", prop_type()};
  return mk_forall(p, mk_or(Term::var(p), mk_not(Term::var(p))));
}

namespace {

struct Unwinder {
  const TheoryEnv& env;
  Term hyp;
  std::map<const ProofNode*, Thm> memo;

  Thm with_hyp(const Thm& th) {
    return context_contains(th.context(), hyp) ? th : kernel::weaken(env, th, hyp);
  }

  Thm go(const ProofPtr& node) {
    if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
    Thm out = step(*node);
    memo.emplace(node.get(), out);
    return out;
  }

  Thm step(const ProofNode& node) {
    const Label bottom = env.lattice().bottom();
    RuleParams params = node.params;
    switch (node.rule) {
      case Rule::Nlift:
        return go(node.premises.at(0));
      case Rule::Nlem:
      case Rule::WEM: {
        Context ctx = context_insert(make_context(*params.context), hyp);
        Thm h = kernel::init(env, ctx, hyp);
        const Term& phi = params.terms.at(0);
        return kernel::all_elim(env, h, node.rule == Rule::Nlem ? phi : mk_not(phi));
      }
      case Rule::Choice:
        fail(ErrorKind::PolymorphicAxiomInProof,
             "Choice has a polymorphic statement and cannot be unwound");
      case Rule::Placeholder:
        fail(ErrorKind::ReplayError, "proof contains an unsolved placeholder");
      case Rule::Axiom:
      case Rule::Defn: {
        Thm th = apply_rule(env, node.rule, {}, params);
        if (th.label() != bottom)
          fail(ErrorKind::LabelOutOfRange,
               "axiom `" + params.name + "` lies above the bottom label");
        return with_hyp(th);
      }
      default:
        break;
    }
    std::vector<Thm> premises;
    for (const auto& p : node.premises) premises.push_back(go(p));
    if (params.context)
      params.context = context_insert(make_context(*params.context), hyp);
    return with_hyp(apply_rule(env, node.rule, premises, params));
  }
};

struct Hoister {
  const TheoryEnv& env;
  std::map<const ProofNode*, Thm> memo;

  Thm go(const ProofPtr& node) {
    if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
    Thm out = step(*node);
    memo.emplace(node.get(), out);
    return out;
  }

  Thm step(const ProofNode& node) {
    if (node.rule == Rule::Nlift) return go(node.premises.at(0));
    std::vector<Thm> premises;
    for (const auto& p : node.premises) premises.push_back(go(p));
    if (premises.size() > 1) {
      Label m = premises.front().label();
      for (const auto& p : premises) m = env.lattice().join(m, p.label());
      for (auto& p : premises) p = lift_to(env, p, m);
    }
    return apply_rule(env, node.rule, premises, node.params);
  }
};

}  // namespace

Thm unwind_classical(const TheoryEnv& env, const Thm& th) {
  if (th.provisional())
    fail(ErrorKind::ReplayError, "cannot unwind a provisional theorem");
  Unwinder u{env, excluded_middle_statement(), {}};
  Thm body = u.with_hyp(u.go(th.proof()));
  return kernel::imp_intro(env, body, u.hyp, th.context());
}

Thm hoist_lifts(const TheoryEnv& env, const Thm& th) {
  Hoister h{env, {}};
  return lift_to(env, h.go(th.proof()), th.label());
}

}  // namespace holc
