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

#include "holc/theory.h"

#include <set>

#include "holc/derived.h"
#include "holc/error.h"
#include "holc/logic.h"
#include "holc/typing.h"

namespace holc {

namespace {

bool mentions(const Type& ty, const std::string& name) {
  if (ty.is_former()) return ty.name() == name;
  if (ty.is_app()) return mentions(ty.head(), name) || mentions(ty.arg(), name);
  return false;
}

Term beta_normal(const TheoryEnv& env, const Term& t) {
  auto th = beta_norm_conv(env, {})(t);
  if (!th) return t;
  return dest_eq(th->formula())->second;
}

// Recursive argument: B1 -> ... -> Bm -> T params.
bool recursive_arg(const Type& arg, const std::string& name) {
  return mentions(arg, name);
}

}  // namespace

Thm define_constant(TheoryEnv& env, const std::string& name, const Term& definiens) {
  Type ty = type_of(env, definiens);
  if (!fv(definiens).empty())
    fail(ErrorKind::FreeVariableInDefiniens,
         "definiens of `" + name + "` has free variable `" + fv(definiens).begin()->name + "`");
  std::set<std::string> allowed = ftv(ty);
  for (const auto& a : ftv(definiens))
    if (!allowed.count(a))
      fail(ErrorKind::TypeVariableEscape,
           "type variable '" + a + " of the definiens of `" + name + "` is not in its type");
  if (env.constant_type(name) || env.fact_exists(name))
    fail(ErrorKind::DuplicateName, "`" + name + "` already exists");
  TheoryEnv next = env;
  next.add_constant(name, ty);
  next.add_definition(name, mk_eq(Term::constant(name, ty), definiens));
  env = std::move(next);
  return kernel::defn(env, name);
}

std::string positivity_violation(const Type& arg, const std::string& name) {
  if (!mentions(arg, name)) return "";
  auto [doms, cod] = strip_fun_type(arg);
  for (const auto& d : doms)
    if (mentions(d, name)) return "`" + name + "` occurs to the left of an arrow";
  auto head = dest_former_app(cod);
  if (!head || head->first != name) return "`" + name + "` occurs nested inside another type";
  for (const auto& a : head->second)
    if (mentions(a, name)) return "`" + name + "` occurs nested inside its own arguments";
  return "";
}

const DatatypeBundle& declare_datatype(TheoryEnv& env, const DatatypeSpec& spec) {
  const std::string& T = spec.name;
  std::vector<Type> param_types;
  for (const auto& p : spec.params) param_types.push_back(Type::var(p));
  const Type self = former_app(T, param_types);
  std::set<std::string> param_set(spec.params.begin(), spec.params.end());
  if (param_set.size() != spec.params.size())
    fail(ErrorKind::DuplicateName, "datatype `" + T + "` repeats a parameter");
  if (spec.constructors.empty())
    fail(ErrorKind::NotStrictlyPositive, "datatype `" + T + "` has no constructors");

  for (const auto& c : spec.constructors)
    for (const auto& a : c.args) {
      std::string why = positivity_violation(a, T);
      if (!why.empty())
        fail(ErrorKind::NotStrictlyPositive, "constructor `" + c.name + "`: " + why);
      auto [doms, cod] = strip_fun_type(a);
      if (mentions(cod, T) && !(cod == self))
        fail(ErrorKind::NotStrictlyPositive,
             "constructor `" + c.name + "`: `" + T + "` must be applied to its own parameters");
      for (const auto& v : ftv(a))
        if (!param_set.count(v))
          fail(ErrorKind::TypeVariableEscape,
               "constructor `" + c.name + "` mentions unbound type variable '" + v);
    }

  TheoryEnv next = env;
  next.add_former(T, Kind{static_cast<unsigned>(spec.params.size())});
  for (const auto& c : spec.constructors)
    for (const auto& a : c.args) check_type(next, a);

  DatatypeBundle bundle;
  bundle.former = T;
  bundle.params = spec.params;
  std::vector<Term> ctors;
  for (const auto& c : spec.constructors) {
    Type ty = fun_type(c.args, self);
    next.add_constant(c.name, ty);
    bundle.constructors.emplace_back(c.name, ty);
    ctors.push_back(Term::constant(c.name, ty));
  }

  const Type r = Type::var(variant_name("r", param_set));
  // Case function type for each constructor: its arguments, then one
  // recursive result per recursive argument, then 'r.
  std::vector<Type> case_types;
  for (const auto& c : spec.constructors) {
    std::vector<Type> args = c.args;
    for (const auto& a : c.args)
      if (recursive_arg(a, T)) args.push_back(fun_type(strip_fun_type(a).first, r));
    case_types.push_back(fun_type(args, r));
  }
  std::vector<Type> rec_args{self};
  rec_args.insert(rec_args.end(), case_types.begin(), case_types.end());
  const std::string rec_name = spec.recursor.empty() ? T + "_rec" : spec.recursor;
  const Type rec_ty = fun_type(rec_args, r);
  next.add_constant(rec_name, rec_ty);
  bundle.recursor = {rec_name, rec_ty};
  const Term rec = Term::constant(rec_name, rec_ty);

  const std::string origin = "datatype " + T;
  const Label bottom = next.lattice().bottom();
  auto vars_for = [&](const std::vector<Type>& tys, const std::string& base) {
    std::vector<VarRef> out;
    for (size_t i = 0; i < tys.size(); ++i) out.push_back({base + std::to_string(i + 1), tys[i]});
    return out;
  };
  auto close = [](const std::vector<VarRef>& vs, Term body) {
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = mk_forall(*it, body);
    return body;
  };
  auto apply = [](Term f, const std::vector<VarRef>& vs) {
    for (const auto& v : vs) f = Term::app(f, Term::var(v));
    return f;
  };

  const size_t n = spec.constructors.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto xs = vars_for(spec.constructors[i].args, "x");
      auto ys = vars_for(spec.constructors[j].args, "y");
      std::vector<VarRef> all = xs;
      all.insert(all.end(), ys.begin(), ys.end());
      Term f = close(all, mk_not(mk_eq(apply(ctors[i], xs), apply(ctors[j], ys))));
      std::string nm = T + "_distinct_" + spec.constructors[i].name + "_" +
                       spec.constructors[j].name;
      next.add_axiom(nm, f, bottom, origin);
      bundle.distinctness.push_back(nm);
    }

  for (size_t i = 0; i < n; ++i) {
    const auto& c = spec.constructors[i];
    if (c.args.empty()) continue;
    auto xs = vars_for(c.args, "x");
    auto ys = vars_for(c.args, "y");
    std::vector<Term> eqs;
    for (size_t k = 0; k < xs.size(); ++k)
      eqs.push_back(mk_eq(Term::var(xs[k]), Term::var(ys[k])));
    std::vector<VarRef> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    Term f = close(all, mk_imp(mk_eq(apply(ctors[i], xs), apply(ctors[i], ys)), mk_conjs(eqs)));
    std::string nm = c.name + "_inj";
    next.add_axiom(nm, f, bottom, origin);
    bundle.injectivity.push_back(nm);
  }

  std::vector<VarRef> fs;
  for (size_t i = 0; i < n; ++i) fs.push_back({"f" + std::to_string(i + 1), case_types[i]});
  for (size_t i = 0; i < n; ++i) {
    const auto& c = spec.constructors[i];
    auto xs = vars_for(c.args, "x");
    Term lhs = apply(Term::app(rec, apply(ctors[i], xs)), fs);
    Term rhs = apply(Term::var(fs[i]), xs);
    for (const auto& x : xs) {
      if (!recursive_arg(x.type, T)) continue;
      auto bs = vars_for(strip_fun_type(x.type).first, "b");
      Term call = apply(Term::app(rec, apply(Term::var(x), bs)), fs);
      for (auto it = bs.rbegin(); it != bs.rend(); ++it) call = Term::lam(*it, call);
      rhs = Term::app(rhs, call);
    }
    std::vector<VarRef> all = xs;
    all.insert(all.end(), fs.begin(), fs.end());
    std::string nm = rec_name + "_" + c.name;
    next.add_axiom(nm, close(all, mk_eq(lhs, rhs)), bottom, origin);
    bundle.recursion.push_back(nm);
  }

  const VarRef P{"P", fun_type(self, prop_type())};
  std::vector<Term> cases;
  for (size_t i = 0; i < n; ++i) {
    auto xs = vars_for(spec.constructors[i].args, "x");
    std::vector<Term> ihs;
    for (const auto& x : xs) {
      if (!recursive_arg(x.type, T)) continue;
      auto bs = vars_for(strip_fun_type(x.type).first, "b");
      ihs.push_back(close(bs, Term::app(Term::var(P), apply(Term::var(x), bs))));
    }
    cases.push_back(close(xs, mk_imps(ihs, Term::app(Term::var(P), apply(ctors[i], xs)))));
  }
  const VarRef x{"x", self};
  Term induct = mk_forall(P, mk_imps(cases, mk_forall(x, Term::app(Term::var(P), Term::var(x)))));
  bundle.induction = T + "_induct";
  next.add_axiom(bundle.induction, induct, bottom, origin);

  next.add_datatype(std::move(bundle));
  env = std::move(next);
  return env.datatypes().back();
}

const TypedefBundle& typedef_type(TheoryEnv& env, const std::string& name,
                                  const Term& predicate, const Thm& witness,
                                  const std::string& inj, const std::string& proj) {
  Type pty = type_of(env, predicate);
  if (!is_fun_type(pty) || !(fun_cod(pty) == prop_type()))
    fail(ErrorKind::WitnessShapeError, "carve-out predicate must have type host -> Prop");
  if (!fv(predicate).empty())
    fail(ErrorKind::FreeVariableInDefiniens, "carve-out predicate has free variable `" +
                                                 fv(predicate).begin()->name + "`");
  if (!witness.context().empty())
    fail(ErrorKind::NonEmptyWitnessContext, "witness for `" + name + "` has hypotheses");
  const Type host = fun_dom(pty);
  {
    auto [head, args] = strip_app(witness.formula());
    bool ok = head.is_const() && head.name() == names::kExists && args.size() == 1;
    if (ok) {
      std::set<VarRef> avoid = fv(args[0]);
      VarRef y{variant_name("y", host, avoid), host};
      Term a = beta_normal(env, Term::app(args[0], Term::var(y)));
      Term b = beta_normal(env, Term::app(predicate, Term::var(y)));
      ok = a == b;
    }
    if (!ok)
      fail(ErrorKind::WitnessShapeError,
           "witness must state `exists x. pred x` for the carve-out predicate");
  }
  if (!env.constant_type("comp") || !env.constant_type("id"))
    fail(ErrorKind::UnknownName, "carve-outs need the `comp` and `id` constants");

  std::set<std::string> tvs = ftv(predicate);
  std::vector<std::string> params(tvs.begin(), tvs.end());
  std::vector<Type> param_types;
  for (const auto& p : params) param_types.push_back(Type::var(p));

  TheoryEnv next = env;
  next.add_former(name, Kind{static_cast<unsigned>(params.size())});
  const Type self = former_app(name, param_types);
  const std::string inj_name = inj.empty() ? name + "_inj" : inj;
  const std::string proj_name = proj.empty() ? name + "_proj" : proj;
  const Term inj_c = Term::constant(inj_name, fun_type(host, self));
  const Term proj_c = Term::constant(proj_name, fun_type(self, host));
  next.add_constant(inj_name, fun_type(host, self));
  next.add_constant(proj_name, fun_type(self, host));

  auto instance = [&](const std::string& c, const Type& want) {
    TypeSubst s;
    if (!match_type(*next.constant_type(c), want, s))
      fail(ErrorKind::TypeError, "`" + c + "` cannot be used at " + "the carve-out type");
    return Term::constant(c, want);
  };
  const Type endo = fun_type(self, self);
  // comp is diagrammatic: comp f g = g o f.
  Term comp = instance("comp", fun_type({fun_type(self, host), fun_type(host, self)}, endo));
  Term id = instance("id", endo);
  Term law1 = mk_eq(Term::app(comp, {proj_c, inj_c}), id);
  const VarRef S{variant_name("S", host, {}), host};
  Term law2 = mk_imp(Term::app(predicate, Term::var(S)),
                     mk_eq(Term::app(proj_c, Term::app(inj_c, Term::var(S))), Term::var(S)));
  const std::string origin = "typedef " + name;
  const std::string n1 = name + "_proj_inj", n2 = name + "_inj_proj";
  next.add_axiom(n1, law1, witness.label(), origin);
  next.add_axiom(n2, law2, witness.label(), origin);

  TypedefBundle bundle;
  bundle.former = name;
  bundle.params = params;
  bundle.host = host;
  bundle.predicate = predicate;
  bundle.inj = inj_name;
  bundle.proj = proj_name;
  bundle.laws = {n1, n2};
  bundle.label = witness.label();
  next.add_typedef(std::move(bundle));
  env = std::move(next);
  return env.typedefs().back();
}

TheoryEnv replay_env(const TheoryEnv& env) {
  TheoryEnv out(env.lattice_ptr());
  ReplayMemo memo;
  for (const auto& e : env.history()) {
    switch (e.kind) {
      case EnvEvent::Kind::Former:
        out.add_former(e.name, *e.arity);
        break;
      case EnvEvent::Kind::Synonym:
        out.add_synonym(e.name, e.params, *e.type);
        break;
      case EnvEvent::Kind::Constant:
        out.add_constant(e.name, *e.type);
        break;
      case EnvEvent::Kind::Definition:
        out.add_definition(e.name, *e.term);
        break;
      case EnvEvent::Kind::Axiom:
        out.add_axiom(e.name, *e.term, *e.label, e.origin);
        break;
      case EnvEvent::Kind::Theorem: {
        const Thm* th = env.theorem(e.name);
        Thm again = replay(out, th->proof(), memo);
        if (!again.same_judgement(*th))
          fail(ErrorKind::ReplayError, "theorem `" + e.name + "` replays to a different judgement");
        out.add_theorem(e.name, again);
        break;
      }
    }
  }
  for (const auto& d : env.datatypes()) out.add_datatype(d);
  for (const auto& t : env.typedefs()) out.add_typedef(t);
  return out;
}

}  // namespace holc
