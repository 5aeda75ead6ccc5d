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

#include "holc/logic.h"

#include "holc/env.h"
#include "holc/error.h"

namespace holc {

namespace {

const Type& binop_type() {
  static const Type t = fun_type({prop_type(), prop_type()}, prop_type());
  return t;
}

Term binop(const char* name, Term p, Term q) {
  return Term::app(Term::app(Term::constant(name, binop_type()), std::move(p)),
                   std::move(q));
}

std::optional<std::pair<Term, Term>> dest_binop(const Term& t, const char* name) {
  if (!t.is_app() || !t.fun().is_app()) return std::nullopt;
  const Term& c = t.fun().fun();
  if (!c.is_const() || c.name() != name) return std::nullopt;
  return std::make_pair(t.fun().arg(), t.arg());
}

Term quantifier(const char* name, const VarRef& x, Term body) {
  Type ty = fun_type(fun_type(x.type, prop_type()), prop_type());
  return Term::app(Term::constant(name, ty), Term::lam(x, std::move(body)));
}

std::optional<std::pair<VarRef, Term>> dest_quantifier(const Term& t,
                                                       const char* name) {
  if (!t.is_app() || !t.fun().is_const() || t.fun().name() != name ||
      !t.arg().is_lam())
    return std::nullopt;
  return std::make_pair(t.arg().var_ref(), t.arg().body());
}

}  // namespace

Term mk_true() { return Term::constant(names::kTrue, prop_type()); }
Term mk_false() { return Term::constant(names::kFalse, prop_type()); }
Term mk_not(Term p) {
  return Term::app(Term::constant(names::kNot, fun_type(prop_type(), prop_type())),
                   std::move(p));
}
Term mk_and(Term p, Term q) { return binop(names::kAnd, std::move(p), std::move(q)); }
Term mk_or(Term p, Term q) { return binop(names::kOr, std::move(p), std::move(q)); }
Term mk_imp(Term p, Term q) { return binop(names::kImp, std::move(p), std::move(q)); }
Term mk_iff(Term p, Term q) { return binop(names::kIff, std::move(p), std::move(q)); }

Term mk_eq(Term l, Term r) {
  const auto& lt = l.structural_type();
  const auto& rt = r.structural_type();
  if (!lt || !rt) fail(ErrorKind::TypeError, "equation between ill-typed terms");
  if (!(*lt == *rt)) fail(ErrorKind::TypeError, "equation sides differ in type");
  if (*lt == prop_type()) return mk_iff(std::move(l), std::move(r));
  Type ty = fun_type({*lt, *lt}, prop_type());
  return Term::app(Term::app(Term::constant(names::kEq, ty), std::move(l)),
                   std::move(r));
}

Term mk_forall(const VarRef& x, Term body) {
  return quantifier(names::kForall, x, std::move(body));
}
Term mk_exists(const VarRef& x, Term body) {
  return quantifier(names::kExists, x, std::move(body));
}

Term mk_imps(const std::vector<Term>& premises, Term q) {
  for (auto it = premises.rbegin(); it != premises.rend(); ++it)
    q = mk_imp(*it, std::move(q));
  return q;
}

Term mk_conjs(const std::vector<Term>& parts) {
  if (parts.empty()) return mk_true();
  Term acc = parts.back();
  for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
    acc = mk_and(*it, std::move(acc));
  return acc;
}

bool is_true(const Term& t) { return t.is_const() && t.name() == names::kTrue; }
bool is_false(const Term& t) { return t.is_const() && t.name() == names::kFalse; }

std::optional<Term> dest_not(const Term& t) {
  if (t.is_app() && t.fun().is_const() && t.fun().name() == names::kNot)
    return t.arg();
  return std::nullopt;
}

std::optional<std::pair<Term, Term>> dest_and(const Term& t) {
  return dest_binop(t, names::kAnd);
}
std::optional<std::pair<Term, Term>> dest_or(const Term& t) {
  return dest_binop(t, names::kOr);
}
std::optional<std::pair<Term, Term>> dest_imp(const Term& t) {
  return dest_binop(t, names::kImp);
}
std::optional<std::pair<Term, Term>> dest_iff(const Term& t) {
  return dest_binop(t, names::kIff);
}
std::optional<std::pair<Term, Term>> dest_eq(const Term& t) {
  if (auto e = dest_binop(t, names::kEq)) return e;
  return dest_binop(t, names::kIff);
}

std::optional<std::pair<VarRef, Term>> dest_forall(const Term& t) {
  return dest_quantifier(t, names::kForall);
}
std::optional<std::pair<VarRef, Term>> dest_exists(const Term& t) {
  return dest_quantifier(t, names::kExists);
}

Term normalize_iff(const Term& t) {
  switch (t.tag()) {
    case Term::Tag::Var:
      return t;
    case Term::Tag::Const:
      if (t.name() == names::kEq && t.annotation() == binop_type())
        return Term::constant(names::kIff, binop_type());
      return t;
    case Term::Tag::App: {
      Term f = normalize_iff(t.fun());
      Term a = normalize_iff(t.arg());
      if (f.id() == t.fun().id() && a.id() == t.arg().id()) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Tag::Lam: {
      Term b = normalize_iff(t.body());
      if (b.id() == t.body().id()) return t;
      return Term::lam(t.var_ref(), std::move(b));
    }
  }
  return t;
}

}  // namespace holc
