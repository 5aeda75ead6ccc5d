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

#include "holc/syntax.h"

#include <algorithm>
#include <cctype>

#include "holc/error.h"

namespace holc {

//------------------------------------------------------------------------------
// Types

struct Type::Node {
  Tag tag;
  std::string name;
  Kind kind;
  std::optional<Type> head;
  std::optional<Type> arg;
};

Type Type::var(std::string name) {
  return Type(std::make_shared<const Node>(
      Node{Tag::Var, std::move(name), Kind{}, std::nullopt, std::nullopt}));
}

Type Type::former(std::string name, Kind kind) {
  return Type(std::make_shared<const Node>(
      Node{Tag::Former, std::move(name), kind, std::nullopt, std::nullopt}));
}

Type Type::app(Type head, Type arg) {
  return Type(std::make_shared<const Node>(
      Node{Tag::App, std::string(), Kind{}, std::move(head), std::move(arg)}));
}

Type::Tag Type::tag() const { return node_->tag; }
const std::string& Type::name() const { return node_->name; }
Kind Type::former_kind() const { return node_->kind; }
const Type& Type::head() const { return *node_->head; }
const Type& Type::arg() const { return *node_->arg; }

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.tag() <=> b.tag(); c != 0) return c;
  switch (a.tag()) {
    case Type::Tag::Var:
      return a.name() <=> b.name();
    case Type::Tag::Former:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.former_kind() <=> b.former_kind();
    case Type::Tag::App:
      if (auto c = a.head() <=> b.head(); c != 0) return c;
      return a.arg() <=> b.arg();
  }
  return std::strong_ordering::equal;
}

bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

Type prop_type() {
  static const Type prop = Type::former(kPropName, Kind{0});
  return prop;
}

Type fun_type(Type dom, Type cod) {
  static const Type fun = Type::former(kFunName, Kind{2});
  return Type::app(Type::app(fun, std::move(dom)), std::move(cod));
}

Type fun_type(const std::vector<Type>& args, Type result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    result = fun_type(*it, std::move(result));
  return result;
}

bool is_fun_type(const Type& ty) {
  if (!ty.is_app() || !ty.head().is_app()) return false;
  const Type& f = ty.head().head();
  return f.is_former() && f.name() == kFunName && f.former_kind().arity == 2;
}

const Type& fun_dom(const Type& ty) { return ty.head().arg(); }
const Type& fun_cod(const Type& ty) { return ty.arg(); }

std::pair<std::vector<Type>, Type> strip_fun_type(const Type& ty) {
  std::vector<Type> args;
  Type cur = ty;
  while (is_fun_type(cur)) {
    args.push_back(fun_dom(cur));
    cur = fun_cod(cur);
  }
  return {std::move(args), cur};
}

Type former_app(const std::string& name, const std::vector<Type>& args) {
  Type ty = Type::former(name, Kind{static_cast<unsigned>(args.size())});
  for (const auto& a : args) ty = Type::app(ty, a);
  return ty;
}

std::optional<std::pair<std::string, std::vector<Type>>> dest_former_app(
    const Type& ty) {
  std::vector<Type> args;
  Type cur = ty;
  while (cur.is_app()) {
    args.push_back(cur.arg());
    cur = cur.head();
  }
  if (!cur.is_former()) return std::nullopt;
  std::reverse(args.begin(), args.end());
  return std::make_pair(cur.name(), std::move(args));
}

namespace {

void collect_ftv(const Type& ty, std::set<std::string>& out) {
  switch (ty.tag()) {
    case Type::Tag::Var:
      out.insert(ty.name());
      break;
    case Type::Tag::Former:
      break;
    case Type::Tag::App:
      collect_ftv(ty.head(), out);
      collect_ftv(ty.arg(), out);
      break;
  }
}

}  // namespace

std::set<std::string> ftv(const Type& ty) {
  std::set<std::string> out;
  collect_ftv(ty, out);
  return out;
}

Type type_subst(const Type& ty, const TypeSubst& subst) {
  if (subst.empty()) return ty;
  switch (ty.tag()) {
    case Type::Tag::Var: {
      auto it = subst.find(ty.name());
      return it == subst.end() ? ty : it->second;
    }
    case Type::Tag::Former:
      return ty;
    case Type::Tag::App: {
      Type h = type_subst(ty.head(), subst);
      Type a = type_subst(ty.arg(), subst);
      if (h == ty.head() && a == ty.arg()) return ty;
      return Type::app(std::move(h), std::move(a));
    }
  }
  return ty;
}

Type type_subst(const Type& ty, const std::string& var,
                const Type& replacement) {
  return type_subst(ty, TypeSubst{{var, replacement}});
}

bool match_type(const Type& pattern, const Type& target, TypeSubst& subst) {
  switch (pattern.tag()) {
    case Type::Tag::Var: {
      auto [it, inserted] = subst.emplace(pattern.name(), target);
      return inserted || it->second == target;
    }
    case Type::Tag::Former:
      return pattern == target;
    case Type::Tag::App:
      return target.is_app() && match_type(pattern.head(), target.head(), subst) &&
             match_type(pattern.arg(), target.arg(), subst);
  }
  return false;
}

std::strong_ordering operator<=>(const VarRef& a, const VarRef& b) {
  if (auto c = a.name <=> b.name; c != 0) return c;
  return a.type <=> b.type;
}

//------------------------------------------------------------------------------
// Terms

using VarSet = std::set<VarRef>;

struct Term::Node {
  Tag tag;
  std::string name;
  std::optional<Type> type;
  std::optional<Term> fun;
  std::optional<Term> arg;
  std::optional<Type> structural_type;
  std::shared_ptr<const VarSet> free_vars;
};

namespace {

const std::shared_ptr<const VarSet>& empty_varset() {
  static const std::shared_ptr<const VarSet> empty =
      std::make_shared<const VarSet>();
  return empty;
}

}  // namespace

Term Term::var(std::string name, Type type) {
  auto fvs = std::make_shared<const VarSet>(VarSet{VarRef{name, type}});
  return Term(std::make_shared<const Node>(Node{Tag::Var, std::move(name), type,
                                                std::nullopt, std::nullopt, type,
                                                std::move(fvs)}));
}

Term Term::constant(std::string name, Type type) {
  return Term(std::make_shared<const Node>(Node{Tag::Const, std::move(name), type,
                                                std::nullopt, std::nullopt, type,
                                                empty_varset()}));
}

Term Term::app(Term fun, Term arg) {
  std::optional<Type> ty;
  const auto& ft = fun.structural_type();
  const auto& at = arg.structural_type();
  if (ft && at && is_fun_type(*ft) && fun_dom(*ft) == *at) ty = fun_cod(*ft);
  std::shared_ptr<const VarSet> fvs;
  const auto& ff = fun.node_->free_vars;
  const auto& af = arg.node_->free_vars;
  if (af->empty()) {
    fvs = ff;
  } else if (ff->empty()) {
    fvs = af;
  } else {
    auto merged = std::make_shared<VarSet>(*ff);
    merged->insert(af->begin(), af->end());
    fvs = std::move(merged);
  }
  return Term(std::make_shared<const Node>(Node{Tag::App, std::string(),
                                                std::nullopt, std::move(fun),
                                                std::move(arg), std::move(ty),
                                                std::move(fvs)}));
}

Term Term::app(Term fun, const std::vector<Term>& args) {
  for (const auto& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term Term::lam(std::string name, Type type, Term body) {
  std::optional<Type> ty;
  if (body.structural_type()) ty = fun_type(type, *body.structural_type());
  std::shared_ptr<const VarSet> fvs = body.node_->free_vars;
  VarRef bound{name, type};
  if (fvs->count(bound)) {
    auto reduced = std::make_shared<VarSet>(*fvs);
    reduced->erase(bound);
    fvs = std::move(reduced);
  }
  // The body is stored in `fun`.
  return Term(std::make_shared<const Node>(Node{Tag::Lam, std::move(name),
                                                std::move(type), std::move(body),
                                                std::nullopt, std::move(ty),
                                                std::move(fvs)}));
}

Term::Tag Term::tag() const { return node_->tag; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::annotation() const { return *node_->type; }
const Term& Term::fun() const { return *node_->fun; }
const Term& Term::arg() const { return *node_->arg; }
const Term& Term::body() const { return *node_->fun; }
const std::optional<Type>& Term::structural_type() const {
  return node_->structural_type;
}

const std::set<VarRef>& Term::free_vars() const { return *node_->free_vars; }

std::set<VarRef> fv(const Term& t) { return t.free_vars(); }

bool free_in(const VarRef& v, const Term& t) {
  return t.free_vars().count(v) != 0;
}

namespace {

void collect_term_ftv(const Term& t, std::set<std::string>& out) {
  switch (t.tag()) {
    case Term::Tag::Var:
    case Term::Tag::Const:
      collect_ftv(t.annotation(), out);
      break;
    case Term::Tag::App:
      collect_term_ftv(t.fun(), out);
      collect_term_ftv(t.arg(), out);
      break;
    case Term::Tag::Lam:
      collect_ftv(t.annotation(), out);
      collect_term_ftv(t.body(), out);
      break;
  }
}

// Index of the innermost binder matching `v`, counted from the innermost
// binder, or -1 when `v` is free.
int bound_index(const std::vector<const Term*>& binders, const Term& v) {
  for (int i = static_cast<int>(binders.size()) - 1; i >= 0; --i) {
    const Term& b = *binders[i];
    if (b.name() == v.name() && b.annotation() == v.annotation())
      return static_cast<int>(binders.size()) - 1 - i;
  }
  return -1;
}

int cmp(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

int alpha_cmp(const Term& a, const Term& b, std::vector<const Term*>& ba,
              std::vector<const Term*>& bb) {
  if (a.id() == b.id() && ba.size() == bb.size()) {
    // Same node under binder stacks of equal depth: only bound variable
    // correspondence could differ, which is impossible for closed terms.
    if (a.free_vars().empty()) return 0;
  }
  if (a.tag() != b.tag()) return a.tag() < b.tag() ? -1 : 1;
  switch (a.tag()) {
    case Term::Tag::Var: {
      int ia = bound_index(ba, a);
      int ib = bound_index(bb, b);
      if (ia >= 0 || ib >= 0) {
        if (ia < 0) return 1;  // bound < free
        if (ib < 0) return -1;
        return ia == ib ? 0 : (ia < ib ? -1 : 1);
      }
      if (int c = cmp(a.name() <=> b.name())) return c;
      return cmp(a.annotation() <=> b.annotation());
    }
    case Term::Tag::Const:
      if (int c = cmp(a.name() <=> b.name())) return c;
      return cmp(a.annotation() <=> b.annotation());
    case Term::Tag::App:
      if (int c = alpha_cmp(a.fun(), b.fun(), ba, bb)) return c;
      return alpha_cmp(a.arg(), b.arg(), ba, bb);
    case Term::Tag::Lam: {
      if (int c = cmp(a.annotation() <=> b.annotation())) return c;
      ba.push_back(&a);
      bb.push_back(&b);
      int c = alpha_cmp(a.body(), b.body(), ba, bb);
      ba.pop_back();
      bb.pop_back();
      return c;
    }
  }
  return 0;
}

}  // namespace

std::set<std::string> ftv(const Term& t) {
  std::set<std::string> out;
  collect_term_ftv(t, out);
  return out;
}

int alpha_compare(const Term& a, const Term& b) {
  if (a.id() == b.id()) return 0;
  std::vector<const Term*> ba, bb;
  return alpha_cmp(a, b, ba, bb);
}

bool alpha_eq(const Term& a, const Term& b) { return alpha_compare(a, b) == 0; }

bool operator==(const Term& a, const Term& b) { return alpha_eq(a, b); }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  int c = alpha_compare(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

bool identical(const Term& a, const Term& b) {
  if (a.id() == b.id()) return true;
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Term::Tag::Var:
    case Term::Tag::Const:
      return a.name() == b.name() && a.annotation() == b.annotation();
    case Term::Tag::App:
      return identical(a.fun(), b.fun()) && identical(a.arg(), b.arg());
    case Term::Tag::Lam:
      return a.name() == b.name() && a.annotation() == b.annotation() &&
             identical(a.body(), b.body());
  }
  return false;
}

std::string variant_name(const std::string& base,
                         const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  std::string root = base;
  while (root.size() > 1 && std::isdigit(static_cast<unsigned char>(root.back())))
    root.pop_back();
  for (unsigned n = 0;; ++n) {
    std::string candidate = root + std::to_string(n);
    if (!avoid.count(candidate)) return candidate;
  }
}

std::string variant_name(const std::string& base, const Type& type,
                         const std::set<VarRef>& avoid) {
  std::set<std::string> names;
  for (const auto& v : avoid)
    if (v.type == type) names.insert(v.name);
  return variant_name(base, names);
}

std::pair<Term, std::vector<Term>> strip_app(const Term& t) {
  std::vector<Term> args;
  Term cur = t;
  while (cur.is_app()) {
    args.push_back(cur.arg());
    cur = cur.fun();
  }
  std::reverse(args.begin(), args.end());
  return {cur, std::move(args)};
}

namespace {

bool mentions_any(const Type& ty, const TypeSubst& subst) {
  switch (ty.tag()) {
    case Type::Tag::Var:
      return subst.count(ty.name()) != 0;
    case Type::Tag::Former:
      return false;
    case Type::Tag::App:
      return mentions_any(ty.head(), subst) || mentions_any(ty.arg(), subst);
  }
  return false;
}

Term inst_term(const Term& t, const TypeSubst& subst);

Term subst_term(const Term& t, const VarRef& var, const Term& replacement) {
  if (!free_in(var, t)) return t;
  switch (t.tag()) {
    case Term::Tag::Var:
      return replacement;  // the only free variable of a Var is itself
    case Term::Tag::Const:
      return t;
    case Term::Tag::App:
      return Term::app(subst_term(t.fun(), var, replacement),
                       subst_term(t.arg(), var, replacement));
    case Term::Tag::Lam: {
      VarRef bound = t.var_ref();
      if (free_in(bound, replacement)) {
        std::set<VarRef> avoid = t.body().free_vars();
        const auto& rf = replacement.free_vars();
        avoid.insert(rf.begin(), rf.end());
        VarRef fresh{variant_name(bound.name, bound.type, avoid), bound.type};
        Term body = subst_term(t.body(), bound, Term::var(fresh));
        return Term::lam(fresh, subst_term(body, var, replacement));
      }
      return Term::lam(bound, subst_term(t.body(), var, replacement));
    }
  }
  return t;
}

Term inst_term(const Term& t, const TypeSubst& subst) {
  switch (t.tag()) {
    case Term::Tag::Var:
      if (!mentions_any(t.annotation(), subst)) return t;
      return Term::var(t.name(), type_subst(t.annotation(), subst));
    case Term::Tag::Const:
      if (!mentions_any(t.annotation(), subst)) return t;
      return Term::constant(t.name(), type_subst(t.annotation(), subst));
    case Term::Tag::App:
      return Term::app(inst_term(t.fun(), subst), inst_term(t.arg(), subst));
    case Term::Tag::Lam: {
      const Type new_type = type_subst(t.annotation(), subst);
      // A free variable x:r of the body with r != binder type but
      // r[subst] == new binder type would be captured by the renamed binder.
      bool clash = false;
      for (const auto& v : t.body().free_vars()) {
        if (v.name == t.name() && !(v.type == t.annotation()) &&
            type_subst(v.type, subst) == new_type) {
          clash = true;
          break;
        }
      }
      if (!clash)
        return Term::lam(t.name(), new_type, inst_term(t.body(), subst));
      std::set<std::string> names;
      for (const auto& v : t.body().free_vars()) names.insert(v.name);
      std::string fresh = variant_name(t.name(), names);
      Term body =
          subst_term(t.body(), t.var_ref(), Term::var(fresh, t.annotation()));
      return Term::lam(fresh, new_type, inst_term(body, subst));
    }
  }
  return t;
}

}  // namespace

Term term_type_subst(const Term& t, const TypeSubst& subst) {
  if (subst.empty()) return t;
  return inst_term(t, subst);
}

Term term_type_subst(const Term& t, const std::string& var, const Type& ty) {
  return term_type_subst(t, TypeSubst{{var, ty}});
}

Term term_subst(const Term& t, const VarRef& var, const Term& replacement) {
  const auto& rt = replacement.structural_type();
  if (!rt || !(*rt == var.type))
    fail(ErrorKind::TypeMismatch,
         "substituting for " + var.name + " with a term of a different type");
  return subst_term(t, var, replacement);
}

}  // namespace holc
