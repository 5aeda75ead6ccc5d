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

// Locally nameless reference semantics: bound variables become indices,
// free variables keep their (name, type). Used as an independent oracle for
// alpha-equivalence and both substitution actions.

#ifndef HOLC_TESTS_SUPPORT_NAMELESS_H_
#define HOLC_TESTS_SUPPORT_NAMELESS_H_

#include <memory>
#include <string>
#include <vector>

#include "holc/syntax.h"

namespace holc::testing {

struct Nameless {
  enum class Tag { Free, Bound, Const, App, Lam } tag;
  std::string name;
  Type type = prop_type();
  int index = 0;
  std::shared_ptr<const Nameless> a, b;
};
using NPtr = std::shared_ptr<const Nameless>;

inline NPtr nl_make(Nameless n) { return std::make_shared<const Nameless>(std::move(n)); }

inline NPtr to_nameless(const Term& t, std::vector<VarRef>& scope) {
  switch (t.tag()) {
    case Term::Tag::Var: {
      VarRef v = t.var_ref();
      for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i)
        if (scope[i] == v)
          return nl_make({Nameless::Tag::Bound, "", v.type,
                          static_cast<int>(scope.size()) - 1 - i, nullptr, nullptr});
      return nl_make({Nameless::Tag::Free, v.name, v.type, 0, nullptr, nullptr});
    }
    case Term::Tag::Const:
      return nl_make({Nameless::Tag::Const, t.name(), t.annotation(), 0, nullptr, nullptr});
    case Term::Tag::App: {
      NPtr f = to_nameless(t.fun(), scope);
      NPtr a = to_nameless(t.arg(), scope);
      return nl_make({Nameless::Tag::App, "", prop_type(), 0, f, a});
    }
    case Term::Tag::Lam: {
      scope.push_back(t.var_ref());
      NPtr body = to_nameless(t.body(), scope);
      scope.pop_back();
      return nl_make({Nameless::Tag::Lam, "", t.annotation(), 0, body, nullptr});
    }
  }
  return nullptr;
}

inline NPtr to_nameless(const Term& t) {
  std::vector<VarRef> scope;
  return to_nameless(t, scope);
}

inline bool nl_equal(const NPtr& x, const NPtr& y) {
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Nameless::Tag::Free:
    case Nameless::Tag::Const:
      return x->name == y->name && x->type == y->type;
    case Nameless::Tag::Bound:
      return x->index == y->index;
    case Nameless::Tag::App:
      return nl_equal(x->a, y->a) && nl_equal(x->b, y->b);
    case Nameless::Tag::Lam:
      return x->type == y->type && nl_equal(x->a, y->a);
  }
  return false;
}

// Replacement must be locally closed, which every converted term is.
inline NPtr nl_subst(const NPtr& t, const VarRef& v, const NPtr& repl) {
  switch (t->tag) {
    case Nameless::Tag::Free:
      return (t->name == v.name && t->type == v.type) ? repl : t;
    case Nameless::Tag::Bound:
    case Nameless::Tag::Const:
      return t;
    case Nameless::Tag::App:
      return nl_make({Nameless::Tag::App, "", t->type, 0, nl_subst(t->a, v, repl),
                      nl_subst(t->b, v, repl)});
    case Nameless::Tag::Lam:
      return nl_make({Nameless::Tag::Lam, "", t->type, 0, nl_subst(t->a, v, repl), nullptr});
  }
  return t;
}

inline NPtr nl_type_subst(const NPtr& t, const std::string& var, const Type& ty) {
  Nameless n = *t;
  n.type = type_subst(t->type, var, ty);
  if (t->a) n.a = nl_type_subst(t->a, var, ty);
  if (t->b) n.b = nl_type_subst(t->b, var, ty);
  return nl_make(std::move(n));
}

inline bool oracle_alpha_eq(const Term& a, const Term& b) {
  return nl_equal(to_nameless(a), to_nameless(b));
}

}  // namespace holc::testing

#endif  // HOLC_TESTS_SUPPORT_NAMELESS_H_
