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

#include "holc/typing.h"

#include "holc/error.h"

namespace holc {

Kind kind_of(const TheoryEnv& env, const Type& ty) {
  switch (ty.tag()) {
    case Type::Tag::Var:
      return Kind{0};
    case Type::Tag::Former: {
      auto k = env.former_kind(ty.name());
      if (!k || *k != ty.former_kind())
        fail(ErrorKind::UnregisteredFormer,
             "`" + ty.name() + "` of arity " +
                 std::to_string(ty.former_kind().arity));
      return *k;
    }
    case Type::Tag::App: {
      Kind h = kind_of(env, ty.head());
      Kind a = kind_of(env, ty.arg());
      if (h.arity == 0)
        fail(ErrorKind::IllKinded, "type of kind * applied to an argument");
      if (a.arity != 0)
        fail(ErrorKind::IllKinded, "type-former argument is not a type");
      return Kind{h.arity - 1};
    }
  }
  return Kind{0};
}

void check_type(const TheoryEnv& env, const Type& ty) {
  if (kind_of(env, ty).arity != 0)
    fail(ErrorKind::IllKinded, "expected a type of kind *");
}

Type type_of(const TheoryEnv& env, const Term& t) {
  switch (t.tag()) {
    case Term::Tag::Var:
      check_type(env, t.annotation());
      return t.annotation();
    case Term::Tag::Const: {
      auto generic = env.constant_type(t.name());
      if (!generic)
        fail(ErrorKind::UnregisteredConstant, "`" + t.name() + "`");
      check_type(env, t.annotation());
      TypeSubst s;
      if (!match_type(*generic, t.annotation(), s))
        fail(ErrorKind::IllTyped, "`" + t.name() +
                                      "` annotated with a type that is not an "
                                      "instance of its declared type");
      return t.annotation();
    }
    case Term::Tag::App: {
      Type f = type_of(env, t.fun());
      Type a = type_of(env, t.arg());
      if (!is_fun_type(f))
        fail(ErrorKind::IllTyped, "application of a term of non-function type");
      if (!(fun_dom(f) == a))
        fail(ErrorKind::IllTyped, "argument type does not match the domain");
      return fun_cod(f);
    }
    case Term::Tag::Lam:
      check_type(env, t.annotation());
      return fun_type(t.annotation(), type_of(env, t.body()));
  }
  return prop_type();
}

void check_formula(const TheoryEnv& env, const Term& t) {
  Type ty = type_of(env, t);
  if (!(ty == prop_type()))
    fail(ErrorKind::TypeError, "expected a formula of type Prop");
}

}  // namespace holc
