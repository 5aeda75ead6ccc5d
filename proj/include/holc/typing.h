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

// Kinding and typing relative to a theory environment.

#ifndef HOLC_TYPING_H_
#define HOLC_TYPING_H_

#include "holc/env.h"
#include "holc/syntax.h"

namespace holc {

// Throws UnregisteredFormer, or IllKinded when an application's head has
// arity 0 or its argument is not a type.
Kind kind_of(const TheoryEnv& env, const Type& ty);
// Throws unless kind_of(env, ty) is arity 0.
void check_type(const TheoryEnv& env, const Type& ty);

// Throws IllTyped, UnregisteredConstant, or a kinding error for an
// annotation.
Type type_of(const TheoryEnv& env, const Term& t);
// Throws TypeError unless `t` is a well-typed formula.
void check_formula(const TheoryEnv& env, const Term& t);

}  // namespace holc

#endif  // HOLC_TYPING_H_
