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


// Printing in the surface syntax. parse(print(t)) is alpha-equal to t.

#ifndef HOLC_PRINT_H_
#define HOLC_PRINT_H_

#include <string>

#include "holc/env.h"
#include "holc/parse.h"
#include "holc/syntax.h"

namespace holc {

std::string print_type(const Type& ty);
std::string print_term(const TheoryEnv& env, const Term& t);
// Free variables listed in `known` with a single type print bare; parsing
// the text back with the same scope recovers the term.
std::string print_term(const TheoryEnv& env, const Term& t, const FreeScope& known);

}  // namespace holc

#endif  // HOLC_PRINT_H_
