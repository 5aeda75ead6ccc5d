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


// Round-trip and fuzz properties of the surface syntax.

#ifndef HOLC_TESTS_SUPPORT_FRONTEND_PROPS_H_
#define HOLC_TESTS_SUPPORT_FRONTEND_PROPS_H_

#include <exception>
#include <string>

#include "holc/error.h"
#include "holc/parse.h"
#include "holc/print.h"
#include "support/gen.h"

namespace holc::testing {

// Empty on success.
inline std::string roundtrip_once(Gen& g, const TheoryEnv& env) {
  Term t = g.coin(70) ? g.formula(4) : g.term(g.type(2), 4);
  std::string text = print_term(env, t);
  try {
    Term back = parse_term(env, text);
    if (!(back == t)) return "round-trip changed the term: " + text;
  } catch (const Error& e) {
    return "printed term does not parse: " + text + "  (" + e.what() + ")";
  }
  return "";
}

inline std::string fuzz_input(Gen& g) {
  static const char* pieces[] = {
      "x", "y", "zero", "suc", "nil", "cons", "True", "False", "forall", "exists", "\\", "λ",
      "∀", "∧", "¬", "(", ")", "{", "}", ":", ".", ",", "|", "=", "~", "/\\", "\\/", "-->",
      "<->", "->", "'a", "Nat", "Prop", "List", "$", "$=", "in", " ", " ", "\n", "--", "`",
      "\"", "@", "[", "]", "0", "é", "\xff", "\xe2", "o", "∘", "(x:Nat)", "{x:Nat|"};
  constexpr int n = sizeof(pieces) / sizeof(pieces[0]);
  std::string s;
  int len = g.below(40);
  for (int i = 0; i < len; ++i) {
    if (g.coin(5))
      s += static_cast<char>(g.below(256));
    else
      s += pieces[g.below(n)];
  }
  return s;
}

// Empty when parsing ends in a Term or a library Error.
inline std::string fuzz_once(Gen& g, const TheoryEnv& env) {
  std::string input = fuzz_input(g);
  try {
    parse_term(env, input);
  } catch (const Error&) {
  } catch (const std::exception& e) {
    return "foreign exception on input `" + input + "`: " + e.what();
  }
  return "";
}

}  // namespace holc::testing

#endif  // HOLC_TESTS_SUPPORT_FRONTEND_PROPS_H_
