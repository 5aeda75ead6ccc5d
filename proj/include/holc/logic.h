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

// Constructors and destructors for the logical connectives and quantifiers.

#ifndef HOLC_LOGIC_H_
#define HOLC_LOGIC_H_

#include <optional>
#include <utility>

#include "holc/syntax.h"

namespace holc {

Term mk_true();
Term mk_false();
Term mk_not(Term p);
Term mk_and(Term p, Term q);
Term mk_or(Term p, Term q);
Term mk_imp(Term p, Term q);
Term mk_iff(Term p, Term q);
// `l = r`; at type Prop this is `l <-> r`. Throws TypeError when the sides
// are ill-typed or their types differ.
Term mk_eq(Term l, Term r);
Term mk_forall(const VarRef& x, Term body);
Term mk_exists(const VarRef& x, Term body);
// Curried implication p1 --> ... --> pn --> q.
Term mk_imps(const std::vector<Term>& premises, Term q);
Term mk_conjs(const std::vector<Term>& parts);

bool is_true(const Term& t);
bool is_false(const Term& t);
std::optional<Term> dest_not(const Term& t);
std::optional<std::pair<Term, Term>> dest_and(const Term& t);
std::optional<std::pair<Term, Term>> dest_or(const Term& t);
std::optional<std::pair<Term, Term>> dest_imp(const Term& t);
std::optional<std::pair<Term, Term>> dest_iff(const Term& t);
// Accepts `l = r` at any type and `l <-> r`.
std::optional<std::pair<Term, Term>> dest_eq(const Term& t);
// Quantifier applied to a lambda.
std::optional<std::pair<VarRef, Term>> dest_forall(const Term& t);
std::optional<std::pair<VarRef, Term>> dest_exists(const Term& t);

// Rewrites every `=` at type Prop -> Prop -> Prop into `<->`.
Term normalize_iff(const Term& t);

}  // namespace holc

#endif  // HOLC_LOGIC_H_
