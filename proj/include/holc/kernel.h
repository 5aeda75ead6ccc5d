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

// The trusted core. Every Thm is built here, by one rule of the natural
// deduction relation, a lattice-bound axiom scheme, or a registered fact.

#ifndef HOLC_KERNEL_H_
#define HOLC_KERNEL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holc/env.h"
#include "holc/thm.h"

namespace holc {

// Parameter conventions (RuleParams fields read by each rule):
//   Ninit        context, terms[0] = phi
//   NtrueI       context
//   NfalseE      terms[0] = phi
//   Nlift        label
//   Nrefl        context, terms[0] = r
//   Nlcong       vars[0] = x
//   Nsubst       vars[0] = x, terms[0] = r
//   Nbeta        context, terms[0] = (\x. r) s
//   Ninst        type_vars[0], types[0]
//   Neta         context, terms[0] = \x. f x
//   NnegI/NimpI  terms[0] = discharged phi, optional context
//   NiffI        optional context
//   Nwk          terms[0] = psi
//   NdisjI1      terms[0] = right disjunct
//   NdisjI2      terms[0] = left disjunct
//   NallE        terms[0] = r
//   NallI        vars[0] = x
//   NexI         vars[0] = x, terms[0] = body, terms[1] = witness
//   NexE         vars[0] = y
//   Nlem/WEM     context, terms[0] = phi
//   Choice       context, terms[0] = P
//   Axiom/Defn   name
//   Placeholder  context, terms[0] = phi, label
// Throws SideConditionViolated, LabelMismatch, ArityError, TypeError,
// NotAbove, UnboundScheme or UnknownName.
Thm apply_rule(const TheoryEnv& env, Rule rule, const std::vector<Thm>& premises,
               const RuleParams& params);

// Re-runs every rule of a recorded derivation. Errors carry the path of the
// failing node, e.g. "/1/0". Placeholders are rejected.
Thm replay(const TheoryEnv& env, const ProofPtr& proof);
// Shares replayed nodes across calls; entries stay valid while the proofs
// they key are alive.
using ReplayMemo = std::map<const ProofNode*, Thm>;
Thm replay(const TheoryEnv& env, const ProofPtr& proof, ReplayMemo& memo);

namespace kernel {

Thm init(const TheoryEnv& env, const Context& ctx, const Term& phi);
Thm true_intro(const TheoryEnv& env, const Context& ctx);
Thm false_elim(const TheoryEnv& env, const Thm& th, const Term& phi);
// Nlift: raises the label; NotAbove unless leq(th.label(), target).
Thm lift(const TheoryEnv& env, const Thm& th, Label target);
Thm refl(const TheoryEnv& env, const Context& ctx, const Term& r);
Thm sym(const TheoryEnv& env, const Thm& th);
Thm trans(const TheoryEnv& env, const Thm& rs, const Thm& st);
Thm lam_cong(const TheoryEnv& env, const Thm& th, const VarRef& x);
Thm app_cong(const TheoryEnv& env, const Thm& fg, const Thm& rs);
Thm subst(const TheoryEnv& env, const Thm& th, const VarRef& x, const Term& r);
Thm beta(const TheoryEnv& env, const Context& ctx, const Term& redex);
Thm inst(const TheoryEnv& env, const Thm& th, const std::string& tyvar,
         const Type& ty);
Thm eta(const TheoryEnv& env, const Context& ctx, const Term& lam);
Thm neg_intro(const TheoryEnv& env, const Thm& th, const Term& phi,
              std::optional<Context> ctx = std::nullopt);
Thm neg_elim(const TheoryEnv& env, const Thm& phi, const Thm& not_phi);
Thm iff_elim1(const TheoryEnv& env, const Thm& iff, const Thm& phi);
Thm iff_elim2(const TheoryEnv& env, const Thm& iff, const Thm& psi);
Thm iff_intro(const TheoryEnv& env, const Thm& to_phi, const Thm& to_psi,
              std::optional<Context> ctx = std::nullopt);
Thm weaken(const TheoryEnv& env, const Thm& th, const Term& psi);
Thm conj_intro(const TheoryEnv& env, const Thm& a, const Thm& b);
Thm conj_elim1(const TheoryEnv& env, const Thm& th);
Thm conj_elim2(const TheoryEnv& env, const Thm& th);
Thm disj_intro1(const TheoryEnv& env, const Thm& th, const Term& psi);
Thm disj_intro2(const TheoryEnv& env, const Thm& th, const Term& phi);
Thm disj_elim(const TheoryEnv& env, const Thm& disj, const Thm& left,
              const Thm& right);
Thm imp_intro(const TheoryEnv& env, const Thm& th, const Term& phi,
              std::optional<Context> ctx = std::nullopt);
Thm imp_elim(const TheoryEnv& env, const Thm& imp, const Thm& phi);
Thm all_elim(const TheoryEnv& env, const Thm& th, const Term& r);
Thm all_intro(const TheoryEnv& env, const Thm& th, const VarRef& x);
Thm ex_intro(const TheoryEnv& env, const Thm& th, const VarRef& x,
             const Term& body, const Term& witness);
Thm ex_elim(const TheoryEnv& env, const Thm& ex, const Thm& th, const VarRef& y);
Thm lem(const TheoryEnv& env, const Context& ctx, const Term& phi);
Thm wem(const TheoryEnv& env, const Context& ctx, const Term& phi);
Thm choice(const TheoryEnv& env, const Context& ctx, const Term& rel);
Thm axiom(const TheoryEnv& env, const std::string& name);
Thm defn(const TheoryEnv& env, const std::string& name);
Thm placeholder(const TheoryEnv& env, const Context& ctx, const Term& phi,
                Label label);

}  // namespace kernel

// The Choice scheme's statement for a relation P : a -> b -> Prop.
Term choice_statement(const Term& rel);

}  // namespace holc

#endif  // HOLC_KERNEL_H_
