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

// Derived rules, conversions and proof transformations. Everything here is
// built from kernel rules; nothing in this file is trusted.

#ifndef HOLC_DERIVED_H_
#define HOLC_DERIVED_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holc/env.h"
#include "holc/kernel.h"

namespace holc {

// Nlift, skipped when the label is already `target`.
Thm lift_to(const TheoryEnv& env, const Thm& th, Label target);
// Weakens `th` until its context is `ctx`; SideConditionViolated unless
// th.context() is a subset of ctx.
Thm weaken_to(const TheoryEnv& env, const Thm& th, const Context& ctx);

// The Nlem label; UnboundScheme when the lattice has none.
Label classical_label(const TheoryEnv& env);

// Gamma u {~phi} |- False : l   gives   Gamma |- phi : l join C.
Thm raa(const TheoryEnv& env, const Thm& th, const Term& phi,
        std::optional<Context> ctx = std::nullopt);
// Gamma u {phi} |- xi : l and Gamma u {~phi} |- xi : l'  give
// Gamma |- xi : l join l' join C.
Thm case_split(const TheoryEnv& env, const Thm& pos, const Thm& neg,
               const Term& phi, std::optional<Context> ctx = std::nullopt);
// Gamma |- phi : l and Gamma u {phi} |- psi : l'  give  Gamma |- psi : l join l'.
Thm cut(const TheoryEnv& env, const Thm& lemma, const Thm& th);
Thm join_conj(const TheoryEnv& env, const Thm& a, const Thm& b);
// Disjunction elimination at the join of all three premise labels.
Thm join_disj_elim(const TheoryEnv& env, const Thm& disj, const Thm& left,
                   const Thm& right);
// Gamma |- f x = g x : l with x not free in Gamma, f or g gives
// Gamma |- f = g : l.
Thm ext(const TheoryEnv& env, const Thm& th);
// Gamma |- S x <-> T x : l gives Gamma |- S = T : l for sets S, T.
Thm set_ext(const TheoryEnv& env, const Thm& th);
// Gamma |- phi : l and Gamma |- psi : l' lifted to a common label.
std::pair<Thm, Thm> lift_pair(const TheoryEnv& env, const Thm& a, const Thm& b);

// Conversions: given a term t, either nothing (no change) or
// Gamma |- t = t' : l.
using Conv = std::function<std::optional<Thm>(const Term&)>;

Conv beta_conv(const TheoryEnv& env, const Context& ctx);
// Unfolds every occurrence of the defined constant `name`.
Conv unfold_conv(const TheoryEnv& env, const Context& ctx, const std::string& name);
// Rewrites with an equation lemma (possibly universally quantified and
// polymorphic) whose left side is matched against the term.
Conv rewrite_conv(const TheoryEnv& env, const Context& ctx, const Thm& lemma);
// Applies `c` to the immediate subterms.
Conv sub_conv(const TheoryEnv& env, const Context& ctx, Conv c);
// Applies `c` once at the outermost matching positions.
Conv once_depth_conv(const TheoryEnv& env, const Context& ctx, Conv c);
// Applies `c` bottom-up and repeatedly until nothing changes.
Conv redepth_conv(const TheoryEnv& env, const Context& ctx, Conv c);
Conv then_conv(const TheoryEnv& env, Conv a, Conv b);
Conv orelse_conv(Conv a, Conv b);
// Full beta normal form.
Conv beta_norm_conv(const TheoryEnv& env, const Context& ctx);
// Chains two conversion results (lifted to a common label).
Thm trans_join(const TheoryEnv& env, const Thm& a, const Thm& b);

// Matching of a pattern against a term. Pattern variables and type
// variables listed are instantiable.
struct Match {
  TypeSubst types;
  std::vector<std::pair<VarRef, Term>> terms;  // keys as in the pattern
};
std::optional<Match> match_term(const Term& pattern, const Term& target,
                                const std::set<VarRef>& vars,
                                const std::set<std::string>& tyvars);

// A closed lemma with its outer universals opened onto fresh variables and
// its type variables renamed apart from `avoid_types`.
struct OpenLemma {
  Thm thm;
  std::set<VarRef> vars;
  std::set<std::string> tyvars;
};
OpenLemma open_lemma(const TheoryEnv& env, const Thm& lemma,
                     const std::set<VarRef>& avoid,
                     const std::set<std::string>& avoid_types, bool strip_foralls = true);
// Opens one more outer universal of `lemma` onto a fresh variable.
bool open_forall(const TheoryEnv& env, OpenLemma& lemma, const std::set<VarRef>& avoid);
// Applies a match to an opened lemma by Ninst and Nsubst.
Thm instantiate(const TheoryEnv& env, const OpenLemma& lemma, const Match& m);

// Replays a C-labelled proof at I under the hypothesis forall p. p \/ ~p.
// Throws PolymorphicAxiomInProof on Choice and LabelOutOfRange on other
// axioms above the bottom label.
Thm unwind_classical(const TheoryEnv& env, const Thm& th);
// The hypothesis forall p:Prop. p \/ ~p.
Term excluded_middle_statement();

// Rebuilds a proof with its Nlift nodes removed. Multi-premise rules lift
// their premises to the join of the premise labels and a single Nlift at the
// root restores the original label, so the judgement is unchanged.
Thm hoist_lifts(const TheoryEnv& env, const Thm& th);

}  // namespace holc

#endif  // HOLC_DERIVED_H_
