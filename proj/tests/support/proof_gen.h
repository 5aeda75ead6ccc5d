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


// Random proof trees over a fixed stock of labelled axioms, and the label
// fold used as their oracle.

#ifndef HOLC_TESTS_SUPPORT_PROOF_GEN_H_
#define HOLC_TESTS_SUPPORT_PROOF_GEN_H_

#include <random>
#include <string>
#include <vector>

#include "holc/derived.h"
#include "holc/kernel.h"
#include "holc/logic.h"

namespace holc::testing {

inline constexpr int kAtoms = 8;

inline Term atom(int i) { return Term::constant("p" + std::to_string(i), prop_type()); }

// Atoms p0..p7 and one axiom `ax<i>: p<i>` per atom, labels cycling through
// the lattice members.
inline TheoryEnv proof_gen_env(std::shared_ptr<const TaintLattice> lat =
                                   TaintLattice::four_chain()) {
  TheoryEnv env(lat);
  auto members = env.lattice().members();
  for (int i = 0; i < kAtoms; ++i) {
    env.add_constant("p" + std::to_string(i), prop_type());
    env.add_axiom("ax" + std::to_string(i), atom(i),
                  members[static_cast<std::size_t>(i) % members.size()], "axiom");
  }
  return env;
}

class ProofGen {
 public:
  ProofGen(const TheoryEnv& env, unsigned seed) : env_(env), rng_(seed) {}

  Thm proof(int depth) {
    if (depth <= 0 || below(4) == 0) return leaf();
    switch (below(8)) {
      case 0:
        return join_conj(env_, proof(depth - 1), proof(depth - 1));
      case 1: {
        Thm c = join_conj(env_, proof(depth - 1), proof(depth - 1));
        return below(2) ? kernel::conj_elim1(env_, c) : kernel::conj_elim2(env_, c);
      }
      case 2: {
        Thm th = proof(depth - 1);
        auto members = env_.lattice().members();
        Label target = members[below(static_cast<int>(members.size()))];
        return lift_to(env_, th, env_.lattice().join(th.label(), target));
      }
      case 3:
        return kernel::disj_intro1(env_, proof(depth - 1), atom(below(kAtoms)));
      case 4: {
        // p_j --> phi discharged from a weakened proof, then applied.
        Thm th = proof(depth - 1);
        int j = below(kAtoms);
        Thm w = context_contains(th.context(), atom(j)) ? th
                                                        : kernel::weaken(env_, th, atom(j));
        Thm imp = kernel::imp_intro(env_, w, atom(j));
        auto [i, a] = lift_pair(env_, imp, kernel::axiom(env_, "ax" + std::to_string(j)));
        return kernel::imp_elim(env_, i, a);
      }
      case 5: {
        Thm th = proof(depth - 1);
        int k = below(kAtoms);
        Thm disj = leaf_scheme(k);
        Thm left = kernel::weaken(env_, th, atom(k));
        Thm right = kernel::weaken(env_, th, mk_not(atom(k)));
        return join_disj_elim(env_, disj, left, right);
      }
      case 6: {
        Thm th = proof(depth - 1);
        Thm refl = kernel::refl(env_, th.context(), th.formula());
        auto [r, t] = lift_pair(env_, refl, th);
        return kernel::iff_elim1(env_, r, t);
      }
      default:
        return kernel::disj_intro2(env_, proof(depth - 1), atom(below(kAtoms)));
    }
  }

 private:
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  // p_k \/ ~p_k by Nlem when available, else from an axiom.
  Thm leaf_scheme(int k) {
    if (env_.lattice().scheme_label(kSchemeLem)) return kernel::lem(env_, {}, atom(k));
    return kernel::disj_intro1(env_, kernel::axiom(env_, "ax" + std::to_string(k)),
                               mk_not(atom(k)));
  }

  Thm leaf() {
    const TaintLattice& lat = env_.lattice();
    switch (below(6)) {
      case 0:
        return kernel::true_intro(env_, {});
      case 1:
        if (lat.scheme_label(kSchemeLem)) return kernel::lem(env_, {}, atom(below(kAtoms)));
        break;
      case 2:
        if (lat.scheme_label(kSchemeWem)) return kernel::wem(env_, {}, atom(below(kAtoms)));
        break;
      case 3:
        if (lat.scheme_label(kSchemeChoice)) {
          Term rel = Term::var("R", fun_type({prop_type(), prop_type()}, prop_type()));
          return kernel::choice(env_, {}, rel);
        }
        break;
      default:
        break;
    }
    return kernel::axiom(env_, "ax" + std::to_string(below(kAtoms)));
  }

  const TheoryEnv& env_;
  std::mt19937 rng_;
};

// Join of the labels of every axiom node, optionally also every Nlift target.
inline Label fold_labels(const TheoryEnv& env, const ProofNode& node, bool with_lifts) {
  const TaintLattice& lat = env.lattice();
  Label acc = lat.bottom();
  switch (node.rule) {
    case Rule::Axiom:
      return env.axiom(node.params.name)->label;
    case Rule::Nlem:
      return *lat.scheme_label(kSchemeLem);
    case Rule::WEM:
      return *lat.scheme_label(kSchemeWem);
    case Rule::Choice:
      return *lat.scheme_label(kSchemeChoice);
    case Rule::Nlift:
      if (with_lifts) acc = *node.params.label;
      break;
    default:
      break;
  }
  for (const auto& p : node.premises) acc = lat.join(acc, fold_labels(env, *p, with_lifts));
  return acc;
}

}  // namespace holc::testing

#endif  // HOLC_TESTS_SUPPORT_PROOF_GEN_H_
