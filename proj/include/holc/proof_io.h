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

// Line-oriented proof export for external certification.
//
//   holc-proof 1
//   <id> <Rule> <premise ids...> | <params...>
//   ...
//   claim | ctx `h`... term `phi` label L
//
// Params are `ctx` followed by its backquoted members, `term \`t\``,
// `var x \`type\``, `tyvar a`, `type \`ty\``, `label L` and `name n`, in
// the order of the rule's parameter lists. Terms are in the surface syntax.
// The last node is the root.

#ifndef HOLC_PROOF_IO_H_
#define HOLC_PROOF_IO_H_

#include <string>
#include <string_view>

#include "holc/env.h"
#include "holc/thm.h"

namespace holc {

std::string export_proof(const TheoryEnv& env, const Thm& th);

struct ImportedProof {
  ProofPtr root;
  Context context;
  Term formula;
  Label label;
};

// Throws SyntaxError (with the line) on malformed input.
ImportedProof import_proof(const TheoryEnv& env, std::string_view text,
                           const std::string& file = "");

// Imports, replays and compares with the claim. Throws ReplayError when the
// replayed judgement differs from the claim, or the kernel error of the
// failing node.
Thm certify(const TheoryEnv& env, std::string_view text, const std::string& file = "");

}  // namespace holc

#endif  // HOLC_PROOF_IO_H_
