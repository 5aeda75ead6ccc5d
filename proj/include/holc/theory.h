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


// Definitional principles: constant definitions, strictly-positive
// datatypes and subset types. Each extends an environment in place; copy
// the environment first to keep the original.

#ifndef HOLC_THEORY_H_
#define HOLC_THEORY_H_

#include <optional>
#include <string>
#include <vector>

#include "holc/env.h"
#include "holc/kernel.h"

namespace holc {

// Registers `name` at the definiens' type and returns |- name = t : I.
// Throws FreeVariableInDefiniens, TypeVariableEscape or DuplicateName.
Thm define_constant(TheoryEnv& env, const std::string& name, const Term& definiens);

struct DatatypeSpec {
  struct Constructor {
    std::string name;
    std::vector<Type> args;
  };
  std::string name;
  std::vector<std::string> params;
  std::vector<Constructor> constructors;
  std::string recursor;  // defaults to <name>_rec
};

// Empty when `arg` is strictly positive in the former `name`, otherwise the
// reason.
std::string positivity_violation(const Type& arg, const std::string& name);

// Asserts the datatype: freeness, recursor equations and induction, all at
// the bottom label. Throws NotStrictlyPositive or DuplicateName.
const DatatypeBundle& declare_datatype(TheoryEnv& env, const DatatypeSpec& spec);

// Carves a new type out of the host type of `predicate` using a witness
// |- exists x. predicate x : l. The two laws are asserted at l. Throws
// NonEmptyWitnessContext or WitnessShapeError.
const TypedefBundle& typedef_type(TheoryEnv& env, const std::string& name,
                                  const Term& predicate, const Thm& witness,
                                  const std::string& inj = "", const std::string& proj = "");

// Rebuilds an environment from its history, replaying every stored theorem.
TheoryEnv replay_env(const TheoryEnv& env);

}  // namespace holc

#endif  // HOLC_THEORY_H_
