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

#include "holc/error.h"

namespace holc {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
#define HOLC_KIND(k) \
  case ErrorKind::k: \
    return #k;
    HOLC_KIND(UnregisteredFormer)
    HOLC_KIND(IllKinded)
    HOLC_KIND(IllTyped)
    HOLC_KIND(UnregisteredConstant)
    HOLC_KIND(TypeMismatch)
    HOLC_KIND(NotALattice)
    HOLC_KIND(NoBottom)
    HOLC_KIND(UnknownLabel)
    HOLC_KIND(SideConditionViolated)
    HOLC_KIND(LabelMismatch)
    HOLC_KIND(ArityError)
    HOLC_KIND(TypeError)
    HOLC_KIND(NotAbove)
    HOLC_KIND(UnboundScheme)
    HOLC_KIND(PolymorphicAxiomInProof)
    HOLC_KIND(LabelOutOfRange)
    HOLC_KIND(ReplayError)
    HOLC_KIND(FreeVariableInDefiniens)
    HOLC_KIND(TypeVariableEscape)
    HOLC_KIND(DuplicateName)
    HOLC_KIND(NotStrictlyPositive)
    HOLC_KIND(WitnessShapeError)
    HOLC_KIND(NonEmptyWitnessContext)
    HOLC_KIND(UnknownName)
    HOLC_KIND(SyntaxError)
    HOLC_KIND(ScriptError)
    HOLC_KIND(TacticFails)
    HOLC_KIND(NotBelow)
    HOLC_KIND(NoGoals)
    HOLC_KIND(OpenGoals)
    HOLC_KIND(JustificationMismatch)
    HOLC_KIND(ProtocolError)
    HOLC_KIND(IoError)
#undef HOLC_KIND
  }
  return "Error";
}

std::string SourceSpan::str() const {
  return (file.empty() ? std::string("<input>") : file) + ":" +
         std::to_string(start_line) + ":" + std::to_string(start_col);
}

}  // namespace holc
