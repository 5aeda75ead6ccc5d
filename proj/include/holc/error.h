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

#ifndef HOLC_ERROR_H_
#define HOLC_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holc {

// Every failure raised by the library carries one of these kinds. The names
// are part of the user-visible diagnostics and the session protocol.
enum class ErrorKind {
  // syntax
  UnregisteredFormer,
  IllKinded,
  IllTyped,
  UnregisteredConstant,
  TypeMismatch,
  // lattice
  NotALattice,
  NoBottom,
  UnknownLabel,
  // kernel
  SideConditionViolated,
  LabelMismatch,
  ArityError,
  TypeError,
  NotAbove,
  UnboundScheme,
  PolymorphicAxiomInProof,
  LabelOutOfRange,
  ReplayError,
  // theories
  FreeVariableInDefiniens,
  TypeVariableEscape,
  DuplicateName,
  NotStrictlyPositive,
  WitnessShapeError,
  NonEmptyWitnessContext,
  UnknownName,
  // frontend
  SyntaxError,
  ScriptError,
  // proof engine
  TacticFails,
  NotBelow,
  NoGoals,
  OpenGoals,
  JustificationMismatch,
  ProtocolError,
  IoError,
};

std::string_view error_kind_name(ErrorKind kind);

struct SourceSpan {
  std::string file;
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;
  // file:line:col
  std::string str() const;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}
  Error(ErrorKind kind, const std::string& message, SourceSpan span)
      : std::runtime_error(span.str() + ": " + std::string(error_kind_name(kind)) +
                           ": " + message),
        kind_(kind),
        detail_(message),
        span_(std::move(span)) {}

  ErrorKind kind() const { return kind_; }
  // Message without the kind prefix.
  const std::string& detail() const { return detail_; }
  const std::optional<SourceSpan>& span() const { return span_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<SourceSpan> span_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}
[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              const SourceSpan& span) {
  throw Error(kind, message, span);
}

}  // namespace holc

#endif  // HOLC_ERROR_H_
