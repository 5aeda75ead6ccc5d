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

// Theory files: a sequence of commands parsed up front into token slices,
// then elaborated and run one by one against a growing environment.
// The grammar is documented in docs/grammar.md.

#ifndef HOLC_SCRIPT_H_
#define HOLC_SCRIPT_H_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "holc/env.h"
#include "holc/parse.h"
#include "holc/tactic.h"

namespace holc {

struct ScriptCommand {
  enum class Kind {
    Lattice, Import, Type, TypeSyn, Const, Axiom, Def, Datatype, Typedef,
    Theorem, Unwind
  };
  struct Ctor {
    std::string name;
    std::vector<std::vector<Token>> args;  // one type atom each
  };

  Kind kind;
  SourceSpan span;
  std::string name;
  std::vector<std::string> params;  // Type, TypeSyn, Datatype
  std::string path;                 // Lattice, Import
  std::optional<std::string> label;  // Axiom, Theorem
  // Const and TypeSyn: a type. Axiom, Def, Theorem: a term. Typedef: the
  // carve-out predicate.
  std::vector<Token> body;
  std::vector<Token> annotation;          // Def, optional type
  std::vector<std::vector<Token>> hyps;   // Theorem
  std::vector<Ctor> ctors;                // Datatype
  std::string recursor;                   // Datatype, optional
  std::string witness, inj, proj;         // Typedef
  std::string source;                     // Unwind
  TacticExpr tactic;                      // Theorem
};

// Throws SyntaxError with a span.
std::vector<ScriptCommand> parse_script(std::string_view text, const std::string& file = "");

struct ScriptOptions {
  // Directory for relative imports and lattice files. Files not found there
  // fall back to the embedded library.
  std::string base_dir = ".";
};

// A running sequence of scripts sharing one environment. Each file is
// imported at most once.
class ScriptSession {
 public:
  explicit ScriptSession(TheoryEnv env = TheoryEnv());

  const TheoryEnv& env() const { return env_; }
  // One line per command, in order.
  const std::vector<std::string>& report() const { return report_; }
  std::string report_text() const;

  // Runs commands in order; the first failure throws with the span of the
  // command (or tactic step) at fault and leaves the environment as it was
  // after the last successful command.
  void run(const std::vector<ScriptCommand>& commands, const ScriptOptions& opts = {});
  void run_text(std::string_view text, const std::string& file, const ScriptOptions& opts = {});
  void run_file(const std::string& path);

 private:
  void command(const ScriptCommand& c, const ScriptOptions& opts);
  void import(const ScriptCommand& c, const ScriptOptions& opts);

  TheoryEnv env_;
  std::vector<std::string> report_;
  std::set<std::string> loaded_;
  std::vector<std::string> loading_;
};

// Runs `commands` on a copy of `env`.
struct ScriptResult {
  TheoryEnv env;
  std::vector<std::string> report;
};
ScriptResult run_script(const TheoryEnv& env, const std::vector<ScriptCommand>& commands,
                        const ScriptOptions& opts = {});

// Files shipped inside the library: stdlib.thy, chain4.lat, diamond.lat.
std::optional<std::string> embedded_file(std::string_view name);

// Reads a file, throwing IoError.
std::string read_file(const std::string& path);

}  // namespace holc

#endif  // HOLC_SCRIPT_H_
