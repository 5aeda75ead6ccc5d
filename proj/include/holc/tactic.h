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


// Backward proof: goals, a deep-embedded tactic language and proof states
// with undo. Tactics never build theorems themselves; each step records a
// justification that runs kernel rules once the subgoals are proved.

#ifndef HOLC_TACTIC_H_
#define HOLC_TACTIC_H_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holc/env.h"
#include "holc/error.h"
#include "holc/parse.h"
#include "holc/thm.h"

namespace holc {

struct Goal {
  Context context;
  Term formula;
  Label label;
};

struct TacticArg {
  enum class Kind { Term, Name };
  Kind kind;
  std::string text;
  SourceSpan span;
};

struct TacticExpr {
  enum class Kind { Basic, Then, OrElse, Repeat, Try, All, Id, Fail };
  Kind kind = Kind::Id;
  std::string name;  // Basic
  std::vector<TacticArg> args;
  std::vector<TacticExpr> kids;
  SourceSpan span;
};

// Names of the basic tactics, with their argument signature: T is a
// backquoted term, N a name, L a label, H a name or a backquoted term.
const std::map<std::string, std::string>& tactic_signatures();

// Parses a tactic expression from the parser's position; stops before
// `qed`, an unmatched `)` or the end. Throws SyntaxError.
TacticExpr parse_tactic(Parser& p);
TacticExpr parse_tactic(std::string_view text, const std::string& file = "");
std::string print_tactic(const TacticExpr& t);

// Facts usable by name: theorems, axioms and definitions. Throws
// UnknownName.
Thm lookup_fact(const TheoryEnv& env, const std::string& name);

struct RenderedGoal {
  std::vector<std::string> variables;  // free variables as name:type
  std::vector<std::string> context;
  std::string formula;
  std::string label;
  friend bool operator==(const RenderedGoal&, const RenderedGoal&) = default;
};

class ProofState {
 public:
  // Throws TypeError or UnknownLabel for an ill-formed conjecture.
  ProofState(std::shared_ptr<const TheoryEnv> env, Goal conjecture);

  const TheoryEnv& env() const { return *env_; }
  const Goal& conjecture() const { return conjecture_; }
  std::vector<Goal> goals() const;
  std::size_t undo_depth() const { return undo_.size(); }

  // Runs `t` on the first goal. On failure the state is unchanged and the
  // error is TacticFails, NotBelow or NoGoals.
  void apply(const TacticExpr& t);
  void apply(std::string_view tactic_text);
  // False when there is nothing to undo.
  bool undo();
  // Assembles and replays the proof. Throws OpenGoals, or
  // JustificationMismatch if the result differs from the conjecture.
  Thm qed() const;

  std::vector<RenderedGoal> render() const;
  std::string render_text() const;

  using Justify = std::function<Thm(const std::vector<Thm>&)>;
  struct Step {
    std::vector<std::size_t> children;
    Justify justify;
  };
  // Steps are keyed by goal ids, which are never reused, and a goal leaves
  // the open list only when its step is recorded; so rolling back needs
  // only the open list.
  struct Snapshot {
    std::vector<std::size_t> open;
  };

 private:
  friend struct TacticRunner;
  Thm build(std::size_t id) const;

  std::shared_ptr<const TheoryEnv> env_;
  Goal conjecture_;
  std::vector<Goal> table_;
  std::map<std::size_t, std::shared_ptr<const Step>> steps_;
  Snapshot current_;
  std::vector<Snapshot> undo_;
};

// Proves `goal` with `script`; convenience for theory files and tests.
Thm prove(std::shared_ptr<const TheoryEnv> env, const Goal& goal, const TacticExpr& script);

}  // namespace holc

#endif  // HOLC_TACTIC_H_
