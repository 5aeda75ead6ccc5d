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

// The abstract theorem type and its recorded derivation.
//
// A Thm is the judgement `context |- formula : label`. The only way to obtain
// one is through the functions in holc/kernel.h; everything else in the
// library, including the tactic engine, goes through them.

#ifndef HOLC_THM_H_
#define HOLC_THM_H_

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "holc/lattice.h"
#include "holc/syntax.h"

namespace holc {

enum class Rule {
  Ninit, NtrueI, NfalseE, Nlift, Nrefl, Nsym, Ntrans, Nlcong, Nacong, Nsubst,
  Nbeta, Ninst, Neta, NnegI, NnegE, NiffE1, NiffE2, NiffI, Nwk, NconjI,
  NconjE1, NconjE2, NdisjI1, NdisjI2, NdisjE, NimpI, NimpE, NallE, NallI,
  NexI, NexE,
  // Axiom schemes bound to labels by the lattice description.
  Nlem, WEM, Choice,
  // Facts registered in a theory environment.
  Axiom, Defn,
  // Stand-in for an unsolved goal; never accepted by replay or qed.
  Placeholder,
};

std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

// Parameters of a rule application; which fields are used depends on the
// rule (see holc/kernel.h).
struct RuleParams {
  // Conclusion context for premise-free rules and for rules discharging a
  // hypothesis.
  std::optional<std::vector<Term>> context;
  std::vector<Term> terms;
  std::vector<VarRef> vars;
  std::vector<std::string> type_vars;
  std::vector<Type> types;
  std::optional<Label> label;
  std::string name;
};

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
  Rule rule;
  std::vector<ProofPtr> premises;
  RuleParams params;
};

// Contexts are finite sets of formulas, kept sorted by alpha_compare with
// alpha-equal members merged.
using Context = std::vector<Term>;

Context make_context(std::vector<Term> members);
bool context_contains(const Context& ctx, const Term& t);
Context context_insert(Context ctx, const Term& t);
Context context_erase(Context ctx, const Term& t);
bool context_equal(const Context& a, const Context& b);
bool context_subset(const Context& a, const Context& b);
std::set<VarRef> context_fv(const Context& ctx);

class Thm {
 public:
  const Context& context() const { return data_->context; }
  const Term& formula() const { return data_->formula; }
  Label label() const { return data_->label; }
  const ProofPtr& proof() const { return data_->proof; }
  // True when the derivation depends on a Placeholder.
  bool provisional() const { return data_->provisional; }

  // Same context, formula and label.
  bool same_judgement(const Thm& other) const;

 private:
  friend struct KernelAccess;
  struct Data {
    Context context;
    Term formula;
    Label label;
    ProofPtr proof;
    bool provisional = false;
  };
  explicit Thm(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// Test hook: called for every Thm the kernel constructs on this thread.
// Test hook: called on the current thread with every Thm the kernel builds.
using ThmObserver = std::function<void(const Thm&)>;
void set_thm_observer(ThmObserver observer);

namespace detail {
void notify_thm(const Thm& thm);
}  // namespace detail

}  // namespace holc

#endif  // HOLC_THM_H_
