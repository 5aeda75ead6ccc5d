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

#ifndef HOLC_ENV_H_
#define HOLC_ENV_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holc/lattice.h"
#include "holc/syntax.h"
#include "holc/thm.h"

namespace holc {

// Names of the built-in logical constants.
namespace names {
inline constexpr const char* kTrue = "True";
inline constexpr const char* kFalse = "False";
inline constexpr const char* kAnd = "/\\";
inline constexpr const char* kOr = "\\/";
inline constexpr const char* kImp = "-->";
inline constexpr const char* kIff = "<->";
inline constexpr const char* kNot = "~";
inline constexpr const char* kEq = "=";
inline constexpr const char* kForall = "forall";
inline constexpr const char* kExists = "exists";
}  // namespace names

struct TypeSynonym {
  std::vector<std::string> params;
  Type body;
};

struct AxiomInfo {
  Term formula;
  Label label;
  std::string origin;  // e.g. "datatype Bool", "typedef Fset", "axiom"
};

struct DatatypeBundle {
  std::string former;
  std::vector<std::string> params;
  std::vector<std::pair<std::string, Type>> constructors;
  std::pair<std::string, Type> recursor{"", prop_type()};
  // Names of the bundle's axioms, all at the bottom label.
  std::vector<std::string> distinctness;
  std::vector<std::string> injectivity;
  std::vector<std::string> recursion;
  std::string induction;
};

struct TypedefBundle {
  std::string former;
  std::vector<std::string> params;
  Type host = prop_type();
  Term predicate = Term::constant(names::kTrue, prop_type());
  std::string inj;
  std::string proj;
  std::vector<std::string> laws;
  Label label;
  // The label rule for carve-outs is conjectural; bundles record that.
  bool conjectured_label = true;
};

// One extension of an environment. The history replays to rebuild it.
struct EnvEvent {
  enum class Kind { Former, Synonym, Constant, Definition, Axiom, Theorem };
  Kind kind;
  std::string name;
  std::optional<holc::Kind> arity;
  std::optional<Type> type;
  std::optional<Term> term;
  std::optional<Label> label;
  std::vector<std::string> params;
  std::string origin;
};

// Registry of type-formers, constants, definitions, axioms and proved
// theorems, plus the active lattice. A plain value: extending a copy leaves
// the original untouched.
class TheoryEnv {
 public:
  // Built-in formers Prop and fun and the logical constants.
  explicit TheoryEnv(
      std::shared_ptr<const TaintLattice> lattice = TaintLattice::four_chain());

  const TaintLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const TaintLattice>& lattice_ptr() const {
    return lattice_;
  }

  std::optional<Kind> former_kind(const std::string& name) const;
  const std::map<std::string, Kind>& formers() const { return formers_; }
  const TypeSynonym* synonym(const std::string& name) const;
  std::optional<Type> constant_type(const std::string& name) const;
  const std::map<std::string, Type>& constants() const { return constants_; }
  // Defining equation `c = t` of a defined constant.
  const Term* definition(const std::string& name) const;
  const AxiomInfo* axiom(const std::string& name) const;
  const std::map<std::string, AxiomInfo>& axioms() const { return axioms_; }
  const Thm* theorem(const std::string& name) const;
  const std::map<std::string, Thm>& theorems() const { return theorems_; }
  const std::vector<DatatypeBundle>& datatypes() const { return datatypes_; }
  const std::vector<TypedefBundle>& typedefs() const { return typedefs_; }

  const std::vector<EnvEvent>& history() const { return history_; }
  // Every asserted axiom, in order, with its label.
  std::vector<EnvEvent> axiom_log() const;

  // Extension. Each throws DuplicateName on a clash and appends to history.
  void add_former(const std::string& name, Kind kind);
  void add_synonym(const std::string& name, std::vector<std::string> params,
                   Type body);
  void add_constant(const std::string& name, Type generic);
  // Registers `equation` (c = t) as the definition of the registered
  // constant c.
  void add_definition(const std::string& name, Term equation);
  void add_axiom(const std::string& name, Term formula, Label label,
                 std::string origin);
  void add_theorem(const std::string& name, Thm thm);
  void add_datatype(DatatypeBundle bundle) { datatypes_.push_back(std::move(bundle)); }
  void add_typedef(TypedefBundle bundle) { typedefs_.push_back(std::move(bundle)); }

  // True when `name` is used by a definition, axiom or theorem.
  bool fact_exists(const std::string& name) const;

 private:
  std::shared_ptr<const TaintLattice> lattice_;
  std::map<std::string, Kind> formers_;
  std::map<std::string, TypeSynonym> synonyms_;
  std::map<std::string, Type> constants_;
  std::map<std::string, Term> definitions_;
  std::map<std::string, AxiomInfo> axioms_;
  std::map<std::string, Thm> theorems_;
  std::vector<DatatypeBundle> datatypes_;
  std::vector<TypedefBundle> typedefs_;
  std::vector<EnvEvent> history_;
};

}  // namespace holc

#endif  // HOLC_ENV_H_
