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

#include "holc/env.h"

#include "holc/error.h"

namespace holc {

TheoryEnv::TheoryEnv(std::shared_ptr<const TaintLattice> lattice)
    : lattice_(std::move(lattice)) {
  formers_.emplace(kPropName, Kind{0});
  formers_.emplace(kFunName, Kind{2});

  const Type prop = prop_type();
  const Type a = Type::var("a");
  const Type binop = fun_type({prop, prop}, prop);
  constants_.emplace(names::kTrue, prop);
  constants_.emplace(names::kFalse, prop);
  constants_.emplace(names::kAnd, binop);
  constants_.emplace(names::kOr, binop);
  constants_.emplace(names::kImp, binop);
  constants_.emplace(names::kIff, binop);
  constants_.emplace(names::kNot, fun_type(prop, prop));
  constants_.emplace(names::kEq, fun_type({a, a}, prop));
  constants_.emplace(names::kForall, fun_type(fun_type(a, prop), prop));
  constants_.emplace(names::kExists, fun_type(fun_type(a, prop), prop));
}

std::optional<Kind> TheoryEnv::former_kind(const std::string& name) const {
  auto it = formers_.find(name);
  if (it == formers_.end()) return std::nullopt;
  return it->second;
}

const TypeSynonym* TheoryEnv::synonym(const std::string& name) const {
  auto it = synonyms_.find(name);
  return it == synonyms_.end() ? nullptr : &it->second;
}

std::optional<Type> TheoryEnv::constant_type(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

const Term* TheoryEnv::definition(const std::string& name) const {
  auto it = definitions_.find(name);
  return it == definitions_.end() ? nullptr : &it->second;
}

const AxiomInfo* TheoryEnv::axiom(const std::string& name) const {
  auto it = axioms_.find(name);
  return it == axioms_.end() ? nullptr : &it->second;
}

const Thm* TheoryEnv::theorem(const std::string& name) const {
  auto it = theorems_.find(name);
  return it == theorems_.end() ? nullptr : &it->second;
}

std::vector<EnvEvent> TheoryEnv::axiom_log() const {
  std::vector<EnvEvent> out;
  for (const auto& e : history_)
    if (e.kind == EnvEvent::Kind::Axiom) out.push_back(e);
  return out;
}

bool TheoryEnv::fact_exists(const std::string& name) const {
  return definitions_.count(name) || axioms_.count(name) || theorems_.count(name);
}

void TheoryEnv::add_former(const std::string& name, Kind kind) {
  if (formers_.count(name) || synonyms_.count(name))
    fail(ErrorKind::DuplicateName, "type former `" + name + "` already exists");
  formers_.emplace(name, kind);
  EnvEvent e;
  e.kind = EnvEvent::Kind::Former;
  e.name = name;
  e.arity = kind;
  history_.push_back(std::move(e));
}

void TheoryEnv::add_synonym(const std::string& name,
                            std::vector<std::string> params, Type body) {
  if (formers_.count(name) || synonyms_.count(name))
    fail(ErrorKind::DuplicateName, "type former `" + name + "` already exists");
  synonyms_.emplace(name, TypeSynonym{params, body});
  EnvEvent e;
  e.kind = EnvEvent::Kind::Synonym;
  e.name = name;
  e.type = body;
  e.params = std::move(params);
  history_.push_back(std::move(e));
}

void TheoryEnv::add_constant(const std::string& name, Type generic) {
  if (constants_.count(name))
    fail(ErrorKind::DuplicateName, "constant `" + name + "` already exists");
  constants_.emplace(name, generic);
  EnvEvent e;
  e.kind = EnvEvent::Kind::Constant;
  e.name = name;
  e.type = std::move(generic);
  history_.push_back(std::move(e));
}

void TheoryEnv::add_definition(const std::string& name, Term equation) {
  if (fact_exists(name))
    fail(ErrorKind::DuplicateName, "`" + name + "` already names a fact");
  definitions_.emplace(name, equation);
  EnvEvent e;
  e.kind = EnvEvent::Kind::Definition;
  e.name = name;
  e.term = std::move(equation);
  history_.push_back(std::move(e));
}

void TheoryEnv::add_axiom(const std::string& name, Term formula, Label label,
                          std::string origin) {
  if (fact_exists(name))
    fail(ErrorKind::DuplicateName, "`" + name + "` already names a fact");
  if (!lattice_->contains(label))
    fail(ErrorKind::UnknownLabel, "axiom `" + name + "` has a foreign label");
  axioms_.emplace(name, AxiomInfo{formula, label, origin});
  EnvEvent e;
  e.kind = EnvEvent::Kind::Axiom;
  e.name = name;
  e.term = std::move(formula);
  e.label = label;
  e.origin = std::move(origin);
  history_.push_back(std::move(e));
}

void TheoryEnv::add_theorem(const std::string& name, Thm thm) {
  if (fact_exists(name))
    fail(ErrorKind::DuplicateName, "`" + name + "` already names a fact");
  EnvEvent e;
  e.kind = EnvEvent::Kind::Theorem;
  e.name = name;
  e.term = thm.formula();
  e.label = thm.label();
  theorems_.emplace(name, std::move(thm));
  history_.push_back(std::move(e));
}

}  // namespace holc
