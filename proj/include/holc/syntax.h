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

// The object language: kinds, (pre-)types and explicitly typed lambda terms.
//
// Types and terms are immutable values backed by shared nodes, so copying is
// cheap and values may be shared freely between threads. Term equality is
// alpha-equivalence. Variables are identified by their (name, type) pair:
// x:Prop and x:Bool are unrelated variables.

#ifndef HOLC_SYNTAX_H_
#define HOLC_SYNTAX_H_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace holc {

// Kinds are isomorphic to the naturals: arity n stands for
// * => * => ... => * with n arrows.
struct Kind {
  unsigned arity = 0;
  friend auto operator<=>(const Kind&, const Kind&) = default;
};

class Type {
 public:
  enum class Tag { Var, Former, App };

  static Type var(std::string name);
  static Type former(std::string name, Kind kind);
  static Type app(Type head, Type arg);

  Tag tag() const;
  bool is_var() const { return tag() == Tag::Var; }
  bool is_former() const { return tag() == Tag::Former; }
  bool is_app() const { return tag() == Tag::App; }

  // Var and Former only.
  const std::string& name() const;
  // Former only.
  Kind former_kind() const;
  // App only.
  const Type& head() const;
  const Type& arg() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Distinguished formers and the function type.
inline constexpr const char* kPropName = "Prop";
inline constexpr const char* kFunName = "fun";

Type prop_type();
Type fun_type(Type dom, Type cod);
// Curried function type from argument types to a result.
Type fun_type(const std::vector<Type>& args, Type result);
bool is_fun_type(const Type& ty);
// Precondition: is_fun_type(ty).
const Type& fun_dom(const Type& ty);
const Type& fun_cod(const Type& ty);
// Splits t1 -> t2 -> ... -> r into ({t1, t2, ...}, r).
std::pair<std::vector<Type>, Type> strip_fun_type(const Type& ty);
// Former applied to arguments, e.g. F a b = App(App(F, a), b).
Type former_app(const std::string& name, const std::vector<Type>& args);
// Inverse of former_app; nullopt for type variables or non-former heads.
std::optional<std::pair<std::string, std::vector<Type>>> dest_former_app(
    const Type& ty);

using TypeSubst = std::map<std::string, Type>;

std::set<std::string> ftv(const Type& ty);
Type type_subst(const Type& ty, const std::string& var, const Type& replacement);
Type type_subst(const Type& ty, const TypeSubst& subst);
// One-sided matching: extends `subst` so that type_subst(pattern, subst) ==
// target. Returns false (leaving `subst` in an unspecified state) on failure.
bool match_type(const Type& pattern, const Type& target, TypeSubst& subst);

struct VarRef {
  std::string name;
  Type type;
  friend bool operator==(const VarRef&, const VarRef&) = default;
  friend std::strong_ordering operator<=>(const VarRef& a, const VarRef& b);
};

class Term {
 public:
  enum class Tag { Var, Const, App, Lam };

  static Term var(std::string name, Type type);
  static Term var(const VarRef& v) { return var(v.name, v.type); }
  static Term constant(std::string name, Type type);
  static Term app(Term fun, Term arg);
  static Term app(Term fun, const std::vector<Term>& args);
  static Term lam(std::string name, Type type, Term body);
  static Term lam(const VarRef& v, Term body) {
    return lam(v.name, v.type, std::move(body));
  }

  Tag tag() const;
  bool is_var() const { return tag() == Tag::Var; }
  bool is_const() const { return tag() == Tag::Const; }
  bool is_app() const { return tag() == Tag::App; }
  bool is_lam() const { return tag() == Tag::Lam; }

  // Var, Const and Lam (the bound variable's name).
  const std::string& name() const;
  // Var and Const: the annotation. Lam: the bound variable's type.
  const Type& annotation() const;
  // Var, and Lam's bound variable.
  VarRef var_ref() const { return {name(), annotation()}; }
  // App only.
  const Term& fun() const;
  const Term& arg() const;
  // Lam only.
  const Term& body() const;

  // The type computed structurally at construction, ignoring constant
  // registration; nullopt for an ill-typed application.
  const std::optional<Type>& structural_type() const;

  // Free variables, computed once at construction.
  const std::set<VarRef>& free_vars() const;

  // Node identity, used for cheap equality short-cuts.
  const void* id() const { return node_.get(); }

  // Alpha-equivalence.
  friend bool operator==(const Term& a, const Term& b);
  // A total order on alpha-classes.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> ftv(const Term& t);
std::set<VarRef> fv(const Term& t);
bool free_in(const VarRef& v, const Term& t);
bool alpha_eq(const Term& a, const Term& b);
int alpha_compare(const Term& a, const Term& b);
// Purely syntactic equality including bound names.
bool identical(const Term& a, const Term& b);

// Type substitution action on terms: rewrites variable, constant and binder
// annotations. Bound variables are renamed where the instantiation would
// otherwise identify them with a free variable of the body.
Term term_type_subst(const Term& t, const std::string& var, const Type& ty);
Term term_type_subst(const Term& t, const TypeSubst& subst);

// Capture-avoiding substitution of `replacement` for the free variable `var`.
// Throws TypeMismatch unless the replacement's type is var.type.
Term term_subst(const Term& t, const VarRef& var, const Term& replacement);

// Smallest numeric suffix variant of `base` that is not in `avoid`.
std::string variant_name(const std::string& base,
                         const std::set<std::string>& avoid);
// Variable name variant avoiding every variable of the given type in `avoid`.
std::string variant_name(const std::string& base, const Type& type,
                         const std::set<VarRef>& avoid);

// Strips a spine of applications: f a b c -> (f, {a, b, c}).
std::pair<Term, std::vector<Term>> strip_app(const Term& t);

}  // namespace holc

#endif  // HOLC_SYNTAX_H_
