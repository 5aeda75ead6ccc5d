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

#include "holc/print.h"

#include <map>
#include <set>
#include <vector>

#include "holc/logic.h"
#include "holc/parse.h"

namespace holc {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return !is_reserved(s);
}

// Level 0: anywhere. 1: left of an arrow. 2: former argument.
std::string type_str(const Type& ty, int level) {
  if (ty.is_var()) return "'" + ty.name();
  if (is_fun_type(ty)) {
    std::string s = type_str(fun_dom(ty), 1) + " -> " + type_str(fun_cod(ty), 0);
    return level > 0 ? "(" + s + ")" : s;
  }
  if (auto f = dest_former_app(ty)) {
    if (f->second.empty()) return f->first;
    std::string s = f->first;
    for (const auto& a : f->second) s += " " + type_str(a, 2);
    return level > 1 ? "(" + s + ")" : s;
  }
  std::string s = type_str(ty.head(), 0) + " " + type_str(ty.arg(), 2);
  return "(" + s + ")";
}

enum Prec { kBinder = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kEq = 5, kNot = 7, kApp = 8, kAtom = 9 };

struct Infix {
  const char* name;
  const char* text;
  int prec;
};

constexpr Infix kInfix[] = {
    {names::kIff, "<->", kIff}, {names::kImp, "-->", kImp}, {names::kOr, "\\/", kOr},
    {names::kAnd, "/\\", kAnd}, {names::kEq, "=", kEq},
};

class Printer {
 public:
  Printer(const TheoryEnv& env, const Term& t, const FreeScope& known) : env_(env) {
    for (const auto& v : t.free_vars()) free_types_[v.name].insert(v.type);
    for (const auto& [name, types] : known) {
      free_types_[name].insert(types.begin(), types.end());
      if (types.size() == 1) printed_.insert(name);
    }
  }

  std::string term(const Term& t, int prec, bool tail) {
    // Quantifier binders.
    if (t.is_app() && t.fun().is_const() && t.arg().is_lam() &&
        (t.fun().name() == names::kForall || t.fun().name() == names::kExists))
      return binder(t.fun().name(), t.arg(), prec, tail);
    if (t.is_lam()) return binder("\\", t, prec, tail);

    if (t.is_app() && t.fun().is_const() && t.fun().name() == names::kNot) {
      std::string s = "~" + term(t.arg(), kNot, tail);
      return prec > kNot ? "(" + s + ")" : s;
    }
    if (t.is_app() && t.fun().is_app() && t.fun().fun().is_const()) {
      const std::string& n = t.fun().fun().name();
      for (const auto& op : kInfix) {
        if (n != op.name) continue;
        bool right_assoc = op.prec != kEq;
        int lp = op.prec + 1;
        int rp = right_assoc ? op.prec : op.prec + 1;
        bool paren = prec > op.prec;
        bool inner_tail = paren || tail;
        std::string s = term(t.fun().arg(), lp, false);
        s += std::string(" ") + op.text + " ";
        s += term(t.arg(), rp, inner_tail);
        return paren ? "(" + s + ")" : s;
      }
    }
    if (t.is_app()) {
      auto [head, args] = strip_app(t);
      std::string s = head.is_const() ? constant(head, args.size()) : term(head, kAtom, false);
      for (const auto& a : args) s += " " + term(a, kAtom, false);
      return prec > kApp ? "(" + s + ")" : s;
    }
    if (t.is_const()) return constant(t, 0);
    return variable(t);
  }

 private:
  std::string binder(const std::string& kw, const Term& lam, int prec, bool tail) {
    VarRef x = lam.var_ref();
    Term body = lam.body();
    if (needs_rename(x.name, body)) {
      std::set<VarRef> avoid = body.free_vars();
      std::set<std::string> taken;
      collect_names(body, taken);
      for (const auto& b : bound_) taken.insert(b.name);
      std::string base = is_ident(x.name) ? x.name : "x";
      std::string name = base;
      for (int n = 0; taken.count(name) || !is_ident(name) ||
                      avoid.count(VarRef{name, x.type}) || env_.constant_type(name);
           ++n)
        name = base + std::to_string(n);
      VarRef fresh{name, x.type};
      body = term_subst(body, x, Term::var(fresh));
      x = fresh;
    }
    bound_.push_back(x);
    std::string s = (kw == "\\" ? std::string("\\") : kw + " ") + x.name + ":" +
                    type_str(x.type, 0) + ". " + term(body, kBinder, true);
    bound_.pop_back();
    bool paren = !tail || prec > kBinder;
    return paren ? "(" + s + ")" : s;
  }

  bool needs_rename(const std::string& name, const Term& body) const {
    if (!is_ident(name)) return true;
    return mentions_const(body, name);
  }

  static bool mentions_const(const Term& t, const std::string& name) {
    switch (t.tag()) {
      case Term::Tag::Const:
        return t.name() == name;
      case Term::Tag::Var:
        return false;
      case Term::Tag::App:
        return mentions_const(t.fun(), name) || mentions_const(t.arg(), name);
      case Term::Tag::Lam:
        return mentions_const(t.body(), name);
    }
    return false;
  }

  static void collect_names(const Term& t, std::set<std::string>& out) {
    switch (t.tag()) {
      case Term::Tag::Const:
      case Term::Tag::Var:
        out.insert(t.name());
        return;
      case Term::Tag::App:
        collect_names(t.fun(), out);
        collect_names(t.arg(), out);
        return;
      case Term::Tag::Lam:
        out.insert(t.name());
        collect_names(t.body(), out);
        return;
    }
  }

  std::string constant(const Term& c, std::size_t nargs) {
    const std::string& n = c.name();
    std::string text = is_ident(n) ? n : "$" + n;
    auto generic = env_.constant_type(n);
    bool annotate = false;
    if (generic) {
      std::set<std::string> all = ftv(*generic), seen;
      Type ty = *generic;
      for (std::size_t i = 0; i < nargs && is_fun_type(ty); ++i) {
        for (const auto& a : ftv(fun_dom(ty))) seen.insert(a);
        ty = fun_cod(ty);
      }
      for (const auto& a : all)
        if (!seen.count(a)) annotate = true;
    }
    if (!annotate) return text;
    return "(" + text + " : " + type_str(c.annotation(), 0) + ")";
  }

  std::string variable(const Term& v) {
    const std::string& n = v.name();
    const VarRef ref = v.var_ref();
    bool shadowed = false;
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->name != n) continue;
      if (it->type == ref.type) {
        if (!shadowed) return n;
        return "(" + n + ":" + type_str(ref.type, 0) + ")";
      }
      shadowed = true;
    }
    bool annotate = shadowed || !printed_.count(n) || free_types_[n].size() > 1 ||
                    env_.constant_type(n).has_value();
    printed_.insert(n);
    if (!annotate) return n;
    return "(" + n + ":" + type_str(ref.type, 0) + ")";
  }

  const TheoryEnv& env_;
  std::vector<VarRef> bound_;
  std::map<std::string, std::set<Type>> free_types_;
  std::set<std::string> printed_;
};

}  // namespace

std::string print_type(const Type& ty) { return type_str(ty, 0); }

std::string print_term(const TheoryEnv& env, const Term& t) {
  return Printer(env, t, {}).term(t, kBinder, true);
}

std::string print_term(const TheoryEnv& env, const Term& t, const FreeScope& known) {
  return Printer(env, t, known).term(t, kBinder, true);
}

}  // namespace holc
