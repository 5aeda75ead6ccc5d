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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "holc/derived.h"
#include "holc/error.h"
#include "holc/kernel.h"
#include "holc/logic.h"
#include "holc/parse.h"
#include "holc/print.h"
#include "holc/tactic.h"
#include "holc/theory.h"
#include "support/wellformed.h"

using namespace holc;

namespace {

std::shared_ptr<const TheoryEnv> base_env() {
  auto env = std::make_shared<TheoryEnv>();
  env->add_former("Nat", Kind{0});
  env->add_constant("zero", former_app("Nat", {}));
  env->add_constant("R", fun_type({former_app("Nat", {}), former_app("Nat", {})}, prop_type()));
  return env;
}

Goal goal(const TheoryEnv& env, const char* text, const char* label,
          std::vector<const char*> hyps = {}) {
  std::vector<Term> ctx;
  for (auto h : hyps) ctx.push_back(parse_formula(env, h));
  return {make_context(ctx), parse_formula(env, text), env.lattice().label(label)};
}

struct Failure {
  ErrorKind kind;
  std::string message;
};

template <typename F>
std::optional<Failure> failure(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return Failure{e.kind(), e.what()};
  }
  return std::nullopt;
}

const char* kPeirce =
    "intro; raa; lift_to I; contra `p`; mp `p --> q`; assumption; intro; false_e; "
    "contra `p`; assumption; assumption; assumption";

}  // namespace

TEST_CASE("tactics: backward rules keep the goal label") {
  auto env = base_env();
  ProofState st(env, goal(*env, "(p:Prop) /\\ (q:Prop)", "W"));
  st.apply("conj_i");
  auto gs = st.render();
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].formula == "p");
  CHECK(gs[1].formula == "q");
  CHECK(gs[0].label == "W");
  CHECK(gs[1].label == "W");

  ProofState r(env, goal(*env, "(p:Prop)", "C"));
  r.apply("raa");
  auto rg = r.render();
  REQUIRE(rg.size() == 1);
  CHECK(rg[0].formula == "False");
  CHECK(rg[0].context == std::vector<std::string>{"~p"});
  CHECK(rg[0].label == "C");
}

TEST_CASE("tactics: repeat expands nested conjunctions") {
  auto env = base_env();
  Goal g = goal(*env, "((a:Prop) /\\ (b:Prop)) /\\ ((c:Prop) /\\ (d:Prop))", "I");
  ProofState st(env, g);
  st.apply("repeat conj_i");
  std::vector<std::string> got;
  for (const auto& x : st.render()) got.push_back(x.formula);
  // The manual expansion: split the outer conjunction, then each half.
  ProofState manual(env, g);
  manual.apply("conj_i; conj_i");
  auto mid = manual.render();
  REQUIRE(mid.size() == 3);
  CHECK(mid[2].formula == "c /\\ d");
  manual.apply("all (conj_i | id)");
  std::vector<std::string> want;
  for (const auto& x : manual.render()) want.push_back(x.formula);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(got == std::vector<std::string>{"a", "b", "c", "d"});
  for (const auto& x : st.render()) CHECK(x.label == "I");
}

TEST_CASE("tactics: lift_to") {
  auto env = base_env();
  ProofState st(env, goal(*env, "(p:Prop) --> p", "C"));
  st.apply("lift_to I");
  CHECK(st.render()[0].label == "I");
  st.apply("lift_to I");
  CHECK(st.undo_depth() == 2);
  auto f = failure([&] { st.apply("lift_to C"); });
  REQUIRE(f);
  CHECK(f->kind == ErrorKind::NotBelow);
  st.apply("intro; assumption");
  Thm th = st.qed();
  CHECK(th.label() == env->lattice().label("C"));
  CHECK(th.proof()->rule == Rule::Nlift);
}

TEST_CASE("tactics: qed") {
  auto env = base_env();
  ProofState st(env, goal(*env, "True", "I"));
  auto open = failure([&] { st.qed(); });
  REQUIRE(open);
  CHECK(open->kind == ErrorKind::OpenGoals);
  st.apply("trivial");
  Thm th = st.qed();
  CHECK(th.context().empty());
  CHECK(is_true(th.formula()));
  CHECK(th.label() == env->lattice().bottom());
  auto none = failure([&] { st.apply("trivial"); });
  REQUIRE(none);
  CHECK(none->kind == ErrorKind::NoGoals);
}

TEST_CASE("tactics: Peirce") {
  auto env = base_env();
  Goal g = goal(*env, "(((p:Prop) --> (q:Prop)) --> p) --> p", "C");
  ProofState st(env, g);
  st.apply(kPeirce);
  Thm th = st.qed();
  CHECK(th.label() == env->lattice().label("C"));
  CHECK(print_term(*env, th.formula()) == "(((p:Prop) --> (q:Prop)) --> p) --> p");
  CHECK(replay(*env, th.proof()).same_judgement(th));

  Goal gi = g;
  gi.label = env->lattice().label("I");
  ProofState si(env, gi);
  si.apply("intro");
  auto f = failure([&] { si.apply("raa"); });
  REQUIRE(f);
  CHECK(f->kind == ErrorKind::TacticFails);
  CHECK(f->message.find("raa: NotAbove") != std::string::npos);
  CHECK(si.render().size() == 1);
}

TEST_CASE("tactics: quantifiers, lemmas and conversions") {
  auto env = std::make_shared<TheoryEnv>(*base_env());
  define_constant(*env, "id", parse_term(*env, "\\x:'a. x"));
  env->add_axiom("R_refl", parse_formula(*env, "forall n:Nat. R n n"), env->lattice().bottom(), "axiom");
  env->add_axiom("R_sym", parse_formula(*env, "forall m:Nat, n:Nat. R m n --> R n m"),
                 env->lattice().bottom(), "axiom");
  env->add_axiom("R_c", parse_formula(*env, "R zero zero"), env->lattice().label("C"), "axiom");

  auto run = [&](const char* text, const char* label, const char* script,
                 std::vector<const char*> hyps = {}) {
    return prove(env, goal(*env, text, label, hyps), parse_tactic(script));
  };
  CHECK(run("forall x:Nat. R x x", "I", "all_i; exact R_refl").label() == env->lattice().bottom());
  CHECK_NOTHROW(run("(R (m:Nat) zero) --> R zero m", "I", "intro; apply R_sym; assumption"));
  CHECK_NOTHROW(run("exists y:Nat. R y y", "I", "exists `zero`; exact R_refl"));
  CHECK_NOTHROW(run("(exists y:Nat. R y zero) --> exists y:Nat. R zero y", "I",
                    "intro; ex_e `exists y:Nat. R y zero`; assumption; exists `y`; "
                    "apply R_sym; assumption"));
  CHECK_NOTHROW(run("R (n:Nat) n", "I", "all_e `forall n:Nat. R n n` `n`; exact R_refl"));
  CHECK_NOTHROW(run("(id (p:Prop)) --> p", "I", "unfold id; intro; assumption"));
  CHECK_NOTHROW(run("(q:Prop)", "I", "unfold id; assumption", {"id (q:Prop)"}));
  CHECK_NOTHROW(run("(id : Nat -> Nat) = (\\x:Nat. x)", "I", "exact id"));
  CHECK_NOTHROW(run("(f:Nat -> Nat) = (\\x:Nat. f x)", "I", "ext; beta; refl"));
  CHECK_NOTHROW(run("(p:Prop) /\\ (q:Prop) --> q /\\ p", "I",
                    "intro; split_hyps; conj_i; assumption; assumption"));
  CHECK_NOTHROW(run("(p:Prop) <-> p", "I", "iff_i; assumption; assumption"));
  CHECK_NOTHROW(run("(p:Prop) \\/ ~p", "C", "lem"));
  CHECK_NOTHROW(run("~(p:Prop) \\/ ~~p", "W", "wem"));
  CHECK_NOTHROW(run("R zero zero", "C", "exact R_c"));
  auto high = failure([&] { run("R zero zero", "W", "exact R_c"); });
  REQUIRE(high);
  CHECK(high->message.find("NotAbove") != std::string::npos);
  CHECK_NOTHROW(run("R zero zero", "I", "use R_refl; all_e `forall n:Nat. R n n` `zero`; assumption"));
  CHECK_NOTHROW(run("(p:Prop)", "C", "case_split `p`; assumption; raa; disj_e `p \\/ p`; assumption; "
                                     "contra `p`; assumption; assumption; contra `p`; assumption; "
                                     "assumption",
                    {"p \\/ p"}));

  const char* choice_goal =
      "(forall x:Nat. exists y:Nat. R x y) --> (exists f:Nat -> Nat. forall x:Nat. R x (f x))";
  CHECK(run(choice_goal, "Ch", "choice").label() == env->lattice().label("Ch"));
  auto low = failure([&] { run(choice_goal, "C", "choice"); });
  REQUIRE(low);
  CHECK(low->message.find("NotAbove") != std::string::npos);
}

TEST_CASE("tactics: failures leave the state unchanged") {
  auto env = base_env();
  ProofState st(env, goal(*env, "(p:Prop) --> (q:Prop) --> p", "I"));
  auto before = st.render();
  for (const char* bad : {"conj_i", "assumption", "exact nothing", "mp `zero`", "intro; conj_i",
                          "fail", "trivial | refl"}) {
    CAPTURE(bad);
    CHECK(failure([&] { st.apply(bad); }));
    CHECK(st.render() == before);
    CHECK(st.undo_depth() == 0);
  }
  auto syn = failure([&] { st.apply("frobnicate"); });
  REQUIRE(syn);
  CHECK(syn->kind == ErrorKind::SyntaxError);
}

TEST_CASE("tactics: parse and print") {
  for (const char* s : {"intro; raa; lift_to I", "repeat (conj_i | assumption)", "try intro; all assumption",
                        "apply `p --> q`; exact foo", "(intro; intro) | id", "all_e `forall x:'a. P x` `y`"}) {
    TacticExpr t = parse_tactic(s);
    CHECK(print_tactic(parse_tactic(print_tactic(t))) == print_tactic(t));
  }
  CHECK(print_tactic(parse_tactic("intro ; conj_i|trivial")) == "intro; conj_i | trivial");
}

namespace {

// Random propositional goals over atoms and random tactic scripts.
struct ScriptGen {
  std::mt19937 rng;
  explicit ScriptGen(unsigned seed) : rng(seed) {}
  std::size_t pick(std::size_t n) { return rng() % n; }

  std::string formula(int depth) {
    static const char* atoms[] = {"(a:Prop)", "(b:Prop)", "(c:Prop)", "True", "False"};
    if (depth == 0 || pick(4) == 0) return atoms[pick(5)];
    static const char* ops[] = {" /\\ ", " \\/ ", " --> ", " <-> "};
    if (pick(6) == 0) return "~(" + formula(depth - 1) + ")";
    return "(" + formula(depth - 1) + ops[pick(4)] + formula(depth - 1) + ")";
  }

  // Implications from a conjunction of formulas to a recombination of them.
  std::string provable() {
    std::vector<std::string> parts;
    std::size_t n = 1 + pick(3);
    for (std::size_t i = 0; i < n; ++i) parts.push_back(formula(1));
    std::string hyp = parts[0];
    for (std::size_t i = 1; i < n; ++i) hyp = "(" + hyp + " /\\ " + parts[i] + ")";
    std::string concl = parts[pick(n)];
    for (std::size_t i = 0, m = pick(3); i < m; ++i) {
      const std::string& other = parts[pick(n)];
      concl = pick(2) ? "(" + concl + " /\\ " + other + ")" : "(" + other + " \\/ " + concl + ")";
    }
    return "(" + hyp + " --> " + concl + ")";
  }

  std::string closer() {
    static const char* steps[] = {"intro", "split_hyps", "conj_i", "assumption", "trivial",
                                  "disj_i1", "disj_i2", "iff_i", "lem", "apply_assum"};
    std::string alt = steps[pick(4)];
    for (int i = 0; i < 5; ++i) alt += std::string(" | ") + steps[pick(10)];
    return "repeat (" + alt + ")";
  }

  std::string tactic(int depth) {
    static const char* leaves[] = {"intro", "conj_i", "iff_i", "assumption", "trivial", "disj_i1",
                                   "disj_i2", "split_hyps", "false_e", "apply_assum", "neg_i",
                                   "refl", "lem", "raa", "lift_to I", "lift_to C", "beta", "id"};
    if (depth == 0 || pick(3) == 0) {
      if (pick(8) == 0) return "contra `" + formula(1) + "`";
      if (pick(8) == 0) return "cut `" + formula(1) + "`";
      return leaves[pick(sizeof(leaves) / sizeof(*leaves))];
    }
    switch (pick(5)) {
      case 0: return "(" + tactic(depth - 1) + "; " + tactic(depth - 1) + ")";
      case 1: return "(" + tactic(depth - 1) + " | " + tactic(depth - 1) + ")";
      case 2: return "repeat " + tactic(depth - 1);
      case 3: return "try " + tactic(depth - 1);
      default: return "all " + tactic(depth - 1);
    }
  }
};

}  // namespace

TEST_CASE("tactics: random scripts are sound, undoable and obey tactical laws") {
  auto env = base_env();
  ScriptGen gen(2024);
  int closed = 0;
  holc::testing::ThmCollector collector;
  for (int iter = 0; iter < 250; ++iter) {
    bool easy = gen.pick(2);
    std::string f = easy ? gen.provable() : gen.formula(3);
    const char* label = gen.pick(2) ? "I" : "C";
    ProofState st(env, goal(*env, f.c_str(), label));
    for (int step = 0; step < 12 && !st.goals().empty(); ++step) {
      std::string t = easy && gen.pick(2) ? gen.closer() : gen.tactic(2);
      auto before = st.render();
      auto depth = st.undo_depth();
      auto err = failure([&] { st.apply(t); });
      if (err) {
        CHECK(st.render() == before);
        CHECK(st.undo_depth() == depth);
        continue;
      }
      auto after = st.render();
      REQUIRE(st.undo());
      CHECK(st.render() == before);
      st.apply(t);
      CHECK(st.render() == after);

      if (!st.goals().empty()) {
        ProofState copy = st;
        CHECK_NOTHROW(copy.apply("(" + t + ") | id"));
        ProofState a = st, b = st;
        std::string t1 = gen.tactic(1), t2 = gen.tactic(1), t3 = gen.tactic(1);
        auto ea = failure([&] { a.apply("((" + t1 + "); (" + t2 + ")); (" + t3 + ")"); });
        auto eb = failure([&] { b.apply("(" + t1 + "); ((" + t2 + "); (" + t3 + "))"); });
        CHECK(ea.has_value() == eb.has_value());
        if (!ea && !eb) CHECK(a.render() == b.render());
      }
    }
    if (st.goals().empty()) {
      ++closed;
      Thm th = st.qed();
      CHECK(replay(*env, th.proof()).same_judgement(th));
      CHECK(th.label() == env->lattice().label(label));
    }
  }
  CHECK(closed > 40);
  auto problems = collector.check(*env);
  CHECK(problems.empty());
  MESSAGE("closed " << closed << " of 250 random goals");
}
