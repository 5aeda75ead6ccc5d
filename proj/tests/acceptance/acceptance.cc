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


// One line per acceptance criterion. Usage: holc_acceptance THEORIES_DIR [HOLC_BINARY]

#include <chrono>
#include <filesystem>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "holc/derived.h"
#include "holc/error.h"
#include "holc/kernel.h"
#include "holc/lattice.h"
#include "holc/logic.h"
#include "holc/parse.h"
#include "holc/script.h"
#include "holc/theory.h"
#include "support/frontend_props.h"
#include "support/gen.h"
#include "support/label_oracle.h"
#include "support/properties.h"
#include "support/proof_gen.h"
#include "support/wellformed.h"

using namespace holc;
using namespace holc::testing;

namespace {

std::string g_dir;
std::string g_holc;

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Label lab(const TheoryEnv& env, const char* n) { return env.lattice().label(n); }

ScriptSession checked(const std::string& file) {
  ScriptSession s;
  s.run_file(g_dir + "/" + file);
  return s;
}

template <typename F>
std::optional<Error> error_from(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Runs `file` up to the command `name`, then that command alone at `label`.
std::optional<Error> relabelled(const std::string& file, const std::string& name,
                                const std::string& label) {
  auto cmds = parse_script(read_file(g_dir + "/" + file), file);
  ScriptSession s;
  ScriptOptions opts;
  opts.base_dir = g_dir;
  for (auto c : cmds) {
    if (c.name == name) {
      c.label = label;
      return error_from([&] { run_script(s.env(), {c}, opts); });
    }
    s.run({c}, opts);
  }
  throw Failure{"no command " + name + " in " + file};
}

std::string peirce_criterion() {
  ScriptSession s = checked("peirce.thy");
  const TheoryEnv& env = s.env();
  const Thm* th = env.theorem("peirce");
  expect(th, "peirce missing");
  expect(alpha_eq(th->formula(), parse_formula(TheoryEnv(), "((p --> q) --> p) --> p")),
         "wrong statement");
  expect(th->context().empty(), "nonempty context");
  expect(th->label() == lab(env, "C"), "label is not C");
  expect(replay(env, th->proof()).same_judgement(*th), "replay disagrees");
  int lifts = 0, lems = 0;
  std::function<void(const ProofNode&)> walk = [&](const ProofNode& n) {
    lifts += n.rule == Rule::Nlift;
    lems += n.rule == Rule::Nlem;
    for (const auto& p : n.premises) walk(*p);
  };
  walk(*th->proof());
  expect(lems >= 1 && lifts >= 1, "proof lacks the classical step or the lifts");

  auto e = error_from([] { checked("peirce_I.thy"); });
  expect(e.has_value(), "peirce_I.thy checked");
  expect(e->kind() == ErrorKind::TacticFails && starts_with(e->detail(), "raa: NotAbove"),
         std::string("unexpected error: ") + e->what());
  expect(e->span() && e->span()->start_line == 5, "error not at the raa step");
  return "C; at I: " + e->detail();
}

std::string lattice_criterion() {
  auto lat = TaintLattice::load(read_file(g_dir + "/chain4.lat"));
  auto closure = four_chain_closure();
  auto ms = lat.members();
  expect(ms.size() == 4, "chain4.lat does not have four labels");
  int pairs = 0, triples = 0;
  for (Label a : ms)
    for (Label b : ms) {
      expect(lat.leq(a, b) == closure.leq(lat.name(a), lat.name(b)),
             "leq disagrees on " + lat.name(a) + "," + lat.name(b));
      expect(lat.equiv(a, b) == closure.equiv(lat.name(a), lat.name(b)), "equiv disagrees");
      ++pairs;
    }
  for (Label a : ms)
    for (Label b : ms)
      for (Label c : ms) {
        Label ab = lat.join(a, b);
        expect(lat.join(ab, c) == lat.join(a, lat.join(b, c)), "associativity");
        expect(ab == lat.join(b, a), "commutativity");
        expect(lat.join(a, a) == a, "idempotence");
        expect(lat.join(lat.bottom(), a) == a, "bottom");
        expect(lat.leq(a, ab) && lat.leq(b, ab), "join is not an upper bound");
        if (lat.leq(a, c) && lat.leq(b, c)) expect(lat.leq(ab, c), "join is not least");
        expect(lat.leq(a, a), "reflexivity");
        if (lat.leq(a, b) && lat.leq(b, c)) expect(lat.leq(a, c), "transitivity");
        if (lat.leq(a, b) && lat.leq(b, a)) expect(a == b, "antisymmetry");
        expect(lat.leq(a, b) == (ab == b), "order is not join-induced");
        ++triples;
      }
  return std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples";
}

constexpr int kMetaInstances = 10000;

std::string metatheory_criterion() {
  TheoryEnv env = gen_env();
  auto props = metatheory_properties();
  for (const auto& [name, prop] : props) {
    Gen g(9001);
    for (int i = 0; i < kMetaInstances; ++i) {
      std::string r;
      try {
        r = prop(g, env);
      } catch (const std::exception& e) {
        r = std::string("exception: ") + e.what();
      }
      expect(r.empty(), name + " instance " + std::to_string(i) + ": " + r);
    }
  }
  return std::to_string(props.size()) + " properties x " + std::to_string(kMetaInstances);
}

std::string wellformed_criterion() {
  std::size_t total = 0;
  std::vector<std::string> failures;
  {
    ThmCollector collector;
    for (const char* f : {"stdlib.thy", "peirce.thy", "examples.thy"}) {
      ScriptSession s = checked(f);
      auto fs = collector.check(s.env());
      failures.insert(failures.end(), fs.begin(), fs.end());
    }
    for (const char* f : {"peirce_I.thy", "broken.thy"}) {
      ScriptSession s;
      try {
        s.run_file(g_dir + "/" + f);
      } catch (const Error&) {
      }
      auto fs = collector.check(s.env());
      failures.insert(failures.end(), fs.begin(), fs.end());
    }
    total = collector.checked();
  }
  expect(total > 0, "no theorems collected");
  expect(failures.empty(), std::to_string(failures.size()) + " ill-formed, first: " +
                               (failures.empty() ? "" : failures[0]));
  return std::to_string(total) + "/" + std::to_string(total) + " well formed";
}

constexpr unsigned kProofTrees = 1000;

std::string taint_criterion() {
  TheoryEnv env = proof_gen_env();
  std::size_t nodes = 0;
  for (unsigned seed = 0; seed < kProofTrees; ++seed) {
    ProofGen gen(env, 100000 + seed);
    Thm th = gen.proof(5);
    std::string at = "seed " + std::to_string(seed) + ": ";
    expect(th.label() == fold_labels(env, *th.proof(), true), at + "root label is not the fold");
    Thm hoisted = hoist_lifts(env, th);
    expect(hoisted.same_judgement(th), at + "hoisting changed the judgement");
    expect(replay(env, hoisted.proof()).same_judgement(th), at + "hoisted proof replays differently");
    const ProofNode& root = *hoisted.proof();
    const ProofNode& body = root.rule == Rule::Nlift ? *root.premises[0] : root;
    expect(fold_labels(env, body, true) == fold_labels(env, *th.proof(), false),
           at + "hoisted body label is not the axiom join");
    std::function<void(const ProofNode&)> count = [&](const ProofNode& n) {
      ++nodes;
      for (const auto& p : n.premises) count(*p);
    };
    count(*th.proof());
  }
  return std::to_string(kProofTrees) + " trees, " + std::to_string(nodes) + " nodes";
}

std::string stdlib_criterion() {
  ScriptSession s = checked("stdlib.thy");
  const TheoryEnv& env = s.env();
  struct Want {
    const char* name;
    const char* label;
    const char* formula;
  };
  const Want wants[] = {
      {"union_comm", "I", "forall S:Set 'a, T:Set 'a. union S T = union T S"},
      {"cmpl_empty", "I", "cmpl (empty : Set 'a) = UNIV"},
      {"cmpl_cmpl", "C", "comp cmpl cmpl = (id : Set 'a -> Set 'a)"},
      {"lift_true", "I", "lift true = True"},
      {"lift_false", "I", "lift false = False"},
      {"drop_exists", "Ch", "exists f:Prop -> Bool. forall p:Prop. lift (f p) = p"},
  };
  for (const auto& w : wants) {
    const Thm* th = env.theorem(w.name);
    expect(th, std::string(w.name) + " missing");
    expect(th->label() == lab(env, w.label), std::string(w.name) + " not at " + w.label);
    expect(th->context().empty(), std::string(w.name) + " has hypotheses");
    expect(alpha_eq(th->formula(), normalize_iff(parse_formula(env, w.formula))),
           std::string(w.name) + " states something else");
    expect(replay(env, th->proof()).same_judgement(*th), std::string(w.name) + " replay");
  }
  auto cc = relabelled("stdlib.thy", "cmpl_cmpl", "I");
  expect(cc && starts_with(cc->detail(), "raa: NotAbove"), "cmpl_cmpl at I did not fail at raa");
  auto dr = relabelled("stdlib.thy", "drop_exists", "C");
  expect(dr && starts_with(dr->detail(), "choice: NotAbove"),
         "drop_exists at C did not fail at choice");
  return "6 theorems; cmpl_cmpl@I: " + cc->detail() + "; drop_exists@C: " + dr->detail();
}

std::string typedef_criterion() {
  ScriptSession s = checked("examples.thy");
  const TheoryEnv& env = s.env();
  std::string out;
  for (auto [name, label] : {std::pair{"Fset", "I"}, std::pair{"FsetC", "C"}}) {
    const TypedefBundle* td = nullptr;
    for (const auto& t : env.typedefs())
      if (t.former == name) td = &t;
    expect(td, std::string(name) + " missing");
    expect(td->label == lab(env, label), std::string(name) + " not at " + label);
    expect(td->laws.size() == 2, std::string(name) + " does not have two laws");
    for (const auto& law : td->laws)
      expect(env.axiom(law)->label == lab(env, label), law + " not at " + label);
    if (!out.empty()) out += ", ";
    out += std::string(name) + " laws @ " + label;
  }
  return out;
}

std::string unwind_criterion() {
  ScriptSession s = checked("peirce.thy");
  const TheoryEnv& env = s.env();
  Thm un = unwind_classical(env, *env.theorem("peirce"));
  expect(un.label() == lab(env, "I"), "unwound label is not I");
  expect(un.context().empty(), "unwound context is not empty");
  expect(alpha_eq(un.formula(), parse_formula(env, "(forall r:Prop. r \\/ ~r) --> "
                                                   "((p --> q) --> p) --> p")),
         "unwound statement is wrong");
  expect(replay(env, un.proof()).same_judgement(un), "unwound proof does not re-check");
  const Thm* stored = env.theorem("peirce_unwound");
  expect(stored && stored->same_judgement(un), "script unwind disagrees");

  ScriptSession lib = checked("stdlib.thy");
  auto e = error_from([&] { unwind_classical(lib.env(), *lib.env().theorem("drop_exists")); });
  expect(e && e->kind() == ErrorKind::PolymorphicAxiomInProof,
         "unwinding drop_exists did not fail with PolymorphicAxiomInProof");
  return "peirce -> I re-checks; drop_exists: PolymorphicAxiomInProof";
}

constexpr int kFuzz = 100000;
constexpr int kRoundTrip = 10000;

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw Failure{"cannot run " + cmd};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  status = pclose(p);
  return out;
}

std::string frontend_criterion() {
  TheoryEnv env = gen_env();
  Gen fz(4242);
  for (int i = 0; i < kFuzz; ++i) {
    std::string err = fuzz_once(fz, env);
    expect(err.empty(), "fuzz input " + std::to_string(i) + ": " + err);
  }
  Gen rt(4343);
  for (int i = 0; i < kRoundTrip; ++i) {
    std::string err = roundtrip_once(rt, env);
    expect(err.empty(), "round trip " + std::to_string(i) + ": " + err);
  }
  const std::vector<std::string> corpus = {"stdlib.thy", "peirce.thy", "examples.thy"};
  for (const auto& f : corpus)
    expect(checked(f).report_text() == checked(f).report_text(), f + " reports differ");
  std::string cli = "in-process";
  if (!g_holc.empty()) {
    std::string cmd = "cd '" + g_dir + "' && '" + g_holc + "' check";
    for (const auto& f : corpus) cmd += " " + f;
    cmd += " 2>&1";
    int s1 = 0, s2 = 0;
    std::string o1 = run_capture(cmd, s1), o2 = run_capture(cmd, s2);
    expect(s1 == 0 && s2 == 0, "holc check exited nonzero:\n" + o1);
    expect(o1 == o2, "holc check output differs between runs");
    cli = "holc check exit 0 twice, identical output";
  }
  return std::to_string(kFuzz) + " fuzz, " + std::to_string(kRoundTrip) + " round trips, " + cli;
}

struct Criterion {
  const char* name;
  double limit_s;  // 0: no time limit
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: holc_acceptance THEORIES_DIR [HOLC_BINARY]\n";
    return 2;
  }
  g_dir = argv[1];
  if (argc > 2) g_holc = std::filesystem::absolute(argv[2]).string();

  const std::vector<Criterion> criteria = {
      {"peirce", 1.0, peirce_criterion},
      {"lattice-order", 1.0, lattice_criterion},
      {"metatheory", 60.0, metatheory_criterion},
      {"thm-wellformed", 0, wellformed_criterion},
      {"taint-propagation", 0, taint_criterion},
      {"stdlib", 0, stdlib_criterion},
      {"typedef-labels", 0, typedef_criterion},
      {"unwinding", 0, unwind_criterion},
      {"frontend", 0, frontend_criterion},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_s > 0 && secs >= c.limit_s) {
      ok = false;
      std::ostringstream m;
      m << "over the " << c.limit_s << " s limit; " << detail;
      detail = m.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << " [" << timing << "] " << detail << "\n"
              << std::flush;
    failed += !ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
