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

#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "holc/derived.h"
#include "holc/error.h"
#include "holc/kernel.h"
#include "holc/proof_io.h"
#include "holc/script.h"
#include "holc/session.h"
#include "holc/theory.h"
#include "support/wellformed.h"

using namespace holc;
namespace fs = std::filesystem;

namespace {

const std::string kTheories = std::string(HOLC_SOURCE_DIR) + "/theories/";

template <typename F>
Error error_from(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorKind::IoError, "no error");
}

ScriptSession checked(const std::string& file) {
  ScriptSession s;
  s.run_file(kTheories + file);
  return s;
}

// The environment just before the command named `name`, and that command.
std::pair<TheoryEnv, ScriptCommand> before(const std::string& file, const std::string& name) {
  auto cmds = parse_script(read_file(kTheories + file), file);
  ScriptSession s;
  ScriptOptions opts;
  opts.base_dir = kTheories;
  for (const auto& c : cmds) {
    if (c.name == name) return {s.env(), c};
    s.run({c}, opts);
  }
  FAIL("no command " << name);
  return {s.env(), cmds[0]};
}

Label lab(const TheoryEnv& env, const char* n) { return env.lattice().label(n); }

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / ("holc_script_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("script parsing") {
  auto cmds = parse_script(
      "-- comment\n"
      "type R\n"
      "const c : R -> R\n"
      "axiom ax @ W : forall x:R, y:R. c x = y\n"
      "def k : R -> R = \\x. x\n"
      "datatype L 'a = nil | cons 'a (L 'a) rec L_fold\n"
      "theorem t @ C : p, forall x, y. x = y |- p proof assumption qed\n"
      "unwind t as u\n",
      "f.thy");
  REQUIRE(cmds.size() == 7);
  CHECK(cmds[1].kind == ScriptCommand::Kind::Const);
  CHECK(cmds[2].label == std::optional<std::string>("W"));
  CHECK(cmds[3].annotation.size() == 4);
  CHECK(cmds[4].ctors.size() == 2);
  CHECK(cmds[4].ctors[1].args.size() == 2);
  CHECK(cmds[4].recursor == "L_fold");
  CHECK(cmds[5].hyps.size() == 2);
  CHECK(cmds[5].span.start_line == 7);
  CHECK(cmds[6].source == "t");
  CHECK(parse_script("").empty());

  for (const char* bad : {"theorem t @ I : p proof assumption", "theorem t : p proof assumption qed",
                          "typedef F = P", "axiom a : (p", "junk", "datatype D =",
                          "theorem t @ I : p proof qed", "import stdlib.thy"}) {
    Error e = error_from([&] { parse_script(bad, "b.thy"); });
    CHECK_MESSAGE(e.kind() == ErrorKind::SyntaxError, std::string(bad));
    CHECK(e.span().has_value());
  }
}

TEST_CASE("empty script leaves the environment unchanged") {
  TheoryEnv env;
  ScriptResult r = run_script(env, parse_script("-- nothing\n"));
  CHECK(r.report.empty());
  CHECK(r.env.history().size() == env.history().size());
}

TEST_CASE("shipped corpus checks with the stated labels") {
  ScriptSession std_ = checked("stdlib.thy");
  const TheoryEnv& e = std_.env();
  CHECK(e.theorem("union_comm")->label() == lab(e, "I"));
  CHECK(e.theorem("cmpl_empty")->label() == lab(e, "I"));
  CHECK(e.theorem("cmpl_cmpl")->label() == lab(e, "C"));
  CHECK(e.theorem("lift_true")->label() == lab(e, "I"));
  CHECK(e.theorem("lift_false")->label() == lab(e, "I"));
  CHECK(e.theorem("drop_exists")->label() == lab(e, "Ch"));
  // Only the Bool datatype is asserted.
  for (const auto& ev : e.axiom_log()) CHECK(ev.origin == "datatype Bool");

  ScriptSession p = checked("peirce.thy");
  CHECK(p.report()[0] == "theorem peirce @ C : |- ((p --> q) --> p) --> p");
  CHECK(p.env().theorem("peirce_unwound")->label() == lab(e, "I"));

  ScriptSession x = checked("examples.thy");
  const TheoryEnv& ex = x.env();
  CHECK(x.report()[0] == "import stdlib.thy");
  CHECK(ex.theorem("isinv_unique")->label() == lab(ex, "I"));
  CHECK(ex.theorem("finite_empty")->label() == lab(ex, "I"));
  CHECK(ex.theorem("finite_insert")->label() == lab(ex, "I"));
  CHECK(ex.theorem("zero_in_Delta")->label() == lab(ex, "I"));
  CHECK(ex.theorem("Delta_collapse")->label() == lab(ex, "C"));
  REQUIRE(ex.typedefs().size() == 2);
  CHECK(ex.typedefs()[0].label == lab(ex, "I"));
  CHECK(ex.typedefs()[1].label == lab(ex, "C"));
  for (const auto& law : ex.typedefs()[1].laws) CHECK(ex.axiom(law)->label == lab(ex, "C"));

  // Every stored theorem survives a rebuild from the history.
  TheoryEnv again = replay_env(ex);
  CHECK(again.theorems().size() == ex.theorems().size());
}

TEST_CASE("reports are deterministic") {
  for (const char* f : {"stdlib.thy", "peirce.thy", "examples.thy"}) {
    CHECK(checked(f).report_text() == checked(f).report_text());
  }
}

TEST_CASE("classical scripts fail below their label") {
  Error e = error_from([] { checked("peirce_I.thy"); });
  CHECK(e.kind() == ErrorKind::TacticFails);
  CHECK(e.detail().rfind("raa: NotAbove", 0) == 0);
  REQUIRE(e.span());
  CHECK(e.span()->start_line == 5);
  CHECK(e.span()->start_col == 10);

  auto relabel = [](const char* file, const char* name, const char* label) {
    auto [env, cmd] = before(file, name);
    cmd.label = label;
    return error_from([&] { run_script(env, {cmd}); });
  };
  Error cc = relabel("stdlib.thy", "cmpl_cmpl", "I");
  CHECK(cc.detail().rfind("raa: NotAbove", 0) == 0);
  Error dr = relabel("stdlib.thy", "drop_exists", "C");
  CHECK(dr.detail().rfind("choice: NotAbove", 0) == 0);
  Error sia = relabel("examples.thy", "Delta_collapse", "I");
  CHECK(sia.detail().rfind("raa: NotAbove", 0) == 0);
  // Upward is fine: the same scripts check at Ch.
  for (auto [file, name] : {std::pair{"stdlib.thy", "cmpl_cmpl"}, std::pair{"peirce.thy", "peirce"}}) {
    auto [env, cmd] = before(file, name);
    cmd.label = "Ch";
    ScriptResult r = run_script(env, {cmd});
    CHECK(r.env.theorem(name)->label() == lab(r.env, "Ch"));
  }
}

TEST_CASE("script errors carry spans") {
  auto err = [](const std::string& text) {
    return error_from([&] { run_script(TheoryEnv(), parse_script(text, "e.thy")); });
  };
  Error e1 = err("type R\ntype R\n");
  CHECK(e1.kind() == ErrorKind::DuplicateName);
  CHECK(e1.span()->start_line == 2);
  CHECK(err("theorem t @ Z : True proof trivial qed").kind() == ErrorKind::UnknownLabel);
  CHECK(err("const c : Nope").kind() == ErrorKind::UnregisteredFormer);
  CHECK(err("axiom a : (p:Prop) (q:Prop)").kind() == ErrorKind::TypeError);
  CHECK(err("def k = (y:Prop)").kind() == ErrorKind::FreeVariableInDefiniens);
  CHECK(err("datatype D = mk (D -> Prop)").kind() == ErrorKind::NotStrictlyPositive);
  CHECK(err("typesyn S = 'a -> Prop").kind() == ErrorKind::TypeVariableEscape);
  Error t = err("theorem t @ I : p --> p\nproof\n  intro; conj_i\nqed\n");
  CHECK(t.kind() == ErrorKind::TacticFails);
  CHECK(t.span()->start_line == 3);
  CHECK(t.span()->start_col == 10);
  CHECK(err("theorem t @ I : p --> p proof intro qed").kind() == ErrorKind::OpenGoals);
  CHECK(err("unwind nothing as n").kind() == ErrorKind::UnknownName);
  CHECK(err("import \"no_such.thy\"").kind() == ErrorKind::IoError);

  // A failed command leaves the environment as before it.
  ScriptSession s;
  CHECK_THROWS_AS(s.run(parse_script("type R\nconst c : R\nconst c : R\n")), Error);
  CHECK(s.env().constant_type("c").has_value());
  CHECK(s.report().size() == 2);
}

TEST_CASE("imports, cycles and lattices") {
  fs::path d = scratch_dir();
  write(d / "a.thy", "import \"b.thy\"\ntheorem ta @ I : True proof trivial qed\n");
  write(d / "b.thy", "import \"a.thy\"\n");
  Error cyc = error_from([&] { ScriptSession().run_file((d / "a.thy").string()); });
  CHECK(cyc.kind() == ErrorKind::ScriptError);

  write(d / "c.thy", "import \"stdlib.thy\"\nimport \"stdlib.thy\"\n");
  ScriptSession once;
  once.run_file((d / "c.thy").string());
  CHECK(once.env().theorem("union_comm"));

  write(d / "dia.thy",
        "lattice \"diamond.lat\"\n"
        "theorem em @ C : p \\/ ~p proof lem qed\n"
        "theorem em_top @ Top : p \\/ ~p proof lift_to C; lem qed\n");
  ScriptSession dia;
  dia.run_file((d / "dia.thy").string());
  const TaintLattice& lat = dia.env().lattice();
  CHECK(lat.size() == 4);
  CHECK(!lat.leq(lat.label("C"), lat.label("Z")));
  CHECK(dia.env().theorem("em_top")->label() == lat.label("Top"));

  write(d / "late.thy", "type R\nlattice \"diamond.lat\"\n");
  Error late = error_from([&] { ScriptSession().run_file((d / "late.thy").string()); });
  CHECK(late.kind() == ErrorKind::ScriptError);
  write(d / "same.thy", "type R\nlattice \"chain4.lat\"\n");
  ScriptSession same;
  same.run_file((d / "same.thy").string());
  fs::remove_all(d);

  CHECK(embedded_file("stdlib.thy") == read_file(kTheories + "stdlib.thy"));
  CHECK(!embedded_file("nothing.thy"));
}

TEST_CASE("exported proofs certify") {
  ScriptSession x = checked("examples.thy");
  ScriptSession p = checked("peirce.thy");
  int n = 0;
  for (const ScriptSession* s : {&x, &p}) {
    for (const auto& [name, th] : s->env().theorems()) {
      std::string text = export_proof(s->env(), th);
      Thm back = certify(s->env(), text, name);
      CHECK_MESSAGE(back.same_judgement(th), name);
      CHECK(export_proof(s->env(), back) == text);
      ++n;
    }
  }
  CHECK(n >= 15);

  const TheoryEnv& env = p.env();
  std::string text = export_proof(env, *env.theorem("peirce"));
  auto tamper = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    auto at = t.rfind(from);
    REQUIRE(at != std::string::npos);
    t.replace(at, from.size(), to);
    return error_from([&] { certify(env, t); }).kind();
  };
  CHECK(tamper("label C\n", "label I\n") == ErrorKind::ReplayError);
  CHECK(tamper("Nlift", "Nrefl") != ErrorKind::IoError);
  CHECK(tamper("holc-proof 1", "holc-proof 9") == ErrorKind::SyntaxError);
  CHECK(tamper("claim", "0 Ninit") == ErrorKind::SyntaxError);
  // Forging the Nlem node's label downward is caught by replay.
  std::string forged = text;
  forged.replace(forged.find("2 Nlift 1 | label C"), 19, "2 Nlift 1 | label I");
  CHECK(error_from([&] { certify(env, forged); }).kind() != ErrorKind::IoError);
}

TEST_CASE("session protocol golden transcript") {
  auto env = std::make_shared<const TheoryEnv>();
  SessionServer server(env);
  std::ifstream in(std::string(HOLC_SOURCE_DIR) + "/tests/golden/peirce_session.jsonl");
  REQUIRE(in);
  std::string req, resp;
  int n = 0;
  while (std::getline(in, req) && std::getline(in, resp)) {
    REQUIRE(req.rfind("> ", 0) == 0);
    REQUIRE(resp.rfind("< ", 0) == 0);
    CHECK(server.handle(req.substr(2)) == resp.substr(2));
    ++n;
  }
  CHECK(n == 18);
}

TEST_CASE("session protocol: undo, errors and concurrent sessions") {
  auto env = std::make_shared<const TheoryEnv>(checked("stdlib.thy").env());
  SessionServer server(env);
  auto call = [&](const std::string& s) { return server.handle(s); };
  std::string start = call(
      R"({"protocol_version":1,"op":"start_goal","session":"u","payload":{"formula":"p /\\ q --> q /\\ p","label":"W"}})");
  CHECK(start.find("\"label\":\"W\"") != std::string::npos);
  std::string st0 = call(R"({"protocol_version":1,"op":"state","session":"u"})");
  for (const char* tac : {"intro", "conj_i", "split_hyps", "lift_to I", "repeat intro", "all assumption"}) {
    std::string before = call(R"({"protocol_version":1,"op":"state","session":"u"})");
    std::string after = call(std::string(R"({"protocol_version":1,"op":"apply","session":"u","payload":{"tactic":")") +
                             tac + "\"}}");
    if (after.find("\"ok\":true") == std::string::npos) continue;
    call(R"({"protocol_version":1,"op":"undo","session":"u"})");
    CHECK_MESSAGE(call(R"({"protocol_version":1,"op":"state","session":"u"})") == before, tac);
    call(std::string(R"({"protocol_version":1,"op":"apply","session":"u","payload":{"tactic":")") + tac + "\"}}");
  }
  for (const char* bad : {"", "[]", "{}", R"({"protocol_version":1})", R"({"protocol_version":"1","op":"state"})",
                          R"({"protocol_version":1,"op":"fly"})", R"({"protocol_version":1,"op":"undo","session":"zz"})",
                          R"({"protocol_version":1,"op":"start_goal","payload":{"formula":"p p"}})",
                          R"({"protocol_version":1,"op":"start_goal","payload":{"formula":"True","label":"Q"}})",
                          R"({"protocol_version":1,"op":"parse","payload":{"term":"(("}})",
                          R"({"protocol_version":1,"op":"parse","payload":7})"}) {
    std::string r = call(bad);
    CHECK_MESSAGE(r.find("\"ok\":false") != std::string::npos, bad);
  }

  // Sessions on separate threads do not interfere.
  std::vector<std::thread> ts;
  std::vector<std::string> results(8);
  for (int i = 0; i < 8; ++i) {
    ts.emplace_back([&, i] {
      std::string id = "t" + std::to_string(i);
      auto req = [&](const std::string& op, const std::string& payload) {
        return server.handle(R"({"protocol_version":1,"op":")" + op + R"(","session":")" + id +
                             R"(","payload":)" + payload + "}");
      };
      req("start_goal", R"({"formula":"forall S:Set 'a, T:Set 'a. union S T = union T S"})");
      req("apply", R"({"tactic":"exact union_comm"})");
      results[i] = req("qed", "{}");
    });
  }
  for (auto& t : ts) t.join();
  for (const auto& r : results) CHECK(r.find("\"label\":\"I\"") != std::string::npos);
}

TEST_CASE("corpus theorems are well formed") {
  testing::ThmCollector collector;
  ScriptSession x = checked("examples.thy");
  ScriptSession p = checked("peirce.thy");
  CHECK(collector.size() > 1000);
  auto failures = collector.check(x.env());
  CHECK(failures.empty());
}
