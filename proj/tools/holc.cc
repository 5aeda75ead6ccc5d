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

// holc: batch checker, REPL, session server and proof certification.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "holc/error.h"
#include "holc/print.h"
#include "holc/proof_io.h"
#include "holc/script.h"
#include "holc/session.h"

namespace {

using json = nlohmann::json;

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop.store(true); }

holc::TheoryEnv base_env(const std::string& lattice_file) {
  if (lattice_file.empty()) return holc::TheoryEnv();
  auto lat = holc::TaintLattice::load(holc::read_file(lattice_file));
  return holc::TheoryEnv(std::make_shared<const holc::TaintLattice>(std::move(lat)));
}

// Loads theory files in order into one environment.
std::shared_ptr<const holc::TheoryEnv> load_env(const std::string& lattice_file,
                                                const std::vector<std::string>& files) {
  holc::ScriptSession s(base_env(lattice_file));
  for (const auto& f : files) s.run_file(f);
  return std::make_shared<const holc::TheoryEnv>(s.env());
}

int check(const std::string& lattice_file, const std::vector<std::string>& files) {
  int status = 0;
  for (const auto& f : files) {
    holc::ScriptSession s(base_env(lattice_file));
    try {
      s.run_file(f);
      std::cout << "== " << f << "\n" << s.report_text();
    } catch (const holc::Error& e) {
      std::cout << "== " << f << "\n" << s.report_text() << "FAILED\n";
      std::cerr << e.what() << "\n";
      status = 1;
    }
  }
  return status;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

void print_response(const std::string& line) {
  json r = json::parse(line);
  if (!r.value("ok", false)) {
    const json& e = r["error"];
    std::cout << "error: " << e.value("kind", "") << ": " << e.value("message", "") << "\n";
    return;
  }
  const json& res = r["result"];
  if (res.contains("text")) {
    std::cout << res["text"].get<std::string>();
  } else if (res.contains("formula") && res.contains("label")) {
    std::string ctx;
    for (const auto& h : res["context"]) ctx += (ctx.empty() ? "" : ", ") + h.get<std::string>();
    std::cout << "proved: " << ctx << (ctx.empty() ? "|- " : " |- ") << res["formula"].get<std::string>()
              << " : " << res["label"].get<std::string>() << "\n";
  } else {
    std::cout << res.dump(2) << "\n";
  }
}

// Line commands, each translated into one protocol request:
//   start L : h1 ; h2 |- phi     state     undo     qed     lattice
//   parse t                      quit      anything else is a tactic
int repl(std::shared_ptr<const holc::TheoryEnv> env) {
  holc::SessionServer server(std::move(env));
  const std::string session = "repl";
  auto request = [&](const std::string& op, json payload) {
    json req = {{"protocol_version", holc::kProtocolVersion}, {"op", op}, {"session", session},
                {"payload", std::move(payload)}};
    print_response(server.handle(req.dump()));
  };
  std::string line;
  while (std::cout << "holc> " << std::flush, std::getline(std::cin, line)) {
    std::string cmd = trim(line);
    if (cmd.empty()) continue;
    if (cmd == "quit" || cmd == "exit") break;
    if (cmd == "state" || cmd == "undo" || cmd == "qed" || cmd == "lattice") {
      request(cmd, json::object());
    } else if (cmd.rfind("parse ", 0) == 0) {
      request("parse", {{"term", cmd.substr(6)}});
    } else if (cmd.rfind("start ", 0) == 0) {
      std::string rest = cmd.substr(6);
      auto colon = rest.find(':');
      if (colon == std::string::npos) {
        std::cout << "usage: start LABEL : [h1 ; h2 |-] formula\n";
        continue;
      }
      json payload = {{"label", trim(rest.substr(0, colon))}};
      std::string goal = rest.substr(colon + 1);
      json hyps = json::array();
      auto turn = goal.find("|-");
      if (turn != std::string::npos) {
        std::string hs = goal.substr(0, turn);
        goal = goal.substr(turn + 2);
        std::size_t start = 0;
        while (true) {
          auto semi = hs.find(';', start);
          std::string h = trim(hs.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
          if (!h.empty()) hyps.push_back(h);
          if (semi == std::string::npos) break;
          start = semi + 1;
        }
      }
      payload["hyps"] = hyps;
      payload["formula"] = trim(goal);
      request("start_goal", payload);
    } else {
      request("apply", {{"tactic", cmd}});
    }
  }
  return 0;
}

int serve(std::shared_ptr<const holc::TheoryEnv> env, int port, bool stdio) {
  holc::SessionServer server(std::move(env));
  if (stdio) {
    holc::serve_stream(server, std::cin, std::cout);
    return 0;
  }
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  holc::serve_tcp(
      server, port,
      [](int bound) { std::cout << "listening on 127.0.0.1:" << bound << std::endl; }, g_stop);
  return 0;
}

int export_proof(std::shared_ptr<const holc::TheoryEnv> env, const std::string& name,
                 const std::string& out) {
  const holc::Thm* th = env->theorem(name);
  if (!th) holc::fail(holc::ErrorKind::UnknownName, "no theorem named `" + name + "`");
  std::ofstream f(out, std::ios::binary);
  if (!f) holc::fail(holc::ErrorKind::IoError, "cannot write `" + out + "`");
  f << holc::export_proof(*env, *th);
  return 0;
}

int certify(std::shared_ptr<const holc::TheoryEnv> env, const std::string& proof) {
  holc::Thm th = holc::certify(*env, holc::read_file(proof), proof);
  std::string ctx;
  for (const auto& h : th.context()) ctx += (ctx.empty() ? "" : ", ") + holc::print_term(*env, h);
  std::cout << "certified: " << ctx << (ctx.empty() ? "|- " : " |- ") << holc::print_term(*env, th.formula())
            << " : " << env->lattice().name(th.label()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holc: a taint-labelled HOL kernel"};
  app.require_subcommand(1);
  std::string lattice_file;
  app.add_option("--lattice", lattice_file, "Lattice description file (default: the 4-chain)")
      ->check(CLI::ExistingFile);

  std::vector<std::string> check_files;
  auto* c_check = app.add_subcommand("check", "Check theory files; exit 0 iff all check");
  c_check->add_option("files", check_files, "Theory files")->required()->check(CLI::ExistingFile);

  std::vector<std::string> repl_files;
  auto* c_repl = app.add_subcommand("repl", "Interactive proof session");
  c_repl->add_option("files", repl_files, "Theory files to load first")->check(CLI::ExistingFile);

  std::vector<std::string> serve_files;
  int port = 0;
  bool stdio = false;
  auto* c_serve = app.add_subcommand("serve", "Serve the session protocol");
  c_serve->add_option("--port", port, "TCP port on 127.0.0.1 (0 picks one)");
  c_serve->add_flag("--stdio", stdio, "Serve on standard input and output instead");
  c_serve->add_option("files", serve_files, "Theory files to load first")->check(CLI::ExistingFile);

  std::string export_name, export_out;
  std::vector<std::string> export_files;
  auto* c_export = app.add_subcommand("export-proof", "Write a theorem's proof tree");
  c_export->add_option("theorem", export_name, "Theorem name")->required();
  c_export->add_option("--out", export_out, "Output path")->required();
  c_export->add_option("files", export_files, "Theory files defining the theorem")->check(CLI::ExistingFile);

  std::string proof_file;
  std::vector<std::string> certify_files;
  auto* c_certify = app.add_subcommand("certify", "Replay an exported proof through the kernel");
  c_certify->add_option("proof", proof_file, "Exported proof")->required()->check(CLI::ExistingFile);
  c_certify->add_option("files", certify_files, "Theory files the proof depends on")->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_check) return check(lattice_file, check_files);
    if (*c_repl) return repl(load_env(lattice_file, repl_files));
    if (*c_serve) return serve(load_env(lattice_file, serve_files), port, stdio);
    if (*c_export) return export_proof(load_env(lattice_file, export_files), export_name, export_out);
    if (*c_certify) return certify(load_env(lattice_file, certify_files), proof_file);
  } catch (const holc::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
