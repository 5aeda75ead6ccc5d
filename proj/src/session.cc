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

#include "holc/session.h"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <istream>
#include <ostream>
#include <set>
#include <thread>
#include <vector>

#include "json.hpp"
#include "holc/error.h"
#include "holc/parse.h"
#include "holc/print.h"
#include "holc/thm.h"
#include "holc/typing.h"

namespace holc {

using json = nlohmann::json;

namespace {

[[noreturn]] void protocol_error(const std::string& msg) { fail(ErrorKind::ProtocolError, msg); }

std::string string_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) protocol_error(std::string("missing string field `") + key + "`");
  return it->get<std::string>();
}

json state_json(const ProofState& st) {
  json goals = json::array();
  for (const auto& g : st.render()) {
    goals.push_back({{"variables", g.variables},
                     {"context", g.context},
                     {"formula", g.formula},
                     {"label", g.label}});
  }
  return {{"goals", goals}, {"undo_depth", st.undo_depth()}, {"text", st.render_text()}};
}

json lattice_json(const TaintLattice& lat) {
  json members = json::array(), order = json::array(), hasse = json::array();
  for (auto l : lat.members()) members.push_back(lat.name(l));
  for (auto [a, b] : lat.order_pairs()) order.push_back({lat.name(a), lat.name(b)});
  for (auto [a, b] : lat.hasse_edges()) hasse.push_back({lat.name(a), lat.name(b)});
  json schemes = json::object();
  for (const auto& b : lat.bindings())
    for (const auto& s : b.schemes) schemes[s] = lat.name(b.label);
  return {{"members", members}, {"bottom", lat.name(lat.bottom())},
          {"order", order},     {"hasse", hasse},
          {"schemes", schemes}};
}

std::vector<Term> parse_together(const TheoryEnv& env, const std::vector<std::string>& texts) {
  std::vector<PreTerm> pts;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Parser p(env, lex(texts[i], "<payload>"));
    PreTerm pt = p.pre_term();
    if (!p.at_end()) p.error("unexpected input after the term");
    pts.push_back(PreTerm{PreTerm::Kind::Typed, "", prop_type(), {pt}, pt.span});
  }
  return elaborate(env, pts);
}

}  // namespace

SessionServer::SessionServer(std::shared_ptr<const TheoryEnv> env) : env_(std::move(env)) {}

std::shared_ptr<SessionServer::Session> SessionServer::find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) fail(ErrorKind::ProtocolError, "unknown session `" + id + "`");
  return it->second;
}

std::string SessionServer::handle(std::string_view request) {
  json resp = {{"protocol_version", kProtocolVersion}};
  try {
    json req;
    try {
      req = json::parse(request);
    } catch (const json::exception&) {
      protocol_error("request is not a JSON object");
    }
    if (!req.is_object()) protocol_error("request is not a JSON object");
    if (req.contains("id")) resp["id"] = req["id"];
    auto v = req.find("protocol_version");
    if (v == req.end() || !v->is_number_integer())
      protocol_error("missing integer field `protocol_version`");
    if (v->get<long long>() != kProtocolVersion)
      protocol_error("unsupported protocol_version " + v->dump() + "; this server speaks " +
                     std::to_string(kProtocolVersion));
    const std::string op = string_field(req, "op");
    resp["op"] = op;
    const json payload = req.value("payload", json::object());
    if (!payload.is_object()) protocol_error("`payload` must be an object");

    json result;
    if (op == "hello") {
      json tactics = json::object();
      for (const auto& [name, sig] : tactic_signatures()) tactics[name] = sig;
      result = {{"server", "holc"}, {"tactics", tactics}, {"lattice", lattice_json(env_->lattice())}};
    } else if (op == "lattice") {
      result = lattice_json(env_->lattice());
    } else if (op == "parse") {
      std::string text = string_field(payload, "term");
      Term t = parse_term(*env_, text, {}, "<payload>");
      result = {{"term", print_term(*env_, t)}, {"type", print_type(type_of(*env_, t))}};
    } else if (op == "start_goal") {
      std::vector<std::string> texts;
      if (payload.contains("hyps")) {
        if (!payload["hyps"].is_array()) protocol_error("`hyps` must be an array of strings");
        for (const auto& h : payload["hyps"]) {
          if (!h.is_string()) protocol_error("`hyps` must be an array of strings");
          texts.push_back(h.get<std::string>());
        }
      }
      texts.push_back(string_field(payload, "formula"));
      Label l = payload.contains("label") ? env_->lattice().label(string_field(payload, "label"))
                                          : env_->lattice().bottom();
      std::vector<Term> ts = parse_together(*env_, texts);
      Goal g{make_context({ts.begin(), ts.end() - 1}), ts.back(), l};
      auto st = std::make_unique<ProofState>(env_, g);
      std::string id;
      std::shared_ptr<Session> s;
      {
        std::lock_guard<std::mutex> lock(mu_);
        id = req.contains("session") ? string_field(req, "session") : "s" + std::to_string(next_id_++);
        auto& slot = sessions_[id];
        if (!slot) slot = std::make_shared<Session>();
        s = slot;
      }
      std::lock_guard<std::mutex> lock(s->mu);
      s->state = std::move(st);
      resp["session"] = id;
      result = state_json(*s->state);
    } else if (op == "apply" || op == "undo" || op == "qed" || op == "state") {
      const std::string id = string_field(req, "session");
      resp["session"] = id;
      auto s = find(id);
      std::lock_guard<std::mutex> lock(s->mu);
      if (!s->state) protocol_error("session `" + id + "` has no goal");
      ProofState& st = *s->state;
      if (op == "apply") {
        st.apply(string_field(payload, "tactic"));
      } else if (op == "undo") {
        if (!st.undo()) protocol_error("nothing to undo");
      }
      if (op == "qed") {
        Thm th = st.qed();
        std::vector<Term> all(th.context().begin(), th.context().end());
        all.push_back(th.formula());
        FreeScope scope = free_scope(all);
        json ctx = json::array();
        for (const auto& h : th.context()) ctx.push_back(print_term(*env_, h, scope));
        result = {{"context", ctx},
                  {"formula", print_term(*env_, th.formula(), scope)},
                  {"label", env_->lattice().name(th.label())}};
      } else {
        result = state_json(st);
      }
    } else {
      protocol_error("unknown op `" + op + "`");
    }
    resp["ok"] = true;
    resp["result"] = std::move(result);
  } catch (const Error& e) {
    json err = {{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.detail()}};
    if (e.span())
      err["span"] = {{"file", e.span()->file}, {"line", e.span()->start_line}, {"col", e.span()->start_col}};
    resp["ok"] = false;
    resp["error"] = std::move(err);
  } catch (const std::exception& e) {
    resp["ok"] = false;
    resp["error"] = {{"kind", "ProtocolError"}, {"message", e.what()}};
  }
  return resp.dump(-1, ' ', false, json::error_handler_t::replace);
}

void serve_stream(SessionServer& server, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out << server.handle(line) << "\n" << std::flush;
  }
}

namespace {

void write_all(int fd, const std::string& s) {
  std::size_t off = 0;
  while (off < s.size()) {
    ssize_t n = ::send(fd, s.data() + off, s.size() - off, MSG_NOSIGNAL);
    if (n <= 0) return;
    off += static_cast<std::size_t>(n);
  }
}

struct Clients {
  std::mutex mu;
  std::set<int> open;
};

void serve_connection(SessionServer& server, int fd, Clients& clients) {
  std::string buf;
  char chunk[4096];
  while (true) {
    ssize_t n = ::recv(fd, chunk, sizeof chunk, 0);
    if (n <= 0) break;
    buf.append(chunk, static_cast<std::size_t>(n));
    std::size_t nl;
    while ((nl = buf.find('\n')) != std::string::npos) {
      std::string line = buf.substr(0, nl);
      buf.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      write_all(fd, server.handle(line) + "\n");
    }
  }
  std::lock_guard<std::mutex> lock(clients.mu);
  clients.open.erase(fd);
  ::close(fd);
}

}  // namespace

void serve_tcp(SessionServer& server, int port, const std::function<void(int)>& on_bound,
               const std::atomic<bool>& stop) {
  int lfd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (lfd < 0) fail(ErrorKind::IoError, std::string("socket: ") + std::strerror(errno));
  int one = 1;
  ::setsockopt(lfd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::bind(lfd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0 || ::listen(lfd, 16) < 0) {
    std::string msg = std::strerror(errno);
    ::close(lfd);
    fail(ErrorKind::IoError, "cannot listen on port " + std::to_string(port) + ": " + msg);
  }
  socklen_t len = sizeof addr;
  ::getsockname(lfd, reinterpret_cast<sockaddr*>(&addr), &len);
  on_bound(ntohs(addr.sin_port));

  std::vector<std::thread> workers;
  Clients clients;
  while (!stop.load()) {
    pollfd p{lfd, POLLIN, 0};
    if (::poll(&p, 1, 100) <= 0) continue;
    int cfd = ::accept(lfd, nullptr, nullptr);
    if (cfd < 0) continue;
    {
      std::lock_guard<std::mutex> lock(clients.mu);
      clients.open.insert(cfd);
    }
    workers.emplace_back(serve_connection, std::ref(server), cfd, std::ref(clients));
  }
  {
    std::lock_guard<std::mutex> lock(clients.mu);
    for (int c : clients.open) ::shutdown(c, SHUT_RDWR);
  }
  for (auto& w : workers) w.join();
  ::close(lfd);
}

}  // namespace holc
