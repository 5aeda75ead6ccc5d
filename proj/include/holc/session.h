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

// The session protocol: one JSON object per line in each direction.
// Documented in docs/protocol.md.

#ifndef HOLC_SESSION_H_
#define HOLC_SESSION_H_

#include <atomic>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "holc/env.h"
#include "holc/tactic.h"

namespace holc {

inline constexpr int kProtocolVersion = 1;

// Hosts any number of proof sessions over one read-only environment.
// Requests on different sessions may be handled concurrently; requests on
// one session are serialised.
class SessionServer {
 public:
  explicit SessionServer(std::shared_ptr<const TheoryEnv> env);

  // Answers one request line with one response line (no newline). Never
  // throws: every failure becomes an error response.
  std::string handle(std::string_view request);

 private:
  struct Session {
    std::mutex mu;
    std::unique_ptr<ProofState> state;
  };
  std::shared_ptr<Session> find(const std::string& id);

  std::shared_ptr<const TheoryEnv> env_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;
};

// Serves requests from `in` until end of input.
void serve_stream(SessionServer& server, std::istream& in, std::ostream& out);

// Listens on 127.0.0.1:port (0 picks a free port), reports the bound port
// through `on_bound` and serves each connection on its own thread until
// `stop` becomes true. Throws IoError when the port cannot be bound.
void serve_tcp(SessionServer& server, int port, const std::function<void(int)>& on_bound,
               const std::atomic<bool>& stop);

}  // namespace holc

#endif  // HOLC_SESSION_H_
