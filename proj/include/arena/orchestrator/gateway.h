// Copyright 2026 The Arena Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARENA_ORCHESTRATOR_GATEWAY_H_
#define ARENA_ORCHESTRATOR_GATEWAY_H_

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "arena/llm/agents.h"
#include "arena/match/match.h"
#include "arena/orchestrator/store.h"
#include "json.hpp"

namespace arena {

struct GatewayOptions {
  std::filesystem::path store_dir = "arena_out";
  // Opponents offered to humans; bare scripted kinds ("random", ...) are
  // always available under their own name.
  std::vector<AgentSpec> agents;
  RatingConfig rating;
};

struct GatewayResponse {
  int status = 200;
  nlohmann::json body;
};

// Human-vs-agent sessions plus read-only leaderboard access. Handlers are
// plain methods so they can be exercised without sockets; Bind/Listen expose
// them over HTTP (see docs/api.md).
class Gateway {
 public:
  explicit Gateway(GatewayOptions options);
  ~Gateway();

  // {env, opponent | opponents[], human_seat = 0, seed, hints = true, config}
  GatewayResponse CreateSession(const nlohmann::json& body);
  GatewayResponse GetSession(const std::string& id);
  // {action: "<text>"} or {payload: {...}}, optional seat. Replays the stored
  // response for a repeated idempotency key.
  GatewayResponse SubmitAction(const std::string& id, const nlohmann::json& body,
                               const std::string& idempotency_key = "");
  GatewayResponse ListEnvs() const;
  GatewayResponse ListAgents() const;
  GatewayResponse GetLeaderboard();

  // Turn events from index `from`; waits up to `wait` for new ones. Sets
  // `finished` once the session is over and everything was delivered.
  std::vector<nlohmann::json> EventsSince(const std::string& id, std::size_t from,
                                          std::chrono::milliseconds wait, bool* finished);

  // Returns the bound port (0 picks a free one), then serves until Stop().
  int Bind(const std::string& host, int port);
  void Listen();
  void Stop();

 private:
  struct Session;
  std::shared_ptr<Session> Find(const std::string& id);
  void RunBots(Session& s);
  void Finish(Session& s);
  nlohmann::json View(const Session& s) const;
  std::unique_ptr<Agent> MakeOpponent(const std::string& id) const;

  GatewayOptions options_;
  Store store_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  int next_session_ = 1;
  struct Http;
  std::unique_ptr<Http> http_;
};

}  // namespace arena

#endif  // ARENA_ORCHESTRATOR_GATEWAY_H_
