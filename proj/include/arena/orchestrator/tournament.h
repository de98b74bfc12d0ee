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

#ifndef ARENA_ORCHESTRATOR_TOURNAMENT_H_
#define ARENA_ORCHESTRATOR_TOURNAMENT_H_

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "arena/match/match.h"
#include "arena/orchestrator/config.h"
#include "arena/orchestrator/store.h"

namespace arena {

// Builds the agent for one seat of one match. Backends that hold
// connections are shared across matches by agent id.
class AgentPool {
 public:
  explicit AgentPool(const TournamentConfig& config);
  std::unique_ptr<Agent> Make(const std::string& id);

 private:
  const TournamentConfig& config_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<ChatBackend>> backends_;
};

struct EnvSummary {
  int games = 0;
  bool converged = false;
  std::vector<std::string> inactive;
};

struct TournamentResult {
  Leaderboard leaderboard;
  std::map<EnvKind, EnvSummary> envs;
  std::vector<std::string> warnings;
  int resumed = 0;  // matches taken from an existing records.jsonl
};

struct TournamentHooks {
  std::function<void(const std::string&)> log;
  std::function<void(const MatchRecord&)> on_record;
};

// schedule -> run -> rate -> persist until every environment converges or
// hits its cap. Re-running over an existing output directory resumes: records
// already on disk are reused instead of replayed.
TournamentResult RunTournament(const TournamentConfig& config,
                               const TournamentHooks& hooks = {});

// Whether `env` meets the stopping rule for `agents`.
bool EnvConverged(const Leaderboard& board, EnvKind env,
                  const std::vector<std::string>& agents,
                  const ConvergenceParams& params);

// Record id of match `index` in `env`.
std::string MatchId(EnvKind env, int index);

}  // namespace arena

#endif  // ARENA_ORCHESTRATOR_TOURNAMENT_H_
