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

#ifndef ARENA_ORCHESTRATOR_CONFIG_H_
#define ARENA_ORCHESTRATOR_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "arena/llm/agents.h"
#include "arena/match/record.h"
#include "arena/rating/leaderboard.h"
#include "json.hpp"

namespace arena {

inline constexpr int kConfigSchemaVersion = 1;

enum class PairingPolicy { kInformation, kRandom };

std::string_view PairingPolicyName(PairingPolicy p);

struct UndercoverSettings {
  int games = 100;
  // Roster id filling the four civilian seats.
  std::string reference;
  // Agents evaluated as the undercover; empty means every eligible agent
  // other than the reference.
  std::vector<std::string> evaluated;
  // Ask the evaluated seat to guess the other words after each game.
  bool guess = false;
};

struct TournamentConfig {
  std::uint64_t seed = 0;
  std::vector<EnvKind> envs;
  std::vector<AgentSpec> agents;
  // Optional per-env rosters; otherwise every agent able to play the env.
  std::map<EnvKind, std::vector<std::string>> rosters;
  PairingPolicy pairing = PairingPolicy::kInformation;
  int min_games = 50;
  // Hard cap on matches per environment.
  int max_games = 2000;
  // Matches scheduled from one rating snapshot; results are applied in
  // schedule order, so the outcome does not depend on `workers`.
  int batch_size = 8;
  int workers = 1;
  int max_concurrency = 8;
  bool hints_enabled = true;
  IllegalActionPolicy policy;
  ConvergenceParams convergence;
  RatingConfig rating;
  std::map<EnvKind, nlohmann::json> env_config;
  UndercoverSettings undercover;
  std::filesystem::path output_dir = "arena_out";

  // Throws InvalidConfigError. Unknown keys are rejected.
  static TournamentConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
  // YAML or JSON file, chosen by content.
  static TournamentConfig Load(const std::filesystem::path& path);

  const AgentSpec& Agent(const std::string& id) const;
  // Agents taking part in `env`, in roster order.
  std::vector<std::string> RosterFor(EnvKind env) const;
  void Validate() const;
};

// Whether an agent kind can play `env` (scripted specialists are limited to
// their game).
bool SupportsEnv(const AgentSpec& spec, EnvKind env);

// YAML document to JSON; quoted scalars stay strings, others are typed.
nlohmann::json YamlToJson(const std::string& text);

}  // namespace arena

#endif  // ARENA_ORCHESTRATOR_CONFIG_H_
