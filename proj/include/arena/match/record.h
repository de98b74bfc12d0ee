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

#ifndef ARENA_MATCH_RECORD_H_
#define ARENA_MATCH_RECORD_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/serialize.h"
#include "arena/match/agent.h"

namespace arena {

inline constexpr int kRecordSchemaVersion = 1;

enum class OnExhaustion { kForfeit, kRandomLegal };

struct IllegalActionPolicy {
  int max_retries = 0;
  OnExhaustion on_exhaustion = OnExhaustion::kForfeit;

  static IllegalActionPolicy FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

struct TurnEntry {
  int ply = 0;
  int seat = 0;
  int attempt = 0;
  nlohmann::json observation;
  std::vector<ChatMessage> prompt;
  std::size_t context_messages = 0;
  std::string raw_completion;
  ParseStatus parse_status = ParseStatus::kOk;
  std::string parse_detail;
  std::optional<ActionSpec> parsed;
  // Action actually applied (the parsed one or a random fallback).
  std::optional<ActionSpec> applied;
  bool fallback = false;
  std::string violation;
  std::vector<double> rewards;
};

struct GuessEntry {
  int seat = 0;
  std::string raw_completion;
  std::map<int, std::string> guesses;
  std::map<int, std::string> truth;
};

struct MatchRecord {
  std::string id;
  EnvKind env = EnvKind::kTicTacToe;
  std::uint64_t seed = 0;
  nlohmann::json config = nlohmann::json::object();
  bool hints_enabled = true;
  std::vector<std::string> agents;
  IllegalActionPolicy policy;
  std::vector<TurnEntry> turns;
  Outcome outcome;
  bool illegal_terminated = false;
  int offender = -1;
  bool aborted = false;
  std::string abort_reason;
  bool human_participant = false;
  std::string final_state;
  std::vector<double> returns;
  std::vector<GuessEntry> guesses;
  // Present only when wall-clock capture is enabled.
  std::optional<nlohmann::json> wall_clock;

  // Actions that were applied, in order.
  std::vector<ActionSpec> AppliedActions() const;

  nlohmann::json ToJson() const;
  // Throws CorruptRecordError.
  static MatchRecord FromJson(const nlohmann::json& j);
  // Single-line JSON, keys in a fixed order.
  std::string ToJsonLine() const;
};

}  // namespace arena

#endif  // ARENA_MATCH_RECORD_H_
