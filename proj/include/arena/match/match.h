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

#ifndef ARENA_MATCH_MATCH_H_
#define ARENA_MATCH_MATCH_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "arena/match/agent.h"
#include "arena/match/record.h"

namespace arena {

struct MatchOptions {
  std::string id;  // defaults to "<env>-<seed>"
  nlohmann::json config = nullptr;
  IllegalActionPolicy policy;
  bool hints_enabled = true;
  bool record_wall_clock = false;
  bool human_participant = false;
  // Undercover: seats asked to guess the other seats' words after the game.
  std::vector<int> guess_seats;
  // Invoked after every recorded turn (live streams).
  std::function<void(const TurnEntry&, const GameState&)> on_turn;
};

// Drives observe -> act -> step until terminal, forfeit or transport abort.
MatchRecord RunMatch(EnvKind env, std::span<Agent* const> agents,
                     std::uint64_t seed, const MatchOptions& options = {});

// Outcome when `offender` forfeits: the offender's side loses. Cooperative
// Hanabi ends in failure.
Outcome ForfeitOutcome(const GameState& state, int offender);

// Re-applies the record's actions from (env, seed, config). Throws
// CorruptRecordError when an action is not legal at replay time.
std::unique_ptr<GameState> Replay(const MatchRecord& record);

// Replay plus a check that the final state matches the recorded one.
std::unique_ptr<GameState> ReplayAndVerify(const MatchRecord& record);

// Human-readable transcript.
std::string FormatTranscript(const MatchRecord& record);

}  // namespace arena

#endif  // ARENA_MATCH_MATCH_H_
