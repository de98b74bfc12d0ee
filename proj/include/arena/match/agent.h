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

#ifndef ARENA_MATCH_AGENT_H_
#define ARENA_MATCH_AGENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/game.h"

namespace arena {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
  bool operator==(const ChatMessage&) const = default;
};

enum class ParseStatus { kOk, kNoMatch, kAmbiguous, kIllegalReference };

std::string_view ParseStatusName(ParseStatus s);

// A completion call or model endpoint failed past its retry budget.
class TransportError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

// What an agent produced for one decision.
struct AgentTurn {
  // Messages sent with this call that were not part of the previous call,
  // plus the total context length. Empty for scripted agents.
  std::vector<ChatMessage> prompt;
  std::size_t context_messages = 0;
  std::string raw_completion;
  ParseStatus parse_status = ParseStatus::kOk;
  std::string parse_detail;
  // Parsed action; set for kOk and kIllegalReference.
  std::optional<ActionSpec> action;
  int completion_calls = 0;
};

// Post-game word guesses from one seat: seat -> guessed word.
struct GuessTurn {
  std::vector<ChatMessage> prompt;
  std::string raw_completion;
  std::map<int, std::string> guesses;
};

class Agent {
 public:
  virtual ~Agent() = default;

  virtual std::string id() const = 0;
  virtual void BeginMatch(EnvKind env, int seat, std::uint64_t seed) {}
  // Throws TransportError when the backing service is unreachable.
  virtual AgentTurn Act(const Observation& obs) = 0;
  // Called before a retry after an illegal or unparseable answer.
  virtual void NotifyRejected(const std::string& reason) {}
  // Undercover guess phase; agents without one return nullopt.
  virtual std::optional<GuessTurn> GuessWords(const Observation& final_obs,
                                              const std::vector<int>& others) {
    return std::nullopt;
  }
};

}  // namespace arena

#endif  // ARENA_MATCH_AGENT_H_
