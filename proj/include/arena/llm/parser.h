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

#ifndef ARENA_LLM_PARSER_H_
#define ARENA_LLM_PARSER_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/game.h"
#include "arena/match/agent.h"

namespace arena {

struct ParseOutcome {
  ParseStatus status = ParseStatus::kNoMatch;
  // Set for kOk and kIllegalReference.
  std::optional<ActionSpec> action;
  std::string detail;
  std::string raw;

  bool ok() const { return status == ParseStatus::kOk; }
};

// A grammar match found in a completion.
struct ActionToken {
  std::size_t offset = 0;
  std::size_t line = 0;
  ActionPayload payload;
  // Seat or mark named in the token, when it names one.
  std::optional<int> named_seat;
  std::string text;
};

// Every well-formed action token in `raw`, in order of appearance. Grammars
// are case-insensitive and whitespace-tolerant. `phase` selects the
// Undercover grammar ("clue" or "vote").
std::vector<ActionToken> FindActionTokens(EnvKind env, std::string_view raw,
                                          std::string_view phase = "");

// Extracts the last action token and checks it against the observation:
//   no token                          -> kNoMatch
//   a different action on that line   -> kAmbiguous
//   wrong seat/mark or not legal      -> kIllegalReference
// Open-text clue observations accept any clue; the game's CheckAction is the
// authority there. Bargain proposals keep the whole completion as utterance.
ParseOutcome ParseAction(EnvKind env, std::string_view raw, const Observation& obs);

// Undercover guesses: the last "player_k: word" line per seat in `others`.
std::map<int, std::string> ParseGuesses(std::string_view raw,
                                        const std::vector<int>& others);

}  // namespace arena

#endif  // ARENA_LLM_PARSER_H_
