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

#ifndef ARENA_CORE_GAME_H_
#define ARENA_CORE_GAME_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/action.h"
#include "arena/core/types.h"
#include "json.hpp"

namespace arena {

// What one seat sees before acting. `text_blocks` are the named fragments the
// prompt templates bind; `phase` selects the template family ("play", "clue",
// "vote", "open", "reply").
struct Observation {
  EnvKind env = EnvKind::kTicTacToe;
  PlayerId viewer;
  std::string phase = "play";
  std::map<std::string, std::string> text_blocks;
  std::vector<ActionSpec> legal_actions;
  bool hints_enabled = true;
  // True when the legal list is a representative sample of an open text
  // action space (Undercover clues); CheckAction is then authoritative.
  bool open_text = false;
};

// Reason an action was refused by a state.
struct Legality {
  bool ok = true;
  std::string reason;

  static Legality Ok() { return {}; }
  static Legality Reject(std::string why) { return {false, std::move(why)}; }
};

// One environment's full game situation. States are mutated only through
// ApplyAction on a private copy; callers that need value semantics use Step.
class GameState {
 public:
  virtual ~GameState() = default;

  virtual EnvKind env() const = 0;
  virtual int NumSeats() const = 0;
  virtual bool IsTerminal() const = 0;
  // -1 once terminal.
  virtual int CurrentSeat() const = 0;
  virtual std::vector<ActionSpec> LegalActions() const = 0;
  // Default: membership in LegalActions().
  virtual Legality CheckAction(const ActionSpec& action) const;
  virtual Observation Observe(int seat, bool hints_enabled) const = 0;
  virtual Outcome GetOutcome() const = 0;
  // Cumulative per-seat rewards so far.
  virtual std::vector<double> Returns() const = 0;
  // Canonical full-state dump; equal strings mean equal states.
  virtual std::string Serialize() const = 0;
  // Human-facing table/board view.
  virtual std::string Render() const = 0;
  virtual std::unique_ptr<GameState> Clone() const = 0;

  // Applies a legal action for the current seat. Throws IllegalActionError
  // without modifying the state when CheckAction rejects it.
  StepResult ApplyAction(const ActionSpec& action);

  std::uint64_t seed() const { return seed_; }

 protected:
  explicit GameState(std::uint64_t seed) : seed_(seed) {}
  GameState(const GameState&) = default;
  GameState& operator=(const GameState&) = default;

  // Called after validation. Returns per-step rewards.
  virtual std::vector<double> DoApply(const ActionSpec& action) = 0;

 private:
  std::uint64_t seed_;
};

struct StepOutput {
  std::unique_ptr<GameState> state;
  StepResult result;
};

// Value-semantics step: copies `state`, applies `action` as `actor`.
// Throws WrongActorError / IllegalActionError.
StepOutput Step(const GameState& state, PlayerId actor,
                const ActionSpec& action);

}  // namespace arena

#endif  // ARENA_CORE_GAME_H_
