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

#include "arena/core/game.h"

#include <algorithm>

namespace arena {

Legality GameState::CheckAction(const ActionSpec& action) const {
  if (IsTerminal()) return Legality::Reject("game is over");
  const auto legal = LegalActions();
  const bool found =
      std::any_of(legal.begin(), legal.end(), [&](const ActionSpec& a) {
        return a.SamePayload(action);
      });
  if (!found) return Legality::Reject("not a legal action: " + action.surface);
  return Legality::Ok();
}

StepResult GameState::ApplyAction(const ActionSpec& action) {
  const Legality legality = CheckAction(action);
  if (!legality.ok) throw IllegalActionError(legality.reason);
  StepResult result;
  result.rewards = DoApply(action);
  result.terminal = IsTerminal();
  result.outcome = GetOutcome();
  return result;
}

StepOutput Step(const GameState& state, PlayerId actor,
                const ActionSpec& action) {
  if (state.IsTerminal()) throw IllegalActionError("game is over");
  if (actor.index != state.CurrentSeat()) {
    throw WrongActorError(actor.DisplayName() + " acted but it is " +
                          PlayerId{state.CurrentSeat()}.DisplayName() +
                          "'s turn");
  }
  StepOutput out;
  out.state = state.Clone();
  out.result = out.state->ApplyAction(action);
  return out;
}

}  // namespace arena
