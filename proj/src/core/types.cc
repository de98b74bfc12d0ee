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

#include "arena/core/types.h"

#include <algorithm>

namespace arena {

std::string_view EnvName(EnvKind env) {
  switch (env) {
    case EnvKind::kTicTacToe: return "tictactoe";
    case EnvKind::kConnectFour: return "connectfour";
    case EnvKind::kTexasHoldem: return "texas_holdem";
    case EnvKind::kUndercover: return "undercover";
    case EnvKind::kBargain: return "bargain";
    case EnvKind::kBid: return "bid";
    case EnvKind::kHanabi: return "hanabi";
  }
  return "unknown";
}

std::optional<EnvKind> ParseEnvKind(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (EnvKind env : kAllEnvs) {
    if (EnvName(env) == lowered) return env;
  }
  if (lowered == "connect_four") return EnvKind::kConnectFour;
  if (lowered == "holdem" || lowered == "texas") return EnvKind::kTexasHoldem;
  return std::nullopt;
}

std::string_view OutcomeKindName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kOngoing: return "ongoing";
    case OutcomeKind::kWin: return "win";
    case OutcomeKind::kDraw: return "draw";
    case OutcomeKind::kFailure: return "failure";
  }
  return "ongoing";
}

std::optional<OutcomeKind> ParseOutcomeKind(std::string_view name) {
  for (OutcomeKind k : {OutcomeKind::kOngoing, OutcomeKind::kWin,
                        OutcomeKind::kDraw, OutcomeKind::kFailure}) {
    if (OutcomeKindName(k) == name) return k;
  }
  return std::nullopt;
}

bool Outcome::IsWinner(int seat) const {
  return kind == OutcomeKind::kWin &&
         std::find(winners.begin(), winners.end(), seat) != winners.end();
}

}  // namespace arena
