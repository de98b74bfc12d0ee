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

#ifndef ARENA_CORE_ACTION_H_
#define ARENA_CORE_ACTION_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "arena/core/types.h"

namespace arena {

enum class Mark { kX, kO };

inline char MarkChar(Mark m) { return m == Mark::kX ? 'X' : 'O'; }
inline Mark Opponent(Mark m) { return m == Mark::kX ? Mark::kO : Mark::kX; }

// Coordinates are 1-based, (1, 1) is the top-left cell.
struct TttMove {
  Mark mark = Mark::kX;
  int row = 1;
  int col = 1;
  bool operator==(const TttMove&) const = default;
};

// Columns are 1-based, left to right.
struct C4Move {
  Mark mark = Mark::kX;
  int col = 1;
  bool operator==(const C4Move&) const = default;
};

enum class HoldemAction { kFold, kCheckCall, kRaiseHalfPot, kRaiseFullPot, kAllIn };

inline constexpr std::array<HoldemAction, 5> kAllHoldemActions = {
    HoldemAction::kFold, HoldemAction::kCheckCall, HoldemAction::kRaiseHalfPot,
    HoldemAction::kRaiseFullPot, HoldemAction::kAllIn};

std::string_view HoldemActionName(HoldemAction a);

enum class HanabiColor { kRed, kYellow };

inline constexpr int kHanabiColors = 2;
inline constexpr int kHanabiMaxRank = 5;

std::string_view HanabiColorName(HanabiColor c);

struct HanabiMove {
  enum class Kind { kPlay, kDiscard, kRevealColor, kRevealRank };
  Kind kind = Kind::kPlay;
  // Slot (1-based) for play/discard, color index for reveal-color, rank 1..5
  // for reveal-rank.
  int value = 1;
  bool operator==(const HanabiMove&) const = default;
};

struct UndercoverClue {
  std::string text;
  bool operator==(const UndercoverClue&) const = default;
};

struct UndercoverVote {
  int target = 0;
  bool operator==(const UndercoverVote&) const = default;
};

// Either accepts the pending proposal or proposes that the speaker takes
// `take` (hats, balls, apples) and the opponent keeps the rest.
struct BargainMove {
  bool deal = false;
  std::array<int, 3> take = {0, 0, 0};
  bool operator==(const BargainMove&) const = default;
};

struct BidMove {
  std::int64_t cents = 0;
  bool operator==(const BidMove&) const = default;
};

using ActionPayload =
    std::variant<TttMove, C4Move, HoldemAction, HanabiMove, UndercoverClue,
                 UndercoverVote, BargainMove, BidMove>;

// A typed action together with its canonical text surface. `utterance` carries
// free-form talk that accompanied the action (Bargain chatter); it is shown to
// the opponent but does not take part in action identity.
struct ActionSpec {
  EnvKind env = EnvKind::kTicTacToe;
  ActionPayload payload;
  std::string surface;
  std::string utterance;

  bool SamePayload(const ActionSpec& other) const {
    return env == other.env && payload == other.payload;
  }
};

// Canonical surface for a payload played from `seat`.
std::string RenderSurface(EnvKind env, int seat, const ActionPayload& payload);

ActionSpec MakeAction(EnvKind env, int seat, ActionPayload payload);

// Short class label used by action-distribution statistics, e.g. "play",
// "discard", "reveal" for Hanabi or the action name for Hold'em.
std::string ActionClass(const ActionSpec& action);

std::string FormatCents(std::int64_t cents);

}  // namespace arena

#endif  // ARENA_CORE_ACTION_H_
