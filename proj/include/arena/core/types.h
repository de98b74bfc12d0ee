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

#ifndef ARENA_CORE_TYPES_H_
#define ARENA_CORE_TYPES_H_

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arena {

enum class EnvKind {
  kTicTacToe,
  kConnectFour,
  kTexasHoldem,
  kUndercover,
  kBargain,
  kBid,
  kHanabi,
};

inline constexpr std::array<EnvKind, 7> kAllEnvs = {
    EnvKind::kTicTacToe, EnvKind::kConnectFour, EnvKind::kTexasHoldem,
    EnvKind::kUndercover, EnvKind::kBargain,    EnvKind::kBid,
    EnvKind::kHanabi};

// Stable lowercase identifier used in configs, records and URLs.
std::string_view EnvName(EnvKind env);
std::optional<EnvKind> ParseEnvKind(std::string_view name);

// A seat at the table. Display names follow the "player_0" convention used in
// the prompts.
struct PlayerId {
  int index = 0;

  std::string DisplayName() const { return "player_" + std::to_string(index); }
  auto operator<=>(const PlayerId&) const = default;
};

enum class OutcomeKind { kOngoing, kWin, kDraw, kFailure };

std::string_view OutcomeKindName(OutcomeKind kind);
std::optional<OutcomeKind> ParseOutcomeKind(std::string_view name);

// Terminal classification. A win lists every winning seat (Undercover
// civilians win as a team).
struct Outcome {
  OutcomeKind kind = OutcomeKind::kOngoing;
  std::vector<int> winners;

  static Outcome Ongoing() { return {}; }
  static Outcome Win(int seat) { return {OutcomeKind::kWin, {seat}}; }
  static Outcome Team(std::vector<int> seats) {
    return {OutcomeKind::kWin, std::move(seats)};
  }
  static Outcome Draw() { return {OutcomeKind::kDraw, {}}; }
  static Outcome Failure() { return {OutcomeKind::kFailure, {}}; }

  bool IsWinner(int seat) const;
  bool operator==(const Outcome&) const = default;
};

struct StepResult {
  std::vector<double> rewards;
  bool terminal = false;
  Outcome outcome;
};

// Base of every error the library throws. Parse failures are not errors; they
// are returned as data.
class ArenaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConfigError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

class IllegalActionError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

class WrongActorError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

class CorruptRecordError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

}  // namespace arena

#endif  // ARENA_CORE_TYPES_H_
