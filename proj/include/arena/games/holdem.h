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

#ifndef ARENA_GAMES_HOLDEM_H_
#define ARENA_GAMES_HOLDEM_H_

#include <array>
#include <string>
#include <vector>

#include "arena/core/game.h"
#include "arena/games/cards.h"
#include "arena/games/hand_eval.h"

namespace arena {

// Heads-up no-limit, one hand per game.
struct HoldemConfig {
  int stack = 100;
  int small_blind = 1;
  int big_blind = 2;
  // Seat posting the small blind and acting first preflop; -1 picks seed % 2.
  int dealer = -1;

  static HoldemConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

enum class Street { kPreflop, kFlop, kTurn, kRiver, kShowdown };

std::string_view StreetName(Street s);

class HoldemState final : public GameState {
 public:
  HoldemState(std::uint64_t seed, const HoldemConfig& config);
  // Fixed deal for tests and fixtures: holes[seat] and a 5-card board.
  HoldemState(const HoldemConfig& config, int dealer,
              std::array<std::array<Card, 2>, 2> holes,
              std::array<Card, 5> board);

  EnvKind env() const override { return EnvKind::kTexasHoldem; }
  int NumSeats() const override { return 2; }
  bool IsTerminal() const override { return terminal_; }
  int CurrentSeat() const override { return terminal_ ? -1 : to_act_; }
  std::vector<ActionSpec> LegalActions() const override;
  Observation Observe(int seat, bool hints_enabled) const override;
  Outcome GetOutcome() const override;
  std::vector<double> Returns() const override;
  std::string Serialize() const override;
  std::string Render() const override;
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<HoldemState>(*this);
  }

  // Legal action kinds for the player to act; throws on a terminal state.
  std::vector<HoldemAction> LegalKinds() const;

  int stack(int seat) const { return stacks_[seat]; }
  int committed(int seat) const { return committed_[seat]; }
  int pot() const { return committed_[0] + committed_[1]; }
  int ToCall() const;
  // Chips the raise itself adds on top of the call, pot measured after the
  // call and rounded up.
  int RaiseSize(HoldemAction a) const;
  Street street() const { return street_; }
  int dealer() const { return dealer_; }
  const std::array<Card, 2>& hole(int seat) const { return holes_[seat]; }
  std::vector<Card> VisibleBoard() const;
  const std::array<Card, 5>& full_board() const { return board_; }
  int total_chips() const { return 2 * config_.stack; }
  const std::vector<std::string>& history() const { return history_; }

 protected:
  std::vector<double> DoApply(const ActionSpec& action) override;

 private:
  void PostBlinds();
  void Pay(int seat, int amount);
  void CloseStreetIfDone();
  void Settle(int winner);  // winner -1 splits the pot
  void Showdown();

  HoldemConfig config_;
  int dealer_ = 0;
  std::array<std::array<Card, 2>, 2> holes_{};
  std::array<Card, 5> board_{};
  std::array<int, 2> stacks_{};
  std::array<int, 2> committed_{};
  std::array<int, 2> street_bet_{};
  std::array<bool, 2> acted_{};
  std::array<int, 2> final_stacks_{};
  Street street_ = Street::kPreflop;
  int to_act_ = 0;
  bool terminal_ = false;
  std::vector<std::string> history_;
};

}  // namespace arena

#endif  // ARENA_GAMES_HOLDEM_H_
