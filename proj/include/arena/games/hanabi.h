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

#ifndef ARENA_GAMES_HANABI_H_
#define ARENA_GAMES_HANABI_H_

#include <array>
#include <string>
#include <vector>

#include "arena/core/game.h"

namespace arena {

enum class HanabiScoreMode {
  kTopSum,     // sum of the top card of each firework (max 10)
  kAllValues,  // sum of every played card's rank (max 30)
};

struct HanabiConfig {
  int info_tokens = 3;
  int life_tokens = 1;
  int hand_size = 2;
  HanabiScoreMode score_mode = HanabiScoreMode::kTopSum;
  // Copies of ranks 1..5 per color.
  std::array<int, 5> rank_copies = {3, 2, 2, 2, 1};

  static HanabiConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

struct HanabiCard {
  int color = 0;  // HanabiColor index
  int rank = 1;   // 1..5
  bool operator==(const HanabiCard&) const = default;
  std::string ToString() const;
};

struct HanabiSlot {
  HanabiCard card;
  bool color_known = false;
  bool rank_known = false;
};

class HanabiState final : public GameState {
 public:
  HanabiState(std::uint64_t seed, const HanabiConfig& config);
  // Fixed deck order (top of deck = front) for tests.
  HanabiState(const HanabiConfig& config, std::vector<HanabiCard> deck);

  EnvKind env() const override { return EnvKind::kHanabi; }
  int NumSeats() const override { return 2; }
  bool IsTerminal() const override { return terminal_; }
  int CurrentSeat() const override { return terminal_ ? -1 : to_act_; }
  std::vector<ActionSpec> LegalActions() const override;
  Legality CheckAction(const ActionSpec& action) const override;
  Observation Observe(int seat, bool hints_enabled) const override;
  Outcome GetOutcome() const override;
  std::vector<double> Returns() const override { return returns_; }
  std::string Serialize() const override;
  std::string Render() const override;
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<HanabiState>(*this);
  }

  int Score() const;
  int Score(HanabiScoreMode mode) const;
  int info_tokens() const { return info_tokens_; }
  int life_tokens() const { return life_tokens_; }
  int firework(int color) const { return fireworks_[color]; }
  std::size_t deck_size() const { return deck_.size() - next_card_; }
  const std::vector<HanabiSlot>& hand(int seat) const { return hands_[seat]; }
  const std::vector<HanabiCard>& discards() const { return discards_; }
  // Every card in deck, hands, fireworks and discards.
  std::vector<HanabiCard> AllCards() const;
  const HanabiConfig& config() const { return config_; }

 protected:
  std::vector<double> DoApply(const ActionSpec& action) override;

 private:
  void Deal();
  bool Draw(int seat, std::size_t slot);
  std::string DescribeOwnKnowledge(int seat) const;

  HanabiConfig config_;
  std::vector<HanabiCard> deck_;
  std::size_t next_card_ = 0;
  std::array<std::vector<HanabiSlot>, 2> hands_;
  std::array<int, kHanabiColors> fireworks_ = {0, 0};
  std::vector<HanabiCard> discards_;
  int info_tokens_ = 3;
  int life_tokens_ = 1;
  int to_act_ = 0;
  bool terminal_ = false;
  bool lost_ = false;
  std::vector<double> returns_ = {0.0, 0.0};
  std::string last_action_ = "None";
  std::string last_card_ = "None";
};

std::vector<HanabiCard> HanabiDeck(const HanabiConfig& config);

}  // namespace arena

#endif  // ARENA_GAMES_HANABI_H_
