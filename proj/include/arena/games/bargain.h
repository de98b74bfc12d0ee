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

#ifndef ARENA_GAMES_BARGAIN_H_
#define ARENA_GAMES_BARGAIN_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/game.h"

namespace arena {

inline constexpr int kBargainItemTypes = 3;
using ItemVector = std::array<int, kBargainItemTypes>;  // hats, balls, apples

struct BargainLimits {
  int min_items = 5;
  int max_items = 7;
  int total_value = 10;
  int max_rounds = 10;

  static BargainLimits FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

struct BargainInstance {
  ItemVector counts{};
  std::array<ItemVector, 2> values{};

  int ValueOf(int seat, const ItemVector& share) const;
  bool IsValid(const BargainLimits& limits = {}) const;
  bool operator==(const BargainInstance&) const = default;
};

// Every instance satisfying the limits: each type present at least once,
// total count within [min_items, max_items], each player's pool value equal
// to total_value, and every type worth something to at least one player.
const std::vector<BargainInstance>& ValidBargainInstances(
    const BargainLimits& limits = {});

// Uniform over ValidBargainInstances(limits).
BargainInstance BargainGenerate(std::uint64_t seed,
                                const BargainLimits& limits = {});

enum class BargainStatus { kNegotiating, kDeal, kFailure };

std::string_view BargainStatusName(BargainStatus s);

struct BargainProposal {
  int proposer = 0;
  ItemVector take{};  // what the proposer keeps
  std::string message;
};

// Win for the larger share value, draw when equal, failure without a deal.
// `shares` must be set unless status is kFailure.
Outcome BargainOutcome(BargainStatus status,
                       const std::optional<std::array<ItemVector, 2>>& shares,
                       const BargainInstance& instance);

class BargainState final : public GameState {
 public:
  BargainState(std::uint64_t seed, const BargainLimits& limits = {});
  BargainState(std::uint64_t seed, const BargainInstance& instance,
               const BargainLimits& limits = {});

  EnvKind env() const override { return EnvKind::kBargain; }
  int NumSeats() const override { return 2; }
  bool IsTerminal() const override {
    return status_ != BargainStatus::kNegotiating;
  }
  int CurrentSeat() const override { return IsTerminal() ? -1 : to_act_; }
  std::vector<ActionSpec> LegalActions() const override;
  Legality CheckAction(const ActionSpec& action) const override;
  Observation Observe(int seat, bool hints_enabled) const override;
  Outcome GetOutcome() const override;
  std::vector<double> Returns() const override { return returns_; }
  std::string Serialize() const override;
  std::string Render() const override;
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<BargainState>(*this);
  }

  const BargainInstance& instance() const { return instance_; }
  int round() const { return round_; }
  BargainStatus status() const { return status_; }
  const std::optional<BargainProposal>& pending() const { return pending_; }
  // Final shares once a deal is struck.
  const std::optional<std::array<ItemVector, 2>>& shares() const {
    return shares_;
  }

 protected:
  std::vector<double> DoApply(const ActionSpec& action) override;

 private:
  BargainLimits limits_;
  BargainInstance instance_;
  int round_ = 1;
  int to_act_ = 0;
  BargainStatus status_ = BargainStatus::kNegotiating;
  std::optional<BargainProposal> pending_;
  std::optional<std::array<ItemVector, 2>> shares_;
  std::vector<std::string> history_;
  std::vector<double> returns_ = {0.0, 0.0};
};

}  // namespace arena

#endif  // ARENA_GAMES_BARGAIN_H_
