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

#ifndef ARENA_GAMES_BID_H_
#define ARENA_GAMES_BID_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/game.h"

namespace arena {

struct BidConfig {
  // Valuations are drawn uniformly from [min_cents, max_cents].
  std::int64_t min_cents = 100;
  std::int64_t max_cents = 10000;
  // Fixed valuations override the draw.
  std::optional<std::array<std::int64_t, 2>> values;

  static BidConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

class BidValidationError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

struct BidSettlement {
  int winner = 0;
  std::array<double, 2> rewards{};  // dollars
};

// Highest bid wins and earns value - bid; exact ties pick a winner uniformly
// from `seed`. Throws BidValidationError unless 0 <= bid < value per seat.
BidSettlement BidSettle(const std::array<std::int64_t, 2>& bids,
                        const std::array<std::int64_t, 2>& values,
                        std::uint64_t seed);

// Parses "1.08", "$1.08", "1" or "1.5" into cents; nullopt when malformed or
// with more than two decimals.
std::optional<std::int64_t> ParseDollars(std::string_view text);

std::array<std::int64_t, 2> BidValuations(std::uint64_t seed,
                                          const BidConfig& config);

// Sealed bids: seat 0 then seat 1, neither observation shows the other bid.
class BidState final : public GameState {
 public:
  BidState(std::uint64_t seed, const BidConfig& config = {});

  EnvKind env() const override { return EnvKind::kBid; }
  int NumSeats() const override { return 2; }
  bool IsTerminal() const override { return settlement_.has_value(); }
  int CurrentSeat() const override;
  std::vector<ActionSpec> LegalActions() const override;
  Legality CheckAction(const ActionSpec& action) const override;
  Observation Observe(int seat, bool hints_enabled) const override;
  Outcome GetOutcome() const override;
  std::vector<double> Returns() const override;
  std::string Serialize() const override;
  std::string Render() const override;
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<BidState>(*this);
  }

  std::int64_t value(int seat) const { return values_[seat]; }
  const std::array<std::optional<std::int64_t>, 2>& bids() const { return bids_; }
  const std::optional<BidSettlement>& settlement() const { return settlement_; }

 protected:
  std::vector<double> DoApply(const ActionSpec& action) override;

 private:
  std::array<std::int64_t, 2> values_{};
  std::array<std::optional<std::int64_t>, 2> bids_;
  std::optional<BidSettlement> settlement_;
};

}  // namespace arena

#endif  // ARENA_GAMES_BID_H_
