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

#ifndef ARENA_GAMES_HAND_EVAL_H_
#define ARENA_GAMES_HAND_EVAL_H_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "arena/games/cards.h"

namespace arena {

enum class HandCategory : std::uint8_t {
  kHighCard,
  kOnePair,
  kTwoPair,
  kThreeOfAKind,
  kStraight,
  kFlush,
  kFullHouse,
  kFourOfAKind,
  kStraightFlush,
  kRoyalFlush,
};

inline constexpr int kHandCategories = 10;

std::string_view HandCategoryName(HandCategory c);

// Best five-card hand value. Ordered first by category, then by the tiebreak
// ranks (2..14, most significant first; unused slots are 0).
class HandRank {
 public:
  constexpr HandRank() = default;
  static HandRank Make(HandCategory category, std::span<const int> tiebreak);

  HandCategory category() const {
    return static_cast<HandCategory>(packed_ >> 20);
  }
  std::vector<int> tiebreak() const;
  std::uint32_t packed() const { return packed_; }

  auto operator<=>(const HandRank&) const = default;

 private:
  std::uint32_t packed_ = 0;
};

// Best hand from 5 to 7 cards. Cards are assumed distinct.
HandRank EvaluateBest(std::span<const Card> cards);

// Seven distinct cards; throws InvalidCardsError otherwise.
HandRank Evaluate7(std::span<const Card> cards);

enum class Execution { kSerial, kParallel };

// Category counts over all C(52, 5) five-card hands.
using CategoryCensus = std::array<std::uint64_t, kHandCategories>;
CategoryCensus FiveCardCensus(Execution exec = Execution::kParallel);

}  // namespace arena

#endif  // ARENA_GAMES_HAND_EVAL_H_
