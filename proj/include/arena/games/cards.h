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

#ifndef ARENA_GAMES_CARDS_H_
#define ARENA_GAMES_CARDS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/types.h"

namespace arena {

class InvalidCardsError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

// Card index = rank * 4 + suit, rank 0 = deuce .. 12 = ace, suits S H D C.
class Card {
 public:
  constexpr Card() = default;
  constexpr explicit Card(int index) : index_(static_cast<std::uint8_t>(index)) {}
  static constexpr Card Of(int rank, int suit) { return Card(rank * 4 + suit); }

  constexpr int index() const { return index_; }
  constexpr int rank() const { return index_ / 4; }
  constexpr int suit() const { return index_ % 4; }

  // "AS", "TD", "2C".
  std::string ToString() const;
  // Accepts "AS", "as", "10s", "Ts" and the suit symbols.
  static std::optional<Card> Parse(std::string_view text);

  auto operator<=>(const Card&) const = default;

 private:
  std::uint8_t index_ = 0;
};

inline constexpr int kDeckSize = 52;

// Comma or whitespace separated card list; throws InvalidCardsError.
std::vector<Card> ParseCards(std::string_view text);
std::string JoinCards(std::span<const Card> cards, std::string_view sep = ", ");
// Throws InvalidCardsError when a card repeats.
void RequireDistinct(std::span<const Card> cards);

}  // namespace arena

#endif  // ARENA_GAMES_CARDS_H_
