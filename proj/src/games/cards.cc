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

#include "arena/games/cards.h"

#include <bitset>
#include <cctype>

namespace arena {
namespace {

constexpr std::string_view kRanks = "23456789TJQKA";
constexpr std::string_view kSuits = "SHDC";

std::optional<int> SuitFromText(std::string_view s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const auto pos = kSuits.find(c);
    if (pos != std::string_view::npos) return static_cast<int>(pos);
    return std::nullopt;
  }
  if (s == "♠" || s == "♤") return 0;
  if (s == "♥" || s == "♡") return 1;
  if (s == "♦" || s == "♢") return 2;
  if (s == "♣" || s == "♧") return 3;
  return std::nullopt;
}

}  // namespace

std::string Card::ToString() const {
  return {kRanks[rank()], kSuits[suit()]};
}

std::optional<Card> Card::Parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  int rank;
  std::string_view rest;
  if (text.substr(0, 2) == "10") {
    rank = 8;
    rest = text.substr(2);
  } else {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    const auto pos = kRanks.find(c);
    if (pos == std::string_view::npos) return std::nullopt;
    rank = static_cast<int>(pos);
    rest = text.substr(1);
  }
  const auto suit = SuitFromText(rest);
  if (!suit) return std::nullopt;
  return Card::Of(rank, *suit);
}

std::vector<Card> ParseCards(std::string_view text) {
  std::vector<Card> cards;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto card = Card::Parse(token);
    if (!card) throw InvalidCardsError("unrecognized card '" + token + "'");
    cards.push_back(*card);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return cards;
}

std::string JoinCards(std::span<const Card> cards, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (i > 0) out += sep;
    out += cards[i].ToString();
  }
  return out;
}

void RequireDistinct(std::span<const Card> cards) {
  std::bitset<kDeckSize> seen;
  for (Card c : cards) {
    if (c.index() < 0 || c.index() >= kDeckSize) {
      throw InvalidCardsError("card index out of range");
    }
    if (seen.test(c.index())) {
      throw InvalidCardsError("duplicate card " + c.ToString());
    }
    seen.set(c.index());
  }
}

}  // namespace arena
