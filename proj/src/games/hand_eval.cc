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

#include "arena/games/hand_eval.h"

#include <bit>

namespace arena {
namespace {

// Highest card (0..12) of the best straight in a 13-bit rank mask, or -1.
int StraightTop(std::uint32_t mask) {
  // Bit 0 of `wide` is the ace playing low, bit r + 1 is rank r.
  const std::uint32_t wide = (mask << 1) | ((mask >> 12) & 1u);
  for (int top = 13; top >= 4; --top) {
    const std::uint32_t run = 0x1Fu << (top - 4);
    if ((wide & run) == run) return top - 1;
  }
  return -1;
}

// Writes the top `n` ranks of `mask` (as 2..14) into out.
int TopRanks(std::uint32_t mask, int n, int* out) {
  int written = 0;
  for (int r = 12; r >= 0 && written < n; --r) {
    if (mask & (1u << r)) out[written++] = r + 2;
  }
  return written;
}

HandRank Pack(HandCategory cat, std::initializer_list<int> ranks) {
  return HandRank::Make(cat, std::span<const int>(ranks.begin(), ranks.size()));
}

void CensusSerial(CategoryCensus& census) {
  std::array<Card, 5> hand;
  for (int a = 0; a < 52; ++a) {
    hand[0] = Card(a);
    for (int b = a + 1; b < 52; ++b) {
      hand[1] = Card(b);
      for (int c = b + 1; c < 52; ++c) {
        hand[2] = Card(c);
        for (int d = c + 1; d < 52; ++d) {
          hand[3] = Card(d);
          for (int e = d + 1; e < 52; ++e) {
            hand[4] = Card(e);
            ++census[static_cast<int>(EvaluateBest(hand).category())];
          }
        }
      }
    }
  }
}

void CensusParallel(CategoryCensus& census) {
  // Integer counts, so the reduction is order independent.
  std::uint64_t local[52][kHandCategories] = {};
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 0; a < 52; ++a) {
    std::array<Card, 5> hand;
    hand[0] = Card(a);
    for (int b = a + 1; b < 52; ++b) {
      hand[1] = Card(b);
      for (int c = b + 1; c < 52; ++c) {
        hand[2] = Card(c);
        for (int d = c + 1; d < 52; ++d) {
          hand[3] = Card(d);
          for (int e = d + 1; e < 52; ++e) {
            hand[4] = Card(e);
            ++local[a][static_cast<int>(EvaluateBest(hand).category())];
          }
        }
      }
    }
  }
  for (int a = 0; a < 52; ++a) {
    for (int k = 0; k < kHandCategories; ++k) census[k] += local[a][k];
  }
}

}  // namespace

std::string_view HandCategoryName(HandCategory c) {
  switch (c) {
    case HandCategory::kHighCard: return "High Card";
    case HandCategory::kOnePair: return "One Pair";
    case HandCategory::kTwoPair: return "Two Pair";
    case HandCategory::kThreeOfAKind: return "Three of a Kind";
    case HandCategory::kStraight: return "Straight";
    case HandCategory::kFlush: return "Flush";
    case HandCategory::kFullHouse: return "Full House";
    case HandCategory::kFourOfAKind: return "Four of a Kind";
    case HandCategory::kStraightFlush: return "Straight Flush";
    case HandCategory::kRoyalFlush: return "Royal Flush";
  }
  return "?";
}

HandRank HandRank::Make(HandCategory category, std::span<const int> tiebreak) {
  HandRank h;
  h.packed_ = static_cast<std::uint32_t>(category) << 20;
  for (std::size_t i = 0; i < 5; ++i) {
    const int r = i < tiebreak.size() ? tiebreak[i] : 0;
    h.packed_ |= static_cast<std::uint32_t>(r) << (16 - 4 * i);
  }
  return h;
}

std::vector<int> HandRank::tiebreak() const {
  std::vector<int> out;
  for (int i = 0; i < 5; ++i) {
    const int r = static_cast<int>((packed_ >> (16 - 4 * i)) & 0xFu);
    if (r != 0) out.push_back(r);
  }
  return out;
}

HandRank EvaluateBest(std::span<const Card> cards) {
  std::uint32_t suit_mask[4] = {0, 0, 0, 0};
  int suit_count[4] = {0, 0, 0, 0};
  int rank_count[13] = {};
  std::uint32_t all = 0;
  for (Card c : cards) {
    suit_mask[c.suit()] |= 1u << c.rank();
    ++suit_count[c.suit()];
    ++rank_count[c.rank()];
    all |= 1u << c.rank();
  }

  int flush_suit = -1;
  for (int s = 0; s < 4; ++s) {
    if (suit_count[s] >= 5) flush_suit = s;
  }
  if (flush_suit >= 0) {
    const int top = StraightTop(suit_mask[flush_suit]);
    if (top == 12) return Pack(HandCategory::kRoyalFlush, {14});
    if (top >= 0) return Pack(HandCategory::kStraightFlush, {top + 2});
  }

  int quad = -1, trips[2] = {-1, -1}, pairs[3] = {-1, -1, -1};
  int n_trips = 0, n_pairs = 0;
  for (int r = 12; r >= 0; --r) {
    if (rank_count[r] == 4 && quad < 0) {
      quad = r;
    } else if (rank_count[r] == 3 && n_trips < 2) {
      trips[n_trips++] = r;
    } else if (rank_count[r] == 2 && n_pairs < 3) {
      pairs[n_pairs++] = r;
    }
  }

  if (quad >= 0) {
    int kicker[1] = {};
    TopRanks(all & ~(1u << quad), 1, kicker);
    return Pack(HandCategory::kFourOfAKind, {quad + 2, kicker[0]});
  }
  if (n_trips >= 1 && (n_trips >= 2 || n_pairs >= 1)) {
    int pair = n_pairs >= 1 ? pairs[0] : -1;
    if (n_trips >= 2 && trips[1] > pair) pair = trips[1];
    return Pack(HandCategory::kFullHouse, {trips[0] + 2, pair + 2});
  }
  if (flush_suit >= 0) {
    int r[5] = {};
    TopRanks(suit_mask[flush_suit], 5, r);
    return Pack(HandCategory::kFlush, {r[0], r[1], r[2], r[3], r[4]});
  }
  if (const int top = StraightTop(all); top >= 0) {
    return Pack(HandCategory::kStraight, {top + 2});
  }
  if (n_trips == 1) {
    int k[2] = {};
    TopRanks(all & ~(1u << trips[0]), 2, k);
    return Pack(HandCategory::kThreeOfAKind, {trips[0] + 2, k[0], k[1]});
  }
  if (n_pairs >= 2) {
    int k[1] = {};
    TopRanks(all & ~(1u << pairs[0]) & ~(1u << pairs[1]), 1, k);
    return Pack(HandCategory::kTwoPair, {pairs[0] + 2, pairs[1] + 2, k[0]});
  }
  if (n_pairs == 1) {
    int k[3] = {};
    TopRanks(all & ~(1u << pairs[0]), 3, k);
    return Pack(HandCategory::kOnePair, {pairs[0] + 2, k[0], k[1], k[2]});
  }
  int r[5] = {};
  TopRanks(all, 5, r);
  return Pack(HandCategory::kHighCard, {r[0], r[1], r[2], r[3], r[4]});
}

HandRank Evaluate7(std::span<const Card> cards) {
  if (cards.size() != 7) throw InvalidCardsError("expected exactly 7 cards");
  RequireDistinct(cards);
  return EvaluateBest(cards);
}

CategoryCensus FiveCardCensus(Execution exec) {
  CategoryCensus census{};
  if (exec == Execution::kSerial) {
    CensusSerial(census);
  } else {
    CensusParallel(census);
  }
  return census;
}

}  // namespace arena
