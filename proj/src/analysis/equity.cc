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

#include "arena/analysis/equity.h"

#include <array>
#include <vector>

#include "arena/core/rng.h"

namespace arena {
namespace {

void Validate(std::span<const Card> hole, std::span<const Card> community,
              std::size_t min_board, std::size_t max_board) {
  if (hole.size() != 2) throw InvalidCardsError("equity needs exactly 2 hole cards");
  if (community.size() < min_board || community.size() > max_board) {
    throw InvalidCardsError("unsupported community card count " +
                            std::to_string(community.size()));
  }
  std::vector<Card> all(hole.begin(), hole.end());
  all.insert(all.end(), community.begin(), community.end());
  RequireDistinct(all);
}

std::vector<Card> Unseen(std::span<const Card> hole, std::span<const Card> community) {
  std::array<bool, kDeckSize> used{};
  for (Card c : hole) used[c.index()] = true;
  for (Card c : community) used[c.index()] = true;
  std::vector<Card> out;
  for (int i = 0; i < kDeckSize; ++i) {
    if (!used[i]) out.push_back(Card(i));
  }
  return out;
}

// Twice the score of one chunk: 2 per win, 1 per tie.
std::uint64_t RunChunk(const std::array<Card, 7>& base, std::size_t n_board,
                       const std::vector<Card>& unseen, std::uint64_t count,
                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Card> deck = unseen;
  const std::size_t need = 2 + (5 - n_board);
  std::uint64_t score = 0;
  std::array<Card, 7> mine = base;
  std::array<Card, 7> theirs{};
  for (std::uint64_t s = 0; s < count; ++s) {
    // Partial Fisher-Yates: the first `need` slots become the draw.
    for (std::size_t i = 0; i < need; ++i) {
      const std::size_t j = i + rng.Below(deck.size() - i);
      std::swap(deck[i], deck[j]);
    }
    for (std::size_t i = 0; i < 5; ++i) {
      const Card c = i < n_board ? base[2 + i] : deck[2 + (i - n_board)];
      mine[2 + i] = c;
      theirs[2 + i] = c;
    }
    theirs[0] = deck[0];
    theirs[1] = deck[1];
    const HandRank a = EvaluateBest(mine);
    const HandRank b = EvaluateBest(theirs);
    score += a > b ? 2 : (a == b ? 1 : 0);
  }
  return score;
}

}  // namespace

EquityEstimate McEquity(std::span<const Card> hole, std::span<const Card> community,
                        std::uint64_t n_samples, std::uint64_t seed, Execution exec) {
  Validate(hole, community, 0, 5);
  if (n_samples == 0) throw ArenaError("n_samples must be positive");
  const std::vector<Card> unseen = Unseen(hole, community);
  std::array<Card, 7> base{};
  base[0] = hole[0];
  base[1] = hole[1];
  for (std::size_t i = 0; i < community.size(); ++i) base[2 + i] = community[i];

  const std::int64_t chunks =
      static_cast<std::int64_t>((n_samples + kEquityChunk - 1) / kEquityChunk);
  auto chunk_size = [&](std::int64_t c) {
    const std::uint64_t start = static_cast<std::uint64_t>(c) * kEquityChunk;
    return std::min<std::uint64_t>(kEquityChunk, n_samples - start);
  };
  std::uint64_t total = 0;
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t c = 0; c < chunks; ++c) {
      total += RunChunk(base, community.size(), unseen, chunk_size(c),
                        DeriveSeed(seed, static_cast<std::uint64_t>(c)));
    }
  } else {
    for (std::int64_t c = 0; c < chunks; ++c) {
      total += RunChunk(base, community.size(), unseen, chunk_size(c),
                        DeriveSeed(seed, static_cast<std::uint64_t>(c)));
    }
  }
  return {static_cast<double>(total) / (2.0 * static_cast<double>(n_samples)),
          n_samples, seed};
}

double ExactEquity(std::span<const Card> hole, std::span<const Card> flop,
                   Execution exec) {
  Validate(hole, flop, 3, 3);
  const std::vector<Card> unseen = Unseen(hole, flop);
  const int n = static_cast<int>(unseen.size());  // 47
  std::uint64_t total = 0, showdowns = 0;

  auto opponent_pair = [&](int i) {
    std::uint64_t score = 0, count = 0;
    std::array<Card, 7> mine = {hole[0], hole[1], flop[0], flop[1], flop[2]};
    std::array<Card, 7> theirs = {Card(), Card(), flop[0], flop[1], flop[2]};
    theirs[0] = unseen[i];
    for (int j = i + 1; j < n; ++j) {
      theirs[1] = unseen[j];
      for (int t = 0; t < n; ++t) {
        if (t == i || t == j) continue;
        for (int r = t + 1; r < n; ++r) {
          if (r == i || r == j) continue;
          mine[5] = theirs[5] = unseen[t];
          mine[6] = theirs[6] = unseen[r];
          const HandRank a = EvaluateBest(mine);
          const HandRank b = EvaluateBest(theirs);
          score += a > b ? 2 : (a == b ? 1 : 0);
          ++count;
        }
      }
    }
    return std::pair{score, count};
  };

  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total, showdowns)
    for (int i = 0; i < n; ++i) {
      const auto [s, c] = opponent_pair(i);
      total += s;
      showdowns += c;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const auto [s, c] = opponent_pair(i);
      total += s;
      showdowns += c;
    }
  }
  return static_cast<double>(total) / (2.0 * static_cast<double>(showdowns));
}

}  // namespace arena
