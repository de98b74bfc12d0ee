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

#ifndef ARENA_ANALYSIS_EQUITY_H_
#define ARENA_ANALYSIS_EQUITY_H_

#include <cstdint>
#include <span>

#include "arena/games/cards.h"
#include "arena/games/hand_eval.h"

namespace arena {

struct EquityEstimate {
  double p_win = 0.0;  // ties count one half
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Samples the opponent's hole cards and the missing community cards without
// replacement from the unseen cards. `community` holds 0 to 5 cards. Samples
// are drawn in fixed chunks with per-chunk seeds, so the estimate depends
// only on (inputs, n_samples, seed) and not on the thread count.
EquityEstimate McEquity(std::span<const Card> hole, std::span<const Card> community,
                        std::uint64_t n_samples, std::uint64_t seed,
                        Execution exec = Execution::kParallel);

// Exhaustive over every opponent hole pair and turn/river completion for a
// 3-card flop: C(47,2) * C(45,2) showdowns.
double ExactEquity(std::span<const Card> hole, std::span<const Card> flop,
                   Execution exec = Execution::kParallel);

inline constexpr std::uint64_t kEquityChunk = 1024;

}  // namespace arena

#endif  // ARENA_ANALYSIS_EQUITY_H_
