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

#ifndef ARENA_ANALYSIS_C4_EVAL_H_
#define ARENA_ANALYSIS_C4_EVAL_H_

#include "arena/games/connect_four.h"

namespace arena {

// How runs of pieces are counted for the board value.
enum class WindowMode {
  // Every straight segment of exactly k cells, all owned by the player.
  // Overlaps count separately, so a run of three holds one 3-window and two
  // 2-windows.
  kAllSegments,
  // Maximal runs of length exactly k (k = 4 also takes longer runs).
  kMaximalRuns,
};

struct WindowCounts {
  int my2 = 0, my3 = 0, my4 = 0;
  int oppo2 = 0, oppo3 = 0, oppo4 = 0;
};

int CountWindows(const C4Board& board, Mark player, int k,
                 WindowMode mode = WindowMode::kAllSegments);

WindowCounts CountAllWindows(const C4Board& board, Mark perspective,
                             WindowMode mode = WindowMode::kAllSegments);

// 10(my4 - oppo4) + 5(my3 - oppo3) + 2(my2 - oppo2).
int C4Value(const C4Board& board, Mark perspective,
            WindowMode mode = WindowMode::kAllSegments);

// True when `next` is `prev` plus one legal drop by the side to move.
bool IsOnePlyAfter(const C4Board& prev, const C4Board& next);

// V(next) - V(prev) for `perspective`. Throws ArenaError when `next` is not
// one ply after `prev`.
int C4Reward(const C4Board& prev, const C4Board& next, Mark perspective,
             WindowMode mode = WindowMode::kAllSegments);

}  // namespace arena

#endif  // ARENA_ANALYSIS_C4_EVAL_H_
