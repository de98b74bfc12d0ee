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

#include <gtest/gtest.h>

#include "arena/analysis/c4_eval.h"
#include "arena/core/rng.h"
#include "oracles.h"

namespace arena {
namespace {

oracle::Grid6x7 ToGrid(const C4Board& b) {
  oracle::Grid6x7 g{};
  for (int r = 1; r <= kC4Rows; ++r) {
    for (int c = 1; c <= kC4Cols; ++c) {
      const Cell cell = b.at(r, c);
      g[r - 1][c - 1] = cell == Cell::kX ? 1 : (cell == Cell::kO ? 2 : 0);
    }
  }
  return g;
}

TEST(C4EvalTest, ThreeInARowWindows) {
  C4Board b;
  for (int col : {1, 2, 3}) b.Drop(col, Mark::kX);
  EXPECT_EQ(CountWindows(b, Mark::kX, 3), 1);
  EXPECT_EQ(CountWindows(b, Mark::kX, 2), 2);
  EXPECT_EQ(C4Value(b, Mark::kX), 5 + 2 * 2);
  EXPECT_EQ(C4Value(b, Mark::kO), -(5 + 2 * 2));
  EXPECT_EQ(CountWindows(b, Mark::kX, 2, WindowMode::kMaximalRuns), 0);
  EXPECT_EQ(C4Value(b, Mark::kX, WindowMode::kMaximalRuns), 5);
}

TEST(C4EvalTest, MatchesNaiveCountOnRandomPlayouts) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    C4Board b;
    while (C4Winner(b) == BoardResult::kOngoing) {
      const int col = 1 + static_cast<int>(rng.Below(kC4Cols));
      if (b.DropRow(col) == 0) continue;
      b.Drop(col, b.ToMove());
      const auto g = ToGrid(b);
      for (Mark m : {Mark::kX, Mark::kO}) {
        const int who = m == Mark::kX ? 1 : 2;
        ASSERT_EQ(C4Value(b, m), oracle::Value(g, who, false));
        ASSERT_EQ(C4Value(b, m, WindowMode::kMaximalRuns), oracle::Value(g, who, true));
      }
    }
  }
}

TEST(C4EvalTest, RewardIsTheValueDelta) {
  C4Board prev;
  prev.Drop(4, Mark::kX);
  prev.Drop(4, Mark::kO);
  C4Board next = prev;
  next.Drop(3, Mark::kX);
  ASSERT_TRUE(IsOnePlyAfter(prev, next));
  EXPECT_EQ(C4Reward(prev, next, Mark::kX), C4Value(next, Mark::kX) - C4Value(prev, Mark::kX));
  C4Board skipped = next;
  skipped.Drop(3, Mark::kO);
  skipped.Drop(3, Mark::kX);
  EXPECT_FALSE(IsOnePlyAfter(prev, skipped));
  EXPECT_THROW(C4Reward(prev, skipped, Mark::kX), ArenaError);
  EXPECT_FALSE(IsOnePlyAfter(prev, prev));
}

}  // namespace
}  // namespace arena
