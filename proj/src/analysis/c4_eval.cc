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

#include "arena/analysis/c4_eval.h"

namespace arena {
namespace {

constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};

bool InBounds(int r, int c) {
  return r >= 1 && r <= kC4Rows && c >= 1 && c <= kC4Cols;
}

int CountSegments(const C4Board& board, Cell cell, int k) {
  int n = 0;
  for (int r = 1; r <= kC4Rows; ++r) {
    for (int c = 1; c <= kC4Cols; ++c) {
      for (const auto& d : kDirs) {
        const int er = r + d[0] * (k - 1), ec = c + d[1] * (k - 1);
        if (!InBounds(er, ec)) continue;
        bool all = true;
        for (int i = 0; i < k && all; ++i) {
          all = board.at(r + d[0] * i, c + d[1] * i) == cell;
        }
        if (all) ++n;
      }
    }
  }
  return n;
}

int CountRuns(const C4Board& board, Cell cell, int k) {
  int n = 0;
  for (int r = 1; r <= kC4Rows; ++r) {
    for (int c = 1; c <= kC4Cols; ++c) {
      for (const auto& d : kDirs) {
        if (board.at(r, c) != cell) continue;
        // Only start at the first cell of a run.
        const int pr = r - d[0], pc = c - d[1];
        if (InBounds(pr, pc) && board.at(pr, pc) == cell) continue;
        int len = 0;
        while (InBounds(r + d[0] * len, c + d[1] * len) &&
               board.at(r + d[0] * len, c + d[1] * len) == cell) {
          ++len;
        }
        if (len == k || (k == 4 && len > 4)) ++n;
      }
    }
  }
  return n;
}

}  // namespace

int CountWindows(const C4Board& board, Mark player, int k, WindowMode mode) {
  if (k < 2 || k > 4) throw ArenaError("window length must be 2, 3 or 4");
  const Cell cell = CellOf(player);
  return mode == WindowMode::kAllSegments ? CountSegments(board, cell, k)
                                          : CountRuns(board, cell, k);
}

WindowCounts CountAllWindows(const C4Board& board, Mark perspective,
                             WindowMode mode) {
  const Mark other = Opponent(perspective);
  WindowCounts w;
  w.my2 = CountWindows(board, perspective, 2, mode);
  w.my3 = CountWindows(board, perspective, 3, mode);
  w.my4 = CountWindows(board, perspective, 4, mode);
  w.oppo2 = CountWindows(board, other, 2, mode);
  w.oppo3 = CountWindows(board, other, 3, mode);
  w.oppo4 = CountWindows(board, other, 4, mode);
  return w;
}

int C4Value(const C4Board& board, Mark perspective, WindowMode mode) {
  const WindowCounts w = CountAllWindows(board, perspective, mode);
  return 10 * (w.my4 - w.oppo4) + 5 * (w.my3 - w.oppo3) + 2 * (w.my2 - w.oppo2);
}

bool IsOnePlyAfter(const C4Board& prev, const C4Board& next) {
  if (!prev.IsValid() || !next.IsValid()) return false;
  if (C4Winner(prev) != BoardResult::kOngoing) return false;
  const Mark mover = prev.ToMove();
  for (int col = 1; col <= kC4Cols; ++col) {
    if (prev.DropRow(col) == 0) continue;
    C4Board b = prev;
    b.Drop(col, mover);
    if (b == next) return true;
  }
  return false;
}

int C4Reward(const C4Board& prev, const C4Board& next, Mark perspective,
             WindowMode mode) {
  if (!IsOnePlyAfter(prev, next)) {
    throw ArenaError("board is not reachable in one ply from the previous board");
  }
  return C4Value(next, perspective, mode) - C4Value(prev, perspective, mode);
}

}  // namespace arena
