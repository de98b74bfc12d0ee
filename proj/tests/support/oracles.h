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

#ifndef ARENA_TESTS_SUPPORT_ORACLES_H_
#define ARENA_TESTS_SUPPORT_ORACLES_H_

// Reference implementations written independently of the library. They use
// plain integer grids and naive algorithms; speed is not a goal.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// ---- TicTacToe --------------------------------------------------------------
// Cells: 0 empty, 1 X, 2 O; row-major.
using Grid3 = std::array<int, 9>;

// Bit 1 set when X owns a full line, bit 2 when O does.
int LineOwners(const Grid3& g);

struct TreeCounts {
  std::uint64_t x_wins = 0;
  std::uint64_t o_wins = 0;
  std::uint64_t draws = 0;
};

// Every complete game from the empty grid, X to move first.
TreeCounts EnumerateGames();

// Perfect-play value for the side to move (1 X or 2 O): +1 X wins, 0 draw,
// -1 O wins.
int Minimax(Grid3 g, int to_move);

// ---- ConnectFour ------------------------------------------------------------
// grid[row][col], row 0 at the top; 0 empty, 1 X, 2 O.
using Grid6x7 = std::array<std::array<int, 7>, 6>;

// Straight segments of exactly k cells all owned by `who`.
int Segments(const Grid6x7& g, int who, int k);
// Maximal runs of length exactly k (k = 4 counts runs of 4 or more).
int Runs(const Grid6x7& g, int who, int k);
// 10 * d4 + 5 * d3 + 2 * d2 from `who`'s side.
int Value(const Grid6x7& g, int who, bool maximal_runs);
bool HasFour(const Grid6x7& g, int who);

// ---- Poker ------------------------------------------------------------------
// Cards as rank * 4 + suit, rank 0 = deuce.
// Category 0 high card .. 8 straight flush, 9 royal flush.
int Category5(const std::array<int, 5>& cards);

// Comparable key for five cards: category first, then tiebreak ranks.
std::vector<int> Key5(const std::array<int, 5>& cards);
// Best key over all 5-card subsets of 7 cards.
std::vector<int> Best7(const std::array<int, 7>& cards);

// Category counts over all C(52, 5) hands from counting arguments.
std::array<std::uint64_t, 10> ClosedFormCensus();
// Category counts by enumerating every hand with Category5.
std::array<std::uint64_t, 10> EnumeratedCensus();

// Exact equity (ties half) of `hole` against every opponent hand and every
// completion of a 3- or 4-card board.
double BoardEquity(const std::array<int, 2>& hole, const std::vector<int>& board);

// ---- TrueSkill --------------------------------------------------------------
struct Gaussian {
  double mu = 0.0;
  double sigma = 0.0;
};

// Winner/loser posteriors for a decisive two-player game with no draw
// margin and no dynamics noise, evaluated in 50-digit arithmetic.
std::pair<Gaussian, Gaussian> WinUpdate(Gaussian winner, Gaussian loser, double beta);

// ---- Fixture tables ---------------------------------------------------------
struct Table {
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<double>> cells;  // cells[row][col]
};

// Tab-separated, first row "name<TAB>col...", '#' lines ignored.
Table ReadTable(const std::string& path);

}  // namespace oracle

#endif  // ARENA_TESTS_SUPPORT_ORACLES_H_
