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

#ifndef ARENA_GAMES_TICTACTOE_H_
#define ARENA_GAMES_TICTACTOE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/game.h"

namespace arena {

enum class Cell : std::uint8_t { kEmpty, kX, kO };

inline Cell CellOf(Mark m) { return m == Mark::kX ? Cell::kX : Cell::kO; }
char CellChar(Cell c);

enum class BoardResult { kOngoing, kXWins, kOWins, kDraw };

std::string_view BoardResultName(BoardResult r);

// 3x3 grid, row-major, (1, 1) top-left.
struct TttBoard {
  std::array<Cell, 9> cells{};

  Cell at(int row, int col) const { return cells[(row - 1) * 3 + (col - 1)]; }
  Cell& at(int row, int col) { return cells[(row - 1) * 3 + (col - 1)]; }
  int Count(Cell c) const;
  // Side to move assuming X starts.
  Mark ToMove() const { return Count(Cell::kX) > Count(Cell::kO) ? Mark::kO : Mark::kX; }
  // Piece-count invariant only (|#X - #O| in {0, 1} with X never behind).
  bool CountsValid() const;
  bool operator==(const TttBoard&) const = default;
};

BoardResult TttWinner(const TttBoard& board);

// One row per line, cells X/O/- separated by single spaces, top row first.
// With hints, a blank line and the legal-position sentence follow.
std::string RenderTttBoard(const TttBoard& board, bool hints_enabled);
// Recovers the grid from RenderTttBoard output (hint line ignored).
std::optional<TttBoard> ParseTttBoard(std::string_view text);

// "(1, 1), (1, 2), ..." over empty cells in row-major order.
std::string TttAvailableList(const TttBoard& board);

// Perfect-play value from `board` with the side to move given by piece counts.
BoardResult TttMinimaxValue(const TttBoard& board);
// Moves preserving the perfect-play value for the side to move.
std::vector<TttMove> TttOptimalMoves(const TttBoard& board);

struct GameTreeCounts {
  std::uint64_t x_wins = 0;
  std::uint64_t o_wins = 0;
  std::uint64_t draws = 0;
  std::uint64_t total() const { return x_wins + o_wins + draws; }
};

// Counts every complete game from `board` by expanding the engine's own
// legal-move generator.
GameTreeCounts CountTttGames(const TttBoard& board = {});

class TicTacToeState final : public GameState {
 public:
  explicit TicTacToeState(std::uint64_t seed) : GameState(seed) {}

  EnvKind env() const override { return EnvKind::kTicTacToe; }
  int NumSeats() const override { return 2; }
  bool IsTerminal() const override;
  int CurrentSeat() const override;
  std::vector<ActionSpec> LegalActions() const override;
  Legality CheckAction(const ActionSpec& action) const override;
  Observation Observe(int seat, bool hints_enabled) const override;
  Outcome GetOutcome() const override;
  std::vector<double> Returns() const override { return returns_; }
  std::string Serialize() const override;
  std::string Render() const override;
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<TicTacToeState>(*this);
  }

  const TttBoard& board() const { return board_; }

 protected:
  std::vector<double> DoApply(const ActionSpec& action) override;

 private:
  TttBoard board_;
  std::vector<double> returns_ = {0.0, 0.0};
};

}  // namespace arena

#endif  // ARENA_GAMES_TICTACTOE_H_
