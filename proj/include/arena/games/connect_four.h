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

#ifndef ARENA_GAMES_CONNECT_FOUR_H_
#define ARENA_GAMES_CONNECT_FOUR_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/game.h"
#include "arena/games/tictactoe.h"

namespace arena {

inline constexpr int kC4Rows = 6;
inline constexpr int kC4Cols = 7;

// Row 1 is the top row, column 1 the leftmost; pieces fall toward row 6.
struct C4Board {
  std::array<Cell, kC4Rows * kC4Cols> cells{};

  Cell at(int row, int col) const {
    return cells[(row - 1) * kC4Cols + (col - 1)];
  }
  Cell& at(int row, int col) { return cells[(row - 1) * kC4Cols + (col - 1)]; }
  int Count(Cell c) const;
  Mark ToMove() const {
    return Count(Cell::kX) > Count(Cell::kO) ? Mark::kO : Mark::kX;
  }
  // Lowest empty row in `col`, or 0 when the column is full.
  int DropRow(int col) const;
  // Returns the row the piece landed in, or 0 for a full column.
  int Drop(int col, Mark mark);
  // No floating pieces and valid piece counts.
  bool IsValid() const;
  bool operator==(const C4Board&) const = default;
};

BoardResult C4Winner(const C4Board& board);

std::string RenderC4Board(const C4Board& board, bool hints_enabled);
std::optional<C4Board> ParseC4Board(std::string_view text);
// "1, 2, 3" over non-full columns.
std::string C4AvailableList(const C4Board& board);

class ConnectFourState final : public GameState {
 public:
  explicit ConnectFourState(std::uint64_t seed) : GameState(seed) {}

  EnvKind env() const override { return EnvKind::kConnectFour; }
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
    return std::make_unique<ConnectFourState>(*this);
  }

  const C4Board& board() const { return board_; }

 protected:
  std::vector<double> DoApply(const ActionSpec& action) override;

 private:
  C4Board board_;
  std::vector<double> returns_ = {0.0, 0.0};
};

}  // namespace arena

#endif  // ARENA_GAMES_CONNECT_FOUR_H_
