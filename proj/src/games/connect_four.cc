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

#include "arena/games/connect_four.h"

#include <sstream>

namespace arena {
namespace {

constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};

bool HasFour(const C4Board& board, Cell who) {
  for (int r = 1; r <= kC4Rows; ++r) {
    for (int c = 1; c <= kC4Cols; ++c) {
      for (const auto& d : kDirs) {
        const int er = r + 3 * d[0];
        const int ec = c + 3 * d[1];
        if (er < 1 || er > kC4Rows || ec < 1 || ec > kC4Cols) continue;
        bool all = true;
        for (int i = 0; i < 4 && all; ++i) {
          all = board.at(r + i * d[0], c + i * d[1]) == who;
        }
        if (all) return true;
      }
    }
  }
  return false;
}

}  // namespace

int C4Board::Count(Cell c) const {
  int n = 0;
  for (Cell x : cells) n += (x == c);
  return n;
}

int C4Board::DropRow(int col) const {
  if (col < 1 || col > kC4Cols) return 0;
  for (int r = kC4Rows; r >= 1; --r) {
    if (at(r, col) == Cell::kEmpty) return r;
  }
  return 0;
}

int C4Board::Drop(int col, Mark mark) {
  const int row = DropRow(col);
  if (row != 0) at(row, col) = CellOf(mark);
  return row;
}

bool C4Board::IsValid() const {
  const int diff = Count(Cell::kX) - Count(Cell::kO);
  if (diff != 0 && diff != 1) return false;
  for (int c = 1; c <= kC4Cols; ++c) {
    for (int r = 1; r < kC4Rows; ++r) {
      if (at(r, c) != Cell::kEmpty && at(r + 1, c) == Cell::kEmpty) {
        return false;
      }
    }
  }
  return true;
}

BoardResult C4Winner(const C4Board& board) {
  if (HasFour(board, Cell::kX)) return BoardResult::kXWins;
  if (HasFour(board, Cell::kO)) return BoardResult::kOWins;
  return board.Count(Cell::kEmpty) == 0 ? BoardResult::kDraw
                                        : BoardResult::kOngoing;
}

std::string C4AvailableList(const C4Board& board) {
  std::string out;
  for (int c = 1; c <= kC4Cols; ++c) {
    if (board.DropRow(c) == 0) continue;
    if (!out.empty()) out += ", ";
    out += std::to_string(c);
  }
  return out;
}

std::string RenderC4Board(const C4Board& board, bool hints_enabled) {
  std::string out;
  for (int r = 1; r <= kC4Rows; ++r) {
    for (int c = 1; c <= kC4Cols; ++c) {
      if (c > 1) out += ' ';
      out += CellChar(board.at(r, c));
    }
    if (r < kC4Rows) out += '\n';
  }
  if (hints_enabled) {
    out += "\n\nYou can only choose one of the following columns: [ " +
           C4AvailableList(board) + " ].";
  }
  return out;
}

std::optional<C4Board> ParseC4Board(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  C4Board board;
  // Blank lines before the grid are skipped.
  bool first = true;
  for (int r = 1; r <= kC4Rows; ++r) {
    if (!std::getline(in, line)) return std::nullopt;
    while (first && line.empty()) {
      if (!std::getline(in, line)) return std::nullopt;
    }
    first = false;
    if (line.size() != 2 * kC4Cols - 1) return std::nullopt;
    for (int c = 1; c <= kC4Cols; ++c) {
      if (c > 1 && line[(c - 1) * 2 - 1] != ' ') return std::nullopt;
      switch (line[(c - 1) * 2]) {
        case 'X': board.at(r, c) = Cell::kX; break;
        case 'O': board.at(r, c) = Cell::kO; break;
        case '-': board.at(r, c) = Cell::kEmpty; break;
        default: return std::nullopt;
      }
    }
  }
  return board;
}

bool ConnectFourState::IsTerminal() const {
  return C4Winner(board_) != BoardResult::kOngoing;
}

int ConnectFourState::CurrentSeat() const {
  if (IsTerminal()) return -1;
  return board_.ToMove() == Mark::kX ? 0 : 1;
}

std::vector<ActionSpec> ConnectFourState::LegalActions() const {
  std::vector<ActionSpec> actions;
  if (IsTerminal()) return actions;
  const Mark mover = board_.ToMove();
  for (int c = 1; c <= kC4Cols; ++c) {
    if (board_.DropRow(c) != 0) {
      actions.push_back(MakeAction(env(), CurrentSeat(), C4Move{mover, c}));
    }
  }
  return actions;
}

Legality ConnectFourState::CheckAction(const ActionSpec& action) const {
  if (IsTerminal()) return Legality::Reject("game is over");
  const auto* move = std::get_if<C4Move>(&action.payload);
  if (action.env != env() || move == nullptr) {
    return Legality::Reject("not a ConnectFour move");
  }
  if (move->mark != board_.ToMove()) {
    return Legality::Reject(std::string("it is ") + MarkChar(board_.ToMove()) +
                            "'s turn");
  }
  if (move->col < 1 || move->col > kC4Cols) {
    return Legality::Reject("column outside 1..7");
  }
  if (board_.DropRow(move->col) == 0) return Legality::Reject("column is full");
  return Legality::Ok();
}

std::vector<double> ConnectFourState::DoApply(const ActionSpec& action) {
  const auto& move = std::get<C4Move>(action.payload);
  board_.Drop(move.col, move.mark);
  std::vector<double> rewards = {0.0, 0.0};
  const BoardResult result = C4Winner(board_);
  if (result == BoardResult::kXWins) rewards = {1.0, -1.0};
  if (result == BoardResult::kOWins) rewards = {-1.0, 1.0};
  for (int i = 0; i < 2; ++i) returns_[i] += rewards[i];
  return rewards;
}

Observation ConnectFourState::Observe(int seat, bool hints_enabled) const {
  Observation obs;
  obs.env = env();
  obs.viewer = PlayerId{seat};
  obs.hints_enabled = hints_enabled;
  obs.text_blocks["player_type"] = seat == 0 ? "X" : "O";
  obs.text_blocks["board_status"] = "\n" + RenderC4Board(board_, false);
  obs.text_blocks["available"] = C4AvailableList(board_);
  if (seat == CurrentSeat()) obs.legal_actions = LegalActions();
  return obs;
}

Outcome ConnectFourState::GetOutcome() const {
  switch (C4Winner(board_)) {
    case BoardResult::kXWins: return Outcome::Win(0);
    case BoardResult::kOWins: return Outcome::Win(1);
    case BoardResult::kDraw: return Outcome::Draw();
    default: return Outcome::Ongoing();
  }
}

std::string ConnectFourState::Serialize() const {
  std::string cells;
  for (Cell c : board_.cells) cells += CellChar(c);
  return "connectfour;board=" + cells;
}

std::string ConnectFourState::Render() const {
  return RenderC4Board(board_, !IsTerminal());
}

}  // namespace arena
