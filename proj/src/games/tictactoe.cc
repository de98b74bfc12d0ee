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

#include "arena/games/tictactoe.h"

#include <mutex>
#include <sstream>

namespace arena {
namespace {

constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                              {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};

int Encode(const TttBoard& board) {
  int code = 0;
  for (Cell c : board.cells) code = code * 3 + static_cast<int>(c);
  return code;
}

// Minimax over all 3^9 encodings, filled lazily. Values are from X's point
// of view: +1 X wins, 0 draw, -1 O wins.
class MinimaxTable {
 public:
  int Value(const TttBoard& board) {
    std::lock_guard<std::mutex> lock(mu_);
    return Solve(board);
  }

 private:
  int Solve(const TttBoard& board) {
    const int code = Encode(board);
    if (cache_[code] != kUnknown) return cache_[code];
    int value;
    switch (TttWinner(board)) {
      case BoardResult::kXWins: value = 1; break;
      case BoardResult::kOWins: value = -1; break;
      case BoardResult::kDraw: value = 0; break;
      default: {
        const Mark mover = board.ToMove();
        value = mover == Mark::kX ? -2 : 2;
        for (int i = 0; i < 9; ++i) {
          if (board.cells[i] != Cell::kEmpty) continue;
          TttBoard next = board;
          next.cells[i] = CellOf(mover);
          const int v = Solve(next);
          value = mover == Mark::kX ? std::max(value, v) : std::min(value, v);
        }
      }
    }
    cache_[code] = static_cast<std::int8_t>(value);
    return value;
  }

  static constexpr std::int8_t kUnknown = 5;
  std::mutex mu_;
  std::array<std::int8_t, 19683> cache_ = MakeEmpty();

  static std::array<std::int8_t, 19683> MakeEmpty() {
    std::array<std::int8_t, 19683> a;
    a.fill(kUnknown);
    return a;
  }
};

MinimaxTable& Table() {
  static MinimaxTable* table = new MinimaxTable();
  return *table;
}

BoardResult FromValue(int v) {
  if (v > 0) return BoardResult::kXWins;
  if (v < 0) return BoardResult::kOWins;
  return BoardResult::kDraw;
}

void CountFrom(TttBoard& board, GameTreeCounts& counts) {
  switch (TttWinner(board)) {
    case BoardResult::kXWins: ++counts.x_wins; return;
    case BoardResult::kOWins: ++counts.o_wins; return;
    case BoardResult::kDraw: ++counts.draws; return;
    default: break;
  }
  const Cell mover = CellOf(board.ToMove());
  for (int i = 0; i < 9; ++i) {
    if (board.cells[i] != Cell::kEmpty) continue;
    board.cells[i] = mover;
    CountFrom(board, counts);
    board.cells[i] = Cell::kEmpty;
  }
}

}  // namespace

char CellChar(Cell c) {
  switch (c) {
    case Cell::kX: return 'X';
    case Cell::kO: return 'O';
    default: return '-';
  }
}

std::string_view BoardResultName(BoardResult r) {
  switch (r) {
    case BoardResult::kOngoing: return "ongoing";
    case BoardResult::kXWins: return "X";
    case BoardResult::kOWins: return "O";
    case BoardResult::kDraw: return "draw";
  }
  return "ongoing";
}

int TttBoard::Count(Cell c) const {
  int n = 0;
  for (Cell x : cells) n += (x == c);
  return n;
}

bool TttBoard::CountsValid() const {
  const int diff = Count(Cell::kX) - Count(Cell::kO);
  return diff == 0 || diff == 1;
}

BoardResult TttWinner(const TttBoard& board) {
  for (const auto& line : kLines) {
    const Cell c = board.cells[line[0]];
    if (c != Cell::kEmpty && c == board.cells[line[1]] &&
        c == board.cells[line[2]]) {
      return c == Cell::kX ? BoardResult::kXWins : BoardResult::kOWins;
    }
  }
  return board.Count(Cell::kEmpty) == 0 ? BoardResult::kDraw
                                        : BoardResult::kOngoing;
}

std::string TttAvailableList(const TttBoard& board) {
  std::string out;
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      if (board.at(r, c) != Cell::kEmpty) continue;
      if (!out.empty()) out += ", ";
      out += "(" + std::to_string(r) + ", " + std::to_string(c) + ")";
    }
  }
  return out;
}

std::string RenderTttBoard(const TttBoard& board, bool hints_enabled) {
  std::string out;
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      if (c > 1) out += ' ';
      out += CellChar(board.at(r, c));
    }
    if (r < 3) out += '\n';
  }
  if (hints_enabled) {
    out += "\n\nYou can only put the mark on [" + TttAvailableList(board) + "].";
  }
  return out;
}

std::optional<TttBoard> ParseTttBoard(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  TttBoard board;
  // Blank lines before the grid are skipped.
  bool first = true;
  for (int r = 1; r <= 3; ++r) {
    if (!std::getline(in, line)) return std::nullopt;
    while (first && line.empty()) {
      if (!std::getline(in, line)) return std::nullopt;
    }
    first = false;
    if (line.size() != 5 || line[1] != ' ' || line[3] != ' ') {
      return std::nullopt;
    }
    for (int c = 1; c <= 3; ++c) {
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

BoardResult TttMinimaxValue(const TttBoard& board) {
  return FromValue(Table().Value(board));
}

std::vector<TttMove> TttOptimalMoves(const TttBoard& board) {
  std::vector<TttMove> best;
  if (TttWinner(board) != BoardResult::kOngoing) return best;
  const Mark mover = board.ToMove();
  const int target = Table().Value(board);
  for (int i = 0; i < 9; ++i) {
    if (board.cells[i] != Cell::kEmpty) continue;
    TttBoard next = board;
    next.cells[i] = CellOf(mover);
    if (Table().Value(next) == target) {
      best.push_back(TttMove{mover, i / 3 + 1, i % 3 + 1});
    }
  }
  return best;
}

GameTreeCounts CountTttGames(const TttBoard& board) {
  GameTreeCounts counts;
  TttBoard scratch = board;
  CountFrom(scratch, counts);
  return counts;
}

bool TicTacToeState::IsTerminal() const {
  return TttWinner(board_) != BoardResult::kOngoing;
}

int TicTacToeState::CurrentSeat() const {
  if (IsTerminal()) return -1;
  return board_.ToMove() == Mark::kX ? 0 : 1;
}

std::vector<ActionSpec> TicTacToeState::LegalActions() const {
  std::vector<ActionSpec> actions;
  if (IsTerminal()) return actions;
  const Mark mover = board_.ToMove();
  const int seat = CurrentSeat();
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      if (board_.at(r, c) == Cell::kEmpty) {
        actions.push_back(MakeAction(env(), seat, TttMove{mover, r, c}));
      }
    }
  }
  return actions;
}

Legality TicTacToeState::CheckAction(const ActionSpec& action) const {
  if (IsTerminal()) return Legality::Reject("game is over");
  const auto* move = std::get_if<TttMove>(&action.payload);
  if (action.env != env() || move == nullptr) {
    return Legality::Reject("not a TicTacToe move");
  }
  if (move->mark != board_.ToMove()) {
    return Legality::Reject(std::string("it is ") + MarkChar(board_.ToMove()) +
                            "'s turn");
  }
  if (move->row < 1 || move->row > 3 || move->col < 1 || move->col > 3) {
    return Legality::Reject("position outside the board");
  }
  if (board_.at(move->row, move->col) != Cell::kEmpty) {
    return Legality::Reject("position already marked");
  }
  return Legality::Ok();
}

std::vector<double> TicTacToeState::DoApply(const ActionSpec& action) {
  const auto& move = std::get<TttMove>(action.payload);
  board_.at(move.row, move.col) = CellOf(move.mark);
  std::vector<double> rewards = {0.0, 0.0};
  const BoardResult result = TttWinner(board_);
  if (result == BoardResult::kXWins) rewards = {1.0, -1.0};
  if (result == BoardResult::kOWins) rewards = {-1.0, 1.0};
  for (int i = 0; i < 2; ++i) returns_[i] += rewards[i];
  return rewards;
}

Observation TicTacToeState::Observe(int seat, bool hints_enabled) const {
  Observation obs;
  obs.env = env();
  obs.viewer = PlayerId{seat};
  obs.hints_enabled = hints_enabled;
  obs.text_blocks["player_type"] = seat == 0 ? "X" : "O";
  obs.text_blocks["board_status"] = "\n" + RenderTttBoard(board_, false);
  obs.text_blocks["available"] = TttAvailableList(board_);
  if (seat == CurrentSeat()) obs.legal_actions = LegalActions();
  return obs;
}

Outcome TicTacToeState::GetOutcome() const {
  switch (TttWinner(board_)) {
    case BoardResult::kXWins: return Outcome::Win(0);
    case BoardResult::kOWins: return Outcome::Win(1);
    case BoardResult::kDraw: return Outcome::Draw();
    default: return Outcome::Ongoing();
  }
}

std::string TicTacToeState::Serialize() const {
  std::string cells;
  for (Cell c : board_.cells) cells += CellChar(c);
  return "tictactoe;board=" + cells;
}

std::string TicTacToeState::Render() const {
  return RenderTttBoard(board_, !IsTerminal());
}

}  // namespace arena
