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

// Acceptance checks. Each check prints one PASS/FAIL/SKIP line and is run as
// its own ctest entry: `arena_acceptance <name>`; no argument runs them all.
// Exit status: 0 pass, 1 fail, 77 skip.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "arena/analysis/c4_eval.h"
#include "arena/analysis/equity.h"
#include "arena/analysis/metrics.h"
#include "arena/core/rng.h"
#include "arena/games/cards.h"
#include "arena/games/connect_four.h"
#include "arena/games/hand_eval.h"
#include "arena/games/registry.h"
#include "arena/games/tictactoe.h"
#include "arena/games/undercover.h"
#include "arena/llm/agents.h"
#include "arena/llm/parser.h"
#include "arena/match/match.h"
#include "arena/orchestrator/store.h"
#include "arena/orchestrator/tournament.h"
#include "arena/rating/leaderboard.h"
#include "arena/rating/trueskill.h"
#include "oracles.h"

namespace fs = std::filesystem;

namespace arena {
namespace {

enum class Verdict { kPass, kFail, kSkip };

struct Result {
  Verdict verdict = Verdict::kPass;
  std::string detail;
};

// Collects sub-check failures; the first few are reported.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  int failures() const { return failures_; }
  int checks() const { return checks_; }
  Result Finish(const std::string& summary) const {
    std::string detail = summary;
    if (!ok()) {
      detail += "; " + std::to_string(failures_) + "/" + std::to_string(checks_) +
                " sub-checks failed";
      for (const auto& n : notes_) detail += "\n    " + n;
    }
    return {ok() ? Verdict::kPass : Verdict::kFail, detail};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

std::string Fmt(const char* fmt, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

fs::path FixtureDir() { return ARENA_TEST_FIXTURE_DIR; }

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("arena_acceptance_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

oracle::Grid3 ToGrid(const TttBoard& b) {
  oracle::Grid3 g{};
  for (int i = 0; i < 9; ++i) g[i] = static_cast<int>(b.cells[i]);
  return g;
}

oracle::Grid6x7 ToGrid(const C4Board& b) {
  oracle::Grid6x7 g{};
  for (int r = 1; r <= kC4Rows; ++r) {
    for (int c = 1; c <= kC4Cols; ++c) g[r - 1][c - 1] = static_cast<int>(b.at(r, c));
  }
  return g;
}

// ---- TicTacToe --------------------------------------------------------------

Result TttOracle() {
  const auto start = std::chrono::steady_clock::now();
  Checker check;
  int grids = 0, compared_values = 0;
  for (int code = 0; code < 19683; ++code) {
    TttBoard b;
    int x = code;
    for (int i = 0; i < 9; ++i, x /= 3) b.cells[i] = static_cast<Cell>(x % 3);
    ++grids;
    const oracle::Grid3 g = ToGrid(b);
    const int owners = oracle::LineOwners(g);
    const BoardResult got = TttWinner(b);
    BoardResult want;
    if (owners == 1) want = BoardResult::kXWins;
    else if (owners == 2) want = BoardResult::kOWins;
    else if (owners == 0) {
      want = b.Count(Cell::kEmpty) == 0 ? BoardResult::kDraw : BoardResult::kOngoing;
    } else {
      // Both sides own a line; unreachable, either win is acceptable.
      check.Expect(got == BoardResult::kXWins || got == BoardResult::kOWins,
                   "double-line grid " + std::to_string(code) + " not reported as a win");
      continue;
    }
    check.Expect(got == want, "grid " + std::to_string(code) + ": engine " +
                                  std::string(BoardResultName(got)) + ", oracle " +
                                  std::string(BoardResultName(want)));
    if (owners == 0 && b.CountsValid() && b.Count(Cell::kEmpty) > 0) {
      const int to_move = b.ToMove() == Mark::kX ? 1 : 2;
      const int v = oracle::Minimax(g, to_move);
      const BoardResult expect = v > 0   ? BoardResult::kXWins
                                 : v < 0 ? BoardResult::kOWins
                                         : BoardResult::kDraw;
      check.Expect(TttMinimaxValue(b) == expect,
                   "minimax mismatch on grid " + std::to_string(code));
      ++compared_values;
    }
  }
  const GameTreeCounts engine = CountTttGames();
  const oracle::TreeCounts tree = oracle::EnumerateGames();
  check.Expect(engine.x_wins == tree.x_wins && engine.o_wins == tree.o_wins &&
                   engine.draws == tree.draws,
               "game-tree counts differ from the oracle");
  check.Expect(engine.total() == 255168, "total games " + std::to_string(engine.total()));
  check.Expect(TttMinimaxValue(TttBoard{}) == BoardResult::kDraw,
               "empty board is not a draw under perfect play");
  const double secs = Seconds(start);
  check.Expect(secs < 10.0, "runtime " + Fmt("%.2f s", secs) + " exceeds 10 s");
  return check.Finish(std::to_string(grids) + " grids, " +
                      std::to_string(compared_values) + " minimax values, games X/O/draw " +
                      std::to_string(engine.x_wins) + "/" + std::to_string(engine.o_wins) +
                      "/" + std::to_string(engine.draws) + ", " + Fmt("%.2f s", secs));
}

Result TttSevenMoveFixture() {
  std::ifstream in(FixtureDir() / "ttt_seven_move_game.txt");
  if (!in) return {Verdict::kFail, "fixture missing"};
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l[0] == '#') continue;
    lines.push_back(l);
  }
  Checker check;
  auto state = Reset(EnvKind::kTicTacToe, 0);
  int moves = 0;
  std::string result_line;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& l = lines[i];
    if (l.empty()) continue;
    if (l.rfind("result:", 0) == 0) {
      result_line = l.substr(8);
      break;
    }
    const Observation obs = state->Observe(state->CurrentSeat(), true);
    const ParseOutcome parsed = ParseAction(EnvKind::kTicTacToe, l, obs);
    check.Expect(parsed.ok(), "move '" + l + "' rejected: " + parsed.detail);
    if (!parsed.ok()) break;
    state->ApplyAction(*parsed.action);
    ++moves;
    const std::string grid = lines.at(i + 1) + "\n" + lines.at(i + 2) + "\n" + lines.at(i + 3);
    const auto& board = static_cast<const TicTacToeState&>(*state).board();
    check.Expect(RenderTttBoard(board, false) == grid,
                 "board after move " + std::to_string(moves) + " differs");
    i += 3;
  }
  check.Expect(moves == 7, "expected 7 moves, played " + std::to_string(moves));
  check.Expect(state->IsTerminal(), "game not over after the last move");
  check.Expect(state->GetOutcome() == Outcome::Win(0), "X (seat 0) did not win");
  check.Expect(result_line == "x_wins", "fixture result line '" + result_line + "'");
  const auto& board = static_cast<const TicTacToeState&>(*state).board();
  return check.Finish(std::to_string(moves) + " moves, result " +
                      std::string(BoardResultName(TttWinner(board))));
}

// ---- ConnectFour valuation --------------------------------------------------

C4Board RandomBoard(Rng& rng) {
  C4Board b;
  const int plies = rng.UniformInt(0, kC4Rows * kC4Cols);
  for (int p = 0; p < plies && C4Winner(b) == BoardResult::kOngoing; ++p) {
    std::vector<int> cols;
    for (int c = 1; c <= kC4Cols; ++c) {
      if (b.DropRow(c) != 0) cols.push_back(c);
    }
    b.Drop(cols[rng.Below(cols.size())], b.ToMove());
  }
  return b;
}

Result C4Valuation() {
  Checker check;
  Rng rng(20260101);
  for (int i = 0; i < 10000; ++i) {
    const C4Board b = RandomBoard(rng);
    const auto g = ToGrid(b);
    for (WindowMode mode : {WindowMode::kAllSegments, WindowMode::kMaximalRuns}) {
      const bool runs = mode == WindowMode::kMaximalRuns;
      const int vx = C4Value(b, Mark::kX, mode);
      const int vo = C4Value(b, Mark::kO, mode);
      check.Expect(vx == -vo, "antisymmetry fails on board " + std::to_string(i));
      check.Expect(vx == oracle::Value(g, 1, runs),
                   "value differs from the oracle on board " + std::to_string(i));
    }
    if (C4Winner(b) != BoardResult::kOngoing) continue;
    std::vector<int> cols;
    for (int c = 1; c <= kC4Cols; ++c) {
      if (b.DropRow(c) != 0) cols.push_back(c);
    }
    C4Board next = b;
    next.Drop(cols[rng.Below(cols.size())], b.ToMove());
    const auto gn = ToGrid(next);
    for (Mark m : {Mark::kX, Mark::kO}) {
      const int who = m == Mark::kX ? 1 : 2;
      check.Expect(C4Reward(b, next, m) ==
                       oracle::Value(gn, who, false) - oracle::Value(g, who, false),
                   "reward differs from recomputation on board " + std::to_string(i));
    }
  }
  int games = 0;
  for (; games < 1000; ++games) {
    C4Board b;
    const C4Board empty;
    int sum_x = 0, sum_o = 0;
    while (C4Winner(b) == BoardResult::kOngoing) {
      std::vector<int> cols;
      for (int c = 1; c <= kC4Cols; ++c) {
        if (b.DropRow(c) != 0) cols.push_back(c);
      }
      C4Board next = b;
      next.Drop(cols[rng.Below(cols.size())], b.ToMove());
      sum_x += C4Reward(b, next, Mark::kX);
      sum_o += C4Reward(b, next, Mark::kO);
      b = next;
    }
    check.Expect(sum_x == C4Value(b, Mark::kX) - C4Value(empty, Mark::kX),
                 "telescoping (X) fails in game " + std::to_string(games));
    check.Expect(sum_o == C4Value(b, Mark::kO) - C4Value(empty, Mark::kO),
                 "telescoping (O) fails in game " + std::to_string(games));
  }
  return check.Finish("10000 boards x 2 window modes, " + std::to_string(games) +
                      " full games, " + std::to_string(check.checks()) + " exact checks");
}

// ---- Poker ------------------------------------------------------------------

Result HandCensus() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  const CategoryCensus parallel = FiveCardCensus(Execution::kParallel);
  const double engine_secs = Seconds(start);
  const CategoryCensus serial = FiveCardCensus(Execution::kSerial);
  const auto closed = oracle::ClosedFormCensus();
  const auto enumerated = oracle::EnumeratedCensus();
  std::uint64_t total = 0;
  for (int c = 0; c < kHandCategories; ++c) {
    const std::string name(HandCategoryName(static_cast<HandCategory>(c)));
    check.Expect(parallel[c] == closed[c], name + ": engine " + std::to_string(parallel[c]) +
                                               ", closed form " + std::to_string(closed[c]));
    check.Expect(parallel[c] == enumerated[c], name + " differs from the naive enumeration");
    check.Expect(parallel[c] == serial[c], name + " differs between serial and parallel");
    total += parallel[c];
  }
  check.Expect(total == 2598960, "total " + std::to_string(total));
  check.Expect(engine_secs < 60.0, "runtime " + Fmt("%.2f s", engine_secs));
  return check.Finish(std::to_string(total) + " hands, engine census " +
                      Fmt("%.2f s", engine_secs) + ", royal " + std::to_string(parallel[9]) +
                      ", high card " + std::to_string(parallel[0]));
}

Result EquityConvergence() {
  std::ifstream in(FixtureDir() / "equity_scenarios.tsv");
  if (!in) return {Verdict::kFail, "fixture missing"};
  Checker check;
  std::string summary;
  int scenarios = 0;
  bool header = true;
  for (std::string l; std::getline(in, l);) {
    if (l.empty() || l[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::stringstream ss(l);
    std::string hole_s, flop_s, exact_s;
    std::getline(ss, hole_s, '\t');
    std::getline(ss, flop_s, '\t');
    std::getline(ss, exact_s, '\t');
    const auto hole = ParseCards(hole_s);
    const auto flop = ParseCards(flop_s);
    const double want = std::stod(exact_s);
    const auto start = std::chrono::steady_clock::now();
    const double exact = ExactEquity(hole, flop);
    const double secs = Seconds(start);
    const EquityEstimate mc = McEquity(hole, flop, 100000, 7 + scenarios);
    check.Expect(std::abs(exact - want) <= 1e-9,
                 hole_s + " | " + flop_s + ": exact " + Fmt("%.9f", exact) +
                     " vs oracle " + exact_s);
    check.Expect(std::abs(mc.p_win - exact) <= 0.01,
                 hole_s + " | " + flop_s + ": mc " + Fmt("%.4f", mc.p_win) +
                     " vs exact " + Fmt("%.4f", exact));
    check.Expect(secs < 300.0, "exact equity took " + Fmt("%.1f s", secs));
    summary += (scenarios ? "; " : "") + hole_s + " | " + flop_s + ": exact " +
               Fmt("%.4f", exact) + ", mc " + Fmt("%.4f", mc.p_win) + " (" +
               Fmt("%.1f s", secs) + ")";
    ++scenarios;
  }
  check.Expect(scenarios == 3, "expected 3 scenarios");
  return check.Finish(summary);
}

// ---- Rating -----------------------------------------------------------------

Result TrueSkillNumerics() {
  Checker check;
  TrueSkillParams p;
  p.tau = 0.0;
  p.draw_probability = 0.0;
  const auto [a, b] = UpdateOneVsOne(p.Initial(), p.Initial(), MatchResult::kAWins, p);
  const auto [wa, wb] = oracle::WinUpdate({p.mu0, p.sigma0}, {p.mu0, p.sigma0}, p.beta);
  check.Expect(std::abs(a.mu - wa.mu) <= 1e-6, "winner mu " + Fmt("%.9f", a.mu));
  check.Expect(std::abs(a.sigma - wa.sigma) <= 1e-6, "winner sigma " + Fmt("%.9f", a.sigma));
  check.Expect(std::abs(b.mu - wb.mu) <= 1e-6, "loser mu " + Fmt("%.9f", b.mu));
  check.Expect(std::abs(b.sigma - wb.sigma) <= 1e-6, "loser sigma " + Fmt("%.9f", b.sigma));

  TrueSkillParams draws = p;
  draws.draw_probability = 0.1;
  const auto [da, db] = UpdateOneVsOne(draws.Initial(), draws.Initial(), MatchResult::kDraw, draws);
  check.Expect(da.mu == 25.0 && db.mu == 25.0, "symmetric draw moved mu");
  check.Expect(da.sigma < draws.sigma0, "draw did not shrink sigma");

  // Random sequences among four players, decisive and drawn games mixed.
  Rng rng(99);
  int updates = 0;
  for (int seq = 0; seq < 1000; ++seq) {
    std::vector<Rating> r(4, draws.Initial());
    const int length = rng.UniformInt(1, 30);
    for (int g = 0; g < length; ++g) {
      const int i = static_cast<int>(rng.Below(4));
      const int j = (i + 1 + static_cast<int>(rng.Below(3))) % 4;
      const MatchResult res = static_cast<MatchResult>(rng.Below(3));
      const auto [ni, nj] = UpdateOneVsOne(r[i], r[j], res, draws);
      check.Expect(ni.sigma < r[i].sigma && nj.sigma < r[j].sigma,
                   "sigma did not decrease in sequence " + std::to_string(seq));
      r[i] = ni;
      r[j] = nj;
      ++updates;
    }
  }
  return check.Finish("win update mu " + Fmt("%.6f", a.mu) + "/" + Fmt("%.6f", b.mu) +
                      " sigma " + Fmt("%.6f", a.sigma) + ", oracle " + Fmt("%.6f", wa.mu) +
                      "/" + Fmt("%.6f", wb.mu) + " sigma " + Fmt("%.6f", wa.sigma) + "; " +
                      std::to_string(updates) + " sequential updates");
}

Result NormalizationFixture() {
  const auto origin = oracle::ReadTable((FixtureDir() / "origin_scores.tsv").string());
  const auto normalized = oracle::ReadTable((FixtureDir() / "normalized_scores.tsv").string());
  Checker check;
  if (origin.columns != normalized.columns || origin.rows != normalized.rows) {
    return {Verdict::kFail, "fixture tables do not line up"};
  }
  std::map<EnvKind, std::map<std::string, double>> table;
  for (std::size_t c = 0; c < origin.columns.size(); ++c) {
    const EnvKind env = *ParseEnvKind(origin.columns[c]);
    for (std::size_t r = 0; r < origin.rows.size(); ++r) {
      table[env][origin.rows[r]] = origin.cells[r][c];
    }
  }
  const auto got = NormalizeTable(table);
  int cells = 0, within = 0;
  std::map<std::string, int> misses_by_env;
  for (std::size_t c = 0; c < origin.columns.size(); ++c) {
    const EnvKind env = *ParseEnvKind(origin.columns[c]);
    for (std::size_t r = 0; r < origin.rows.size(); ++r) {
      const double v = got.at(env).at(origin.rows[r]);
      const double want = normalized.cells[r][c];
      ++cells;
      const bool ok = std::abs(v - want) <= 0.15;
      if (ok) ++within;
      else ++misses_by_env[origin.columns[c]];
      check.Expect(ok, origin.columns[c] + " / " + origin.rows[r] + ": " +
                           Fmt("%.2f", v) + " vs " + Fmt("%.2f", want));
    }
  }
  // The single-cell check: 24.03 against a column maximum of 29.02.
  const auto pair = NormalizeScores({{"a", 24.03}, {"b", 29.02}});
  check.Expect(std::abs(pair.at("a") - 82.81) <= 0.01,
               "24.03 / 29.02 -> " + Fmt("%.4f", pair.at("a")));
  std::string by_env;
  for (const auto& [env, n] : misses_by_env) {
    by_env += (by_env.empty() ? "" : ", ") + env + " " + std::to_string(n);
  }
  return check.Finish(std::to_string(within) + "/" + std::to_string(cells) +
                      " cells within 0.15; 24.03/29.02 -> " + Fmt("%.3f", pair.at("a")) +
                      (by_env.empty() ? "" : "; misses by column: " + by_env));
}

Result BidScore() {
  Checker check;
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  check.Expect(near(BidNashScore(76, 100), 0.52), "(100, 76) -> " + Fmt("%.15f", BidNashScore(76, 100)));
  check.Expect(near(BidNashScore(50, 100), 0.0), "v/2 -> " + Fmt("%.15f", BidNashScore(50, 100)));
  check.Expect(near(BidNashScore(100, 100), 1.0), "v -> " + Fmt("%.15f", BidNashScore(100, 100)));
  Rng rng(4242);
  for (int i = 0; i < 10000; ++i) {
    const double v = 0.01 + rng.Uniform01() * 1000.0;
    const double bid = rng.Uniform01() * v;
    const double k = std::pow(10.0, rng.Uniform01() * 6.0 - 3.0);
    const double s = BidNashScore(bid, v);
    const double sk = BidNashScore(k * bid, k * v);
    check.Expect(std::abs(s - sk) <= 1e-12 * std::max(1.0, std::abs(s)),
                 "scale invariance fails at v=" + Fmt("%.6f", v));
  }
  return check.Finish("fixtures exact to 1e-12; 10000 scaled pairs");
}

// ---- Tournament -------------------------------------------------------------

nlohmann::json ScriptedConfig(const fs::path& out, int workers) {
  return {
      {"seed", "20260417"},
      {"envs", {"tictactoe", "connectfour", "texas_holdem", "bid"}},
      {"agents",
       {{{"id", "random_a"}, {"kind", "random"}},
        {{"id", "random_b"}, {"kind", "random"}},
        {{"id", "oracle"}, {"kind", "ttt_oracle"}},
        {{"id", "heuristic"}, {"kind", "c4_heuristic"}},
        {{"id", "equity"}, {"kind", "equity"}, {"params", {{"samples", 200}}}}}},
      {"min_games", 6},
      {"max_games", 24},
      {"batch_size", 4},
      {"workers", workers},
      {"output_dir", out.string()},
  };
}

Result EndToEndDeterminism() {
  Checker check;
  const fs::path a = ScratchDir("det_a");
  const fs::path b = ScratchDir("det_b");
  RunTournament(TournamentConfig::FromJson(ScriptedConfig(a, 1)));
  RunTournament(TournamentConfig::FromJson(ScriptedConfig(b, 3)));
  const std::string ra = Slurp(a / "records.jsonl"), rb = Slurp(b / "records.jsonl");
  const std::string la = Slurp(a / "leaderboard.json"), lb = Slurp(b / "leaderboard.json");
  check.Expect(!ra.empty(), "no records written");
  check.Expect(ra == rb, "records.jsonl differs between runs");
  check.Expect(la == lb, "leaderboard.json differs between runs");
  const auto lines = std::count(ra.begin(), ra.end(), '\n');

  // Random against the perfect-play oracle.
  const fs::path sep = ScratchDir("separation");
  const nlohmann::json cfg = {
      {"seed", "7"},
      {"envs", {"tictactoe"}},
      {"agents", {{{"id", "random"}, {"kind", "random"}}, {{"id", "oracle"}, {"kind", "ttt_oracle"}}}},
      {"min_games", 200},
      {"max_games", 200},
      {"output_dir", sep.string()},
  };
  const TournamentResult result = RunTournament(TournamentConfig::FromJson(cfg));
  const auto& hist = result.leaderboard.History(EnvKind::kTicTacToe);
  const auto& ho = hist.at("oracle");
  const auto& hr = hist.at("random");
  int separated_at = -1;
  for (std::size_t g = 0; g < std::min(ho.size(), hr.size()); ++g) {
    if (ho[g].mu - 3 * ho[g].sigma > hr[g].mu + 3 * hr[g].sigma) {
      separated_at = static_cast<int>(g) + 1;
      break;
    }
  }
  const Rating o = ho.back(), r = hr.back();
  check.Expect(separated_at > 0 && separated_at <= 200,
               "oracle mu-3sigma never exceeded random mu+3sigma");
  check.Expect(o.mu - 3 * o.sigma > r.mu + 3 * r.sigma, "separation lost by game 200");
  fs::remove_all(a);
  fs::remove_all(b);
  fs::remove_all(sep);
  return check.Finish(std::to_string(lines) + " identical records across 1 and 3 workers; oracle " +
                      Fmt("%.2f", o.mu) + "+-" + Fmt("%.2f", 3 * o.sigma) + " vs random " +
                      Fmt("%.2f", r.mu) + "+-" + Fmt("%.2f", 3 * r.sigma) + " after " +
                      std::to_string(ho.size()) + " games, separated at game " +
                      std::to_string(separated_at));
}

Result HintAblation() {
  Checker check;
  std::vector<AblationRow> rows;
  for (EnvKind env : {EnvKind::kTicTacToe, EnvKind::kConnectFour}) {
    AblationSpec spec;
    spec.agent_name = "format_fragile";
    spec.agent = [] { return MakeFormatFragileAgent(); };
    spec.opponent = [] { return std::make_unique<RandomAgent>(); };
    spec.env = env;
    spec.games = 20;
    spec.seed = 11;
    rows.push_back(RunAblation(spec));
    const auto& row = rows.back();
    check.Expect(row.error_rate_hints == 0.0,
                 std::string(EnvName(env)) + " error with hints " + Fmt("%.2f", row.error_rate_hints));
    check.Expect(row.error_rate_no_hints == 1.0,
                 std::string(EnvName(env)) + " error without hints " +
                     Fmt("%.2f", row.error_rate_no_hints));
    check.Expect(row.win_rate_no_hints == 0.0, "wins recorded without hints");
  }
  const auto json = AblationJson(rows);
  check.Expect(json.size() == 2 && json[0].contains("hints") && json[0].contains("no_hints") &&
                   json[0]["hints"].contains("win_rate") &&
                   json[0]["hints"].contains("error_rate"),
               "ablation JSON lacks the hints x (win, error) grid");
  std::string table = AblationTable(rows);
  while (!table.empty() && table.back() == '\n') table.pop_back();
  std::string indented;
  for (char c : table) {
    indented += c;
    if (c == '\n') indented += "    ";
  }
  return check.Finish("\n    " + indented);
}

struct Trace {
  std::string name;
  int undercover = 0;
  int max_rounds = 2;
  std::vector<std::vector<std::pair<int, int>>> votes;
  std::vector<int> eliminated;
  int rounds = 0;
  std::string result;
};

std::vector<Trace> LoadTraces() {
  std::ifstream in(FixtureDir() / "undercover_traces.txt");
  std::vector<Trace> traces;
  for (std::string l; std::getline(in, l);) {
    if (l.empty() || l[0] == '#') continue;
    std::stringstream ss(l);
    std::string key;
    ss >> key;
    if (key == "game") {
      traces.emplace_back();
      ss >> traces.back().name;
      continue;
    }
    Trace& t = traces.back();
    if (key == "undercover") ss >> t.undercover;
    else if (key == "max_rounds") ss >> t.max_rounds;
    else if (key == "rounds") ss >> t.rounds;
    else if (key == "result") ss >> t.result;
    else if (key == "eliminated") {
      for (int s; ss >> s;) t.eliminated.push_back(s);
    } else if (key == "votes") {
      t.votes.emplace_back();
      for (std::string v; ss >> v;) {
        const auto gt = v.find('>');
        t.votes.back().push_back({std::stoi(v.substr(0, gt)), std::stoi(v.substr(gt + 1))});
      }
    }
  }
  return traces;
}

std::uint64_t SeedWithUndercoverAt(int seat) {
  for (std::uint64_t s = 0;; ++s) {
    if (UndercoverSeatFor(s, kUndercoverSeats) == seat) return s;
  }
}

Result UndercoverProtocol() {
  Checker check;
  // 100 games of the tournament mode with clue bots in every seat.
  const fs::path dir = ScratchDir("undercover");
  const nlohmann::json cfg = {
      {"seed", "5"},
      {"envs", {"undercover"}},
      {"agents",
       {{{"id", "civilian_bot"}, {"kind", "clue_bot"}}, {{"id", "suspect_bot"}, {"kind", "clue_bot"}}}},
      {"undercover", {{"games", 100}, {"reference", "civilian_bot"}}},
      {"output_dir", dir.string()},
  };
  RunTournament(TournamentConfig::FromJson(cfg));
  Store store(dir);
  const auto loaded = store.LoadRecords();
  std::map<std::string, int> results;
  int max_rounds_seen = 0;
  for (const auto& rec : loaded.records) {
    const auto state = ReplayAndVerify(rec);
    const auto& uc = static_cast<const UndercoverState&>(*state);
    check.Expect(uc.IsTerminal(), rec.id + " did not terminate");
    check.Expect(uc.round() <= 2, rec.id + " ran " + std::to_string(uc.round()) + " rounds");
    max_rounds_seen = std::max(max_rounds_seen, uc.round());
    ++results[std::string(UndercoverResultName(uc.Result()))];
  }
  check.Expect(loaded.records.size() == 100,
               "expected 100 games, found " + std::to_string(loaded.records.size()));
  fs::remove_all(dir);

  // Hand-traced games.
  const auto traces = LoadTraces();
  for (const auto& t : traces) {
    UndercoverConfig config;
    config.max_rounds = t.max_rounds;
    UndercoverState s(SeedWithUndercoverAt(t.undercover), WordPair{"apple", "pear"}, config);
    for (const auto& round : t.votes) {
      while (s.phase() == UndercoverPhase::kClues) {
        const int seat = s.CurrentSeat();
        s.ApplyAction(MakeAction(EnvKind::kUndercover, seat,
                                 UndercoverClue{ClueBot::ClueFor(s.word(seat), s.round(), seat)}));
      }
      for (const auto& [voter, target] : round) {
        check.Expect(s.CurrentSeat() == voter, t.name + ": vote order differs at seat " +
                                                   std::to_string(voter));
        s.ApplyAction(MakeAction(EnvKind::kUndercover, voter, UndercoverVote{target}));
      }
    }
    check.Expect(s.IsTerminal(), t.name + ": not terminal after the traced votes");
    check.Expect(s.eliminated() == t.eliminated, t.name + ": eliminations differ");
    check.Expect(s.round() == t.rounds, t.name + ": rounds " + std::to_string(s.round()));
    check.Expect(std::string(UndercoverResultName(s.Result())) == t.result,
                 t.name + ": result " + std::string(UndercoverResultName(s.Result())));
  }
  std::string mix;
  for (const auto& [name, n] : results) mix += " " + name + "=" + std::to_string(n);
  return check.Finish(std::to_string(loaded.records.size()) + " games, max rounds " +
                      std::to_string(max_rounds_seen) + "," + mix + "; " +
                      std::to_string(traces.size()) + " hand-traced games");
}

// ---- Live endpoint ----------------------------------------------------------

std::string Env(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' ? v : fallback;
}

Result LiveSmoke() {
  const std::string key_env = Env("ARENA_LIVE_KEY_ENV", "OPENAI_API_KEY");
  const std::string model = Env("ARENA_LIVE_MODEL", "");
  if (Env(key_env.c_str(), "").empty() || model.empty()) {
    return {Verdict::kSkip, "set " + key_env + " and ARENA_LIVE_MODEL (optionally "
                            "ARENA_LIVE_BASE_URL) to run one game per environment"};
  }
  AgentSpec spec;
  spec.id = "live";
  spec.kind = "llm";
  spec.params = {{"endpoint",
                  {{"base_url", Env("ARENA_LIVE_BASE_URL", "https://api.openai.com/v1")},
                   {"model", model},
                   {"api_key_env", key_env}}}};
  Checker check;
  const fs::path dir = ScratchDir("live");
  Store store(dir);
  for (EnvKind env : kAllEnvs) {
    std::vector<std::unique_ptr<Agent>> owned;
    const int seats = SeatCount(env);
    owned.push_back(MakeAgent(spec));
    for (int s = 1; s < seats; ++s) {
      if (env == EnvKind::kHanabi) owned.push_back(MakeAgent(spec));
      else if (env == EnvKind::kUndercover) owned.push_back(std::make_unique<ClueBot>());
      else owned.push_back(std::make_unique<RandomAgent>());
    }
    std::vector<Agent*> agents;
    for (auto& a : owned) agents.push_back(a.get());
    MatchOptions options;
    options.id = "live-" + std::string(EnvName(env));
    const MatchRecord rec = RunMatch(env, agents, 1, options);
    check.Expect(!rec.aborted, options.id + " aborted: " + rec.abort_reason);
    store.AppendRecord(rec);
  }
  const auto loaded = store.LoadRecords();
  check.Expect(loaded.records.size() == kAllEnvs.size(), "not every record persisted");
  for (const auto& rec : loaded.records) {
    try {
      ReplayAndVerify(rec);
    } catch (const ArenaError& e) {
      check.Expect(false, rec.id + " does not replay: " + e.what());
    }
  }
  fs::remove_all(dir);
  return check.Finish(std::to_string(loaded.records.size()) + " live games persisted");
}

struct Criterion {
  const char* name;
  std::function<Result()> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {"ttt_oracle", TttOracle},
      {"ttt_seven_move_fixture", TttSevenMoveFixture},
      {"c4_valuation", C4Valuation},
      {"hand_census", HandCensus},
      {"equity_convergence", EquityConvergence},
      {"trueskill_numerics", TrueSkillNumerics},
      {"normalization_fixture", NormalizationFixture},
      {"bid_score", BidScore},
      {"end_to_end_determinism", EndToEndDeterminism},
      {"hint_ablation", HintAblation},
      {"undercover_protocol", UndercoverProtocol},
      {"live_smoke", LiveSmoke},
  };
  return criteria;
}

Verdict RunOne(const Criterion& c) {
  Result r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r = {Verdict::kFail, std::string("exception: ") + e.what()};
  }
  const char* tag = r.verdict == Verdict::kPass   ? "PASS"
                    : r.verdict == Verdict::kSkip ? "SKIP"
                                                  : "FAIL";
  std::printf("%s %s: %s\n", tag, c.name, r.detail.c_str());
  std::fflush(stdout);
  return r.verdict;
}

}  // namespace
}  // namespace arena

int main(int argc, char** argv) {
  using arena::Verdict;
  const auto& criteria = arena::Criteria();
  if (argc > 1 && std::string(argv[1]) == "--list") {
    for (const auto& c : criteria) std::printf("%s\n", c.name);
    return 0;
  }
  std::vector<const arena::Criterion*> selected;
  for (const auto& c : criteria) {
    if (argc < 2 || std::string(argv[1]) == c.name) selected.push_back(&c);
  }
  if (selected.empty()) {
    std::fprintf(stderr, "unknown check '%s' (try --list)\n", argv[1]);
    return 2;
  }
  int failed = 0, skipped = 0;
  for (const auto* c : selected) {
    const Verdict v = arena::RunOne(*c);
    if (v == Verdict::kFail) ++failed;
    if (v == Verdict::kSkip) ++skipped;
  }
  if (failed > 0) return 1;
  return skipped == static_cast<int>(selected.size()) ? 77 : 0;
}
