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

#ifndef ARENA_RATING_LEADERBOARD_H_
#define ARENA_RATING_LEADERBOARD_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "arena/match/record.h"
#include "arena/rating/trueskill.h"

namespace arena {

// Origin metric used to rank an environment.
enum class ScoreKind { kTrueSkillMu, kAverageReward, kWinRate };

std::string_view ScoreKindName(ScoreKind k);
ScoreKind ScoreKindFor(EnvKind env);

struct LeaderboardEntry {
  Rating rating;
  int games = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  double total_reward = 0.0;

  double AverageReward() const { return games > 0 ? total_reward / games : 0.0; }
  double WinRate() const { return games > 0 ? static_cast<double>(wins) / games : 0.0; }
};

// One applied rating event; the leaderboard is the left fold of these.
struct RatingEvent {
  std::string record_id;
  EnvKind env = EnvKind::kTicTacToe;
  std::vector<std::string> agents;    // agents scored by this event
  std::vector<std::string> outcomes;  // "win", "draw" or "loss" per agent
  bool rated = false;                 // TrueSkill update applied
  std::vector<Rating> before;
  std::vector<Rating> after;
  std::vector<double> rewards;

  nlohmann::json ToJson() const;
  static RatingEvent FromJson(const nlohmann::json& j);
};

struct RatingConfig {
  TrueSkillParams trueskill;
  // Draw probability per environment; unset envs use trueskill.draw_probability.
  std::map<EnvKind, double> draw_probability = {
      {EnvKind::kTicTacToe, 0.1},
      {EnvKind::kConnectFour, 0.1},
      {EnvKind::kBargain, 0.1},
      {EnvKind::kTexasHoldem, 0.0},
  };

  TrueSkillParams ParamsFor(EnvKind env) const;
  static RatingConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

class Leaderboard {
 public:
  explicit Leaderboard(RatingConfig config = {});

  // Applies one finished match. Aborted and human-participant records and
  // ids seen before are ignored; returns whether the record changed state.
  bool Apply(const MatchRecord& record);
  // Replays a persisted event.
  void ApplyEvent(const RatingEvent& event);

  bool Seen(const std::string& record_id) const { return seen_.contains(record_id); }

  const std::map<std::string, LeaderboardEntry>& Entries(EnvKind env) const;
  // Agents ordered by the environment's origin metric, best first.
  std::vector<std::pair<std::string, LeaderboardEntry>> Ranked(EnvKind env) const;
  double Origin(EnvKind env, const LeaderboardEntry& e) const;

  // Rating trajectory per agent: one entry per rated game.
  const std::map<std::string, std::vector<Rating>>& History(EnvKind env) const;
  const std::vector<RatingEvent>& log() const { return log_; }
  const RatingConfig& config() const { return config_; }

  nlohmann::json ToJson() const;
  std::string ToText() const;
  // env -> agent -> origin score.
  std::map<EnvKind, std::map<std::string, double>> OriginTable() const;

 private:
  LeaderboardEntry& Entry(EnvKind env, const std::string& agent);
  void Record(RatingEvent event);

  RatingConfig config_;
  std::map<EnvKind, std::map<std::string, LeaderboardEntry>> entries_;
  std::map<EnvKind, std::map<std::string, std::vector<Rating>>> history_;
  std::vector<RatingEvent> log_;
  std::set<std::string> seen_;
};

struct ConvergenceParams {
  double sigma_threshold = 1.0;
  int min_games = 50;
  // When window > 0, a mean drift below mu_tolerance over the last `window`
  // games also counts as settled.
  int window = 0;
  double mu_tolerance = 0.1;
};

// Every agent has at least min_games and either max sigma is below the
// threshold or every mean drifted less than mu_tolerance over the window.
bool HasConverged(const std::map<std::string, std::vector<Rating>>& histories,
                  const ConvergenceParams& params = {});

class NormalizationError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

// 100 * x / max. Throws NormalizationError on an empty map or a
// non-positive maximum.
std::map<std::string, double> NormalizeScores(const std::map<std::string, double>& origin);

std::map<EnvKind, std::map<std::string, double>> NormalizeTable(
    const std::map<EnvKind, std::map<std::string, double>>& origin);

// Agent-by-env text matrix with two decimals.
std::string ScoreTableText(const std::map<EnvKind, std::map<std::string, double>>& table);

}  // namespace arena

#endif  // ARENA_RATING_LEADERBOARD_H_
