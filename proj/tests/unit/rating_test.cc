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

#include <cmath>

#include "arena/games/undercover.h"
#include "arena/rating/leaderboard.h"
#include "arena/rating/trueskill.h"
#include "oracles.h"

namespace arena {
namespace {

MatchRecord Finished(const std::string& id, EnvKind env, std::vector<std::string> agents,
                     Outcome outcome, std::vector<double> returns) {
  MatchRecord r;
  r.id = id;
  r.env = env;
  r.agents = std::move(agents);
  r.outcome = outcome;
  r.returns = std::move(returns);
  return r;
}

// Root of Phi(x) = p by bisection on std::erf.
double PhiInverse(double p) {
  double lo = -10.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (0.5 * (1 + std::erf(mid / std::sqrt(2.0))) < p ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

TEST(TrueSkillTest, WinUpdateMatchesHighPrecisionReference) {
  const TrueSkillParams params;
  const std::vector<std::pair<Rating, Rating>> cases = {
      {{25.0, 25.0 / 3}, {25.0, 25.0 / 3}},
      {{30.0, 4.0}, {18.0, 6.5}},
      {{12.0, 1.2}, {40.0, 2.0}},
      {{25.0, 0.8}, {25.0, 8.0}},
  };
  for (const auto& [a, b] : cases) {
    const auto [na, nb] = UpdateOneVsOne(a, b, MatchResult::kAWins, params);
    const auto [wa, wb] = oracle::WinUpdate({a.mu, a.sigma}, {b.mu, b.sigma}, params.beta);
    EXPECT_NEAR(na.mu, wa.mu, 1e-6);
    EXPECT_NEAR(na.sigma, wa.sigma, 1e-6);
    EXPECT_NEAR(nb.mu, wb.mu, 1e-6);
    EXPECT_NEAR(nb.sigma, wb.sigma, 1e-6);
    const auto [ra, rb] = UpdateOneVsOne(b, a, MatchResult::kBWins, params);
    EXPECT_NEAR(ra.mu, nb.mu, 1e-12);
    EXPECT_NEAR(rb.mu, na.mu, 1e-12);
  }
}

TEST(TrueSkillTest, UpsetMovesRatingsFurther) {
  const Rating weak{20.0, 5.0}, strong{30.0, 5.0};
  const auto [upset_winner, upset_loser] = UpdateOneVsOne(weak, strong, MatchResult::kAWins);
  const auto [expected_winner, expected_loser] = UpdateOneVsOne(strong, weak, MatchResult::kAWins);
  EXPECT_GT(upset_winner.mu - weak.mu, expected_winner.mu - strong.mu);
  EXPECT_GT(strong.mu - upset_loser.mu, weak.mu - expected_loser.mu);
}

TEST(TrueSkillTest, DrawBetweenEqualsKeepsMeans) {
  TrueSkillParams params;
  params.draw_probability = 0.1;
  const Rating r;
  const auto [a, b] = UpdateOneVsOne(r, r, MatchResult::kDraw, params);
  EXPECT_NEAR(a.mu, r.mu, 1e-9);
  EXPECT_NEAR(b.mu, r.mu, 1e-9);
  EXPECT_LT(a.sigma, r.sigma);
  EXPECT_NEAR(params.DrawMargin(), PhiInverse(0.55) * std::sqrt(2.0) * params.beta, 1e-9);
}

TEST(TrueSkillTest, ParamValidation) {
  TrueSkillParams p;
  p.draw_probability = 1.0;
  EXPECT_THROW(p.Validate(), RatingError);
  p = {};
  p.beta = 0.0;
  EXPECT_THROW(p.Validate(), RatingError);
  EXPECT_THROW(TrueSkillParams::FromJson({{"sigma0", -1.0}}), ArenaError);
}

TEST(LeaderboardTest, IgnoresAbortedHumanAndDuplicateRecords) {
  Leaderboard board;
  MatchRecord ok = Finished("m1", EnvKind::kTicTacToe, {"a", "b"}, Outcome::Win(0), {1, -1});
  EXPECT_TRUE(board.Apply(ok));
  EXPECT_FALSE(board.Apply(ok));
  MatchRecord aborted = ok;
  aborted.id = "m2";
  aborted.aborted = true;
  EXPECT_FALSE(board.Apply(aborted));
  MatchRecord human = ok;
  human.id = "m3";
  human.human_participant = true;
  EXPECT_FALSE(board.Apply(human));
  const auto& entries = board.Entries(EnvKind::kTicTacToe);
  EXPECT_EQ(entries.at("a").games, 1);
  EXPECT_EQ(entries.at("a").wins, 1);
  EXPECT_EQ(entries.at("b").losses, 1);
  EXPECT_GT(entries.at("a").rating.mu, entries.at("b").rating.mu);
  EXPECT_EQ(board.log().size(), 1u);
  EXPECT_TRUE(board.Seen("m3"));
}

TEST(LeaderboardTest, OriginMetricsPerEnvironment) {
  Leaderboard board;
  board.Apply(Finished("b1", EnvKind::kBid, {"a", "b"}, Outcome::Win(0), {24.0, 0.0}));
  board.Apply(Finished("b2", EnvKind::kBid, {"b", "a"}, Outcome::Win(0), {10.0, 0.0}));
  // Undercover scores only the agent that held the odd word.
  const std::vector<std::string> five = {"a", "b", "c", "d", "e"};
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    MatchRecord r = Finished("u" + std::to_string(seed), EnvKind::kUndercover, five,
                             Outcome::Failure(), {0, 0, 0, 0, 0});
    r.seed = seed;
    const int odd = UndercoverSeatFor(seed, 5);
    std::vector<int> others;
    for (int s = 0; s < 5; ++s) {
      if (s != odd) others.push_back(s);
    }
    r.outcome = seed == 0 ? Outcome::Win(odd) : Outcome::Team(others);
    board.Apply(r);
  }
  const auto table = board.OriginTable();
  EXPECT_DOUBLE_EQ(table.at(EnvKind::kBid).at("a"), 12.0);
  EXPECT_DOUBLE_EQ(table.at(EnvKind::kBid).at("b"), 5.0);
  const auto& uc = board.Entries(EnvKind::kUndercover);
  int games = 0;
  for (const auto& [agent, e] : uc) games += e.games;
  EXPECT_EQ(games, 2);
  const std::string first = five[UndercoverSeatFor(0, 5)];
  EXPECT_GE(uc.at(first).wins, 1);
  EXPECT_EQ(board.Ranked(EnvKind::kBid).front().first, "a");
}

TEST(LeaderboardTest, EventReplayRebuildsTheSameState) {
  Leaderboard live;
  const char* names[] = {"a", "b", "c"};
  for (int i = 0; i < 30; ++i) {
    const std::string x = names[i % 3], y = names[(i + 1) % 3];
    Outcome o = i % 4 == 0 ? Outcome::Draw() : Outcome::Win(i % 2);
    live.Apply(Finished("g" + std::to_string(i), EnvKind::kConnectFour, {x, y}, o, {0, 0}));
  }
  Leaderboard replayed;
  for (const auto& ev : live.log()) {
    replayed.ApplyEvent(RatingEvent::FromJson(nlohmann::json::parse(ev.ToJson().dump())));
  }
  for (const auto& [agent, e] : live.Entries(EnvKind::kConnectFour)) {
    const auto& r = replayed.Entries(EnvKind::kConnectFour).at(agent);
    EXPECT_EQ(r.rating, e.rating) << agent;
    EXPECT_EQ(r.games, e.games);
  }
  EXPECT_EQ(live.ToJson(), replayed.ToJson());
}

TEST(LeaderboardTest, SelfPlayIsNotRated) {
  Leaderboard board;
  board.Apply(Finished("s", EnvKind::kTicTacToe, {"a", "a"}, Outcome::Win(0), {1, -1}));
  EXPECT_TRUE(board.log().empty() || !board.log().front().rated);
}

TEST(ConvergenceTest, SigmaAndDriftCriteria) {
  std::map<std::string, std::vector<Rating>> h;
  h["a"] = std::vector<Rating>(60, Rating{25.0, 0.9});
  h["b"] = std::vector<Rating>(60, Rating{20.0, 0.95});
  EXPECT_TRUE(HasConverged(h));
  h["b"].back().sigma = 1.5;
  EXPECT_FALSE(HasConverged(h));
  ConvergenceParams windowed;
  windowed.window = 10;
  EXPECT_TRUE(HasConverged(h, windowed));
  h["b"].back().mu = 21.0;
  EXPECT_FALSE(HasConverged(h, windowed));
  h["a"].resize(10);
  EXPECT_FALSE(HasConverged(h));
  EXPECT_FALSE(HasConverged({}));
}

TEST(NormalizationTest, BestScoreMapsToOneHundred) {
  const auto n = NormalizeScores({{"a", 24.03}, {"b", 29.02}, {"c", 0.0}});
  EXPECT_DOUBLE_EQ(n.at("b"), 100.0);
  EXPECT_NEAR(n.at("a"), 82.805, 0.001);
  EXPECT_DOUBLE_EQ(n.at("c"), 0.0);
  EXPECT_THROW(NormalizeScores({}), NormalizationError);
  EXPECT_THROW(NormalizeScores({{"a", 0.0}, {"b", -1.0}}), NormalizationError);
}

}  // namespace
}  // namespace arena
