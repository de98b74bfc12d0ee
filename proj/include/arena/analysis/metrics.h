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

#ifndef ARENA_ANALYSIS_METRICS_H_
#define ARENA_ANALYSIS_METRICS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arena/match/match.h"

namespace arena {

// (bid - value/2) / (value/2): relative distance from the two-bidder
// equilibrium bid. Throws ArenaError when value <= 0.
double BidNashScore(double bid, double value);

struct ActionShare {
  std::uint64_t count = 0;
  double share = 0.0;
  // Hold'em only: mean equity of the mover when the action was taken.
  double mean_equity = 0.0;
};

struct ActionDistribution {
  EnvKind env = EnvKind::kTicTacToe;
  std::uint64_t decisions = 0;
  std::map<std::string, ActionShare> classes;

  nlohmann::json ToJson() const;
  std::string ToText() const;
};

struct DistributionOptions {
  // Restrict to decisions by this agent id; empty means every seat.
  std::string agent;
  // Hold'em equity join.
  std::uint64_t equity_samples = 2000;
  std::uint64_t seed = 0;
};

// Shares of action classes over applied actions of `env`. For Hold'em each
// decision is joined with the mover's Monte Carlo equity at that point.
// Throws ArenaError when no record of `env` is given.
ActionDistribution ComputeActionDistribution(const std::vector<MatchRecord>& records,
                                             EnvKind env,
                                             const DistributionOptions& options = {});

// Fraction of games ended by the illegal-action policy. Aborted games are
// skipped. When `agent` is set only games where that agent offended count as
// errors. Throws ArenaError on an empty set.
double ErrorRate(const std::vector<MatchRecord>& records, const std::string& agent = "");

// Fraction of (non-aborted) games that `agent` won.
double WinRate(const std::vector<MatchRecord>& records, const std::string& agent);

struct GuessRates {
  std::uint64_t games = 0;
  double any_correct = 0.0;
  double all_correct = 0.0;
};

// Case and whitespace insensitive match of each guessed word against the
// truth. Keyed by agent id of the guessing seat. Throws ArenaError when no
// record carries a guess phase.
std::map<std::string, GuessRates> GuessMetrics(const std::vector<MatchRecord>& records);

// Description accuracy from a hand-labelled TSV: record_id, seat, label (0/1).
std::map<std::string, double> DescriptionAccuracy(
    const std::vector<MatchRecord>& records, const std::string& annotation_tsv);

// One row of the hint ablation grid.
struct AblationRow {
  std::string agent;
  EnvKind env = EnvKind::kTicTacToe;
  double win_rate_hints = 0.0;
  double error_rate_hints = 0.0;
  double win_rate_no_hints = 0.0;
  double error_rate_no_hints = 0.0;
  int games = 0;
};

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

struct AblationSpec {
  std::string agent_name;
  AgentFactory agent;
  AgentFactory opponent;
  EnvKind env = EnvKind::kTicTacToe;
  int games = 20;  // per hint setting; seats alternate
  std::uint64_t seed = 0;
};

// Plays `games` matches with hints on and off and reports win and error
// rates of the evaluated agent.
AblationRow RunAblation(const AblationSpec& spec);

std::string AblationTable(const std::vector<AblationRow>& rows);
nlohmann::json AblationJson(const std::vector<AblationRow>& rows);

std::string GuessTable(const std::map<std::string, GuessRates>& rates);

}  // namespace arena

#endif  // ARENA_ANALYSIS_METRICS_H_
