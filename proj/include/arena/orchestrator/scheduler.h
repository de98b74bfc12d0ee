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

#ifndef ARENA_ORCHESTRATOR_SCHEDULER_H_
#define ARENA_ORCHESTRATOR_SCHEDULER_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arena/core/rng.h"
#include "arena/orchestrator/config.h"
#include "arena/rating/trueskill.h"

namespace arena {

struct Pairing {
  std::vector<std::string> seats;
  std::uint64_t seed = 0;
  int index = 0;  // match index within the environment
};

// Two-seat pairing for one environment. The information policy first covers
// every unordered pair once per lap (fewest games first), then prefers pairs
// with large rating variance and close means:
//   score = (sigma_a^2 + sigma_b^2) * sqrt(2 beta^2 / c^2)
//           * exp(-(mu_a - mu_b)^2 / (2 c^2)),  c^2 = 2 beta^2 + sigma_a^2 + sigma_b^2
// Seats alternate with each meeting of a pair. The random policy draws a
// uniform pair from a seeded stream. Both are deterministic given the seed
// and the history.
class PairScheduler {
 public:
  PairScheduler(EnvKind env, std::vector<std::string> agents, PairingPolicy policy,
                std::uint64_t seed, double beta);

  // Plans `count` matches from a fixed rating snapshot.
  std::vector<Pairing> NextBatch(const std::map<std::string, Rating>& ratings, int count);

  void Deactivate(const std::string& agent);
  bool Active(const std::string& agent) const;
  std::vector<std::string> ActiveAgents() const;
  int PairGames(const std::string& a, const std::string& b) const;
  int scheduled() const { return next_index_; }

  static double InformationScore(const Rating& a, const Rating& b, double beta);

 private:
  Pairing Next(const std::map<std::string, Rating>& ratings,
               const std::map<std::pair<int, int>, int>& batch_picks);

  EnvKind env_;
  std::vector<std::string> agents_;
  std::vector<bool> active_;
  PairingPolicy policy_;
  std::uint64_t seed_;
  double beta_;
  Rng rng_;
  std::map<std::pair<int, int>, int> pair_games_;
  int next_index_ = 0;
};

// Seed of match `index` in `env` under tournament seed `seed`.
std::uint64_t MatchSeed(std::uint64_t seed, EnvKind env, std::uint64_t index);

}  // namespace arena

#endif  // ARENA_ORCHESTRATOR_SCHEDULER_H_
