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

#include "arena/orchestrator/scheduler.h"

#include <cmath>

namespace arena {

std::uint64_t MatchSeed(std::uint64_t seed, EnvKind env, std::uint64_t index) {
  return DeriveSeed(DeriveSeed(seed, 0x5C4ED + static_cast<std::uint64_t>(env)), index);
}

PairScheduler::PairScheduler(EnvKind env, std::vector<std::string> agents,
                             PairingPolicy policy, std::uint64_t seed, double beta)
    : env_(env),
      agents_(std::move(agents)),
      active_(agents_.size(), true),
      policy_(policy),
      seed_(seed),
      beta_(beta),
      rng_(DeriveSeed(seed, 0x9A1125 + static_cast<std::uint64_t>(env))) {
  if (agents_.size() < 2) throw InvalidConfigError("pairing needs two agents");
}

double PairScheduler::InformationScore(const Rating& a, const Rating& b, double beta) {
  const double var = a.sigma * a.sigma + b.sigma * b.sigma;
  const double c2 = 2 * beta * beta + var;
  const double d = a.mu - b.mu;
  return var * std::sqrt(2 * beta * beta / c2) * std::exp(-d * d / (2 * c2));
}

void PairScheduler::Deactivate(const std::string& agent) {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == agent) active_[i] = false;
  }
}

bool PairScheduler::Active(const std::string& agent) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == agent) return active_[i];
  }
  return false;
}

std::vector<std::string> PairScheduler::ActiveAgents() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (active_[i]) out.push_back(agents_[i]);
  }
  return out;
}

int PairScheduler::PairGames(const std::string& a, const std::string& b) const {
  int ia = -1, ib = -1;
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == a) ia = static_cast<int>(i);
    if (agents_[i] == b) ib = static_cast<int>(i);
  }
  if (ia < 0 || ib < 0) return 0;
  const auto it = pair_games_.find({std::min(ia, ib), std::max(ia, ib)});
  return it == pair_games_.end() ? 0 : it->second;
}

Pairing PairScheduler::Next(const std::map<std::string, Rating>& ratings,
                            const std::map<std::pair<int, int>, int>& batch_picks) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(agents_.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(agents_.size()); ++j) {
      if (active_[i] && active_[j]) pairs.emplace_back(i, j);
    }
  }
  if (pairs.empty()) throw ArenaError("fewer than two active agents");
  auto games = [&](const std::pair<int, int>& p) {
    const auto it = pair_games_.find(p);
    return it == pair_games_.end() ? 0 : it->second;
  };

  std::pair<int, int> chosen = pairs.front();
  if (policy_ == PairingPolicy::kRandom) {
    chosen = pairs[rng_.Below(pairs.size())];
  } else {
    int fewest = games(pairs.front());
    for (const auto& p : pairs) fewest = std::min(fewest, games(p));
    auto rating = [&](int i) {
      const auto it = ratings.find(agents_[i]);
      return it == ratings.end() ? Rating{} : it->second;
    };
    double best = -1;
    for (const auto& p : pairs) {
      // Every pair meets once before any pair meets twice.
      if (fewest == 0 && games(p) != 0) continue;
      const auto picks = batch_picks.find(p);
      const double penalty = 1.0 + (picks == batch_picks.end() ? 0 : picks->second);
      const double score =
          InformationScore(rating(p.first), rating(p.second), beta_) / penalty;
      if (score > best) {
        best = score;
        chosen = p;
      }
    }
  }
  const int meetings = games(chosen);
  pair_games_[chosen] = meetings + 1;
  Pairing out;
  out.index = next_index_++;
  out.seed = MatchSeed(seed_, env_, static_cast<std::uint64_t>(out.index));
  if (meetings % 2 == 0) {
    out.seats = {agents_[chosen.first], agents_[chosen.second]};
  } else {
    out.seats = {agents_[chosen.second], agents_[chosen.first]};
  }
  return out;
}

std::vector<Pairing> PairScheduler::NextBatch(const std::map<std::string, Rating>& ratings,
                                              int count) {
  std::vector<Pairing> out;
  std::map<std::pair<int, int>, int> picks;
  for (int k = 0; k < count; ++k) {
    out.push_back(Next(ratings, picks));
    const auto& s = out.back().seats;
    int a = 0, b = 0;
    for (std::size_t i = 0; i < agents_.size(); ++i) {
      if (agents_[i] == s[0]) a = static_cast<int>(i);
      if (agents_[i] == s[1]) b = static_cast<int>(i);
    }
    picks[{std::min(a, b), std::max(a, b)}]++;
  }
  return out;
}

}  // namespace arena
