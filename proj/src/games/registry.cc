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

#include "arena/games/registry.h"

#include "arena/core/rng.h"
#include "arena/games/bargain.h"
#include "arena/games/bid.h"
#include "arena/games/connect_four.h"
#include "arena/games/hanabi.h"
#include "arena/games/holdem.h"
#include "arena/games/tictactoe.h"
#include "arena/games/undercover.h"

namespace arena {
namespace {

void RequireEmpty(EnvKind env, const nlohmann::json& config) {
  if (config.is_null()) return;
  if (!config.is_object() || !config.empty()) {
    throw InvalidConfigError(std::string(EnvName(env)) +
                             " takes no configuration");
  }
}

WordPair PickPair(std::uint64_t seed, const UndercoverConfig& config) {
  if (config.pair) return *config.pair;
  const std::vector<WordPair> custom =
      config.corpus_path.empty() ? std::vector<WordPair>{}
                                 : LoadWordPairs(config.corpus_path);
  const auto& pairs = config.corpus_path.empty() ? DefaultWordPairs() : custom;
  if (pairs.empty()) throw InvalidConfigError("word pair corpus is empty");
  Rng rng(DeriveSeed(seed, 7));
  return pairs[rng.Below(pairs.size())];
}

}  // namespace

std::unique_ptr<GameState> Reset(EnvKind env, std::uint64_t seed,
                                 const nlohmann::json& config) {
  switch (env) {
    case EnvKind::kTicTacToe:
      RequireEmpty(env, config);
      return std::make_unique<TicTacToeState>(seed);
    case EnvKind::kConnectFour:
      RequireEmpty(env, config);
      return std::make_unique<ConnectFourState>(seed);
    case EnvKind::kTexasHoldem:
      return std::make_unique<HoldemState>(seed, HoldemConfig::FromJson(config));
    case EnvKind::kUndercover: {
      const auto c = UndercoverConfig::FromJson(config);
      return std::make_unique<UndercoverState>(seed, PickPair(seed, c), c);
    }
    case EnvKind::kBargain:
      return std::make_unique<BargainState>(seed, BargainLimits::FromJson(config));
    case EnvKind::kBid:
      return std::make_unique<BidState>(seed, BidConfig::FromJson(config));
    case EnvKind::kHanabi:
      return std::make_unique<HanabiState>(seed, HanabiConfig::FromJson(config));
  }
  throw InvalidConfigError("unknown environment");
}

nlohmann::json DefaultConfig(EnvKind env) {
  switch (env) {
    case EnvKind::kTicTacToe:
    case EnvKind::kConnectFour: return nlohmann::json::object();
    case EnvKind::kTexasHoldem: return HoldemConfig{}.ToJson();
    case EnvKind::kUndercover: return UndercoverConfig{}.ToJson();
    case EnvKind::kBargain: return BargainLimits{}.ToJson();
    case EnvKind::kBid: return BidConfig{}.ToJson();
    case EnvKind::kHanabi: return HanabiConfig{}.ToJson();
  }
  return nlohmann::json::object();
}

int SeatCount(EnvKind env) {
  return env == EnvKind::kUndercover ? kUndercoverSeats : 2;
}

int PlyBound(EnvKind env) {
  switch (env) {
    case EnvKind::kTicTacToe: return 9;
    case EnvKind::kConnectFour: return kC4Rows * kC4Cols;
    case EnvKind::kTexasHoldem: return 400;
    case EnvKind::kUndercover: return 2 * 2 * kUndercoverSeats;
    case EnvKind::kBargain: return 2 * 10 + 1;
    case EnvKind::kBid: return 2;
    case EnvKind::kHanabi: return 64;
  }
  return 0;
}

}  // namespace arena
