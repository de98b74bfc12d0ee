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

#include <set>

#include "arena/core/rng.h"
#include "arena/core/serialize.h"
#include "arena/games/registry.h"
#include "arena/games/tictactoe.h"
#include "arena/llm/agents.h"
#include "arena/match/match.h"

namespace arena {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(RngTest, BelowStaysInRangeAndCoversIt) {
  Rng rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.Below(7);
    ASSERT_LT(x, 7u);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(RngTest, DerivedStreamsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(DeriveSeed(7, s));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(2, 0));
}

TEST(EnvNameTest, RoundTripsAndAliases) {
  for (EnvKind env : kAllEnvs) EXPECT_EQ(ParseEnvKind(EnvName(env)), env);
  EXPECT_EQ(ParseEnvKind("connect_four"), EnvKind::kConnectFour);
  EXPECT_EQ(ParseEnvKind("holdem"), EnvKind::kTexasHoldem);
  EXPECT_FALSE(ParseEnvKind("chess").has_value());
}

TEST(ActionJsonTest, EveryLegalActionRoundTrips) {
  for (EnvKind env : kAllEnvs) {
    Rng rng(3);
    auto state = Reset(env, 11);
    for (int ply = 0; ply < 8 && !state->IsTerminal(); ++ply) {
      for (const auto& a : state->LegalActions()) {
        const ActionSpec back = ActionFromJson(ActionToJson(a));
        EXPECT_TRUE(back.SamePayload(a)) << a.surface;
        EXPECT_EQ(back.surface, a.surface);
      }
      const auto legal = state->LegalActions();
      state->ApplyAction(legal[rng.Below(legal.size())]);
    }
  }
}

TEST(ActionJsonTest, MalformedInputThrows) {
  EXPECT_THROW(ActionFromJson({{"env", "tictactoe"}}), CorruptRecordError);
  EXPECT_THROW(ActionFromJson({{"env", "nope"}, {"surface", ""}, {"payload", {}}}),
               CorruptRecordError);
}

TEST(SeedTest, SixtyFourBitSeedsSurviveJson) {
  const std::uint64_t seed = 0xFEDCBA9876543210ULL;
  const nlohmann::json j = SeedToString(seed);
  EXPECT_EQ(SeedFromJson(nlohmann::json::parse(j.dump())), seed);
  EXPECT_EQ(SeedFromJson(12), 12u);
}

TEST(StepTest, ValueSemanticsLeaveInputUntouched) {
  auto state = Reset(EnvKind::kTicTacToe, 0);
  const std::string before = state->Serialize();
  const ActionSpec a = state->LegalActions().front();
  StepOutput out = Step(*state, PlayerId{0}, a);
  EXPECT_EQ(state->Serialize(), before);
  EXPECT_NE(out.state->Serialize(), before);
  EXPECT_EQ(out.state->CurrentSeat(), 1);
}

TEST(StepTest, WrongActorAndIllegalActionThrowWithoutMutation) {
  auto state = Reset(EnvKind::kTicTacToe, 0);
  const ActionSpec a = state->LegalActions().front();
  EXPECT_THROW(Step(*state, PlayerId{1}, a), WrongActorError);
  state->ApplyAction(a);
  const std::string before = state->Serialize();
  // Same cell again, now for O.
  const ActionSpec again = MakeAction(EnvKind::kTicTacToe, 1, TttMove{Mark::kO, 1, 1});
  EXPECT_THROW(state->ApplyAction(again), IllegalActionError);
  EXPECT_EQ(state->Serialize(), before);
}

TEST(RegistryTest, UnknownConfigKeysAreRejected) {
  for (EnvKind env : kAllEnvs) {
    EXPECT_THROW(Reset(env, 0, {{"no_such_key", 1}}), InvalidConfigError) << EnvName(env);
    EXPECT_NO_THROW(Reset(env, 0, DefaultConfig(env))) << EnvName(env);
  }
}

TEST(RegistryTest, RandomPlayoutsTerminateWithinBound) {
  for (EnvKind env : kAllEnvs) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      auto state = Reset(env, seed);
      int plies = 0;
      while (!state->IsTerminal()) {
        const auto legal = state->LegalActions();
        ASSERT_FALSE(legal.empty()) << EnvName(env);
        state->ApplyAction(legal[rng.Below(legal.size())]);
        ASSERT_LE(++plies, PlyBound(env)) << EnvName(env);
      }
      EXPECT_NE(state->GetOutcome().kind, OutcomeKind::kOngoing) << EnvName(env);
      EXPECT_EQ(static_cast<int>(state->Returns().size()), SeatCount(env));
    }
  }
}

TEST(RegistryTest, SameSeedSameGame) {
  for (EnvKind env : kAllEnvs) {
    auto a = Reset(env, 99);
    auto b = Reset(env, 99);
    EXPECT_EQ(a->Serialize(), b->Serialize()) << EnvName(env);
  }
}

TEST(RecordTest, JsonRoundTripAndReplay) {
  for (EnvKind env : kAllEnvs) {
    std::vector<std::unique_ptr<Agent>> owned;
    std::vector<Agent*> seats;
    for (int s = 0; s < SeatCount(env); ++s) {
      owned.push_back(std::make_unique<RandomAgent>("r" + std::to_string(s)));
      seats.push_back(owned.back().get());
    }
    const MatchRecord rec = RunMatch(env, seats, 5);
    const MatchRecord back = MatchRecord::FromJson(nlohmann::json::parse(rec.ToJsonLine()));
    EXPECT_EQ(back.ToJsonLine(), rec.ToJsonLine()) << EnvName(env);
    EXPECT_EQ(ReplayAndVerify(back)->Serialize(), rec.final_state) << EnvName(env);
    EXPECT_FALSE(rec.wall_clock.has_value());
  }
}

TEST(RecordTest, TamperedRecordFailsVerification) {
  RandomAgent a("a"), b("b");
  std::vector<Agent*> seats = {&a, &b};
  MatchRecord rec = RunMatch(EnvKind::kTicTacToe, seats, 1);
  rec.final_state = "tampered";
  EXPECT_THROW(ReplayAndVerify(rec), CorruptRecordError);
  EXPECT_THROW(MatchRecord::FromJson({{"id", 3}}), CorruptRecordError);
}

}  // namespace
}  // namespace arena
