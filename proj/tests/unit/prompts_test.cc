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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arena/core/assets.h"
#include "arena/core/rng.h"
#include "arena/games/registry.h"
#include "arena/llm/prompts.h"

namespace arena {
namespace {

namespace fs = std::filesystem;

// Set ARENA_UPDATE_GOLDEN=1 to rewrite the golden files.
void ExpectGolden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(ARENA_TEST_GOLDEN_DIR) / name;
  if (const char* update = std::getenv("ARENA_UPDATE_GOLDEN"); update && *update == '1') {
    fs::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::ostringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(actual, buf.str()) << name;
}

std::string Transcript(const std::vector<ChatMessage>& messages) {
  std::string out;
  for (const auto& m : messages) out += "### " + m.role + "\n" + m.content + "\n";
  return out;
}

TEST(PromptsTest, TicTacToeOpeningTurnIsExact) {
  auto s = Reset(EnvKind::kTicTacToe, 0);
  const std::string user =
      RenderTurnPrompt(PromptSet::Default(EnvKind::kTicTacToe), s->Observe(0, true));
  EXPECT_EQ(user,
            "You play X.\n\nThe board status is \n- - -\n- - -\n- - -.\n\n"
            "You can only put the mark on [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), "
            "(3, 1), (3, 2), (3, 3)].\n\n"
            "You should only output X and the position of the move, for example: "
            "\"X: (1, 3)\"\n\nThe position you put the mark on must be empty. \n\n"
            "Don't say anything besides mark position.");
}

TEST(PromptsTest, GoldenTurnPromptsForEveryEnvironment) {
  for (EnvKind env : kAllEnvs) {
    const PromptSet& prompts = PromptSet::Default(env);
    Rng rng(5);
    auto s = Reset(env, 5);
    for (int ply = 0; ply < 3 && !s->IsTerminal(); ++ply) {
      const Observation obs = s->Observe(s->CurrentSeat(), true);
      ExpectGolden(std::string(EnvName(env)) + "_ply" + std::to_string(ply) + ".txt",
                   Transcript(BuildPrompt(prompts, obs)));
      const auto legal = s->LegalActions();
      s->ApplyAction(legal[rng.Below(legal.size())]);
    }
  }
}

TEST(PromptsTest, EveryReachablePhaseRenders) {
  for (EnvKind env : kAllEnvs) {
    const PromptSet& prompts = PromptSet::Default(env);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      auto s = Reset(env, seed);
      while (!s->IsTerminal()) {
        for (bool hints : {true, false}) {
          const Observation obs = s->Observe(s->CurrentSeat(), hints);
          ASSERT_NO_THROW(BuildPrompt(prompts, obs)) << EnvName(env) << " " << obs.phase;
        }
        const auto legal = s->LegalActions();
        s->ApplyAction(legal[rng.Below(legal.size())]);
      }
    }
  }
}

TEST(PromptsTest, NoHintVariantDropsTheMoveList) {
  for (EnvKind env : {EnvKind::kTicTacToe, EnvKind::kConnectFour}) {
    const PromptSet& prompts = PromptSet::Default(env);
    ASSERT_TRUE(prompts.HasHintAblation());
    auto s = Reset(env, 0);
    const std::string with = RenderTurnPrompt(prompts, s->Observe(0, true));
    const std::string without = RenderTurnPrompt(prompts, s->Observe(0, false));
    EXPECT_NE(with.find("You can only"), std::string::npos);
    EXPECT_EQ(without.find("You can only"), std::string::npos);
  }
  EXPECT_FALSE(PromptSet::Default(EnvKind::kTexasHoldem).HasHintAblation());
}

TEST(PromptsTest, MissingBindingThrows) {
  const PromptTemplate t("t", "Hello {name}, you hold {cards}.");
  EXPECT_EQ(t.Placeholders(), (std::vector<std::string>{"name", "cards"}));
  EXPECT_EQ(t.Render({{"name", "a"}, {"cards", "AS"}}), "Hello a, you hold AS.");
  EXPECT_THROW(t.Render({{"name", "a"}}), TemplateError);
}

TEST(PromptsTest, GuessPromptOnlyForUndercover) {
  EXPECT_NE(PromptSet::Default(EnvKind::kUndercover).Guess(), nullptr);
  EXPECT_EQ(PromptSet::Default(EnvKind::kBid).Guess(), nullptr);
  EXPECT_THROW(PromptSet::Load(EnvKind::kBid, "/nonexistent"), TemplateError);
}

TEST(PromptsTest, RetryNoteNamesTheReason) {
  EXPECT_NE(RenderRetryNote("position already marked").find("position already marked"),
            std::string::npos);
}

}  // namespace
}  // namespace arena
