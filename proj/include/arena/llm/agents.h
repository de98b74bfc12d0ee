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

#ifndef ARENA_LLM_AGENTS_H_
#define ARENA_LLM_AGENTS_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/rng.h"
#include "arena/llm/client.h"
#include "arena/llm/prompts.h"
#include "arena/match/agent.h"
#include "json.hpp"

namespace arena {

struct LlmAgentOptions {
  // Keep the whole match as one conversation; otherwise every turn sends only
  // the system prompt and the current observation.
  bool conversation = true;
  // Template root; empty means AssetDir()/prompts.
  std::filesystem::path prompt_dir;
};

// Templates -> backend -> parser.
class LlmAgent final : public Agent {
 public:
  LlmAgent(std::string id, std::shared_ptr<ChatBackend> backend,
           LlmAgentOptions options = {});

  std::string id() const override { return id_; }
  void BeginMatch(EnvKind env, int seat, std::uint64_t seed) override;
  AgentTurn Act(const Observation& obs) override;
  void NotifyRejected(const std::string& reason) override;
  std::optional<GuessTurn> GuessWords(const Observation& final_obs,
                                      const std::vector<int>& others) override;

  const std::vector<ChatMessage>& history() const { return history_; }

 private:
  const PromptSet& Prompts(EnvKind env);
  // Sends `user` and returns (new messages, context size, reply).
  std::string Exchange(const PromptSet& prompts, std::string user,
                       std::vector<ChatMessage>* sent, std::size_t* context);

  std::string id_;
  std::shared_ptr<ChatBackend> backend_;
  LlmAgentOptions options_;
  std::optional<PromptSet> custom_prompts_;
  std::vector<ChatMessage> history_;
  std::string pending_retry_;
};

// Uniform over the legal list.
class RandomAgent final : public Agent {
 public:
  explicit RandomAgent(std::string id = "random") : id_(std::move(id)) {}
  std::string id() const override { return id_; }
  void BeginMatch(EnvKind env, int seat, std::uint64_t seed) override;
  AgentTurn Act(const Observation& obs) override;

 private:
  std::string id_;
  Rng rng_{0};
};

// Perfect TicTacToe play read off the observed board; ties among optimal moves
// are broken by the match seed.
class TttOracleAgent final : public Agent {
 public:
  explicit TttOracleAgent(std::string id = "ttt_oracle") : id_(std::move(id)) {}
  std::string id() const override { return id_; }
  void BeginMatch(EnvKind env, int seat, std::uint64_t seed) override;
  AgentTurn Act(const Observation& obs) override;

 private:
  std::string id_;
  Rng rng_{0};
};

// ConnectFour: win now, else block, else the drop maximizing the board value.
class C4HeuristicAgent final : public Agent {
 public:
  explicit C4HeuristicAgent(std::string id = "c4_heuristic") : id_(std::move(id)) {}
  std::string id() const override { return id_; }
  void BeginMatch(EnvKind env, int seat, std::uint64_t seed) override;
  AgentTurn Act(const Observation& obs) override;

 private:
  std::string id_;
  Rng rng_{0};
};

// Hold'em by Monte Carlo equity thresholds.
class EquityAgent final : public Agent {
 public:
  explicit EquityAgent(std::string id = "equity", std::uint64_t samples = 400)
      : id_(std::move(id)), samples_(samples) {}
  std::string id() const override { return id_; }
  void BeginMatch(EnvKind env, int seat, std::uint64_t seed) override;
  AgentTurn Act(const Observation& obs) override;

 private:
  std::string id_;
  std::uint64_t samples_;
  std::uint64_t seed_ = 0;
  std::uint64_t decisions_ = 0;
};

// Undercover clue bot. Its clue is the initial of its word plus a per-turn
// tag ("M-12"), never the word itself. It votes for a seat whose clue initial
// differs from the most common one, seeded uniform among candidates.
class ClueBot final : public Agent {
 public:
  explicit ClueBot(std::string id = "clue_bot") : id_(std::move(id)) {}
  std::string id() const override { return id_; }
  void BeginMatch(EnvKind env, int seat, std::uint64_t seed) override;
  AgentTurn Act(const Observation& obs) override;
  std::optional<GuessTurn> GuessWords(const Observation& final_obs,
                                      const std::vector<int>& others) override;

  static std::string ClueFor(const std::string& word, int round, int seat);

 private:
  std::string id_;
  int seat_ = 0;
  Rng rng_{0};
};

// Replies "format-fragile" text: a legal answer only when the rendered
// prompt lists the legal moves, otherwise an off-board reference. Goes
// through the full template and parser path.
std::unique_ptr<Agent> MakeFormatFragileAgent(std::string id = "format_fragile");

// Replays fixed completions in order, cycling; parsed like model output.
std::unique_ptr<Agent> MakeScriptedAgent(std::string id, std::vector<std::string> replies,
                                         LlmAgentOptions options = {});

// Roster entry. kind is one of AgentKinds(); params are kind-specific:
//   llm:       {"endpoint": {...}, "conversation": true}
//   scripted:  {"replies": ["X: (1, 1)", ...]}
//   equity:    {"samples": 400}
struct AgentSpec {
  std::string id;
  std::string kind;
  nlohmann::json params = nlohmann::json::object();

  static AgentSpec FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
  bool IsScripted() const { return kind != "llm"; }
};

const std::vector<std::string>& AgentKinds();

// Throws InvalidConfigError for an unknown kind or bad params.
std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec);

}  // namespace arena

#endif  // ARENA_LLM_AGENTS_H_
