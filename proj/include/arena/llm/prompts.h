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

#ifndef ARENA_LLM_PROMPTS_H_
#define ARENA_LLM_PROMPTS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/game.h"
#include "arena/match/agent.h"

namespace arena {

class TemplateError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

// Plain-text body with {name} placeholders. Braces that do not enclose an
// identifier are literal text.
class PromptTemplate {
 public:
  PromptTemplate() = default;
  PromptTemplate(std::string id, std::string body);

  const std::string& id() const { return id_; }
  const std::string& body() const { return body_; }
  // Distinct placeholder names in order of first use.
  std::vector<std::string> Placeholders() const;
  // Throws TemplateError naming the first unbound placeholder.
  std::string Render(const std::map<std::string, std::string>& bindings) const;

 private:
  std::string id_;
  std::string body_;
};

// Templates for one environment, loaded from <dir>/<env>/.
//   system.txt
//   observation[_<phase>].txt, observation_nohint.txt (hint ablation)
//   action[_<phase>].txt
//   guess.txt (Undercover only)
class PromptSet {
 public:
  static PromptSet Load(EnvKind env, const std::filesystem::path& dir);
  // Cached set from AssetDir()/prompts.
  static const PromptSet& Default(EnvKind env);

  EnvKind env() const { return env_; }
  const PromptTemplate& System() const { return system_; }
  // Phase-specific file first, then the generic one. The no-hint variant is
  // used when hints are off and the environment ships one.
  const PromptTemplate& Observation(const std::string& phase,
                                    bool hints_enabled) const;
  const PromptTemplate& Action(const std::string& phase) const;
  const PromptTemplate* Guess() const;
  bool HasHintAblation() const;

 private:
  const PromptTemplate& Find(const std::string& key) const;

  EnvKind env_ = EnvKind::kTicTacToe;
  PromptTemplate system_;
  std::map<std::string, PromptTemplate> parts_;
};

// Rendered system prompt for `env`.
std::string RenderSystemPrompt(const PromptSet& prompts);
// Observation text followed by the action instruction, separated by a blank
// line.
std::string RenderTurnPrompt(const PromptSet& prompts, const Observation& obs);
// [system, user] for one stateless turn.
std::vector<ChatMessage> BuildPrompt(const PromptSet& prompts,
                                     const Observation& obs);
// Undercover post-game guess request.
std::string RenderGuessPrompt(const PromptSet& prompts, const Observation& obs);
// Retry note sent after a rejected answer.
std::string RenderRetryNote(const std::string& reason);

}  // namespace arena

#endif  // ARENA_LLM_PROMPTS_H_
