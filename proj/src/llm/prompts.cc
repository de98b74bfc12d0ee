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

#include "arena/llm/prompts.h"

#include <algorithm>
#include <mutex>
#include <regex>

#include "arena/core/assets.h"

namespace arena {
namespace {

const std::regex& PlaceholderRe() {
  static const std::regex re(R"(\{([A-Za-z_][A-Za-z0-9_]*)\})");
  return re;
}

std::string TrimTrailingNewlines(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

PromptTemplate::PromptTemplate(std::string id, std::string body)
    : id_(std::move(id)), body_(std::move(body)) {}

std::vector<std::string> PromptTemplate::Placeholders() const {
  std::vector<std::string> names;
  for (auto it = std::sregex_iterator(body_.begin(), body_.end(), PlaceholderRe());
       it != std::sregex_iterator(); ++it) {
    std::string name = (*it)[1].str();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(std::move(name));
    }
  }
  return names;
}

std::string PromptTemplate::Render(
    const std::map<std::string, std::string>& bindings) const {
  std::string out;
  auto last = body_.cbegin();
  for (auto it = std::sregex_iterator(body_.begin(), body_.end(), PlaceholderRe());
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const auto found = bindings.find(m[1].str());
    if (found == bindings.end()) {
      throw TemplateError("template " + id_ + ": no binding for {" + m[1].str() + "}");
    }
    out.append(last, m[0].first);
    out += found->second;
    last = m[0].second;
  }
  out.append(last, body_.cend());
  return out;
}

PromptSet PromptSet::Load(EnvKind env, const std::filesystem::path& dir) {
  PromptSet set;
  set.env_ = env;
  const std::filesystem::path root = dir / std::string(EnvName(env));
  if (!std::filesystem::is_directory(root)) {
    throw TemplateError("no prompt directory " + root.string());
  }
  set.system_ = PromptTemplate(std::string(EnvName(env)) + "/system",
                               ReadTextFile(root / "system.txt"));
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.path().extension() != ".txt") continue;
    const std::string stem = entry.path().stem().string();
    if (stem == "system") continue;
    set.parts_[stem] = PromptTemplate(std::string(EnvName(env)) + "/" + stem,
                                      ReadTextFile(entry.path()));
  }
  return set;
}

const PromptSet& PromptSet::Default(EnvKind env) {
  static std::mutex mu;
  static std::map<EnvKind, PromptSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(env);
  if (it == cache.end()) {
    it = cache.emplace(env, Load(env, AssetDir() / "prompts")).first;
  }
  return it->second;
}

const PromptTemplate& PromptSet::Find(const std::string& key) const {
  const auto it = parts_.find(key);
  if (it == parts_.end()) {
    throw TemplateError(std::string(EnvName(env_)) + " has no template " + key);
  }
  return it->second;
}

const PromptTemplate& PromptSet::Observation(const std::string& phase,
                                             bool hints_enabled) const {
  if (!hints_enabled && parts_.count("observation_nohint")) {
    return Find("observation_nohint");
  }
  if (parts_.count("observation_" + phase)) return Find("observation_" + phase);
  return Find("observation");
}

const PromptTemplate& PromptSet::Action(const std::string& phase) const {
  if (parts_.count("action_" + phase)) return Find("action_" + phase);
  return Find("action");
}

const PromptTemplate* PromptSet::Guess() const {
  const auto it = parts_.find("guess");
  return it == parts_.end() ? nullptr : &it->second;
}

bool PromptSet::HasHintAblation() const {
  return parts_.count("observation_nohint") > 0;
}

std::string RenderSystemPrompt(const PromptSet& prompts) {
  return TrimTrailingNewlines(prompts.System().Render({}));
}

std::string RenderTurnPrompt(const PromptSet& prompts, const Observation& obs) {
  const std::string observation = TrimTrailingNewlines(
      prompts.Observation(obs.phase, obs.hints_enabled).Render(obs.text_blocks));
  const std::string action =
      TrimTrailingNewlines(prompts.Action(obs.phase).Render(obs.text_blocks));
  return observation + "\n\n" + action;
}

std::vector<ChatMessage> BuildPrompt(const PromptSet& prompts,
                                     const Observation& obs) {
  return {{"system", RenderSystemPrompt(prompts)},
          {"user", RenderTurnPrompt(prompts, obs)}};
}

std::string RenderGuessPrompt(const PromptSet& prompts, const Observation& obs) {
  const PromptTemplate* guess = prompts.Guess();
  if (guess == nullptr) {
    throw TemplateError(std::string(EnvName(prompts.env())) + " has no guess template");
  }
  return TrimTrailingNewlines(guess->Render(obs.text_blocks));
}

std::string RenderRetryNote(const std::string& reason) {
  static const PromptTemplate retry(
      "retry", ReadTextFile(AssetDir() / "prompts" / "retry.txt"));
  return TrimTrailingNewlines(retry.Render({{"reason", reason}}));
}

}  // namespace arena
