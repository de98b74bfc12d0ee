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

#include "arena/orchestrator/config.h"

#include <algorithm>
#include <regex>
#include <set>

#include <yaml-cpp/yaml.h>

#include "arena/core/assets.h"
#include "arena/core/serialize.h"
#include "arena/games/registry.h"

namespace arena {
namespace {

nlohmann::json ScalarToJson(const YAML::Node& node) {
  const std::string& s = node.Scalar();
  if (node.Tag() == "!") return s;  // quoted
  static const std::regex int_re(R"(^[-+]?\d+$)");
  static const std::regex float_re(R"(^[-+]?(\d+\.\d*|\.\d+|\d+)([eE][-+]?\d+)?$)");
  if (s == "~" || s == "null" || s == "Null" || s == "NULL") return nullptr;
  if (s == "true" || s == "True" || s == "TRUE") return true;
  if (s == "false" || s == "False" || s == "FALSE") return false;
  if (std::regex_match(s, int_re)) {
    try {
      if (s[0] == '-') return std::stoll(s);
      return std::stoull(s[0] == '+' ? s.substr(1) : s);
    } catch (const std::out_of_range&) {
      return s;
    }
  }
  if (std::regex_match(s, float_re)) return std::stod(s);
  return s;
}

nlohmann::json NodeToJson(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      return nullptr;
    case YAML::NodeType::Scalar:
      return ScalarToJson(node);
    case YAML::NodeType::Sequence: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& item : node) arr.push_back(NodeToJson(item));
      return arr;
    }
    case YAML::NodeType::Map: {
      nlohmann::json obj = nlohmann::json::object();
      for (const auto& kv : node) obj[kv.first.as<std::string>()] = NodeToJson(kv.second);
      return obj;
    }
  }
  return nullptr;
}

EnvKind EnvFromJson(const nlohmann::json& j) {
  const auto env = ParseEnvKind(j.get<std::string>());
  if (!env) throw InvalidConfigError("unknown environment " + j.get<std::string>());
  return *env;
}

void RejectUnknown(const nlohmann::json& j, const std::set<std::string>& allowed,
                   const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw InvalidConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

}  // namespace

std::string_view PairingPolicyName(PairingPolicy p) {
  return p == PairingPolicy::kRandom ? "random" : "information";
}

nlohmann::json YamlToJson(const std::string& text) {
  try {
    return NodeToJson(YAML::Load(text));
  } catch (const YAML::Exception& e) {
    throw InvalidConfigError(std::string("YAML: ") + e.what());
  }
}

bool SupportsEnv(const AgentSpec& spec, EnvKind env) {
  if (spec.kind == "ttt_oracle") return env == EnvKind::kTicTacToe;
  if (spec.kind == "c4_heuristic") return env == EnvKind::kConnectFour;
  if (spec.kind == "equity") return env == EnvKind::kTexasHoldem;
  if (spec.kind == "clue_bot") return env == EnvKind::kUndercover;
  if (spec.kind == "format_fragile") {
    return env == EnvKind::kTicTacToe || env == EnvKind::kConnectFour;
  }
  return true;
}

TournamentConfig TournamentConfig::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidConfigError("config must be a mapping");
  RejectUnknown(j,
                {"version", "seed", "envs", "agents", "rosters", "pairing", "min_games",
                 "max_games", "batch_size", "workers", "max_concurrency", "hints",
                 "policy", "convergence", "rating", "env_config", "undercover",
                 "output_dir"},
                "config");
  TournamentConfig c;
  try {
    if (j.contains("version") && j["version"].get<int>() != kConfigSchemaVersion) {
      throw InvalidConfigError("unsupported config version " + j["version"].dump());
    }
    if (j.contains("seed")) c.seed = SeedFromJson(j["seed"]);
    for (const auto& e : j.at("envs")) c.envs.push_back(EnvFromJson(e));
    for (const auto& a : j.at("agents")) c.agents.push_back(AgentSpec::FromJson(a));
    if (j.contains("rosters")) {
      for (const auto& [env, ids] : j["rosters"].items()) {
        c.rosters[EnvFromJson(env)] = ids.get<std::vector<std::string>>();
      }
    }
    if (j.contains("pairing")) {
      const std::string p = j["pairing"].get<std::string>();
      if (p == "information") c.pairing = PairingPolicy::kInformation;
      else if (p == "random") c.pairing = PairingPolicy::kRandom;
      else throw InvalidConfigError("pairing must be information or random");
    }
    c.min_games = j.value("min_games", c.min_games);
    c.convergence.min_games = c.min_games;
    c.max_games = j.value("max_games", c.max_games);
    c.batch_size = j.value("batch_size", c.batch_size);
    c.workers = j.value("workers", c.workers);
    c.max_concurrency = j.value("max_concurrency", c.max_concurrency);
    c.hints_enabled = j.value("hints", c.hints_enabled);
    if (j.contains("policy")) c.policy = IllegalActionPolicy::FromJson(j["policy"]);
    if (j.contains("convergence")) {
      const auto& cv = j["convergence"];
      RejectUnknown(cv, {"sigma_threshold", "min_games", "window", "mu_tolerance"},
                    "convergence");
      c.convergence.sigma_threshold =
          cv.value("sigma_threshold", c.convergence.sigma_threshold);
      c.convergence.min_games = cv.value("min_games", c.convergence.min_games);
      c.convergence.window = cv.value("window", c.convergence.window);
      c.convergence.mu_tolerance = cv.value("mu_tolerance", c.convergence.mu_tolerance);
    }
    if (j.contains("rating")) c.rating = RatingConfig::FromJson(j["rating"]);
    if (j.contains("env_config")) {
      for (const auto& [env, cfg] : j["env_config"].items()) {
        c.env_config[EnvFromJson(env)] = cfg;
      }
    }
    if (j.contains("undercover")) {
      const auto& u = j["undercover"];
      RejectUnknown(u, {"games", "reference", "evaluated", "guess"}, "undercover");
      c.undercover.games = u.value("games", c.undercover.games);
      c.undercover.reference = u.value("reference", std::string());
      if (u.contains("evaluated")) {
        c.undercover.evaluated = u["evaluated"].get<std::vector<std::string>>();
      }
      c.undercover.guess = u.value("guess", false);
    }
    if (j.contains("output_dir")) c.output_dir = j["output_dir"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfigError(std::string("config: ") + e.what());
  }
  c.Validate();
  return c;
}

nlohmann::json TournamentConfig::ToJson() const {
  nlohmann::json j;
  j["version"] = kConfigSchemaVersion;
  j["seed"] = SeedToString(seed);
  for (EnvKind e : envs) j["envs"].push_back(std::string(EnvName(e)));
  for (const auto& a : agents) j["agents"].push_back(a.ToJson());
  if (!rosters.empty()) {
    for (const auto& [env, ids] : rosters) j["rosters"][std::string(EnvName(env))] = ids;
  }
  j["pairing"] = std::string(PairingPolicyName(pairing));
  j["min_games"] = min_games;
  j["max_games"] = max_games;
  j["batch_size"] = batch_size;
  j["workers"] = workers;
  j["max_concurrency"] = max_concurrency;
  j["hints"] = hints_enabled;
  j["policy"] = policy.ToJson();
  j["convergence"] = {{"sigma_threshold", convergence.sigma_threshold},
                      {"min_games", convergence.min_games},
                      {"window", convergence.window},
                      {"mu_tolerance", convergence.mu_tolerance}};
  j["rating"] = rating.ToJson();
  for (const auto& [env, cfg] : env_config) j["env_config"][std::string(EnvName(env))] = cfg;
  j["undercover"] = {{"games", undercover.games},
                     {"reference", undercover.reference},
                     {"evaluated", undercover.evaluated},
                     {"guess", undercover.guess}};
  j["output_dir"] = output_dir.string();
  return j;
}

TournamentConfig TournamentConfig::Load(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidConfigError(path.string() + ": malformed JSON");
    return FromJson(j);
  }
  return FromJson(YamlToJson(text));
}

const AgentSpec& TournamentConfig::Agent(const std::string& id) const {
  for (const auto& a : agents) {
    if (a.id == id) return a;
  }
  throw InvalidConfigError("no agent with id " + id);
}

std::vector<std::string> TournamentConfig::RosterFor(EnvKind env) const {
  if (const auto it = rosters.find(env); it != rosters.end()) return it->second;
  std::vector<std::string> ids;
  for (const auto& a : agents) {
    if (!SupportsEnv(a, env)) continue;
    if (env == EnvKind::kUndercover && a.id == undercover.reference) continue;
    ids.push_back(a.id);
  }
  if (env == EnvKind::kUndercover && !undercover.evaluated.empty()) {
    return undercover.evaluated;
  }
  return ids;
}

void TournamentConfig::Validate() const {
  if (envs.empty()) throw InvalidConfigError("config lists no environments");
  std::set<std::string> ids;
  for (const auto& a : agents) {
    if (!ids.insert(a.id).second) throw InvalidConfigError("duplicate agent id " + a.id);
  }
  if (min_games < 1 || max_games < 1 || batch_size < 1 || workers < 1 ||
      max_concurrency < 1 || undercover.games < 1) {
    throw InvalidConfigError("game counts, batch_size and workers must be positive");
  }
  for (const auto& [env, roster] : rosters) {
    for (const auto& id : roster) {
      if (!SupportsEnv(Agent(id), env)) {
        throw InvalidConfigError(id + " cannot play " + std::string(EnvName(env)));
      }
    }
  }
  for (EnvKind env : envs) {
    const auto roster = RosterFor(env);
    if (env == EnvKind::kUndercover) {
      if (undercover.reference.empty()) {
        throw InvalidConfigError("undercover needs undercover.reference");
      }
      Agent(undercover.reference);
      if (roster.empty()) throw InvalidConfigError("undercover has no evaluated agents");
      for (const auto& id : roster) Agent(id);
    } else if (env == EnvKind::kHanabi) {
      if (roster.empty()) throw InvalidConfigError("hanabi roster is empty");
    } else if (roster.size() < 2) {
      throw InvalidConfigError(std::string(EnvName(env)) + " needs at least two agents");
    }
    if (const auto it = env_config.find(env); it != env_config.end()) {
      Reset(env, seed, it->second);
    }
  }
}

}  // namespace arena
