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

#include "arena/match/record.h"

namespace arena {
namespace {

nlohmann::json MessagesToJson(const std::vector<ChatMessage>& messages) {
  auto out = nlohmann::json::array();
  for (const auto& m : messages) {
    out.push_back({{"role", m.role}, {"content", m.content}});
  }
  return out;
}

std::vector<ChatMessage> MessagesFromJson(const nlohmann::json& j) {
  std::vector<ChatMessage> out;
  for (const auto& m : j) {
    out.push_back({m.at("role").get<std::string>(), m.at("content").get<std::string>()});
  }
  return out;
}

ParseStatus ParseStatusFromName(const std::string& s) {
  for (ParseStatus p : {ParseStatus::kOk, ParseStatus::kNoMatch,
                        ParseStatus::kAmbiguous, ParseStatus::kIllegalReference}) {
    if (ParseStatusName(p) == s) return p;
  }
  throw CorruptRecordError("unknown parse status '" + s + "'");
}

nlohmann::json SeatMapToJson(const std::map<int, std::string>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [seat, word] : m) j[PlayerId{seat}.DisplayName()] = word;
  return j;
}

std::map<int, std::string> SeatMapFromJson(const nlohmann::json& j) {
  std::map<int, std::string> out;
  for (const auto& [key, value] : j.items()) {
    if (key.rfind("player_", 0) != 0) throw CorruptRecordError("bad seat key " + key);
    out[std::stoi(key.substr(7))] = value.get<std::string>();
  }
  return out;
}

}  // namespace

std::string_view ParseStatusName(ParseStatus s) {
  switch (s) {
    case ParseStatus::kOk: return "ok";
    case ParseStatus::kNoMatch: return "no_match";
    case ParseStatus::kAmbiguous: return "ambiguous";
    case ParseStatus::kIllegalReference: return "illegal_reference";
  }
  return "ok";
}

IllegalActionPolicy IllegalActionPolicy::FromJson(const nlohmann::json& j) {
  IllegalActionPolicy p;
  if (j.is_null()) return p;
  for (const auto& [key, value] : j.items()) {
    if (key == "max_retries") {
      p.max_retries = value.get<int>();
      if (p.max_retries < 0) throw InvalidConfigError("max_retries must be >= 0");
    } else if (key == "on_exhaustion") {
      const auto s = value.get<std::string>();
      if (s == "forfeit") p.on_exhaustion = OnExhaustion::kForfeit;
      else if (s == "random_legal") p.on_exhaustion = OnExhaustion::kRandomLegal;
      else throw InvalidConfigError("on_exhaustion must be forfeit or random_legal");
    } else {
      throw InvalidConfigError("unknown illegal_action_policy key '" + key + "'");
    }
  }
  return p;
}

nlohmann::json IllegalActionPolicy::ToJson() const {
  return {{"max_retries", max_retries},
          {"on_exhaustion",
           on_exhaustion == OnExhaustion::kForfeit ? "forfeit" : "random_legal"}};
}

std::vector<ActionSpec> MatchRecord::AppliedActions() const {
  std::vector<ActionSpec> out;
  for (const auto& t : turns) {
    if (t.applied) out.push_back(*t.applied);
  }
  return out;
}

nlohmann::json MatchRecord::ToJson() const {
  nlohmann::json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["id"] = id;
  j["env"] = std::string(EnvName(env));
  j["seed"] = SeedToString(seed);
  j["config"] = config;
  j["hints_enabled"] = hints_enabled;
  j["agents"] = agents;
  j["policy"] = policy.ToJson();
  auto& turns_json = j["turns"] = nlohmann::json::array();
  for (const auto& t : turns) {
    nlohmann::json tj = {{"ply", t.ply},
                         {"seat", t.seat},
                         {"attempt", t.attempt},
                         {"observation", t.observation},
                         {"prompt", MessagesToJson(t.prompt)},
                         {"context_messages", t.context_messages},
                         {"raw_completion", t.raw_completion},
                         {"parse", {{"status", std::string(ParseStatusName(t.parse_status))},
                                    {"detail", t.parse_detail}}},
                         {"rewards", t.rewards}};
    if (t.parsed) tj["parse"]["action"] = ActionToJson(*t.parsed);
    if (t.applied) tj["applied"] = ActionToJson(*t.applied);
    if (t.fallback) tj["fallback"] = true;
    if (!t.violation.empty()) tj["violation"] = t.violation;
    turns_json.push_back(std::move(tj));
  }
  j["outcome"] = OutcomeToJson(outcome);
  j["illegal_terminated"] = illegal_terminated;
  if (offender >= 0) j["offender"] = offender;
  j["aborted"] = aborted;
  if (!abort_reason.empty()) j["abort_reason"] = abort_reason;
  j["human_participant"] = human_participant;
  j["final_state"] = final_state;
  j["returns"] = returns;
  if (!guesses.empty()) {
    auto& g = j["guesses"] = nlohmann::json::array();
    for (const auto& e : guesses) {
      g.push_back({{"seat", e.seat},
                   {"raw_completion", e.raw_completion},
                   {"guesses", SeatMapToJson(e.guesses)},
                   {"truth", SeatMapToJson(e.truth)}});
    }
  }
  if (wall_clock) j["wall_clock"] = *wall_clock;
  return j;
}

MatchRecord MatchRecord::FromJson(const nlohmann::json& j) {
  try {
    MatchRecord r;
    if (j.at("schema_version").get<int>() != kRecordSchemaVersion) {
      throw CorruptRecordError("unsupported record schema version");
    }
    r.id = j.at("id").get<std::string>();
    const auto env = ParseEnvKind(j.at("env").get<std::string>());
    if (!env) throw CorruptRecordError("unknown env");
    r.env = *env;
    r.seed = SeedFromJson(j.at("seed"));
    r.config = j.at("config");
    r.hints_enabled = j.at("hints_enabled").get<bool>();
    r.agents = j.at("agents").get<std::vector<std::string>>();
    r.policy = IllegalActionPolicy::FromJson(j.at("policy"));
    for (const auto& tj : j.at("turns")) {
      TurnEntry t;
      t.ply = tj.at("ply").get<int>();
      t.seat = tj.at("seat").get<int>();
      t.attempt = tj.at("attempt").get<int>();
      t.observation = tj.at("observation");
      t.prompt = MessagesFromJson(tj.at("prompt"));
      t.context_messages = tj.at("context_messages").get<std::size_t>();
      t.raw_completion = tj.at("raw_completion").get<std::string>();
      const auto& parse = tj.at("parse");
      t.parse_status = ParseStatusFromName(parse.at("status").get<std::string>());
      t.parse_detail = parse.at("detail").get<std::string>();
      if (parse.contains("action")) t.parsed = ActionFromJson(parse.at("action"));
      if (tj.contains("applied")) t.applied = ActionFromJson(tj.at("applied"));
      t.fallback = tj.value("fallback", false);
      t.violation = tj.value("violation", std::string());
      t.rewards = tj.at("rewards").get<std::vector<double>>();
      r.turns.push_back(std::move(t));
    }
    r.outcome = OutcomeFromJson(j.at("outcome"));
    r.illegal_terminated = j.at("illegal_terminated").get<bool>();
    r.offender = j.value("offender", -1);
    r.aborted = j.at("aborted").get<bool>();
    r.abort_reason = j.value("abort_reason", std::string());
    r.human_participant = j.at("human_participant").get<bool>();
    r.final_state = j.at("final_state").get<std::string>();
    r.returns = j.at("returns").get<std::vector<double>>();
    if (j.contains("guesses")) {
      for (const auto& g : j.at("guesses")) {
        r.guesses.push_back({g.at("seat").get<int>(),
                             g.at("raw_completion").get<std::string>(),
                             SeatMapFromJson(g.at("guesses")),
                             SeatMapFromJson(g.at("truth"))});
      }
    }
    if (j.contains("wall_clock")) r.wall_clock = j.at("wall_clock");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecordError(std::string("malformed match record: ") + e.what());
  } catch (const InvalidConfigError& e) {
    throw CorruptRecordError(std::string("malformed match record: ") + e.what());
  }
}

std::string MatchRecord::ToJsonLine() const { return ToJson().dump(); }

}  // namespace arena
