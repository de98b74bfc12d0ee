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

#include "arena/core/serialize.h"

#include <charconv>

namespace arena {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Mark MarkFromJson(const nlohmann::json& j) {
  const auto s = j.get<std::string>();
  if (s == "X") return Mark::kX;
  if (s == "O") return Mark::kO;
  throw CorruptRecordError("bad mark '" + s + "'");
}

constexpr std::string_view kHanabiKinds[] = {"play", "discard", "reveal_color",
                                             "reveal_rank"};

}  // namespace

nlohmann::json PayloadToJson(const ActionPayload& payload) {
  return std::visit(
      Overloaded{
          [](const TttMove& m) -> nlohmann::json {
            return {{"mark", std::string(1, MarkChar(m.mark))},
                    {"row", m.row},
                    {"col", m.col}};
          },
          [](const C4Move& m) -> nlohmann::json {
            return {{"mark", std::string(1, MarkChar(m.mark))}, {"col", m.col}};
          },
          [](HoldemAction a) -> nlohmann::json {
            return {{"action", static_cast<int>(a)},
                    {"name", std::string(HoldemActionName(a))}};
          },
          [](const HanabiMove& m) -> nlohmann::json {
            return {{"kind", std::string(kHanabiKinds[static_cast<int>(m.kind)])},
                    {"value", m.value}};
          },
          [](const UndercoverClue& c) -> nlohmann::json {
            return {{"clue", c.text}};
          },
          [](const UndercoverVote& v) -> nlohmann::json {
            return {{"vote", v.target}};
          },
          [](const BargainMove& m) -> nlohmann::json {
            if (m.deal) return {{"deal", true}};
            return {{"deal", false}, {"take", m.take}};
          },
          [](const BidMove& b) -> nlohmann::json { return {{"cents", b.cents}}; },
      },
      payload);
}

ActionPayload PayloadFromJson(EnvKind env, const nlohmann::json& j) {
  try {
    switch (env) {
      case EnvKind::kTicTacToe:
        return TttMove{MarkFromJson(j.at("mark")), j.at("row").get<int>(),
                       j.at("col").get<int>()};
      case EnvKind::kConnectFour:
        return C4Move{MarkFromJson(j.at("mark")), j.at("col").get<int>()};
      case EnvKind::kTexasHoldem: {
        const int a = j.at("action").get<int>();
        if (a < 0 || a > 4) throw CorruptRecordError("bad holdem action");
        return static_cast<HoldemAction>(a);
      }
      case EnvKind::kHanabi: {
        const auto kind = j.at("kind").get<std::string>();
        for (int k = 0; k < 4; ++k) {
          if (kind == kHanabiKinds[k]) {
            return HanabiMove{static_cast<HanabiMove::Kind>(k),
                              j.at("value").get<int>()};
          }
        }
        throw CorruptRecordError("bad hanabi move kind '" + kind + "'");
      }
      case EnvKind::kUndercover:
        if (j.contains("clue")) return UndercoverClue{j.at("clue").get<std::string>()};
        return UndercoverVote{j.at("vote").get<int>()};
      case EnvKind::kBargain: {
        BargainMove m;
        m.deal = j.at("deal").get<bool>();
        if (!m.deal) m.take = j.at("take").get<std::array<int, 3>>();
        return m;
      }
      case EnvKind::kBid:
        return BidMove{j.at("cents").get<std::int64_t>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecordError(std::string("malformed action payload: ") + e.what());
  }
  throw CorruptRecordError("unknown environment");
}

nlohmann::json ActionToJson(const ActionSpec& action) {
  nlohmann::json j = {{"env", std::string(EnvName(action.env))},
                      {"surface", action.surface},
                      {"payload", PayloadToJson(action.payload)}};
  if (!action.utterance.empty()) j["utterance"] = action.utterance;
  return j;
}

ActionSpec ActionFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("env") || !j.contains("payload")) {
    throw CorruptRecordError("action entry lacks env or payload");
  }
  const auto env = ParseEnvKind(j.at("env").get<std::string>());
  if (!env) throw CorruptRecordError("unknown env in action");
  ActionSpec a;
  a.env = *env;
  a.payload = PayloadFromJson(*env, j.at("payload"));
  a.surface = j.value("surface", std::string());
  a.utterance = j.value("utterance", std::string());
  return a;
}

nlohmann::json OutcomeToJson(const Outcome& outcome) {
  return {{"kind", std::string(OutcomeKindName(outcome.kind))},
          {"winners", outcome.winners}};
}

Outcome OutcomeFromJson(const nlohmann::json& j) {
  try {
    const auto kind = ParseOutcomeKind(j.at("kind").get<std::string>());
    if (!kind) throw CorruptRecordError("unknown outcome kind");
    return Outcome{*kind, j.at("winners").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecordError(std::string("malformed outcome: ") + e.what());
  }
}

nlohmann::json ObservationToJson(const Observation& obs, std::size_t max_listed) {
  nlohmann::json j = {{"viewer", obs.viewer.index},
                      {"phase", obs.phase},
                      {"hints_enabled", obs.hints_enabled},
                      {"blocks", obs.text_blocks},
                      {"legal_count", obs.legal_actions.size()}};
  if (obs.legal_actions.size() <= max_listed) {
    auto& legal = j["legal"] = nlohmann::json::array();
    for (const auto& a : obs.legal_actions) legal.push_back(a.surface);
  }
  if (obs.open_text) j["open_text"] = true;
  return j;
}

std::string SeedToString(std::uint64_t seed) { return std::to_string(seed); }

std::uint64_t SeedFromJson(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  if (!j.is_string()) throw CorruptRecordError("seed must be a decimal string");
  const auto s = j.get<std::string>();
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw CorruptRecordError("bad seed '" + s + "'");
  }
  return v;
}

}  // namespace arena
