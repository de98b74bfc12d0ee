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

#include "arena/rating/leaderboard.h"

#include <algorithm>
#include <cstdio>

#include "arena/games/undercover.h"

namespace arena {
namespace {

const std::map<std::string, LeaderboardEntry>& EmptyEntries() {
  static const auto* empty = new std::map<std::string, LeaderboardEntry>();
  return *empty;
}

std::string SeatOutcome(const Outcome& o, int seat) {
  if (o.IsWinner(seat)) return "win";
  if (o.kind == OutcomeKind::kWin) return "loss";
  return o.kind == OutcomeKind::kDraw ? "draw" : "loss";
}

std::string Fixed(double x, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string_view ScoreKindName(ScoreKind k) {
  switch (k) {
    case ScoreKind::kTrueSkillMu: return "trueskill_mu";
    case ScoreKind::kAverageReward: return "average_reward";
    case ScoreKind::kWinRate: return "win_rate";
  }
  return "trueskill_mu";
}

ScoreKind ScoreKindFor(EnvKind env) {
  switch (env) {
    case EnvKind::kBid:
    case EnvKind::kHanabi: return ScoreKind::kAverageReward;
    case EnvKind::kUndercover: return ScoreKind::kWinRate;
    default: return ScoreKind::kTrueSkillMu;
  }
}

nlohmann::json RatingEvent::ToJson() const {
  auto ratings = [](const std::vector<Rating>& rs) {
    auto j = nlohmann::json::array();
    for (const auto& r : rs) j.push_back({{"mu", r.mu}, {"sigma", r.sigma}});
    return j;
  };
  return {{"record_id", record_id}, {"env", std::string(EnvName(env))},
          {"agents", agents},       {"outcomes", outcomes},
          {"rated", rated},         {"before", ratings(before)},
          {"after", ratings(after)}, {"rewards", rewards}};
}

RatingEvent RatingEvent::FromJson(const nlohmann::json& j) {
  RatingEvent e;
  e.record_id = j.at("record_id").get<std::string>();
  const auto env = ParseEnvKind(j.at("env").get<std::string>());
  if (!env) throw ArenaError("rating event with unknown env");
  e.env = *env;
  e.agents = j.at("agents").get<std::vector<std::string>>();
  e.outcomes = j.at("outcomes").get<std::vector<std::string>>();
  e.rated = j.at("rated").get<bool>();
  for (const auto& r : j.at("before")) e.before.push_back({r.at("mu"), r.at("sigma")});
  for (const auto& r : j.at("after")) e.after.push_back({r.at("mu"), r.at("sigma")});
  e.rewards = j.at("rewards").get<std::vector<double>>();
  return e;
}

TrueSkillParams RatingConfig::ParamsFor(EnvKind env) const {
  TrueSkillParams p = trueskill;
  if (auto it = draw_probability.find(env); it != draw_probability.end()) {
    p.draw_probability = it->second;
  }
  return p;
}

RatingConfig RatingConfig::FromJson(const nlohmann::json& j) {
  RatingConfig c;
  if (j.is_null()) return c;
  for (const auto& [key, value] : j.items()) {
    if (key == "trueskill") {
      c.trueskill = TrueSkillParams::FromJson(value);
    } else if (key == "draw_probability") {
      for (const auto& [env_name, p] : value.items()) {
        const auto env = ParseEnvKind(env_name);
        if (!env) throw InvalidConfigError("unknown env '" + env_name + "'");
        const double prob = p.get<double>();
        if (!(prob >= 0.0 && prob < 1.0)) {
          throw InvalidConfigError("draw probability must be in [0, 1)");
        }
        c.draw_probability[*env] = prob;
      }
    } else {
      throw InvalidConfigError("unknown rating key '" + key + "'");
    }
  }
  return c;
}

nlohmann::json RatingConfig::ToJson() const {
  nlohmann::json draws = nlohmann::json::object();
  for (const auto& [env, p] : draw_probability) draws[std::string(EnvName(env))] = p;
  return {{"trueskill", trueskill.ToJson()}, {"draw_probability", draws}};
}

Leaderboard::Leaderboard(RatingConfig config) : config_(std::move(config)) {}

LeaderboardEntry& Leaderboard::Entry(EnvKind env, const std::string& agent) {
  auto& m = entries_[env];
  auto it = m.find(agent);
  if (it == m.end()) {
    LeaderboardEntry e;
    e.rating = config_.ParamsFor(env).Initial();
    it = m.emplace(agent, e).first;
  }
  return it->second;
}

bool Leaderboard::Apply(const MatchRecord& record) {
  if (seen_.contains(record.id)) return false;
  if (record.aborted || record.human_participant) {
    seen_.insert(record.id);
    return false;
  }
  RatingEvent ev;
  ev.record_id = record.id;
  ev.env = record.env;
  switch (ScoreKindFor(record.env)) {
    case ScoreKind::kTrueSkillMu: {
      if (record.agents.size() != 2 || record.agents[0] == record.agents[1]) break;
      ev.agents = record.agents;
      ev.outcomes = {SeatOutcome(record.outcome, 0), SeatOutcome(record.outcome, 1)};
      ev.rewards = record.returns;
      ev.rated = true;
      const Rating a = Entry(record.env, record.agents[0]).rating;
      const Rating b = Entry(record.env, record.agents[1]).rating;
      MatchResult result = MatchResult::kDraw;
      if (record.outcome.IsWinner(0)) result = MatchResult::kAWins;
      else if (record.outcome.IsWinner(1)) result = MatchResult::kBWins;
      const auto [na, nb] = UpdateOneVsOne(a, b, result, config_.ParamsFor(record.env));
      ev.before = {a, b};
      ev.after = {na, nb};
      break;
    }
    case ScoreKind::kAverageReward: {
      if (record.env == EnvKind::kHanabi) {
        // Team score, counted once per distinct agent.
        for (std::size_t s = 0; s < record.agents.size(); ++s) {
          if (std::find(ev.agents.begin(), ev.agents.end(), record.agents[s]) !=
              ev.agents.end()) {
            continue;
          }
          ev.agents.push_back(record.agents[s]);
          ev.outcomes.push_back(record.outcome.kind == OutcomeKind::kFailure ? "loss"
                                                                             : "draw");
          ev.rewards.push_back(record.returns.at(s));
        }
      } else {
        for (std::size_t s = 0; s < record.agents.size(); ++s) {
          ev.agents.push_back(record.agents[s]);
          ev.outcomes.push_back(SeatOutcome(record.outcome, static_cast<int>(s)));
          ev.rewards.push_back(record.returns.at(s));
        }
      }
      break;
    }
    case ScoreKind::kWinRate: {
      const int seat = UndercoverSeatFor(record.seed, static_cast<int>(record.agents.size()));
      ev.agents = {record.agents.at(seat)};
      const bool won = record.outcome.IsWinner(seat);
      ev.outcomes = {won ? "win" : "loss"};
      ev.rewards = {won ? 1.0 : 0.0};
      break;
    }
  }
  if (ev.agents.empty()) {
    seen_.insert(record.id);
    return false;
  }
  ApplyEvent(ev);
  return true;
}

void Leaderboard::ApplyEvent(const RatingEvent& event) {
  if (seen_.contains(event.record_id)) return;
  seen_.insert(event.record_id);
  for (std::size_t i = 0; i < event.agents.size(); ++i) {
    auto& e = Entry(event.env, event.agents[i]);
    ++e.games;
    const auto& o = event.outcomes.at(i);
    if (o == "win") ++e.wins;
    else if (o == "draw") ++e.draws;
    else ++e.losses;
    e.total_reward += event.rewards.at(i);
    if (event.rated) {
      e.rating = event.after.at(i);
      history_[event.env][event.agents[i]].push_back(e.rating);
    }
  }
  log_.push_back(event);
}

const std::map<std::string, LeaderboardEntry>& Leaderboard::Entries(EnvKind env) const {
  auto it = entries_.find(env);
  return it == entries_.end() ? EmptyEntries() : it->second;
}

const std::map<std::string, std::vector<Rating>>& Leaderboard::History(EnvKind env) const {
  static const auto* empty = new std::map<std::string, std::vector<Rating>>();
  auto it = history_.find(env);
  return it == history_.end() ? *empty : it->second;
}

double Leaderboard::Origin(EnvKind env, const LeaderboardEntry& e) const {
  switch (ScoreKindFor(env)) {
    case ScoreKind::kTrueSkillMu: return e.rating.mu;
    case ScoreKind::kAverageReward: return e.AverageReward();
    case ScoreKind::kWinRate: return 100.0 * e.WinRate();
  }
  return 0.0;
}

std::vector<std::pair<std::string, LeaderboardEntry>> Leaderboard::Ranked(EnvKind env) const {
  const auto& m = Entries(env);
  std::vector<std::pair<std::string, LeaderboardEntry>> out(m.begin(), m.end());
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return Origin(env, x.second) > Origin(env, y.second);
  });
  return out;
}

std::map<EnvKind, std::map<std::string, double>> Leaderboard::OriginTable() const {
  std::map<EnvKind, std::map<std::string, double>> out;
  for (const auto& [env, m] : entries_) {
    for (const auto& [agent, e] : m) out[env][agent] = Origin(env, e);
  }
  return out;
}

nlohmann::json Leaderboard::ToJson() const {
  nlohmann::json j;
  j["config"] = config_.ToJson();
  j["events"] = log_.size();
  auto& envs = j["envs"] = nlohmann::json::object();
  for (const auto& [env, m] : entries_) {
    auto& ej = envs[std::string(EnvName(env))];
    ej["metric"] = std::string(ScoreKindName(ScoreKindFor(env)));
    auto& rows = ej["agents"] = nlohmann::json::array();
    for (const auto& [agent, e] : Ranked(env)) {
      rows.push_back({{"agent", agent},
                      {"mu", e.rating.mu},
                      {"sigma", e.rating.sigma},
                      {"games", e.games},
                      {"wins", e.wins},
                      {"draws", e.draws},
                      {"losses", e.losses},
                      {"average_reward", e.AverageReward()},
                      {"origin", Origin(env, e)}});
    }
  }
  return j;
}

std::string Leaderboard::ToText() const {
  std::string out;
  for (const auto& [env, m] : entries_) {
    out += std::string(EnvName(env)) + " (" +
           std::string(ScoreKindName(ScoreKindFor(env))) + ")\n";
    out += "  " + Pad("agent", 24) + Pad("origin", 10) + Pad("mu", 9) + Pad("sigma", 8) +
           Pad("games", 7) + "W/D/L\n";
    for (const auto& [agent, e] : Ranked(env)) {
      out += "  " + Pad(agent, 24) + Pad(Fixed(Origin(env, e), 2), 10) +
             Pad(Fixed(e.rating.mu, 2), 9) + Pad(Fixed(e.rating.sigma, 2), 8) +
             Pad(std::to_string(e.games), 7) + std::to_string(e.wins) + "/" +
             std::to_string(e.draws) + "/" + std::to_string(e.losses) + "\n";
    }
  }
  return out;
}

bool HasConverged(const std::map<std::string, std::vector<Rating>>& histories,
                  const ConvergenceParams& params) {
  if (histories.empty()) return false;
  double max_sigma = 0.0;
  bool settled = params.window > 0;
  for (const auto& [agent, h] : histories) {
    if (static_cast<int>(h.size()) < params.min_games || h.empty()) return false;
    max_sigma = std::max(max_sigma, h.back().sigma);
    if (params.window > 0) {
      if (static_cast<int>(h.size()) <= params.window) {
        settled = false;
      } else {
        const double drift = std::abs(h.back().mu - h[h.size() - 1 - params.window].mu);
        if (drift >= params.mu_tolerance) settled = false;
      }
    }
  }
  return max_sigma < params.sigma_threshold || settled;
}

std::map<std::string, double> NormalizeScores(const std::map<std::string, double>& origin) {
  if (origin.empty()) throw NormalizationError("no scores to normalize");
  double best = origin.begin()->second;
  for (const auto& [agent, x] : origin) best = std::max(best, x);
  if (!(best > 0.0)) throw NormalizationError("maximum score must be positive");
  std::map<std::string, double> out;
  for (const auto& [agent, x] : origin) out[agent] = 100.0 * x / best;
  return out;
}

std::map<EnvKind, std::map<std::string, double>> NormalizeTable(
    const std::map<EnvKind, std::map<std::string, double>>& origin) {
  std::map<EnvKind, std::map<std::string, double>> out;
  for (const auto& [env, column] : origin) out[env] = NormalizeScores(column);
  return out;
}

std::string ScoreTableText(const std::map<EnvKind, std::map<std::string, double>>& table) {
  std::set<std::string> agents;
  for (const auto& [env, column] : table) {
    for (const auto& [agent, x] : column) agents.insert(agent);
  }
  std::string out = Pad("agent", 24);
  for (const auto& [env, column] : table) out += Pad(std::string(EnvName(env)), 14);
  out += "\n";
  for (const auto& agent : agents) {
    out += Pad(agent, 24);
    for (const auto& [env, column] : table) {
      const auto it = column.find(agent);
      out += Pad(it == column.end() ? "-" : Fixed(it->second, 2), 14);
    }
    out += "\n";
  }
  return out;
}

}  // namespace arena
