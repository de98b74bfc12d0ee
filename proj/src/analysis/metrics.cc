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

#include "arena/analysis/metrics.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "arena/analysis/equity.h"
#include "arena/core/assets.h"
#include "arena/core/rng.h"
#include "arena/games/holdem.h"
#include "arena/games/registry.h"

namespace arena {
namespace {

std::string NormalizeWord(std::string_view s) {
  std::string out;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      out += static_cast<char>(std::tolower(c));
    } else if (std::isspace(c) && !out.empty() && out.back() != ' ') {
      out += ' ';
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string Percent(double x) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * x);
  return buf;
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

double BidNashScore(double bid, double value) {
  if (!(value > 0.0)) throw ArenaError("valuation must be positive");
  const double half = value / 2.0;
  return (bid - half) / half;
}

nlohmann::json ActionDistribution::ToJson() const {
  nlohmann::json j = {{"env", std::string(EnvName(env))}, {"decisions", decisions}};
  auto& c = j["classes"] = nlohmann::json::object();
  for (const auto& [name, share] : classes) {
    c[name] = {{"count", share.count}, {"share", share.share}};
    if (env == EnvKind::kTexasHoldem) c[name]["mean_equity"] = share.mean_equity;
  }
  return j;
}

std::string ActionDistribution::ToText() const {
  std::string out = "Action distribution (" + std::string(EnvName(env)) + ", " +
                    std::to_string(decisions) + " decisions)\n";
  for (const auto& [name, share] : classes) {
    char buf[128];
    if (env == EnvKind::kTexasHoldem) {
      std::snprintf(buf, sizeof(buf), "  %-16s %8llu  %6.2f%%  equity %.4f\n",
                    name.c_str(), static_cast<unsigned long long>(share.count),
                    100.0 * share.share, share.mean_equity);
    } else {
      std::snprintf(buf, sizeof(buf), "  %-16s %8llu  %6.2f%%\n", name.c_str(),
                    static_cast<unsigned long long>(share.count), 100.0 * share.share);
    }
    out += buf;
  }
  return out;
}

ActionDistribution ComputeActionDistribution(const std::vector<MatchRecord>& records,
                                             EnvKind env,
                                             const DistributionOptions& options) {
  ActionDistribution dist;
  dist.env = env;
  std::map<std::string, double> equity_sum;
  bool any = false;
  std::uint64_t decision_index = 0;
  for (const auto& rec : records) {
    if (rec.env != env) continue;
    any = true;
    std::unique_ptr<GameState> state;
    if (env == EnvKind::kTexasHoldem) state = Reset(env, rec.seed, rec.config);
    for (const auto& t : rec.turns) {
      if (!t.applied) continue;
      const bool counted = options.agent.empty() ||
                           (t.seat < static_cast<int>(rec.agents.size()) &&
                            rec.agents[t.seat] == options.agent);
      if (counted) {
        const std::string cls = ActionClass(*t.applied);
        ++dist.classes[cls].count;
        ++dist.decisions;
        if (state) {
          const auto& holdem = static_cast<const HoldemState&>(*state);
          const auto board = holdem.VisibleBoard();
          const auto eq = McEquity(holdem.hole(t.seat), board, options.equity_samples,
                                   DeriveSeed(options.seed, decision_index));
          equity_sum[cls] += eq.p_win;
        }
        ++decision_index;
      }
      if (state) state->ApplyAction(*t.applied);
    }
  }
  if (!any) throw ArenaError("no records for " + std::string(EnvName(env)));
  for (auto& [name, share] : dist.classes) {
    share.share = static_cast<double>(share.count) / static_cast<double>(dist.decisions);
    if (env == EnvKind::kTexasHoldem) {
      share.mean_equity = equity_sum[name] / static_cast<double>(share.count);
    }
  }
  return dist;
}

double ErrorRate(const std::vector<MatchRecord>& records, const std::string& agent) {
  std::uint64_t games = 0, errors = 0;
  for (const auto& rec : records) {
    if (rec.aborted) continue;
    ++games;
    if (!rec.illegal_terminated) continue;
    if (agent.empty() || rec.agents.at(rec.offender) == agent) ++errors;
  }
  if (games == 0) throw ArenaError("error rate of an empty record set");
  return static_cast<double>(errors) / static_cast<double>(games);
}

double WinRate(const std::vector<MatchRecord>& records, const std::string& agent) {
  std::uint64_t games = 0, wins = 0;
  for (const auto& rec : records) {
    if (rec.aborted) continue;
    for (std::size_t s = 0; s < rec.agents.size(); ++s) {
      if (rec.agents[s] != agent) continue;
      ++games;
      if (rec.outcome.IsWinner(static_cast<int>(s))) ++wins;
    }
  }
  if (games == 0) throw ArenaError("agent '" + agent + "' played no games");
  return static_cast<double>(wins) / static_cast<double>(games);
}

std::map<std::string, GuessRates> GuessMetrics(const std::vector<MatchRecord>& records) {
  std::map<std::string, std::array<std::uint64_t, 3>> counts;  // games, any, all
  for (const auto& rec : records) {
    for (const auto& g : rec.guesses) {
      auto& c = counts[rec.agents.at(g.seat)];
      ++c[0];
      int right = 0;
      for (const auto& [seat, truth] : g.truth) {
        const auto it = g.guesses.find(seat);
        if (it != g.guesses.end() && NormalizeWord(it->second) == NormalizeWord(truth)) {
          ++right;
        }
      }
      if (right > 0) ++c[1];
      if (right == static_cast<int>(g.truth.size()) && right > 0) ++c[2];
    }
  }
  if (counts.empty()) throw ArenaError("records carry no guess phase");
  std::map<std::string, GuessRates> out;
  for (const auto& [agent, c] : counts) {
    const double n = static_cast<double>(c[0]);
    out[agent] = {c[0], c[1] / n, c[2] / n};
  }
  return out;
}

std::map<std::string, double> DescriptionAccuracy(
    const std::vector<MatchRecord>& records, const std::string& annotation_tsv) {
  std::map<std::string, const MatchRecord*> by_id;
  for (const auto& r : records) by_id[r.id] = &r;
  std::map<std::string, std::pair<double, double>> sums;
  std::istringstream in(annotation_tsv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id, seat, label;
    if (!std::getline(fields, id, '\t') || !std::getline(fields, seat, '\t') ||
        !std::getline(fields, label, '\t')) {
      throw ArenaError("annotation line needs record_id, seat and label: " + line);
    }
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw ArenaError("annotation for unknown record " + id);
    auto& s = sums[it->second->agents.at(std::stoul(seat))];
    s.first += std::stod(label);
    s.second += 1.0;
  }
  std::map<std::string, double> out;
  for (const auto& [agent, s] : sums) out[agent] = s.first / s.second;
  return out;
}

AblationRow RunAblation(const AblationSpec& spec) {
  AblationRow row;
  row.agent = spec.agent_name;
  row.env = spec.env;
  row.games = spec.games;
  for (bool hints : {true, false}) {
    int wins = 0, errors = 0;
    for (int g = 0; g < spec.games; ++g) {
      auto agent = spec.agent();
      auto opponent = spec.opponent();
      const int seat = g % 2;
      std::vector<Agent*> seats(2);
      seats[seat] = agent.get();
      seats[1 - seat] = opponent.get();
      MatchOptions options;
      options.hints_enabled = hints;
      options.id = std::string(EnvName(spec.env)) + "-ablation-" +
                   (hints ? "hints-" : "nohints-") + std::to_string(g);
      const auto rec = RunMatch(spec.env, seats, DeriveSeed(spec.seed, g), options);
      if (rec.outcome.IsWinner(seat)) ++wins;
      if (rec.illegal_terminated && rec.offender == seat) ++errors;
    }
    const double n = spec.games > 0 ? spec.games : 1;
    (hints ? row.win_rate_hints : row.win_rate_no_hints) = wins / n;
    (hints ? row.error_rate_hints : row.error_rate_no_hints) = errors / n;
  }
  return row;
}

std::string AblationTable(const std::vector<AblationRow>& rows) {
  std::string out = Pad("Agent", 20) + Pad("Env", 14) + Pad("Win (hints)", 13) +
                    Pad("Err (hints)", 13) + Pad("Win (no hints)", 16) +
                    "Err (no hints)\n";
  for (const auto& r : rows) {
    out += Pad(r.agent, 20) + Pad(std::string(EnvName(r.env)), 14) +
           Pad(Percent(r.win_rate_hints), 13) + Pad(Percent(r.error_rate_hints), 13) +
           Pad(Percent(r.win_rate_no_hints), 16) + Percent(r.error_rate_no_hints) + "\n";
  }
  return out;
}

nlohmann::json AblationJson(const std::vector<AblationRow>& rows) {
  auto j = nlohmann::json::array();
  for (const auto& r : rows) {
    j.push_back({{"agent", r.agent},
                 {"env", std::string(EnvName(r.env))},
                 {"games", r.games},
                 {"hints", {{"win_rate", r.win_rate_hints}, {"error_rate", r.error_rate_hints}}},
                 {"no_hints",
                  {{"win_rate", r.win_rate_no_hints}, {"error_rate", r.error_rate_no_hints}}}});
  }
  return j;
}

std::string GuessTable(const std::map<std::string, GuessRates>& rates) {
  std::string out = Pad("Agent", 20) + Pad("Games", 8) + Pad("Guess", 10) + "Guess (strict)\n";
  for (const auto& [agent, r] : rates) {
    out += Pad(agent, 20) + Pad(std::to_string(r.games), 8) + Pad(Percent(r.any_correct), 10) +
           Percent(r.all_correct) + "\n";
  }
  return out;
}

}  // namespace arena
