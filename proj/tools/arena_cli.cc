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

// Command-line front end: tournaments, single matches, replays, leaderboards,
// analyses and the HTTP gateway.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arena/analysis/c4_eval.h"
#include "arena/analysis/equity.h"
#include "arena/analysis/metrics.h"
#include "arena/core/assets.h"
#include "arena/core/serialize.h"
#include "arena/games/cards.h"
#include "arena/games/registry.h"
#include "arena/orchestrator/config.h"
#include "arena/orchestrator/gateway.h"
#include "arena/orchestrator/tournament.h"

namespace arena {
namespace {

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

// Agent list from a YAML/JSON file: either a bare list or {agents: [...]}.
std::vector<AgentSpec> LoadAgents(const std::string& path) {
  const std::string text = ReadTextFile(path);
  nlohmann::json j = YamlToJson(text);
  if (j.is_object() && j.contains("agents")) j = j["agents"];
  if (!j.is_array()) throw InvalidConfigError(path + ": expected a list of agents");
  std::vector<AgentSpec> out;
  for (const auto& a : j) out.push_back(AgentSpec::FromJson(a));
  return out;
}

// Roster id, or a bare scripted kind used as its own id.
AgentSpec ResolveAgent(const std::vector<AgentSpec>& roster, const std::string& id) {
  for (const auto& a : roster) {
    if (a.id == id) return a;
  }
  const auto& kinds = AgentKinds();
  if (std::find(kinds.begin(), kinds.end(), id) != kinds.end() && id != "llm" &&
      id != "scripted") {
    return AgentSpec{id, id, nlohmann::json::object()};
  }
  throw InvalidConfigError("unknown agent " + id);
}

std::vector<MatchRecord> LoadStoreRecords(const std::string& dir) {
  Store store(dir);
  auto loaded = store.LoadRecords();
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
  return loaded.records;
}

std::vector<MatchRecord> FilterEnv(std::vector<MatchRecord> records,
                                   const std::string& env_name) {
  if (env_name.empty()) return records;
  const auto env = ParseEnvKind(env_name);
  if (!env) throw InvalidConfigError("unknown env " + env_name);
  std::vector<MatchRecord> out;
  for (auto& r : records) {
    if (r.env == *env) out.push_back(std::move(r));
  }
  return out;
}

EnvKind RequireEnv(const std::string& name) {
  const auto env = ParseEnvKind(name);
  if (!env) throw InvalidConfigError("unknown env " + name);
  return *env;
}

C4Board ReadC4Board(const std::string& path) {
  const auto board = ParseC4Board(ReadTextFile(path));
  if (!board) throw InvalidConfigError(path + ": not a connectfour board");
  return *board;
}

int Main(int argc, char** argv) {
  CLI::App app{"Multi-agent game arena for language-model evaluation"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed",
        [&](std::uint64_t s) {
          seed = s;
          seed_given = true;
        },
        "Base seed");
  };

  // run
  auto* run = app.add_subcommand("run", "Run a tournament to convergence");
  std::string run_config, run_env, run_agents, run_out;
  int run_workers = 0, run_max_games = 0, run_min_games = 0;
  bool run_no_hints = false;
  run->add_option("--config", run_config, "Tournament config (YAML or JSON)");
  run->add_option("--env", run_env, "Comma-separated environments (without --config)");
  run->add_option("--agents", run_agents, "Agent roster file (YAML or JSON)");
  run->add_option("--out", run_out, "Output directory");
  run->add_option("--workers", run_workers, "Concurrent matches");
  run->add_option("--max-games", run_max_games, "Per-environment game cap");
  run->add_option("--min-games", run_min_games, "Minimum games per agent");
  run->add_flag("--no-hints", run_no_hints, "Drop legal-move lists from prompts");
  add_seed(run);

  // match
  auto* match = app.add_subcommand("match", "Play a single match");
  std::string match_env, match_agents_file, match_out, match_config;
  std::vector<std::string> match_seats;
  bool match_no_hints = false, match_json = false;
  match->add_option("--env", match_env, "Environment")->required();
  match->add_option("--seats", match_seats, "Agent id per seat")->required()->delimiter(',');
  match->add_option("--agents", match_agents_file, "Agent roster file");
  match->add_option("--config", match_config, "Environment config JSON");
  match->add_option("--out", match_out, "Append the record to this JSONL file");
  match->add_flag("--no-hints", match_no_hints, "Hint ablation");
  match->add_flag("--json", match_json, "Print the record instead of the transcript");
  add_seed(match);

  // replay
  auto* replay = app.add_subcommand("replay", "Print and verify a stored match");
  std::string replay_id, replay_store = "arena_out", replay_file;
  replay->add_option("--record", replay_id, "Record id")->required();
  replay->add_option("--store", replay_store, "Output directory holding records.jsonl");
  replay->add_option("--records", replay_file, "Explicit records.jsonl path");

  // leaderboard
  auto* lb = app.add_subcommand("leaderboard", "Show ratings from a store");
  std::string lb_store = "arena_out";
  bool lb_json = false;
  lb->add_option("--store", lb_store, "Output directory");
  lb->add_flag("--json", lb_json, "JSON document");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analysis metrics");
  analyze->require_subcommand(1);
  auto* equity = analyze->add_subcommand("equity", "Hold'em win probability");
  std::string eq_hole, eq_board;
  std::uint64_t eq_samples = 100000;
  bool eq_exact = false;
  equity->add_option("--hole", eq_hole, "Two hole cards, e.g. AS,KS")->required();
  equity->add_option("--board", eq_board, "Zero to five community cards");
  equity->add_option("--samples", eq_samples, "Monte Carlo samples");
  equity->add_flag("--exact", eq_exact, "Exhaustive enumeration (three-card board)");
  add_seed(equity);

  auto* nash = analyze->add_subcommand("nash", "Bid score against half the valuation");
  double nash_bid = 0, nash_value = 0;
  nash->add_option("--bid", nash_bid, "Bid in dollars")->required();
  nash->add_option("--value", nash_value, "Private valuation in dollars")->required();

  auto* c4 = analyze->add_subcommand("c4", "ConnectFour board value and move reward");
  std::string c4_prev, c4_next, c4_mark = "X", c4_mode = "segments";
  c4->add_option("--board", c4_next, "Board file (value only)");
  c4->add_option("--prev", c4_prev, "Board before the move (reward)");
  c4->add_option("--mark", c4_mark, "Perspective X or O");
  c4->add_option("--windows", c4_mode, "segments or runs");

  auto* dist = analyze->add_subcommand("distributions", "Action distributions");
  std::string dist_store = "arena_out", dist_env, dist_agent;
  std::uint64_t dist_samples = 2000;
  bool dist_json = false;
  dist->add_option("--store", dist_store, "Output directory");
  dist->add_option("--env", dist_env, "Environment")->required();
  dist->add_option("--agent", dist_agent, "Only this agent");
  dist->add_option("--equity-samples", dist_samples, "Samples per Hold'em equity bucket");
  dist->add_flag("--json", dist_json, "JSON output");
  add_seed(dist);

  auto* errs = analyze->add_subcommand("error-rates", "Illegal-move rates per agent");
  std::string errs_store = "arena_out", errs_env;
  errs->add_option("--store", errs_store, "Output directory");
  errs->add_option("--env", errs_env, "Only this environment");

  auto* guess = analyze->add_subcommand("guess", "Undercover word-guess rates");
  std::string guess_store = "arena_out", guess_annotations;
  guess->add_option("--store", guess_store, "Output directory");
  guess->add_option("--annotations", guess_annotations, "Clue accuracy TSV");

  auto* ablation = analyze->add_subcommand("ablation", "Hint ablation grid");
  std::string abl_env = "tictactoe", abl_agent = "format_fragile", abl_opp = "random",
              abl_agents_file;
  int abl_games = 20;
  bool abl_json = false;
  ablation->add_option("--env", abl_env, "Environment");
  ablation->add_option("--agent", abl_agent, "Agent under test");
  ablation->add_option("--opponent", abl_opp, "Fixed opponent");
  ablation->add_option("--agents", abl_agents_file, "Agent roster file");
  ablation->add_option("--games", abl_games, "Games per cell");
  ablation->add_flag("--json", abl_json, "JSON output");
  add_seed(ablation);

  auto* normalize = analyze->add_subcommand("normalize", "Normalize an origin table");
  std::string norm_file;
  normalize->add_option("--table", norm_file, "JSON {env: {agent: score}}")->required();

  // serve
  auto* serve = app.add_subcommand("serve", "HTTP gateway for human play");
  std::string serve_store = "arena_out", serve_host = "127.0.0.1", serve_agents;
  int serve_port = 8080;
  serve->add_option("--store", serve_store, "Output directory for session records");
  serve->add_option("--host", serve_host, "Bind address");
  serve->add_option("--port", serve_port, "Port; 0 picks a free one");
  serve->add_option("--agents", serve_agents, "Opponent roster file");
  add_seed(serve);

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    TournamentConfig config;
    if (!run_config.empty()) {
      config = TournamentConfig::Load(run_config);
    } else {
      if (run_env.empty() || run_agents.empty()) {
        throw InvalidConfigError("run needs --config or both --env and --agents");
      }
      nlohmann::json j;
      std::stringstream envs(run_env);
      for (std::string e; std::getline(envs, e, ',');) j["envs"].push_back(e);
      j["agents"] = nlohmann::json::array();
      for (const auto& a : LoadAgents(run_agents)) j["agents"].push_back(a.ToJson());
      if (std::find(j["envs"].begin(), j["envs"].end(), "undercover") != j["envs"].end()) {
        j["agents"].push_back({{"id", "clue_bot"}, {"kind", "clue_bot"}});
        j["undercover"] = {{"reference", "clue_bot"}};
      }
      config = TournamentConfig::FromJson(j);
    }
    if (seed_given) config.seed = seed;
    if (!run_out.empty()) config.output_dir = run_out;
    if (run_workers > 0) config.workers = run_workers;
    if (run_max_games > 0) config.max_games = run_max_games;
    if (run_min_games > 0) {
      config.min_games = run_min_games;
      config.convergence.min_games = run_min_games;
    }
    if (run_no_hints) config.hints_enabled = false;
    config.Validate();
    TournamentHooks hooks;
    hooks.log = [](const std::string& m) { std::cerr << m << "\n"; };
    const auto result = RunTournament(config, hooks);
    std::cout << result.leaderboard.ToText();
    for (const auto& [env, s] : result.envs) {
      std::cout << EnvName(env) << ": " << s.games << " games, "
                << (s.converged ? "converged" : "not converged") << "\n";
    }
    std::cout << "wrote " << config.output_dir.string() << "\n";
    return 0;
  }

  if (*match) {
    const EnvKind env = RequireEnv(match_env);
    std::vector<AgentSpec> roster;
    if (!match_agents_file.empty()) roster = LoadAgents(match_agents_file);
    std::vector<std::unique_ptr<Agent>> owned;
    std::vector<Agent*> seats;
    for (const auto& id : match_seats) {
      owned.push_back(MakeAgent(ResolveAgent(roster, id)));
      seats.push_back(owned.back().get());
    }
    MatchOptions opts;
    opts.hints_enabled = !match_no_hints;
    if (!match_config.empty()) opts.config = nlohmann::json::parse(match_config);
    const MatchRecord rec = RunMatch(env, seats, seed, opts);
    if (!match_out.empty()) {
      std::ofstream out(match_out, std::ios::app);
      out << rec.ToJsonLine() << "\n";
    }
    std::cout << (match_json ? rec.ToJson().dump(2) + "\n" : FormatTranscript(rec));
    return 0;
  }

  if (*replay) {
    std::vector<MatchRecord> records;
    if (!replay_file.empty()) {
      std::ifstream in(replay_file);
      for (std::string line; std::getline(in, line);) {
        if (!line.empty()) records.push_back(MatchRecord::FromJson(nlohmann::json::parse(line)));
      }
    } else {
      records = LoadStoreRecords(replay_store);
    }
    for (const auto& r : records) {
      if (r.id != replay_id) continue;
      std::cout << FormatTranscript(r);
      const auto state = ReplayAndVerify(r);
      std::cout << state->Render() << "\nverified: final state matches the record\n";
      return 0;
    }
    std::cerr << "no record " << replay_id << "\n";
    return 1;
  }

  if (*lb) {
    Store store(lb_store);
    Leaderboard board = store.LoadRatings(RatingConfig{});
    Store::Reconcile(board, store.LoadRecords().records);
    if (lb_json) {
      std::cout << Store::LeaderboardDocument(board).dump(2) << "\n";
    } else {
      std::cout << board.ToText();
      const auto origin = board.OriginTable();
      if (!origin.empty()) {
        std::cout << "\norigin scores\n" << ScoreTableText(origin);
        try {
          std::cout << "\nnormalized scores\n" << ScoreTableText(NormalizeTable(origin));
        } catch (const NormalizationError& e) {
          std::cout << "\nnormalized scores unavailable: " << e.what() << "\n";
        }
      }
    }
    return 0;
  }

  if (*equity) {
    const auto hole = ParseCards(eq_hole);
    const auto board = ParseCards(eq_board);
    if (eq_exact) {
      std::cout << Fixed(ExactEquity(hole, board), 4) << "\n";
    } else {
      std::cout << Fixed(McEquity(hole, board, eq_samples, seed).p_win, 4) << "\n";
    }
    return 0;
  }
  if (*nash) {
    std::cout << Fixed(BidNashScore(nash_bid, nash_value), 6) << "\n";
    return 0;
  }
  if (*c4) {
    if (c4_next.empty()) throw InvalidConfigError("analyze c4 needs --board");
    const Mark mark = (c4_mark == "O" || c4_mark == "o") ? Mark::kO : Mark::kX;
    const WindowMode mode =
        c4_mode == "runs" ? WindowMode::kMaximalRuns : WindowMode::kAllSegments;
    const C4Board next = ReadC4Board(c4_next);
    std::cout << "value " << C4Value(next, mark, mode) << "\n";
    if (!c4_prev.empty()) {
      std::cout << "reward " << C4Reward(ReadC4Board(c4_prev), next, mark, mode) << "\n";
    }
    return 0;
  }
  if (*dist) {
    const EnvKind env = RequireEnv(dist_env);
    DistributionOptions opts;
    opts.agent = dist_agent;
    opts.equity_samples = dist_samples;
    opts.seed = seed;
    const auto d = ComputeActionDistribution(LoadStoreRecords(dist_store), env, opts);
    std::cout << (dist_json ? d.ToJson().dump(2) + "\n" : d.ToText());
    return 0;
  }
  if (*errs) {
    const auto records = FilterEnv(LoadStoreRecords(errs_store), errs_env);
    std::set<std::string> agents;
    for (const auto& r : records) agents.insert(r.agents.begin(), r.agents.end());
    for (const auto& a : agents) {
      std::cout << a << "\t" << Fixed(100.0 * ErrorRate(records, a), 2) << "%\n";
    }
    return 0;
  }
  if (*guess) {
    const auto records = LoadStoreRecords(guess_store);
    std::cout << GuessTable(GuessMetrics(records));
    if (!guess_annotations.empty()) {
      for (const auto& [agent, acc] :
           DescriptionAccuracy(records, ReadTextFile(guess_annotations))) {
        std::cout << agent << "\tdescription accuracy " << Fixed(100.0 * acc, 2) << "%\n";
      }
    }
    return 0;
  }
  if (*ablation) {
    std::vector<AgentSpec> roster;
    if (!abl_agents_file.empty()) roster = LoadAgents(abl_agents_file);
    const AgentSpec agent = ResolveAgent(roster, abl_agent);
    const AgentSpec opp = ResolveAgent(roster, abl_opp);
    AblationSpec spec;
    spec.agent_name = agent.id;
    spec.agent = [agent] { return MakeAgent(agent); };
    spec.opponent = [opp] { return MakeAgent(opp); };
    spec.env = RequireEnv(abl_env);
    spec.games = abl_games;
    spec.seed = seed;
    const std::vector<AblationRow> rows = {RunAblation(spec)};
    std::cout << (abl_json ? AblationJson(rows).dump(2) + "\n" : AblationTable(rows));
    return 0;
  }
  if (*normalize) {
    const auto j = nlohmann::json::parse(ReadTextFile(norm_file));
    std::map<EnvKind, std::map<std::string, double>> origin;
    for (const auto& [env, scores] : j.items()) {
      origin[RequireEnv(env)] = scores.get<std::map<std::string, double>>();
    }
    std::cout << ScoreTableText(NormalizeTable(origin));
    return 0;
  }
  if (*serve) {
    GatewayOptions opts;
    opts.store_dir = serve_store;
    if (!serve_agents.empty()) opts.agents = LoadAgents(serve_agents);
    Gateway gateway(opts);
    const int port = gateway.Bind(serve_host, serve_port);
    std::cerr << "serving on http://" << serve_host << ":" << port << "\n";
    gateway.Listen();
    return 0;
  }
  return 0;
}

}  // namespace
}  // namespace arena

int main(int argc, char** argv) {
  try {
    return arena::Main(argc, argv);
  } catch (const arena::ArenaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
