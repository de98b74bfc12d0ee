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

#include "arena/orchestrator/tournament.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

#include "arena/analysis/metrics.h"
#include "arena/games/registry.h"
#include "arena/games/undercover.h"
#include "arena/orchestrator/scheduler.h"

namespace arena {
namespace {

struct Job {
  std::string id;
  std::vector<std::string> seats;
  std::uint64_t seed = 0;
  std::vector<int> guess_seats;
};

class Runner {
 public:
  Runner(const TournamentConfig& config, const TournamentHooks& hooks)
      : config_(config),
        hooks_(hooks),
        store_(config.output_dir),
        pool_(config),
        result_{Leaderboard(config.rating), {}, {}, 0} {}

  TournamentResult Run() {
    ConcurrencyLimiter::Global().SetSlots(config_.max_concurrency);
    auto loaded = store_.LoadRecords();
    for (auto& w : loaded.warnings) Warn(w);
    for (auto& r : loaded.records) existing_.emplace(r.id, std::move(r));
    store_.WriteConfig(config_.ToJson());

    for (EnvKind env : config_.envs) {
      switch (env) {
        case EnvKind::kUndercover: RunUndercover(); break;
        case EnvKind::kHanabi: RunSelfPlay(env); break;
        default: RunPairs(env); break;
      }
    }
    store_.WriteRatings(result_.leaderboard);
    store_.WriteLeaderboard(result_.leaderboard);
    WriteErrorRates();
    return std::move(result_);
  }

 private:
  void Log(const std::string& msg) {
    if (hooks_.log) hooks_.log(msg);
  }

  void Warn(const std::string& msg) {
    result_.warnings.push_back(msg);
    store_.AppendWarning(msg);
    Log("warning: " + msg);
  }

  MatchRecord Play(EnvKind env, const Job& job) {
    std::vector<std::unique_ptr<Agent>> owned;
    std::vector<Agent*> seats;
    for (const auto& id : job.seats) {
      owned.push_back(pool_.Make(id));
      seats.push_back(owned.back().get());
    }
    MatchOptions opts;
    opts.id = job.id;
    if (const auto it = config_.env_config.find(env); it != config_.env_config.end()) {
      opts.config = it->second;
    }
    opts.policy = config_.policy;
    opts.hints_enabled = config_.hints_enabled;
    opts.guess_seats = job.guess_seats;
    return RunMatch(env, seats, job.seed, opts);
  }

  // Runs the jobs on the worker pool, then commits them in order. Returns the
  // agents that became unreachable.
  std::vector<std::string> RunBatch(EnvKind env, const std::vector<Job>& jobs) {
    std::vector<std::optional<MatchRecord>> out(jobs.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (const auto it = existing_.find(jobs[i].id); it != existing_.end()) {
        out[i] = it->second;
        ++result_.resumed;
      } else {
        todo.push_back(i);
      }
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
      for (std::size_t k = next++; k < todo.size(); k = next++) {
        try {
          out[todo[k]] = Play(env, jobs[todo[k]]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    };
    const int threads = std::min<int>(config_.workers, static_cast<int>(todo.size()));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<std::string> lost;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const MatchRecord& rec = *out[i];
      if (!existing_.contains(rec.id)) store_.AppendRecord(rec);
      result_.leaderboard.Apply(rec);
      if (hooks_.on_record) hooks_.on_record(rec);
      if (rec.aborted && !rec.turns.empty()) {
        const std::string& agent = rec.agents.at(rec.turns.back().seat);
        if (std::find(lost.begin(), lost.end(), agent) == lost.end()) {
          lost.push_back(agent);
          Warn("agent " + agent + " unreachable in " + rec.id + " (" + rec.abort_reason +
               "); marked inactive for " + std::string(EnvName(env)));
        }
      }
    }
    store_.WriteRatings(result_.leaderboard);
    return lost;
  }

  void RunPairs(EnvKind env) {
    const auto roster = config_.RosterFor(env);
    PairScheduler sched(env, roster, config_.pairing, config_.seed,
                        config_.rating.ParamsFor(env).beta);
    EnvSummary& summary = result_.envs[env];
    while (summary.games < config_.max_games) {
      if (EnvConverged(result_.leaderboard, env, sched.ActiveAgents(),
                       config_.convergence)) {
        summary.converged = true;
        break;
      }
      if (sched.ActiveAgents().size() < 2) break;
      std::map<std::string, Rating> ratings;
      for (const auto& [agent, e] : result_.leaderboard.Entries(env)) {
        ratings[agent] = e.rating;
      }
      const int n = std::min(config_.batch_size, config_.max_games - summary.games);
      std::vector<Job> jobs;
      for (const auto& p : sched.NextBatch(ratings, n)) {
        jobs.push_back({MatchId(env, p.index), p.seats, p.seed, {}});
      }
      for (const auto& agent : RunBatch(env, jobs)) {
        sched.Deactivate(agent);
        summary.inactive.push_back(agent);
      }
      summary.games += static_cast<int>(jobs.size());
      Log(std::string(EnvName(env)) + ": " + std::to_string(summary.games) + " games");
    }
    if (!summary.converged) {
      summary.converged = EnvConverged(result_.leaderboard, env, sched.ActiveAgents(),
                                       config_.convergence);
    }
  }

  // Cooperative Hanabi: each agent partners with itself.
  void RunSelfPlay(EnvKind env) {
    EnvSummary& summary = result_.envs[env];
    int index = 0;
    for (const auto& id : config_.RosterFor(env)) {
      for (int done = 0; done < config_.min_games;) {
        const int n = std::min(config_.batch_size, config_.min_games - done);
        std::vector<Job> jobs;
        for (int k = 0; k < n; ++k, ++index) {
          jobs.push_back({MatchId(env, index), std::vector<std::string>(SeatCount(env), id),
                          MatchSeed(config_.seed, env, static_cast<std::uint64_t>(index)),
                          {}});
        }
        const auto lost = RunBatch(env, jobs);
        done += n;
        summary.games += n;
        if (!lost.empty()) {
          summary.inactive.push_back(id);
          break;
        }
      }
    }
    summary.converged = true;
  }

  // One evaluated undercover against reference civilians, fixed game count.
  void RunUndercover() {
    const EnvKind env = EnvKind::kUndercover;
    EnvSummary& summary = result_.envs[env];
    const int seats = SeatCount(env);
    int index = 0;
    for (const auto& id : config_.RosterFor(env)) {
      for (int done = 0; done < config_.undercover.games;) {
        const int n = std::min(config_.batch_size, config_.undercover.games - done);
        std::vector<Job> jobs;
        for (int k = 0; k < n; ++k, ++index) {
          Job job;
          job.id = MatchId(env, index);
          job.seed = MatchSeed(config_.seed, env, static_cast<std::uint64_t>(index));
          job.seats.assign(seats, config_.undercover.reference);
          const int uc = UndercoverSeatFor(job.seed, seats);
          job.seats[uc] = id;
          if (config_.undercover.guess) job.guess_seats = {uc};
          jobs.push_back(std::move(job));
        }
        const auto lost = RunBatch(env, jobs);
        done += n;
        summary.games += n;
        if (!lost.empty()) {
          summary.inactive.insert(summary.inactive.end(), lost.begin(), lost.end());
          break;
        }
      }
    }
    summary.converged = true;
  }

  void WriteErrorRates() {
    auto loaded = store_.LoadRecords();
    nlohmann::json j = nlohmann::json::object();
    for (EnvKind env : config_.envs) {
      std::vector<MatchRecord> recs;
      for (const auto& r : loaded.records) {
        if (r.env == env) recs.push_back(r);
      }
      if (recs.empty()) continue;
      auto& ej = j[std::string(EnvName(env))];
      std::set<std::string> agents;
      for (const auto& r : recs) agents.insert(r.agents.begin(), r.agents.end());
      for (const auto& a : agents) {
        try {
          ej[a] = ErrorRate(recs, a);
        } catch (const ArenaError&) {
          ej[a] = nullptr;
        }
      }
    }
    store_.WriteAnalysis("error_rates.json", j.dump(1) + "\n");
  }

  const TournamentConfig& config_;
  const TournamentHooks& hooks_;
  Store store_;
  AgentPool pool_;
  TournamentResult result_;
  std::map<std::string, MatchRecord> existing_;
};

}  // namespace

AgentPool::AgentPool(const TournamentConfig& config) : config_(config) {}

std::unique_ptr<Agent> AgentPool::Make(const std::string& id) {
  const AgentSpec& spec = config_.Agent(id);
  if (spec.kind != "llm") return MakeAgent(spec);
  std::shared_ptr<ChatBackend> backend;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = backends_[id];
    if (!slot) {
      try {
        slot = std::make_shared<HttpChatClient>(
            AgentEndpoint::FromJson(spec.params.at("endpoint")));
      } catch (const nlohmann::json::exception& e) {
        throw InvalidConfigError("agent " + id + ": " + e.what());
      }
    }
    backend = slot;
  }
  LlmAgentOptions options;
  options.conversation = spec.params.value("conversation", true);
  if (spec.params.contains("prompt_dir")) {
    options.prompt_dir = spec.params["prompt_dir"].get<std::string>();
  }
  return std::make_unique<LlmAgent>(id, std::move(backend), options);
}

std::string MatchId(EnvKind env, int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06d", index);
  return std::string(EnvName(env)) + "-" + buf;
}

bool EnvConverged(const Leaderboard& board, EnvKind env,
                  const std::vector<std::string>& agents,
                  const ConvergenceParams& params) {
  if (agents.empty()) return false;
  const auto& entries = board.Entries(env);
  for (const auto& a : agents) {
    const auto it = entries.find(a);
    if (it == entries.end() || it->second.games < params.min_games) return false;
  }
  if (ScoreKindFor(env) != ScoreKind::kTrueSkillMu) return true;
  std::map<std::string, std::vector<Rating>> histories;
  const auto& all = board.History(env);
  for (const auto& a : agents) {
    const auto it = all.find(a);
    if (it == all.end()) return false;
    histories[a] = it->second;
  }
  return HasConverged(histories, params);
}

TournamentResult RunTournament(const TournamentConfig& config,
                               const TournamentHooks& hooks) {
  config.Validate();
  Runner runner(config, hooks);
  return runner.Run();
}

}  // namespace arena
