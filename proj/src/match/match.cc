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

#include "arena/match/match.h"

#include <chrono>
#include <ctime>

#include "arena/core/rng.h"
#include "arena/games/registry.h"
#include "arena/games/undercover.h"

namespace arena {
namespace {

std::string UtcNow() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void FillFromAgent(TurnEntry& t, AgentTurn&& at) {
  t.prompt = std::move(at.prompt);
  t.context_messages = at.context_messages;
  t.raw_completion = std::move(at.raw_completion);
  t.parse_status = at.parse_status;
  t.parse_detail = std::move(at.parse_detail);
  t.parsed = std::move(at.action);
}

}  // namespace

Outcome ForfeitOutcome(const GameState& state, int offender) {
  switch (state.env()) {
    case EnvKind::kHanabi:
      return Outcome::Failure();
    case EnvKind::kUndercover: {
      const auto& uc = static_cast<const UndercoverState&>(state);
      if (offender != uc.undercover_seat()) return Outcome::Win(uc.undercover_seat());
      std::vector<int> civilians;
      for (int s = 0; s < state.NumSeats(); ++s) {
        if (s != uc.undercover_seat()) civilians.push_back(s);
      }
      return Outcome::Team(std::move(civilians));
    }
    default:
      return Outcome::Win(1 - offender);
  }
}

MatchRecord RunMatch(EnvKind env, std::span<Agent* const> agents,
                     std::uint64_t seed, const MatchOptions& options) {
  if (static_cast<int>(agents.size()) != SeatCount(env)) {
    throw InvalidConfigError(std::string(EnvName(env)) + " needs " +
                             std::to_string(SeatCount(env)) + " agents, got " +
                             std::to_string(agents.size()));
  }
  const auto started = std::chrono::steady_clock::now();
  const std::string started_utc = options.record_wall_clock ? UtcNow() : "";

  MatchRecord rec;
  rec.id = options.id.empty()
               ? std::string(EnvName(env)) + "-" + SeedToString(seed)
               : options.id;
  rec.env = env;
  rec.seed = seed;
  rec.config = options.config.is_null() ? nlohmann::json::object() : options.config;
  rec.hints_enabled = options.hints_enabled;
  rec.policy = options.policy;
  rec.human_participant = options.human_participant;
  for (Agent* a : agents) rec.agents.push_back(a->id());

  auto state = Reset(env, seed, rec.config);
  for (std::size_t s = 0; s < agents.size(); ++s) {
    agents[s]->BeginMatch(env, static_cast<int>(s), seed);
  }
  Rng fallback_rng(DeriveSeed(seed, 0xFA11BAC));
  const int ply_cap = PlyBound(env) * (options.policy.max_retries + 1) + 1;

  bool stopped = false;
  for (int ply = 0; !state->IsTerminal() && !stopped; ++ply) {
    if (ply > ply_cap) throw ArenaError("match exceeded its ply bound");
    const int seat = state->CurrentSeat();
    const Observation obs = state->Observe(seat, options.hints_enabled);
    const nlohmann::json obs_json = ObservationToJson(obs);
    for (int attempt = 0;; ++attempt) {
      TurnEntry t;
      t.ply = ply;
      t.seat = seat;
      t.attempt = attempt;
      t.observation = obs_json;
      AgentTurn at;
      try {
        at = agents[seat]->Act(obs);
      } catch (const TransportError& e) {
        t.violation = std::string("transport: ") + e.what();
        rec.turns.push_back(std::move(t));
        rec.aborted = true;
        rec.abort_reason = e.what();
        stopped = true;
        break;
      }
      FillFromAgent(t, std::move(at));

      std::string reason;
      if (t.parse_status == ParseStatus::kOk && t.parsed) {
        const Legality legal = state->CheckAction(*t.parsed);
        if (legal.ok) {
          const StepResult res = state->ApplyAction(*t.parsed);
          t.applied = t.parsed;
          t.rewards = res.rewards;
          rec.turns.push_back(std::move(t));
          if (options.on_turn) options.on_turn(rec.turns.back(), *state);
          break;
        }
        t.parse_status = ParseStatus::kIllegalReference;
        reason = legal.reason;
      } else {
        reason = std::string(ParseStatusName(t.parse_status));
        if (!t.parse_detail.empty()) reason += ": " + t.parse_detail;
      }
      t.violation = reason;

      if (attempt < options.policy.max_retries) {
        rec.turns.push_back(std::move(t));
        if (options.on_turn) options.on_turn(rec.turns.back(), *state);
        agents[seat]->NotifyRejected(reason);
        continue;
      }
      if (options.policy.on_exhaustion == OnExhaustion::kRandomLegal) {
        const ActionSpec pick =
            obs.legal_actions[fallback_rng.Below(obs.legal_actions.size())];
        const StepResult res = state->ApplyAction(pick);
        t.applied = pick;
        t.fallback = true;
        t.rewards = res.rewards;
        rec.turns.push_back(std::move(t));
        if (options.on_turn) options.on_turn(rec.turns.back(), *state);
        break;
      }
      rec.turns.push_back(std::move(t));
      if (options.on_turn) options.on_turn(rec.turns.back(), *state);
      rec.illegal_terminated = true;
      rec.offender = seat;
      stopped = true;
      break;
    }
  }

  if (rec.illegal_terminated) {
    rec.outcome = ForfeitOutcome(*state, rec.offender);
  } else {
    rec.outcome = state->GetOutcome();
  }
  rec.final_state = state->Serialize();
  rec.returns = state->Returns();

  if (env == EnvKind::kUndercover && !rec.aborted) {
    const auto& uc = static_cast<const UndercoverState&>(*state);
    for (int seat : options.guess_seats) {
      std::vector<int> others;
      for (int s = 0; s < uc.NumSeats(); ++s) {
        if (s != seat) others.push_back(s);
      }
      auto g = agents[seat]->GuessWords(uc.Observe(seat, options.hints_enabled), others);
      if (!g) continue;
      GuessEntry e;
      e.seat = seat;
      e.raw_completion = g->raw_completion;
      e.guesses = g->guesses;
      for (int s : others) e.truth[s] = uc.word(s);
      rec.guesses.push_back(std::move(e));
    }
  }

  if (options.record_wall_clock) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    rec.wall_clock = nlohmann::json{{"started_utc", started_utc},
                                    {"finished_utc", UtcNow()},
                                    {"duration_ms", ms}};
  }
  return rec;
}

std::unique_ptr<GameState> Replay(const MatchRecord& record) {
  std::unique_ptr<GameState> state;
  try {
    state = Reset(record.env, record.seed, record.config);
  } catch (const InvalidConfigError& e) {
    throw CorruptRecordError(std::string("record config rejected: ") + e.what());
  }
  for (const auto& t : record.turns) {
    if (!t.applied) continue;
    if (state->IsTerminal()) {
      throw CorruptRecordError("action recorded after the game ended (ply " +
                               std::to_string(t.ply) + ")");
    }
    if (t.seat != state->CurrentSeat()) {
      throw CorruptRecordError("ply " + std::to_string(t.ply) + " recorded for " +
                               PlayerId{t.seat}.DisplayName() + " out of turn");
    }
    const Legality legal = state->CheckAction(*t.applied);
    if (!legal.ok) {
      throw CorruptRecordError("ply " + std::to_string(t.ply) + " action '" +
                               t.applied->surface + "' is illegal: " + legal.reason);
    }
    state->ApplyAction(*t.applied);
  }
  return state;
}

std::unique_ptr<GameState> ReplayAndVerify(const MatchRecord& record) {
  auto state = Replay(record);
  if (state->Serialize() != record.final_state) {
    throw CorruptRecordError("replayed state differs from the recorded final state");
  }
  return state;
}

std::string FormatTranscript(const MatchRecord& record) {
  std::string out = "match " + record.id + " (" + std::string(EnvName(record.env)) +
                    ", seed " + SeedToString(record.seed) + ")\n";
  for (std::size_t s = 0; s < record.agents.size(); ++s) {
    out += "  " + PlayerId{static_cast<int>(s)}.DisplayName() + " = " +
           record.agents[s] + "\n";
  }
  for (const auto& t : record.turns) {
    out += "[" + std::to_string(t.ply + 1) + "] " + PlayerId{t.seat}.DisplayName() + ": ";
    if (t.applied) {
      out += t.applied->surface;
      if (t.fallback) out += " (random fallback)";
    } else {
      out += "<violation: " + t.violation + ">";
    }
    out += "\n";
  }
  out += "outcome: " + std::string(OutcomeKindName(record.outcome.kind));
  for (int w : record.outcome.winners) out += " " + PlayerId{w}.DisplayName();
  if (record.illegal_terminated) {
    out += " (forfeit by " + PlayerId{record.offender}.DisplayName() + ")";
  }
  if (record.aborted) out += " (aborted: " + record.abort_reason + ")";
  out += "\n";
  return out;
}

}  // namespace arena
