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

#include "arena/orchestrator/gateway.h"

#include <algorithm>

#include "arena/core/serialize.h"
#include "arena/games/registry.h"
#include "arena/llm/parser.h"
#include "arena/llm/prompts.h"
#include "httplib.h"

namespace arena {

struct Gateway::Session {
  std::mutex mu;
  std::condition_variable cv;
  std::string id;
  EnvKind env = EnvKind::kTicTacToe;
  int human_seat = 0;
  bool hints_enabled = true;
  std::unique_ptr<GameState> state;
  std::vector<std::unique_ptr<Agent>> agents;  // null at the human seat
  MatchRecord record;
  int ply = 0;
  bool finished = false;
  std::vector<nlohmann::json> events;
  std::map<std::string, GatewayResponse> idempotent;
};

struct Gateway::Http {
  httplib::Server server;
};

namespace {

GatewayResponse Error(int status, const std::string& message,
                      nlohmann::json extra = nlohmann::json::object()) {
  extra["error"] = message;
  return {status, std::move(extra)};
}

nlohmann::json LegalSurfaces(const Observation& obs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : obs.legal_actions) out.push_back(a.surface);
  return out;
}

nlohmann::json TurnEvent(const TurnEntry& t, const GameState& state, std::size_t index) {
  return {{"type", "turn"},
          {"index", index},
          {"ply", t.ply},
          {"seat", t.seat},
          {"surface_text", t.applied ? t.applied->surface : ""},
          {"violation", t.violation},
          {"state_render", state.Render()}};
}

}  // namespace

Gateway::Gateway(GatewayOptions options)
    : options_(std::move(options)), store_(options_.store_dir) {}

Gateway::~Gateway() { Stop(); }

std::unique_ptr<Agent> Gateway::MakeOpponent(const std::string& id) const {
  for (const auto& a : options_.agents) {
    if (a.id == id) return MakeAgent(a);
  }
  const auto& kinds = AgentKinds();
  if (id != "llm" && id != "scripted" &&
      std::find(kinds.begin(), kinds.end(), id) != kinds.end()) {
    return MakeAgent(AgentSpec{id, id, nlohmann::json::object()});
  }
  throw InvalidConfigError("unknown opponent " + id);
}

std::shared_ptr<Gateway::Session> Gateway::Find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

GatewayResponse Gateway::CreateSession(const nlohmann::json& body) {
  if (!body.is_object()) return Error(400, "body must be a JSON object");
  auto s = std::make_shared<Session>();
  try {
    const auto env = ParseEnvKind(body.at("env").get<std::string>());
    if (!env) return Error(400, "unknown env " + body["env"].get<std::string>());
    s->env = *env;
    const int seats = SeatCount(s->env);
    s->human_seat = body.value("human_seat", 0);
    if (s->human_seat < 0 || s->human_seat >= seats) {
      return Error(400, "human_seat out of range");
    }
    s->hints_enabled = body.value("hints", true);
    std::vector<std::string> opponents;
    if (body.contains("opponents")) {
      opponents = body["opponents"].get<std::vector<std::string>>();
    } else {
      opponents.assign(seats - 1, body.value("opponent", std::string("random")));
    }
    if (static_cast<int>(opponents.size()) != seats - 1) {
      return Error(400, "expected " + std::to_string(seats - 1) + " opponents");
    }
    std::uint64_t seed = 0;
    {
      std::lock_guard<std::mutex> lock(mu_);
      s->id = "s" + std::to_string(next_session_);
      seed = static_cast<std::uint64_t>(next_session_++);
    }
    if (body.contains("seed")) seed = SeedFromJson(body["seed"]);
    const nlohmann::json config = body.value("config", nlohmann::json(nullptr));
    s->state = Reset(s->env, seed, config);

    std::size_t next_opp = 0;
    for (int seat = 0; seat < seats; ++seat) {
      if (seat == s->human_seat) {
        s->agents.push_back(nullptr);
        s->record.agents.push_back("human");
      } else {
        s->agents.push_back(MakeOpponent(opponents[next_opp]));
        s->record.agents.push_back(opponents[next_opp]);
        ++next_opp;
        s->agents.back()->BeginMatch(s->env, seat, seed);
      }
    }
    s->record.id = "session-" + s->id + "-" + std::string(EnvName(s->env)) + "-" +
                   SeedToString(seed);
    s->record.env = s->env;
    s->record.seed = seed;
    s->record.config = config.is_null() ? nlohmann::json::object() : config;
    s->record.hints_enabled = s->hints_enabled;
    s->record.human_participant = true;
  } catch (const nlohmann::json::exception& e) {
    return Error(400, std::string("bad request: ") + e.what());
  } catch (const InvalidConfigError& e) {
    return Error(400, e.what());
  } catch (const ArenaError& e) {
    return Error(400, e.what());
  }

  {
    std::lock_guard<std::mutex> lock(s->mu);
    s->events.push_back({{"type", "start"},
                         {"index", 0},
                         {"seat", s->human_seat},
                         {"surface_text", ""},
                         {"state_render", s->state->Render()}});
    RunBots(*s);
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    sessions_[s->id] = s;
  }
  std::lock_guard<std::mutex> lock(s->mu);
  return {201, View(*s)};
}

void Gateway::RunBots(Session& s) {
  while (!s.finished && !s.state->IsTerminal()) {
    const int seat = s.state->CurrentSeat();
    if (seat == s.human_seat) break;
    const Observation obs = s.state->Observe(seat, s.hints_enabled);
    TurnEntry t;
    t.ply = s.ply;
    t.seat = seat;
    t.observation = ObservationToJson(obs);
    AgentTurn at;
    try {
      at = s.agents[seat]->Act(obs);
    } catch (const TransportError& e) {
      t.violation = std::string("transport: ") + e.what();
      s.record.turns.push_back(t);
      s.record.aborted = true;
      s.record.abort_reason = e.what();
      Finish(s);
      return;
    }
    t.prompt = std::move(at.prompt);
    t.context_messages = at.context_messages;
    t.raw_completion = std::move(at.raw_completion);
    t.parse_status = at.parse_status;
    t.parse_detail = std::move(at.parse_detail);
    t.parsed = at.action;
    if (at.parse_status == ParseStatus::kOk && at.action &&
        s.state->CheckAction(*at.action).ok) {
      t.rewards = s.state->ApplyAction(*at.action).rewards;
      t.applied = at.action;
    } else {
      t.violation = t.parse_detail.empty() ? std::string(ParseStatusName(t.parse_status))
                                           : t.parse_detail;
      s.record.turns.push_back(t);
      s.events.push_back(TurnEvent(t, *s.state, s.events.size()));
      s.record.illegal_terminated = true;
      s.record.offender = seat;
      Finish(s);
      return;
    }
    s.record.turns.push_back(t);
    s.events.push_back(TurnEvent(t, *s.state, s.events.size()));
    ++s.ply;
  }
  if (s.state->IsTerminal() && !s.finished) Finish(s);
  s.cv.notify_all();
}

void Gateway::Finish(Session& s) {
  s.record.outcome = s.record.illegal_terminated ? ForfeitOutcome(*s.state, s.record.offender)
                                                 : s.state->GetOutcome();
  s.record.final_state = s.state->Serialize();
  s.record.returns = s.state->Returns();
  s.finished = true;
  store_.AppendRecord(s.record);
  s.events.push_back({{"type", "end"},
                      {"index", s.events.size()},
                      {"seat", -1},
                      {"surface_text", ""},
                      {"outcome", OutcomeToJson(s.record.outcome)},
                      {"state_render", s.state->Render()}});
  s.cv.notify_all();
}

nlohmann::json Gateway::View(const Session& s) const {
  const Observation obs = s.state->Observe(s.human_seat, s.hints_enabled);
  const PromptSet& prompts = PromptSet::Default(s.env);
  nlohmann::json j;
  j["id"] = s.id;
  j["env"] = std::string(EnvName(s.env));
  j["record_id"] = s.record.id;
  j["seed"] = SeedToString(s.record.seed);
  j["human_seat"] = s.human_seat;
  j["agents"] = s.record.agents;
  j["current_seat"] = s.finished ? -1 : s.state->CurrentSeat();
  j["status"] = s.finished ? "finished" : "awaiting_human";
  j["observation"] = ObservationToJson(obs);
  j["prompt"] = {{"system", RenderSystemPrompt(prompts)},
                 {"user", RenderTurnPrompt(prompts, obs)}};
  j["legal"] = s.finished ? nlohmann::json::array() : LegalSurfaces(obs);
  j["render"] = s.state->Render();
  j["events"] = s.events.size();
  if (s.finished) {
    j["outcome"] = OutcomeToJson(s.record.outcome);
    j["returns"] = s.record.returns;
    j["transcript"] = FormatTranscript(s.record);
  }
  return j;
}

GatewayResponse Gateway::GetSession(const std::string& id) {
  auto s = Find(id);
  if (!s) return Error(404, "no session " + id);
  std::lock_guard<std::mutex> lock(s->mu);
  return {200, View(*s)};
}

GatewayResponse Gateway::SubmitAction(const std::string& id, const nlohmann::json& body,
                                      const std::string& idempotency_key) {
  auto s = Find(id);
  if (!s) return Error(404, "no session " + id);
  std::lock_guard<std::mutex> lock(s->mu);
  if (!idempotency_key.empty()) {
    if (const auto it = s->idempotent.find(idempotency_key); it != s->idempotent.end()) {
      return it->second;
    }
  }
  auto respond = [&](GatewayResponse r) {
    if (!idempotency_key.empty()) s->idempotent[idempotency_key] = r;
    return r;
  };
  if (!body.is_object()) return Error(400, "body must be a JSON object");
  if (s->finished) return respond(Error(409, "session is finished"));
  const int current = s->state->CurrentSeat();
  if (current != s->human_seat) {
    return respond(Error(409, "not the human's turn", {{"current_seat", current}}));
  }
  if (body.contains("seat") && body["seat"] != s->human_seat) {
    return respond(Error(409, "seat " + body["seat"].dump() + " is not to move",
                         {{"current_seat", current}}));
  }
  const Observation obs = s->state->Observe(current, s->hints_enabled);
  const nlohmann::json legal = LegalSurfaces(obs);

  std::optional<ActionSpec> action;
  TurnEntry t;
  t.ply = s->ply;
  t.seat = current;
  t.observation = ObservationToJson(obs);
  try {
    if (body.contains("payload")) {
      action = MakeAction(s->env, current, PayloadFromJson(s->env, body["payload"]));
      t.raw_completion = body["payload"].dump();
    } else {
      const std::string text = body.at("action").get<std::string>();
      t.raw_completion = text;
      const ParseOutcome parsed = ParseAction(s->env, text, obs);
      if (!parsed.ok()) {
        return respond(Error(422, parsed.detail.empty()
                                      ? std::string(ParseStatusName(parsed.status))
                                      : parsed.detail,
                             {{"parse_status", ParseStatusName(parsed.status)},
                              {"legal", legal}}));
      }
      action = parsed.action;
    }
  } catch (const nlohmann::json::exception& e) {
    return respond(Error(400, std::string("bad request: ") + e.what()));
  } catch (const CorruptRecordError& e) {
    return respond(Error(400, e.what()));
  }
  const Legality legality = s->state->CheckAction(*action);
  if (!legality.ok) {
    return respond(Error(422, legality.reason, {{"legal", legal}}));
  }
  t.parsed = action;
  t.applied = action;
  t.rewards = s->state->ApplyAction(*action).rewards;
  s->record.turns.push_back(t);
  s->events.push_back(TurnEvent(t, *s->state, s->events.size()));
  ++s->ply;
  RunBots(*s);
  s->cv.notify_all();
  return respond({200, View(*s)});
}

GatewayResponse Gateway::ListEnvs() const {
  nlohmann::json out = nlohmann::json::array();
  for (EnvKind env : kAllEnvs) {
    out.push_back({{"name", std::string(EnvName(env))},
                   {"seats", SeatCount(env)},
                   {"default_config", DefaultConfig(env)},
                   {"hint_ablation", PromptSet::Default(env).HasHintAblation()}});
  }
  return {200, out};
}

GatewayResponse Gateway::ListAgents() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : options_.agents) out.push_back({{"id", a.id}, {"kind", a.kind}});
  for (const auto& k : AgentKinds()) {
    if (k == "llm" || k == "scripted") continue;
    out.push_back({{"id", k}, {"kind", k}});
  }
  return {200, out};
}

GatewayResponse Gateway::GetLeaderboard() {
  try {
    Leaderboard board = store_.LoadRatings(options_.rating);
    Store::Reconcile(board, store_.LoadRecords().records);
    return {200, Store::LeaderboardDocument(board)};
  } catch (const ArenaError& e) {
    return Error(500, e.what());
  }
}

std::vector<nlohmann::json> Gateway::EventsSince(const std::string& id, std::size_t from,
                                                 std::chrono::milliseconds wait,
                                                 bool* finished) {
  auto s = Find(id);
  if (!s) throw ArenaError("no session " + id);
  std::unique_lock<std::mutex> lock(s->mu);
  s->cv.wait_for(lock, wait, [&] { return s->events.size() > from || s->finished; });
  std::vector<nlohmann::json> out;
  for (std::size_t i = from; i < s->events.size(); ++i) out.push_back(s->events[i]);
  if (finished) *finished = s->finished;
  return out;
}

int Gateway::Bind(const std::string& host, int port) {
  http_ = std::make_unique<Http>();
  auto& srv = http_->server;
  auto send = [](httplib::Response& res, const GatewayResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto parse_body = [](const httplib::Request& req) {
    return req.body.empty() ? nlohmann::json::object()
                            : nlohmann::json::parse(req.body, nullptr, false);
  };
  srv.Post("/api/sessions", [this, send, parse_body](const httplib::Request& req,
                                                     httplib::Response& res) {
    const auto body = parse_body(req);
    if (body.is_discarded()) return send(res, Error(400, "malformed JSON"));
    send(res, CreateSession(body));
  });
  srv.Get(R"(/api/sessions/([A-Za-z0-9]+))",
          [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, GetSession(req.matches[1]));
          });
  srv.Post(R"(/api/sessions/([A-Za-z0-9]+)/actions)",
           [this, send, parse_body](const httplib::Request& req, httplib::Response& res) {
             const auto body = parse_body(req);
             if (body.is_discarded()) return send(res, Error(400, "malformed JSON"));
             send(res, SubmitAction(req.matches[1], body,
                                    req.get_header_value("Idempotency-Key")));
           });
  srv.Get(R"(/api/sessions/([A-Za-z0-9]+)/events)",
          [this, send](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            if (!Find(id)) return send(res, Error(404, "no session " + id));
            std::size_t from = 0;
            if (req.has_param("from")) from = std::stoul(req.get_param_value("from"));
            auto cursor = std::make_shared<std::size_t>(from);
            res.set_header("Cache-Control", "no-cache");
            res.set_chunked_content_provider(
                "text/event-stream",
                [this, id, cursor](std::size_t, httplib::DataSink& sink) {
                  bool finished = false;
                  const auto events =
                      EventsSince(id, *cursor, std::chrono::milliseconds(1000), &finished);
                  for (const auto& ev : events) {
                    const std::string chunk = "id: " + ev["index"].dump() + "\nevent: " +
                                              ev["type"].get<std::string>() +
                                              "\ndata: " + ev.dump() + "\n\n";
                    if (!sink.write(chunk.data(), chunk.size())) return false;
                    ++*cursor;
                  }
                  if (finished && events.empty()) {
                    sink.done();
                  }
                  return true;
                });
          });
  srv.Get("/api/leaderboard", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, GetLeaderboard());
  });
  srv.Get("/api/envs", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, ListEnvs());
  });
  srv.Get("/api/agents", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, ListAgents());
  });
  srv.Get("/api/health", [send](const httplib::Request&, httplib::Response& res) {
    send(res, {200, {{"ok", true}}});
  });
  srv.set_exception_handler(
      [send](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        send(res, Error(500, what));
      });
  const int bound = port == 0 ? srv.bind_to_any_port(host) : (srv.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw ArenaError("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void Gateway::Listen() {
  if (!http_) throw ArenaError("Bind() first");
  http_->server.listen_after_bind();
}

void Gateway::Stop() {
  if (http_) http_->server.stop();
}

}  // namespace arena
