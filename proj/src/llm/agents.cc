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

#include "arena/llm/agents.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

#include "arena/analysis/c4_eval.h"
#include "arena/analysis/equity.h"
#include "arena/games/cards.h"
#include "arena/games/connect_four.h"
#include "arena/games/tictactoe.h"
#include "arena/llm/parser.h"

namespace arena {
namespace {

std::uint64_t AgentSeed(std::uint64_t match_seed, int seat) {
  return DeriveSeed(DeriveSeed(match_seed, 0xA6E47), static_cast<std::uint64_t>(seat));
}

AgentTurn Chose(const ActionSpec& action) {
  AgentTurn t;
  t.raw_completion = action.surface;
  t.parse_status = ParseStatus::kOk;
  t.action = action;
  return t;
}

AgentTurn NoLegalMoves() {
  AgentTurn t;
  t.parse_status = ParseStatus::kNoMatch;
  t.parse_detail = "no legal actions offered";
  return t;
}

const std::string& Block(const Observation& obs, const std::string& key) {
  const auto it = obs.text_blocks.find(key);
  if (it == obs.text_blocks.end()) {
    throw ArenaError("observation lacks " + key);
  }
  return it->second;
}

const ActionSpec* FindLegal(const Observation& obs, const ActionPayload& payload) {
  for (const auto& a : obs.legal_actions) {
    if (a.payload == payload) return &a;
  }
  return nullptr;
}

char Initial(const std::string& word) {
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  return '?';
}

// Last line of the most recent user message.
std::string LastUser(const std::vector<ChatMessage>& messages) {
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role == "user") return it->content;
  }
  return "";
}

std::string FragileReply(const std::vector<ChatMessage>& messages) {
  static const std::regex mark_re(R"(You play ([XO])\.)");
  static const std::regex ttt_list(R"(You can only put the mark on \[\((\d), (\d)\))");
  static const std::regex c4_list(R"(following columns: \[ (\d))");
  const std::string user = LastUser(messages);
  std::smatch m;
  if (!std::regex_search(user, m, mark_re)) return "I am not sure what to do.";
  const std::string mark = m.str(1);
  if (user.find("You can only put the mark on") != std::string::npos) {
    if (std::regex_search(user, m, ttt_list)) {
      return mark + ": (" + m.str(1) + ", " + m.str(2) + ")";
    }
  } else if (user.find("following columns") != std::string::npos) {
    if (std::regex_search(user, m, c4_list)) return mark + ": " + m.str(1);
  } else if (user.find("TicTacToe") != std::string::npos ||
             user.find("three-by-three") != std::string::npos ||
             user.find("(1, 3)") != std::string::npos) {
    return mark + ": (4, 4)";
  } else {
    return mark + ": 8";
  }
  return "I am not sure what to do.";
}

}  // namespace

// ---- LlmAgent ---------------------------------------------------------------

LlmAgent::LlmAgent(std::string id, std::shared_ptr<ChatBackend> backend,
                   LlmAgentOptions options)
    : id_(std::move(id)), backend_(std::move(backend)), options_(std::move(options)) {
  if (!backend_) throw InvalidConfigError("agent " + id_ + " has no backend");
}

void LlmAgent::BeginMatch(EnvKind env, int seat, std::uint64_t seed) {
  history_.clear();
  pending_retry_.clear();
  if (!options_.prompt_dir.empty()) {
    custom_prompts_ = PromptSet::Load(env, options_.prompt_dir);
  }
}

const PromptSet& LlmAgent::Prompts(EnvKind env) {
  if (custom_prompts_ && custom_prompts_->env() == env) return *custom_prompts_;
  if (!options_.prompt_dir.empty()) {
    custom_prompts_ = PromptSet::Load(env, options_.prompt_dir);
    return *custom_prompts_;
  }
  return PromptSet::Default(env);
}

std::string LlmAgent::Exchange(const PromptSet& prompts, std::string user,
                               std::vector<ChatMessage>* sent, std::size_t* context) {
  if (!pending_retry_.empty()) {
    user = pending_retry_ + "\n\n" + user;
    pending_retry_.clear();
  }
  std::vector<ChatMessage> request;
  if (options_.conversation) {
    if (history_.empty()) {
      history_.push_back({"system", RenderSystemPrompt(prompts)});
      sent->push_back(history_.back());
    }
    history_.push_back({"user", std::move(user)});
    sent->push_back(history_.back());
    request = history_;
  } else {
    request = {{"system", RenderSystemPrompt(prompts)}, {"user", std::move(user)}};
    *sent = request;
  }
  *context = request.size();
  std::string reply = backend_->Complete(request);
  if (options_.conversation) history_.push_back({"assistant", reply});
  return reply;
}

AgentTurn LlmAgent::Act(const Observation& obs) {
  const PromptSet& prompts = Prompts(obs.env);
  AgentTurn turn;
  turn.raw_completion =
      Exchange(prompts, RenderTurnPrompt(prompts, obs), &turn.prompt, &turn.context_messages);
  turn.completion_calls = 1;
  ParseOutcome parsed = ParseAction(obs.env, turn.raw_completion, obs);
  turn.parse_status = parsed.status;
  turn.parse_detail = std::move(parsed.detail);
  turn.action = std::move(parsed.action);
  return turn;
}

void LlmAgent::NotifyRejected(const std::string& reason) {
  pending_retry_ = RenderRetryNote(reason);
}

std::optional<GuessTurn> LlmAgent::GuessWords(const Observation& final_obs,
                                              const std::vector<int>& others) {
  const PromptSet& prompts = Prompts(final_obs.env);
  if (prompts.Guess() == nullptr) return std::nullopt;
  GuessTurn g;
  std::size_t context = 0;
  g.raw_completion =
      Exchange(prompts, RenderGuessPrompt(prompts, final_obs), &g.prompt, &context);
  g.guesses = ParseGuesses(g.raw_completion, others);
  return g;
}

// ---- RandomAgent ------------------------------------------------------------

void RandomAgent::BeginMatch(EnvKind env, int seat, std::uint64_t seed) {
  rng_ = Rng(AgentSeed(seed, seat));
}

AgentTurn RandomAgent::Act(const Observation& obs) {
  if (obs.legal_actions.empty()) return NoLegalMoves();
  return Chose(obs.legal_actions[rng_.Below(obs.legal_actions.size())]);
}

// ---- TttOracleAgent ---------------------------------------------------------

void TttOracleAgent::BeginMatch(EnvKind env, int seat, std::uint64_t seed) {
  if (env != EnvKind::kTicTacToe) {
    throw InvalidConfigError(id_ + " only plays tictactoe");
  }
  rng_ = Rng(AgentSeed(seed, seat));
}

AgentTurn TttOracleAgent::Act(const Observation& obs) {
  if (obs.legal_actions.empty()) return NoLegalMoves();
  const auto board = ParseTttBoard(Block(obs, "board_status"));
  if (!board) throw ArenaError("unreadable tictactoe board");
  const auto moves = TttOptimalMoves(*board);
  if (moves.empty()) return NoLegalMoves();
  const TttMove pick = moves[rng_.Below(moves.size())];
  const ActionSpec* legal = FindLegal(obs, pick);
  if (!legal) throw ArenaError("optimal move missing from the legal list");
  return Chose(*legal);
}

// ---- C4HeuristicAgent -------------------------------------------------------

void C4HeuristicAgent::BeginMatch(EnvKind env, int seat, std::uint64_t seed) {
  if (env != EnvKind::kConnectFour) {
    throw InvalidConfigError(id_ + " only plays connectfour");
  }
  rng_ = Rng(AgentSeed(seed, seat));
}

AgentTurn C4HeuristicAgent::Act(const Observation& obs) {
  if (obs.legal_actions.empty()) return NoLegalMoves();
  const auto board = ParseC4Board(Block(obs, "board_status"));
  if (!board) throw ArenaError("unreadable connectfour board");
  const Mark me = obs.viewer.index == 0 ? Mark::kX : Mark::kO;
  const BoardResult my_win = me == Mark::kX ? BoardResult::kXWins : BoardResult::kOWins;
  const BoardResult their_win =
      me == Mark::kX ? BoardResult::kOWins : BoardResult::kXWins;

  std::vector<int> cols;
  for (const auto& a : obs.legal_actions) cols.push_back(std::get<C4Move>(a.payload).col);
  auto pick_col = [&](int col) { return Chose(*FindLegal(obs, C4Move{me, col})); };

  for (int col : cols) {
    C4Board next = *board;
    next.Drop(col, me);
    if (C4Winner(next) == my_win) return pick_col(col);
  }
  for (int col : cols) {
    C4Board next = *board;
    next.Drop(col, Opponent(me));
    if (C4Winner(next) == their_win) return pick_col(col);
  }
  int best = 0;
  std::vector<int> best_cols;
  for (int col : cols) {
    C4Board next = *board;
    next.Drop(col, me);
    // Skip drops that hand the opponent an immediate win when possible.
    bool gives_win = false;
    for (int reply = 1; reply <= kC4Cols && !gives_win; ++reply) {
      if (next.DropRow(reply) == 0) continue;
      C4Board after = next;
      after.Drop(reply, Opponent(me));
      gives_win = C4Winner(after) == their_win;
    }
    const int value = C4Value(next, me) - (gives_win ? 1000 : 0);
    if (best_cols.empty() || value > best) {
      best = value;
      best_cols = {col};
    } else if (value == best) {
      best_cols.push_back(col);
    }
  }
  return pick_col(best_cols[rng_.Below(best_cols.size())]);
}

// ---- EquityAgent ------------------------------------------------------------

void EquityAgent::BeginMatch(EnvKind env, int seat, std::uint64_t seed) {
  if (env != EnvKind::kTexasHoldem) {
    throw InvalidConfigError(id_ + " only plays texas_holdem");
  }
  seed_ = AgentSeed(seed, seat);
  decisions_ = 0;
}

AgentTurn EquityAgent::Act(const Observation& obs) {
  if (obs.legal_actions.empty()) return NoLegalMoves();
  const auto hole = ParseCards(Block(obs, "private"));
  const auto board = ParseCards(Block(obs, "public"));
  const double eq =
      McEquity(hole, board, samples_, DeriveSeed(seed_, decisions_++), Execution::kSerial)
          .p_win;
  std::vector<HoldemAction> prefs;
  if (eq >= 0.8) {
    prefs = {HoldemAction::kAllIn, HoldemAction::kRaiseFullPot,
             HoldemAction::kRaiseHalfPot, HoldemAction::kCheckCall};
  } else if (eq >= 0.65) {
    prefs = {HoldemAction::kRaiseFullPot, HoldemAction::kRaiseHalfPot,
             HoldemAction::kCheckCall};
  } else if (eq >= 0.5) {
    prefs = {HoldemAction::kRaiseHalfPot, HoldemAction::kCheckCall};
  } else if (eq >= 0.3) {
    prefs = {HoldemAction::kCheckCall};
  } else {
    prefs = {HoldemAction::kFold, HoldemAction::kCheckCall};
  }
  for (HoldemAction a : prefs) {
    if (const ActionSpec* legal = FindLegal(obs, a)) return Chose(*legal);
  }
  return Chose(obs.legal_actions.front());
}

// ---- ClueBot ----------------------------------------------------------------

void ClueBot::BeginMatch(EnvKind env, int seat, std::uint64_t seed) {
  if (env != EnvKind::kUndercover) {
    throw InvalidConfigError(id_ + " only plays undercover");
  }
  seat_ = seat;
  rng_ = Rng(AgentSeed(seed, seat));
}

std::string ClueBot::ClueFor(const std::string& word, int round, int seat) {
  return std::string(1, Initial(word)) + "-" + std::to_string(round) +
         std::to_string(seat);
}

AgentTurn ClueBot::Act(const Observation& obs) {
  if (obs.legal_actions.empty() && !obs.open_text) return NoLegalMoves();
  const std::string& word = Block(obs, "word");
  if (obs.phase == "clue") {
    const int round = std::stoi(Block(obs, "round"));
    return Chose(MakeAction(EnvKind::kUndercover, seat_,
                            UndercoverClue{ClueFor(word, round, seat_)}));
  }
  // Latest clue per seat; tags are "<initial>-<round><seat>".
  static const std::regex line_re(R"(player_(\d+): (.*))");
  static const std::regex tag_re(R"(^([A-Z?])-\d+$)");
  std::map<int, char> initial;
  const std::string& messages = Block(obs, "messages");
  for (auto it = std::sregex_iterator(messages.begin(), messages.end(), line_re);
       it != std::sregex_iterator(); ++it) {
    const int seat = std::stoi((*it)[1].str());
    const std::string clue = (*it)[2].str();
    std::smatch m;
    initial[seat] = std::regex_match(clue, m, tag_re) ? m.str(1)[0] : '*';
  }
  initial[seat_] = Initial(word);

  std::vector<int> targets;
  for (const auto& a : obs.legal_actions) {
    targets.push_back(std::get<UndercoverVote>(a.payload).target);
  }
  std::map<char, int> tally;
  for (int t : targets) tally[initial.count(t) ? initial[t] : '*']++;
  tally[initial[seat_]]++;
  char majority = initial[seat_];
  for (const auto& [c, n] : tally) {
    if (c != '*' && n > tally[majority]) majority = c;
  }
  std::vector<int> suspects;
  for (int t : targets) {
    const char c = initial.count(t) ? initial[t] : '*';
    if (c != majority) suspects.push_back(t);
  }
  if (suspects.empty()) suspects = targets;
  const int pick = suspects[rng_.Below(suspects.size())];
  return Chose(*FindLegal(obs, UndercoverVote{pick}));
}

std::optional<GuessTurn> ClueBot::GuessWords(const Observation& final_obs,
                                             const std::vector<int>& others) {
  GuessTurn g;
  const std::string& word = Block(final_obs, "word");
  for (int s : others) {
    g.guesses[s] = word;
    g.raw_completion += PlayerId{s}.DisplayName() + ": " + word + "\n";
  }
  return g;
}

// ---- Factories --------------------------------------------------------------

std::unique_ptr<Agent> MakeFormatFragileAgent(std::string id) {
  LlmAgentOptions options;
  options.conversation = false;
  return std::make_unique<LlmAgent>(
      std::move(id), std::make_shared<FunctionBackend>(FragileReply), options);
}

std::unique_ptr<Agent> MakeScriptedAgent(std::string id, std::vector<std::string> replies,
                                         LlmAgentOptions options) {
  if (replies.empty()) throw InvalidConfigError("scripted agent needs replies");
  auto next = std::make_shared<std::size_t>(0);
  auto backend = std::make_shared<FunctionBackend>(
      [replies = std::move(replies), next](const std::vector<ChatMessage>&) {
        return replies[(*next)++ % replies.size()];
      });
  return std::make_unique<LlmAgent>(std::move(id), std::move(backend), std::move(options));
}

AgentSpec AgentSpec::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidConfigError("agent entry must be an object");
  AgentSpec s;
  try {
    s.id = j.at("id").get<std::string>();
    s.kind = j.at("kind").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfigError(std::string("agent entry: ") + e.what());
  }
  if (s.id.empty()) throw InvalidConfigError("agent id is empty");
  const auto& kinds = AgentKinds();
  if (std::find(kinds.begin(), kinds.end(), s.kind) == kinds.end()) {
    throw InvalidConfigError("agent " + s.id + ": unknown kind " + s.kind);
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "id" && key != "kind") s.params[key] = value;
  }
  return s;
}

nlohmann::json AgentSpec::ToJson() const {
  nlohmann::json j = params.is_object() ? params : nlohmann::json::object();
  j["id"] = id;
  j["kind"] = kind;
  return j;
}

const std::vector<std::string>& AgentKinds() {
  static const std::vector<std::string> kinds = {
      "random", "ttt_oracle", "c4_heuristic", "equity", "clue_bot",
      "format_fragile", "scripted", "llm"};
  return kinds;
}

std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec) {
  try {
    if (spec.kind == "random") return std::make_unique<RandomAgent>(spec.id);
    if (spec.kind == "ttt_oracle") return std::make_unique<TttOracleAgent>(spec.id);
    if (spec.kind == "c4_heuristic") return std::make_unique<C4HeuristicAgent>(spec.id);
    if (spec.kind == "equity") {
      return std::make_unique<EquityAgent>(spec.id,
                                           spec.params.value("samples", std::uint64_t{400}));
    }
    if (spec.kind == "clue_bot") return std::make_unique<ClueBot>(spec.id);
    if (spec.kind == "format_fragile") return MakeFormatFragileAgent(spec.id);
    LlmAgentOptions options;
    options.conversation = spec.params.value("conversation", true);
    if (spec.params.contains("prompt_dir")) {
      options.prompt_dir = spec.params["prompt_dir"].get<std::string>();
    }
    if (spec.kind == "scripted") {
      return MakeScriptedAgent(
          spec.id, spec.params.at("replies").get<std::vector<std::string>>(), options);
    }
    if (spec.kind == "llm") {
      auto client = std::make_shared<HttpChatClient>(
          AgentEndpoint::FromJson(spec.params.at("endpoint")));
      return std::make_unique<LlmAgent>(spec.id, std::move(client), options);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfigError("agent " + spec.id + ": " + e.what());
  }
  throw InvalidConfigError("agent " + spec.id + ": unknown kind " + spec.kind);
}

}  // namespace arena
