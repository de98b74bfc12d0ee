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

#include "arena/games/holdem.h"

#include <algorithm>
#include <numeric>

#include "arena/core/rng.h"

namespace arena {

HoldemConfig HoldemConfig::FromJson(const nlohmann::json& j) {
  HoldemConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw InvalidConfigError("holdem config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) {
      throw InvalidConfigError("holdem." + key + " must be an integer");
    }
    if (key == "stack") c.stack = value.get<int>();
    else if (key == "small_blind") c.small_blind = value.get<int>();
    else if (key == "big_blind") c.big_blind = value.get<int>();
    else if (key == "dealer") c.dealer = value.get<int>();
    else throw InvalidConfigError("unknown holdem config key '" + key + "'");
  }
  if (c.small_blind <= 0 || c.big_blind < c.small_blind ||
      c.big_blind >= c.stack) {
    throw InvalidConfigError("holdem blinds must satisfy 0 < sb <= bb < stack");
  }
  if (c.dealer < -1 || c.dealer > 1) {
    throw InvalidConfigError("holdem.dealer must be -1, 0 or 1");
  }
  return c;
}

nlohmann::json HoldemConfig::ToJson() const {
  return {{"stack", stack},
          {"small_blind", small_blind},
          {"big_blind", big_blind},
          {"dealer", dealer}};
}

std::string_view StreetName(Street s) {
  switch (s) {
    case Street::kPreflop: return "preflop";
    case Street::kFlop: return "flop";
    case Street::kTurn: return "turn";
    case Street::kRiver: return "river";
    case Street::kShowdown: return "showdown";
  }
  return "?";
}

HoldemState::HoldemState(std::uint64_t seed, const HoldemConfig& config)
    : GameState(seed), config_(config) {
  std::array<Card, kDeckSize> deck;
  for (int i = 0; i < kDeckSize; ++i) deck[i] = Card(i);
  Rng rng(seed);
  rng.Shuffle(std::span<Card>(deck));
  holes_[0] = {deck[0], deck[1]};
  holes_[1] = {deck[2], deck[3]};
  for (int i = 0; i < 5; ++i) board_[i] = deck[4 + i];
  dealer_ = config.dealer >= 0 ? config.dealer : static_cast<int>(seed % 2);
  PostBlinds();
}

HoldemState::HoldemState(const HoldemConfig& config, int dealer,
                         std::array<std::array<Card, 2>, 2> holes,
                         std::array<Card, 5> board)
    : GameState(0), config_(config), dealer_(dealer), holes_(holes),
      board_(board) {
  std::vector<Card> all = {holes[0][0], holes[0][1], holes[1][0], holes[1][1]};
  all.insert(all.end(), board.begin(), board.end());
  RequireDistinct(all);
  PostBlinds();
}

void HoldemState::PostBlinds() {
  stacks_ = {config_.stack, config_.stack};
  Pay(dealer_, config_.small_blind);
  Pay(1 - dealer_, config_.big_blind);
  to_act_ = dealer_;
}

void HoldemState::Pay(int seat, int amount) {
  amount = std::min(amount, stacks_[seat]);
  stacks_[seat] -= amount;
  committed_[seat] += amount;
  street_bet_[seat] += amount;
}

int HoldemState::ToCall() const {
  return std::max(0, street_bet_[1 - to_act_] - street_bet_[to_act_]);
}

int HoldemState::RaiseSize(HoldemAction a) const {
  const int pot_after_call = pot() + ToCall();
  if (a == HoldemAction::kRaiseHalfPot) return (pot_after_call + 1) / 2;
  if (a == HoldemAction::kRaiseFullPot) return pot_after_call;
  return 0;
}

std::vector<HoldemAction> HoldemState::LegalKinds() const {
  if (terminal_) throw IllegalActionError("hand is over");
  const int me = to_act_;
  if (stacks_[1 - me] == 0) {
    return {HoldemAction::kFold, HoldemAction::kCheckCall};
  }
  std::vector<HoldemAction> kinds = {HoldemAction::kFold,
                                     HoldemAction::kCheckCall};
  for (HoldemAction raise :
       {HoldemAction::kRaiseHalfPot, HoldemAction::kRaiseFullPot}) {
    if (ToCall() + RaiseSize(raise) < stacks_[me]) kinds.push_back(raise);
  }
  if (stacks_[me] > 0) kinds.push_back(HoldemAction::kAllIn);
  return kinds;
}

std::vector<ActionSpec> HoldemState::LegalActions() const {
  std::vector<ActionSpec> actions;
  if (terminal_) return actions;
  for (HoldemAction a : LegalKinds()) {
    actions.push_back(MakeAction(env(), to_act_, a));
  }
  return actions;
}

std::vector<double> HoldemState::DoApply(const ActionSpec& action) {
  const HoldemAction a = std::get<HoldemAction>(action.payload);
  const int me = to_act_;
  const int opp = 1 - me;
  history_.push_back(std::string(StreetName(street_)) + ":" +
                     PlayerId{me}.DisplayName() + ":" +
                     std::string(HoldemActionName(a)));
  switch (a) {
    case HoldemAction::kFold:
      Settle(opp);
      break;
    case HoldemAction::kCheckCall:
      Pay(me, ToCall());
      acted_[me] = true;
      break;
    case HoldemAction::kRaiseHalfPot:
    case HoldemAction::kRaiseFullPot:
      Pay(me, ToCall() + RaiseSize(a));
      acted_[me] = true;
      acted_[opp] = false;
      break;
    case HoldemAction::kAllIn:
      Pay(me, stacks_[me]);
      acted_[me] = true;
      if (street_bet_[me] > street_bet_[opp]) acted_[opp] = false;
      break;
  }
  if (!terminal_) {
    to_act_ = opp;
    CloseStreetIfDone();
  }
  if (!terminal_) return {0.0, 0.0};
  return Returns();
}

void HoldemState::CloseStreetIfDone() {
  bool done;
  if (street_bet_[0] == street_bet_[1]) {
    done = acted_[0] && acted_[1];
    // A player who is all-in has nothing left to decide.
    if (!done && (stacks_[0] == 0 || stacks_[1] == 0)) {
      const int live = stacks_[0] == 0 ? 1 : 0;
      done = acted_[live] || stacks_[live] == 0;
    }
  } else {
    const int low = street_bet_[0] < street_bet_[1] ? 0 : 1;
    done = stacks_[low] == 0 && acted_[low];
    if (done) {
      // Return the uncalled part of the bigger bet.
      const int excess = street_bet_[1 - low] - street_bet_[low];
      stacks_[1 - low] += excess;
      committed_[1 - low] -= excess;
      street_bet_[1 - low] -= excess;
    }
  }
  if (!done) return;
  if (stacks_[0] == 0 || stacks_[1] == 0 || street_ == Street::kRiver) {
    Showdown();
    return;
  }
  street_ = static_cast<Street>(static_cast<int>(street_) + 1);
  street_bet_ = {0, 0};
  acted_ = {false, false};
  to_act_ = 1 - dealer_;
}

void HoldemState::Showdown() {
  street_ = Street::kShowdown;
  std::array<HandRank, 2> ranks;
  for (int s = 0; s < 2; ++s) {
    std::array<Card, 7> seven = {holes_[s][0], holes_[s][1], board_[0],
                                 board_[1],    board_[2],    board_[3],
                                 board_[4]};
    ranks[s] = EvaluateBest(seven);
  }
  if (ranks[0] > ranks[1]) Settle(0);
  else if (ranks[1] > ranks[0]) Settle(1);
  else Settle(-1);
}

void HoldemState::Settle(int winner) {
  final_stacks_ = stacks_;
  const int total = pot();
  if (winner >= 0) {
    final_stacks_[winner] += total;
  } else {
    final_stacks_[0] += total / 2;
    final_stacks_[1] += total - total / 2;
  }
  terminal_ = true;
}

std::vector<Card> HoldemState::VisibleBoard() const {
  int n = 0;
  switch (street_) {
    case Street::kPreflop: n = 0; break;
    case Street::kFlop: n = 3; break;
    case Street::kTurn: n = 4; break;
    default: n = 5; break;
  }
  return {board_.begin(), board_.begin() + n};
}

std::vector<double> HoldemState::Returns() const {
  if (!terminal_) return {0.0, 0.0};
  return {static_cast<double>(final_stacks_[0] - config_.stack),
          static_cast<double>(final_stacks_[1] - config_.stack)};
}

Outcome HoldemState::GetOutcome() const {
  if (!terminal_) return Outcome::Ongoing();
  if (final_stacks_[0] > final_stacks_[1]) return Outcome::Win(0);
  if (final_stacks_[1] > final_stacks_[0]) return Outcome::Win(1);
  return Outcome::Draw();
}

Observation HoldemState::Observe(int seat, bool hints_enabled) const {
  Observation obs;
  obs.env = env();
  obs.viewer = PlayerId{seat};
  obs.hints_enabled = hints_enabled;
  obs.text_blocks["private"] = JoinCards(holes_[seat]);
  const auto visible = VisibleBoard();
  obs.text_blocks["public"] = JoinCards(visible);
  obs.text_blocks["remaining_chips"] = std::to_string(stacks_[seat]);
  obs.text_blocks["chips"] = std::to_string(committed_[seat]);
  std::string available;
  if (!terminal_ && seat == to_act_) {
    obs.legal_actions = LegalActions();
    for (const auto& a : obs.legal_actions) {
      if (!available.empty()) available += ", ";
      available += HoldemActionName(std::get<HoldemAction>(a.payload));
    }
  }
  obs.text_blocks["available"] = available;
  return obs;
}

std::string HoldemState::Serialize() const {
  std::string s = "texas_holdem;dealer=" + std::to_string(dealer_);
  s += ";holes=" + JoinCards(holes_[0], "") + "/" + JoinCards(holes_[1], "");
  s += ";board=" + JoinCards(board_, "");
  s += ";street=" + std::string(StreetName(street_));
  s += ";stacks=" + std::to_string(stacks_[0]) + "," + std::to_string(stacks_[1]);
  s += ";committed=" + std::to_string(committed_[0]) + "," +
       std::to_string(committed_[1]);
  s += ";street_bet=" + std::to_string(street_bet_[0]) + "," +
       std::to_string(street_bet_[1]);
  s += ";acted=" + std::to_string(acted_[0]) + std::to_string(acted_[1]);
  s += ";to_act=" + std::to_string(to_act_);
  s += ";terminal=" + std::to_string(terminal_);
  if (terminal_) {
    s += ";final=" + std::to_string(final_stacks_[0]) + "," +
         std::to_string(final_stacks_[1]);
  }
  s += ";history=";
  for (const auto& h : history_) s += h + "|";
  return s;
}

std::string HoldemState::Render() const {
  std::string out = "Street: " + std::string(StreetName(street_)) + "\n";
  out += "Board: [" + JoinCards(VisibleBoard()) + "]\n";
  out += "Pot: " + std::to_string(pot()) + "\n";
  for (int s = 0; s < 2; ++s) {
    out += PlayerId{s}.DisplayName() + (s == dealer_ ? " (dealer)" : "") +
           ": stack " + std::to_string(terminal_ ? final_stacks_[s] : stacks_[s]) +
           ", in pot " + std::to_string(committed_[s]) + "\n";
  }
  if (!terminal_) out += "To act: " + PlayerId{to_act_}.DisplayName();
  else out += "Hand over";
  return out;
}

}  // namespace arena
