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

#include "arena/games/hanabi.h"

#include <algorithm>

#include "arena/core/rng.h"

namespace arena {
namespace {

std::string ColorName(int color) {
  return std::string(HanabiColorName(static_cast<HanabiColor>(color)));
}

std::string Ordinal(std::size_t slot) {
  static const char* kNames[] = {"first", "second", "third", "fourth", "fifth"};
  return slot < 5 ? kNames[slot] : std::to_string(slot + 1) + "th";
}

std::string StripActionPrefix(const std::string& surface) {
  constexpr std::string_view kPrefix = "Action: ";
  if (surface.rfind(kPrefix, 0) == 0) return surface.substr(kPrefix.size());
  return surface;
}

}  // namespace

HanabiConfig HanabiConfig::FromJson(const nlohmann::json& j) {
  HanabiConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw InvalidConfigError("hanabi config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "info_tokens") c.info_tokens = value.get<int>();
    else if (key == "life_tokens") c.life_tokens = value.get<int>();
    else if (key == "hand_size") c.hand_size = value.get<int>();
    else if (key == "score_mode") {
      const auto mode = value.get<std::string>();
      if (mode == "top_sum") c.score_mode = HanabiScoreMode::kTopSum;
      else if (mode == "all_values") c.score_mode = HanabiScoreMode::kAllValues;
      else throw InvalidConfigError("hanabi.score_mode must be top_sum or all_values");
    } else if (key == "rank_copies") {
      const auto copies = value.get<std::vector<int>>();
      if (copies.size() != 5) throw InvalidConfigError("hanabi.rank_copies needs 5 entries");
      std::copy(copies.begin(), copies.end(), c.rank_copies.begin());
    } else {
      throw InvalidConfigError("unknown hanabi config key '" + key + "'");
    }
  }
  if (c.info_tokens < 1 || c.life_tokens < 1 || c.hand_size < 1) {
    throw InvalidConfigError("hanabi token and hand counts must be positive");
  }
  int per_color = 0;
  for (int n : c.rank_copies) {
    if (n < 1) throw InvalidConfigError("hanabi.rank_copies entries must be >= 1");
    per_color += n;
  }
  if (per_color * kHanabiColors <= 2 * c.hand_size) {
    throw InvalidConfigError("hanabi deck too small for the hands");
  }
  return c;
}

nlohmann::json HanabiConfig::ToJson() const {
  return {{"info_tokens", info_tokens},
          {"life_tokens", life_tokens},
          {"hand_size", hand_size},
          {"score_mode",
           score_mode == HanabiScoreMode::kTopSum ? "top_sum" : "all_values"},
          {"rank_copies", rank_copies}};
}

std::string HanabiCard::ToString() const {
  return ColorName(color) + " " + std::to_string(rank);
}

std::vector<HanabiCard> HanabiDeck(const HanabiConfig& config) {
  std::vector<HanabiCard> deck;
  for (int color = 0; color < kHanabiColors; ++color) {
    for (int rank = 1; rank <= kHanabiMaxRank; ++rank) {
      for (int k = 0; k < config.rank_copies[rank - 1]; ++k) {
        deck.push_back({color, rank});
      }
    }
  }
  return deck;
}

HanabiState::HanabiState(std::uint64_t seed, const HanabiConfig& config)
    : GameState(seed), config_(config), deck_(HanabiDeck(config)) {
  Rng rng(seed);
  rng.Shuffle(std::span<HanabiCard>(deck_));
  Deal();
}

HanabiState::HanabiState(const HanabiConfig& config,
                         std::vector<HanabiCard> deck)
    : GameState(0), config_(config), deck_(std::move(deck)) {
  Deal();
}

void HanabiState::Deal() {
  info_tokens_ = config_.info_tokens;
  life_tokens_ = config_.life_tokens;
  for (int i = 0; i < config_.hand_size; ++i) {
    for (int seat = 0; seat < 2; ++seat) {
      hands_[seat].push_back(HanabiSlot{deck_[next_card_++]});
    }
  }
}

bool HanabiState::Draw(int seat, std::size_t slot) {
  if (next_card_ >= deck_.size()) {
    hands_[seat].erase(hands_[seat].begin() + static_cast<long>(slot));
    return false;
  }
  hands_[seat][slot] = HanabiSlot{deck_[next_card_++]};
  return true;
}

int HanabiState::Score(HanabiScoreMode mode) const {
  int score = 0;
  for (int top : fireworks_) {
    score += mode == HanabiScoreMode::kTopSum ? top : top * (top + 1) / 2;
  }
  return score;
}

int HanabiState::Score() const { return Score(config_.score_mode); }

std::vector<ActionSpec> HanabiState::LegalActions() const {
  std::vector<ActionSpec> actions;
  if (terminal_) return actions;
  const auto& mine = hands_[to_act_];
  const auto& other = hands_[1 - to_act_];
  for (std::size_t s = 0; s < mine.size(); ++s) {
    actions.push_back(MakeAction(env(), to_act_,
                                 HanabiMove{HanabiMove::Kind::kPlay,
                                            static_cast<int>(s + 1)}));
  }
  if (info_tokens_ < config_.info_tokens) {
    for (std::size_t s = 0; s < mine.size(); ++s) {
      actions.push_back(MakeAction(env(), to_act_,
                                   HanabiMove{HanabiMove::Kind::kDiscard,
                                              static_cast<int>(s + 1)}));
    }
  }
  if (info_tokens_ >= 1) {
    for (int color = 0; color < kHanabiColors; ++color) {
      if (std::any_of(other.begin(), other.end(),
                      [&](const HanabiSlot& c) { return c.card.color == color; })) {
        actions.push_back(MakeAction(
            env(), to_act_, HanabiMove{HanabiMove::Kind::kRevealColor, color}));
      }
    }
    for (int rank = 1; rank <= kHanabiMaxRank; ++rank) {
      if (std::any_of(other.begin(), other.end(),
                      [&](const HanabiSlot& c) { return c.card.rank == rank; })) {
        actions.push_back(MakeAction(
            env(), to_act_, HanabiMove{HanabiMove::Kind::kRevealRank, rank}));
      }
    }
  }
  return actions;
}

Legality HanabiState::CheckAction(const ActionSpec& action) const {
  if (terminal_) return Legality::Reject("game is over");
  const auto* move = std::get_if<HanabiMove>(&action.payload);
  if (action.env != env() || move == nullptr) {
    return Legality::Reject("not a Hanabi move");
  }
  const auto& mine = hands_[to_act_];
  const auto& other = hands_[1 - to_act_];
  switch (move->kind) {
    case HanabiMove::Kind::kPlay:
    case HanabiMove::Kind::kDiscard:
      if (move->value < 1 || move->value > static_cast<int>(mine.size())) {
        return Legality::Reject("no card in slot " + std::to_string(move->value));
      }
      if (move->kind == HanabiMove::Kind::kDiscard &&
          info_tokens_ >= config_.info_tokens) {
        return Legality::Reject("cannot discard while info tokens are full");
      }
      return Legality::Ok();
    case HanabiMove::Kind::kRevealColor:
    case HanabiMove::Kind::kRevealRank: {
      if (info_tokens_ < 1) return Legality::Reject("no info tokens left");
      const bool by_color = move->kind == HanabiMove::Kind::kRevealColor;
      if (by_color && (move->value < 0 || move->value >= kHanabiColors)) {
        return Legality::Reject("unknown color");
      }
      const bool matches = std::any_of(
          other.begin(), other.end(), [&](const HanabiSlot& c) {
            return by_color ? c.card.color == move->value
                            : c.card.rank == move->value;
          });
      if (!matches) return Legality::Reject("reveal must match at least one card");
      return Legality::Ok();
    }
  }
  return Legality::Reject("unknown move");
}

std::vector<double> HanabiState::DoApply(const ActionSpec& action) {
  const auto& move = std::get<HanabiMove>(action.payload);
  const int before = Score();
  auto& mine = hands_[to_act_];
  last_action_ = StripActionPrefix(action.surface);
  last_card_ = "None";
  bool drew = true;
  switch (move.kind) {
    case HanabiMove::Kind::kPlay: {
      const std::size_t slot = static_cast<std::size_t>(move.value - 1);
      const HanabiCard card = mine[slot].card;
      last_card_ = card.ToString();
      if (fireworks_[card.color] + 1 == card.rank) {
        ++fireworks_[card.color];
      } else {
        --life_tokens_;
        discards_.push_back(card);
      }
      drew = Draw(to_act_, slot);
      break;
    }
    case HanabiMove::Kind::kDiscard: {
      const std::size_t slot = static_cast<std::size_t>(move.value - 1);
      last_card_ = mine[slot].card.ToString();
      discards_.push_back(mine[slot].card);
      ++info_tokens_;
      drew = Draw(to_act_, slot);
      break;
    }
    case HanabiMove::Kind::kRevealColor:
    case HanabiMove::Kind::kRevealRank: {
      --info_tokens_;
      for (auto& slot : hands_[1 - to_act_]) {
        if (move.kind == HanabiMove::Kind::kRevealColor &&
            slot.card.color == move.value) {
          slot.color_known = true;
        }
        if (move.kind == HanabiMove::Kind::kRevealRank &&
            slot.card.rank == move.value) {
          slot.rank_known = true;
        }
      }
      break;
    }
  }
  const bool complete =
      std::all_of(fireworks_.begin(), fireworks_.end(),
                  [](int top) { return top == kHanabiMaxRank; });
  if (life_tokens_ <= 0) {
    terminal_ = true;
    lost_ = true;
  } else if (complete || !drew || next_card_ >= deck_.size()) {
    terminal_ = true;
  }
  to_act_ = 1 - to_act_;
  const double delta = Score() - before;
  for (auto& r : returns_) r += delta;
  return {delta, delta};
}

std::string HanabiState::DescribeOwnKnowledge(int seat) const {
  std::string out;
  const auto& hand = hands_[seat];
  for (std::size_t i = 0; i < hand.size(); ++i) {
    if (i > 0) out += "; ";
    out += Ordinal(i) + " card: color " +
           (hand[i].color_known ? ColorName(hand[i].card.color) : "unknown") +
           ", number " +
           (hand[i].rank_known ? std::to_string(hand[i].card.rank) : "unknown");
  }
  return out;
}

Observation HanabiState::Observe(int seat, bool hints_enabled) const {
  Observation obs;
  obs.env = env();
  obs.viewer = PlayerId{seat};
  obs.hints_enabled = hints_enabled;
  std::string other;
  for (const auto& slot : hands_[1 - seat]) {
    if (!other.empty()) other += ", ";
    other += slot.card.ToString();
  }
  obs.text_blocks["other_hands"] = other;
  std::string fireworks;
  for (int c = 0; c < kHanabiColors; ++c) {
    if (c > 0) fireworks += ", ";
    fireworks += ColorName(c) + " " + std::to_string(fireworks_[c]);
  }
  obs.text_blocks["fireworks"] = fireworks;
  obs.text_blocks["tokens"] = std::to_string(info_tokens_) + " info tokens and " +
                              std::to_string(life_tokens_) + " life tokens";
  obs.text_blocks["revealed"] = DescribeOwnKnowledge(seat);
  obs.text_blocks["deck_size"] = std::to_string(deck_size());
  obs.text_blocks["opponent_action"] = last_action_;
  obs.text_blocks["last_played"] = last_card_;
  std::string available;
  if (!terminal_ && seat == to_act_) {
    obs.legal_actions = LegalActions();
    for (const auto& a : obs.legal_actions) {
      if (!available.empty()) available += ", ";
      available += StripActionPrefix(a.surface);
    }
  }
  obs.text_blocks["available"] = available;
  return obs;
}

Outcome HanabiState::GetOutcome() const {
  if (!terminal_) return Outcome::Ongoing();
  return lost_ ? Outcome::Failure() : Outcome::Draw();
}

std::vector<HanabiCard> HanabiState::AllCards() const {
  std::vector<HanabiCard> all(deck_.begin() + static_cast<long>(next_card_),
                              deck_.end());
  for (const auto& hand : hands_) {
    for (const auto& slot : hand) all.push_back(slot.card);
  }
  for (int c = 0; c < kHanabiColors; ++c) {
    for (int r = 1; r <= fireworks_[c]; ++r) all.push_back({c, r});
  }
  all.insert(all.end(), discards_.begin(), discards_.end());
  return all;
}

std::string HanabiState::Serialize() const {
  std::string s = "hanabi;deck=";
  for (std::size_t i = next_card_; i < deck_.size(); ++i) {
    s += ColorName(deck_[i].color).substr(0, 1) + std::to_string(deck_[i].rank);
  }
  for (int seat = 0; seat < 2; ++seat) {
    s += ";hand" + std::to_string(seat) + "=";
    for (const auto& slot : hands_[seat]) {
      s += ColorName(slot.card.color).substr(0, 1) +
           std::to_string(slot.card.rank) + (slot.color_known ? "c" : "") +
           (slot.rank_known ? "r" : "") + ",";
    }
  }
  s += ";fireworks=" + std::to_string(fireworks_[0]) + "," +
       std::to_string(fireworks_[1]);
  s += ";discards=";
  for (const auto& c : discards_) {
    s += ColorName(c.color).substr(0, 1) + std::to_string(c.rank);
  }
  s += ";info=" + std::to_string(info_tokens_) +
       ";life=" + std::to_string(life_tokens_) +
       ";to_act=" + std::to_string(to_act_) +
       ";terminal=" + std::to_string(terminal_) + ";lost=" + std::to_string(lost_);
  return s;
}

std::string HanabiState::Render() const {
  std::string out;
  for (int c = 0; c < kHanabiColors; ++c) {
    out += ColorName(c) + " firework: " + std::to_string(fireworks_[c]) + "\n";
  }
  out += "Info tokens: " + std::to_string(info_tokens_) +
         ", life tokens: " + std::to_string(life_tokens_) +
         ", deck: " + std::to_string(deck_size()) + "\n";
  for (int seat = 0; seat < 2; ++seat) {
    out += PlayerId{seat}.DisplayName() + " hand:";
    for (const auto& slot : hands_[seat]) out += " [" + slot.card.ToString() + "]";
    out += "\n";
  }
  out += "Score: " + std::to_string(Score());
  return out;
}

}  // namespace arena
