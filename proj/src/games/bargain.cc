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

#include "arena/games/bargain.h"

#include <map>
#include <mutex>

#include "arena/core/rng.h"

namespace arena {
namespace {

constexpr std::array<std::string_view, kBargainItemTypes> kItemNames = {
    "hat", "ball", "apple"};

std::string ItemsText(const ItemVector& v) {
  std::string out;
  for (int i = 0; i < kBargainItemTypes; ++i) {
    if (i > 0) out += " ";
    out += std::to_string(v[i]) + " " + std::string(kItemNames[i]);
    if (v[i] != 1) out += "s";
  }
  return out;
}

std::vector<BargainInstance> Enumerate(const BargainLimits& limits) {
  // All value vectors with dot(values, counts) == total for fixed counts.
  auto value_vectors = [&](const ItemVector& counts) {
    std::vector<ItemVector> out;
    const int t = limits.total_value;
    for (int a = 0; a * counts[0] <= t; ++a) {
      for (int b = 0; a * counts[0] + b * counts[1] <= t; ++b) {
        const int rest = t - a * counts[0] - b * counts[1];
        if (rest % counts[2] == 0) out.push_back({a, b, rest / counts[2]});
      }
    }
    return out;
  };
  std::vector<BargainInstance> all;
  for (int h = 1; h <= limits.max_items; ++h) {
    for (int b = 1; h + b <= limits.max_items; ++b) {
      for (int a = 1; h + b + a <= limits.max_items; ++a) {
        if (h + b + a < limits.min_items) continue;
        const ItemVector counts = {h, b, a};
        const auto vs = value_vectors(counts);
        for (const auto& v0 : vs) {
          for (const auto& v1 : vs) {
            BargainInstance inst{counts, {v0, v1}};
            if (inst.IsValid(limits)) all.push_back(inst);
          }
        }
      }
    }
  }
  return all;
}

}  // namespace

BargainLimits BargainLimits::FromJson(const nlohmann::json& j) {
  BargainLimits l;
  if (j.is_null()) return l;
  if (!j.is_object()) throw InvalidConfigError("bargain config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "min_items") l.min_items = value.get<int>();
    else if (key == "max_items") l.max_items = value.get<int>();
    else if (key == "total_value") l.total_value = value.get<int>();
    else if (key == "max_rounds") l.max_rounds = value.get<int>();
    else throw InvalidConfigError("unknown bargain config key '" + key + "'");
  }
  if (l.min_items < kBargainItemTypes || l.max_items < l.min_items ||
      l.max_items > 12) {
    throw InvalidConfigError("bargain item bounds must satisfy 3 <= min <= max <= 12");
  }
  if (l.total_value < 1 || l.total_value > 100) {
    throw InvalidConfigError("bargain.total_value must be in [1, 100]");
  }
  if (l.max_rounds < 1) throw InvalidConfigError("bargain.max_rounds must be positive");
  return l;
}

nlohmann::json BargainLimits::ToJson() const {
  return {{"min_items", min_items},
          {"max_items", max_items},
          {"total_value", total_value},
          {"max_rounds", max_rounds}};
}

int BargainInstance::ValueOf(int seat, const ItemVector& share) const {
  int total = 0;
  for (int i = 0; i < kBargainItemTypes; ++i) total += values[seat][i] * share[i];
  return total;
}

bool BargainInstance::IsValid(const BargainLimits& limits) const {
  int items = 0;
  for (int i = 0; i < kBargainItemTypes; ++i) {
    if (counts[i] < 1) return false;
    if (values[0][i] < 0 || values[1][i] < 0) return false;
    if (values[0][i] == 0 && values[1][i] == 0) return false;
    items += counts[i];
  }
  if (items < limits.min_items || items > limits.max_items) return false;
  return ValueOf(0, counts) == limits.total_value &&
         ValueOf(1, counts) == limits.total_value;
}

const std::vector<BargainInstance>& ValidBargainInstances(
    const BargainLimits& limits) {
  static std::mutex mu;
  static auto* cache =
      new std::map<std::array<int, 3>, std::vector<BargainInstance>>();
  const std::array<int, 3> key = {limits.min_items, limits.max_items,
                                  limits.total_value};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(key);
  if (it == cache->end()) it = cache->emplace(key, Enumerate(limits)).first;
  return it->second;
}

BargainInstance BargainGenerate(std::uint64_t seed, const BargainLimits& limits) {
  const auto& all = ValidBargainInstances(limits);
  if (all.empty()) throw InvalidConfigError("bargain limits admit no instance");
  Rng rng(seed);
  return all[rng.Below(all.size())];
}

std::string_view BargainStatusName(BargainStatus s) {
  switch (s) {
    case BargainStatus::kNegotiating: return "negotiating";
    case BargainStatus::kDeal: return "deal";
    case BargainStatus::kFailure: return "failure";
  }
  return "negotiating";
}

Outcome BargainOutcome(BargainStatus status,
                       const std::optional<std::array<ItemVector, 2>>& shares,
                       const BargainInstance& instance) {
  if (status == BargainStatus::kNegotiating) {
    throw ArenaError("bargain outcome requested while negotiating");
  }
  if (status == BargainStatus::kFailure) return Outcome::Failure();
  if (!shares) throw ArenaError("deal without shares");
  const int a = instance.ValueOf(0, (*shares)[0]);
  const int b = instance.ValueOf(1, (*shares)[1]);
  if (a == b) return Outcome::Draw();
  return Outcome::Win(a > b ? 0 : 1);
}

BargainState::BargainState(std::uint64_t seed, const BargainLimits& limits)
    : BargainState(seed, BargainGenerate(seed, limits), limits) {}

BargainState::BargainState(std::uint64_t seed, const BargainInstance& instance,
                           const BargainLimits& limits)
    : GameState(seed), limits_(limits), instance_(instance) {
  if (!instance_.IsValid(limits_)) {
    throw InvalidConfigError("bargain instance violates the configured limits");
  }
}

std::vector<ActionSpec> BargainState::LegalActions() const {
  std::vector<ActionSpec> actions;
  if (IsTerminal()) return actions;
  if (pending_) actions.push_back(MakeAction(env(), to_act_, BargainMove{true, {}}));
  const auto& c = instance_.counts;
  for (int h = 0; h <= c[0]; ++h) {
    for (int b = 0; b <= c[1]; ++b) {
      for (int a = 0; a <= c[2]; ++a) {
        actions.push_back(MakeAction(env(), to_act_, BargainMove{false, {h, b, a}}));
      }
    }
  }
  return actions;
}

Legality BargainState::CheckAction(const ActionSpec& action) const {
  if (IsTerminal()) return Legality::Reject("game is over");
  const auto* move = std::get_if<BargainMove>(&action.payload);
  if (action.env != env() || move == nullptr) {
    return Legality::Reject("not a Bargain action");
  }
  if (move->deal) {
    if (!pending_) return Legality::Reject("there is no plan to agree to");
    return Legality::Ok();
  }
  for (int i = 0; i < kBargainItemTypes; ++i) {
    if (move->take[i] < 0 || move->take[i] > instance_.counts[i]) {
      return Legality::Reject("plan asks for more " +
                              std::string(kItemNames[i]) + "s than exist");
    }
  }
  return Legality::Ok();
}

std::vector<double> BargainState::DoApply(const ActionSpec& action) {
  const auto& move = std::get<BargainMove>(action.payload);
  std::vector<double> rewards = {0.0, 0.0};
  const std::string said = action.utterance.empty() ? action.surface : action.utterance;
  history_.push_back(PlayerId{to_act_}.DisplayName() + ": " +
                     (move.deal ? std::string("Deal.") : ItemsText(move.take)));
  if (move.deal) {
    std::array<ItemVector, 2> shares;
    const int proposer = pending_->proposer;
    shares[proposer] = pending_->take;
    for (int i = 0; i < kBargainItemTypes; ++i) {
      shares[1 - proposer][i] = instance_.counts[i] - pending_->take[i];
    }
    shares_ = shares;
    status_ = BargainStatus::kDeal;
    for (int s = 0; s < 2; ++s) {
      rewards[s] = instance_.ValueOf(s, shares[s]);
      returns_[s] += rewards[s];
    }
    return rewards;
  }
  pending_ = BargainProposal{to_act_, move.take, said};
  if (to_act_ == 1) {
    if (round_ >= limits_.max_rounds) {
      status_ = BargainStatus::kFailure;
      return rewards;
    }
    ++round_;
  }
  to_act_ = 1 - to_act_;
  return rewards;
}

Outcome BargainState::GetOutcome() const {
  if (!IsTerminal()) return Outcome::Ongoing();
  return BargainOutcome(status_, shares_, instance_);
}

Observation BargainState::Observe(int seat, bool hints_enabled) const {
  Observation obs;
  obs.env = env();
  obs.viewer = PlayerId{seat};
  obs.hints_enabled = hints_enabled;
  const bool reply = pending_ && pending_->proposer != seat;
  obs.phase = reply ? "reply" : "open";
  auto& b = obs.text_blocks;
  b["round"] = std::to_string(round_);
  b["player_name"] = PlayerId{seat}.DisplayName();
  for (int i = 0; i < kBargainItemTypes; ++i) {
    const std::string item(kItemNames[i]);
    b["num_" + item + "s"] = std::to_string(instance_.counts[i]);
    b["value_" + item] = std::to_string(instance_.values[seat][i]);
    if (reply) {
      b["oppo_" + item + "s"] = std::to_string(pending_->take[i]);
      b["my_" + item + "s"] =
          std::to_string(instance_.counts[i] - pending_->take[i]);
    }
  }
  if (reply) b["bargaining"] = pending_->message;
  if (seat == CurrentSeat()) obs.legal_actions = LegalActions();
  return obs;
}

std::string BargainState::Serialize() const {
  std::string s = "bargain;counts=" + std::to_string(instance_.counts[0]) + "," +
                  std::to_string(instance_.counts[1]) + "," +
                  std::to_string(instance_.counts[2]);
  for (int p = 0; p < 2; ++p) {
    s += ";values" + std::to_string(p) + "=";
    for (int i = 0; i < kBargainItemTypes; ++i) {
      s += std::to_string(instance_.values[p][i]) + (i < 2 ? "," : "");
    }
  }
  s += ";round=" + std::to_string(round_) + ";to_act=" + std::to_string(to_act_) +
       ";status=" + std::string(BargainStatusName(status_)) + ";history=";
  for (const auto& h : history_) s += h + "|";
  return s;
}

std::string BargainState::Render() const {
  std::string out = "Pool: " + ItemsText(instance_.counts) + "\n";
  for (int p = 0; p < 2; ++p) {
    out += PlayerId{p}.DisplayName() + " values: hat " +
           std::to_string(instance_.values[p][0]) + ", ball " +
           std::to_string(instance_.values[p][1]) + ", apple " +
           std::to_string(instance_.values[p][2]) + "\n";
  }
  for (const auto& h : history_) out += h + "\n";
  out += "Round " + std::to_string(round_) + ", " +
         std::string(BargainStatusName(status_));
  if (shares_) {
    out += ": " + std::to_string(instance_.ValueOf(0, (*shares_)[0])) + " vs " +
           std::to_string(instance_.ValueOf(1, (*shares_)[1]));
  }
  return out;
}

}  // namespace arena
