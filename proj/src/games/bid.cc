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

#include "arena/games/bid.h"

#include <cctype>

#include "arena/core/rng.h"

namespace arena {

BidConfig BidConfig::FromJson(const nlohmann::json& j) {
  BidConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw InvalidConfigError("bid config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "min_cents") c.min_cents = value.get<std::int64_t>();
    else if (key == "max_cents") c.max_cents = value.get<std::int64_t>();
    else if (key == "values") {
      if (value.is_null()) continue;
      const auto v = value.get<std::vector<std::int64_t>>();
      if (v.size() != 2 || v[0] <= 0 || v[1] <= 0) {
        throw InvalidConfigError("bid.values needs two positive cent amounts");
      }
      c.values = std::array<std::int64_t, 2>{v[0], v[1]};
    } else {
      throw InvalidConfigError("unknown bid config key '" + key + "'");
    }
  }
  if (c.min_cents < 1 || c.max_cents < c.min_cents) {
    throw InvalidConfigError("bid valuation range must satisfy 1 <= min <= max");
  }
  return c;
}

nlohmann::json BidConfig::ToJson() const {
  nlohmann::json j = {{"min_cents", min_cents}, {"max_cents", max_cents}};
  if (values) j["values"] = {(*values)[0], (*values)[1]};
  return j;
}

BidSettlement BidSettle(const std::array<std::int64_t, 2>& bids,
                        const std::array<std::int64_t, 2>& values,
                        std::uint64_t seed) {
  for (int s = 0; s < 2; ++s) {
    if (values[s] <= 0) throw BidValidationError("valuation must be positive");
    if (bids[s] < 0) throw BidValidationError("bid must not be negative");
    if (bids[s] >= values[s]) {
      throw BidValidationError(PlayerId{s}.DisplayName() +
                               " bid must be lower than the valuation");
    }
  }
  BidSettlement out;
  if (bids[0] != bids[1]) {
    out.winner = bids[0] > bids[1] ? 0 : 1;
  } else {
    Rng rng(seed);
    out.winner = static_cast<int>(rng.Below(2));
  }
  out.rewards[out.winner] =
      static_cast<double>(values[out.winner] - bids[out.winner]) / 100.0;
  return out;
}

std::optional<std::int64_t> ParseDollars(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '$') ++i;
  std::int64_t whole = 0;
  int digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    if (whole > 1'000'000'000'000LL) return std::nullopt;
    whole = whole * 10 + (text[i] - '0');
    ++i;
    ++digits;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (++frac_digits > 2) return std::nullopt;
      frac = frac * 10 + (text[i] - '0');
      ++i;
    }
    if (frac_digits == 0) return std::nullopt;
  }
  if (digits == 0 && frac_digits == 0) return std::nullopt;
  if (i != text.size()) return std::nullopt;
  if (frac_digits == 1) frac *= 10;
  return whole * 100 + frac;
}

std::array<std::int64_t, 2> BidValuations(std::uint64_t seed,
                                          const BidConfig& config) {
  if (config.values) return *config.values;
  Rng rng(DeriveSeed(seed, 1));
  const auto span = static_cast<std::uint64_t>(config.max_cents - config.min_cents + 1);
  std::array<std::int64_t, 2> v;
  for (auto& x : v) x = config.min_cents + static_cast<std::int64_t>(rng.Below(span));
  return v;
}

BidState::BidState(std::uint64_t seed, const BidConfig& config)
    : GameState(seed), values_(BidValuations(seed, config)) {}

int BidState::CurrentSeat() const {
  if (IsTerminal()) return -1;
  return bids_[0] ? 1 : 0;
}

std::vector<ActionSpec> BidState::LegalActions() const {
  std::vector<ActionSpec> actions;
  const int seat = CurrentSeat();
  if (seat < 0) return actions;
  actions.reserve(static_cast<std::size_t>(values_[seat]));
  for (std::int64_t c = 0; c < values_[seat]; ++c) {
    actions.push_back(MakeAction(env(), seat, BidMove{c}));
  }
  return actions;
}

Legality BidState::CheckAction(const ActionSpec& action) const {
  const int seat = CurrentSeat();
  if (seat < 0) return Legality::Reject("auction is closed");
  const auto* bid = std::get_if<BidMove>(&action.payload);
  if (action.env != env() || bid == nullptr) return Legality::Reject("not a bid");
  if (bid->cents < 0) return Legality::Reject("bid must not be negative");
  if (bid->cents >= values_[seat]) {
    return Legality::Reject("bid must be lower than your valuation");
  }
  return Legality::Ok();
}

std::vector<double> BidState::DoApply(const ActionSpec& action) {
  const int seat = CurrentSeat();
  bids_[seat] = std::get<BidMove>(action.payload).cents;
  std::vector<double> rewards = {0.0, 0.0};
  if (bids_[0] && bids_[1]) {
    settlement_ = BidSettle({*bids_[0], *bids_[1]}, values_, DeriveSeed(seed(), 2));
    rewards = {settlement_->rewards[0], settlement_->rewards[1]};
  }
  return rewards;
}

Outcome BidState::GetOutcome() const {
  if (!settlement_) return Outcome::Ongoing();
  return Outcome::Win(settlement_->winner);
}

std::vector<double> BidState::Returns() const {
  if (!settlement_) return {0.0, 0.0};
  return {settlement_->rewards[0], settlement_->rewards[1]};
}

Observation BidState::Observe(int seat, bool hints_enabled) const {
  Observation obs;
  obs.env = env();
  obs.viewer = PlayerId{seat};
  obs.hints_enabled = hints_enabled;
  obs.text_blocks["player_name"] = PlayerId{seat}.DisplayName();
  obs.text_blocks["value"] = FormatCents(values_[seat]);
  if (seat == CurrentSeat()) obs.legal_actions = LegalActions();
  return obs;
}

std::string BidState::Serialize() const {
  auto opt = [](const std::optional<std::int64_t>& b) {
    return b ? std::to_string(*b) : std::string("-");
  };
  std::string s = "bid;values=" + std::to_string(values_[0]) + "," +
                  std::to_string(values_[1]) + ";bids=" + opt(bids_[0]) + "," +
                  opt(bids_[1]);
  if (settlement_) s += ";winner=" + std::to_string(settlement_->winner);
  return s;
}

std::string BidState::Render() const {
  std::string out;
  for (int s = 0; s < 2; ++s) {
    out += PlayerId{s}.DisplayName() + ": value $" + FormatCents(values_[s]) +
           ", bid " + (bids_[s] ? "$" + FormatCents(*bids_[s]) : "(sealed)") + "\n";
  }
  if (settlement_) {
    out += "winner " + PlayerId{settlement_->winner}.DisplayName();
  }
  return out;
}

}  // namespace arena
