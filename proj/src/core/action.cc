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

#include "arena/core/action.h"

#include <cstdio>

namespace arena {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string SeatName(int seat) { return PlayerId{seat}.DisplayName(); }

std::string PluralItem(int n, std::string_view singular) {
  std::string out = std::to_string(n) + " " + std::string(singular);
  if (n != 1) out += "s";
  return out;
}

}  // namespace

std::string_view HoldemActionName(HoldemAction a) {
  switch (a) {
    case HoldemAction::kFold: return "Fold";
    case HoldemAction::kCheckCall: return "Check and Call";
    case HoldemAction::kRaiseHalfPot: return "Raise Half Pot";
    case HoldemAction::kRaiseFullPot: return "Raise Full Pot";
    case HoldemAction::kAllIn: return "All in";
  }
  return "?";
}

std::string_view HanabiColorName(HanabiColor c) {
  return c == HanabiColor::kRed ? "Red" : "Yellow";
}

std::string FormatCents(std::int64_t cents) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld",
                static_cast<long long>(cents / 100),
                static_cast<long long>(cents % 100));
  return buf;
}

std::string RenderSurface(EnvKind env, int seat, const ActionPayload& payload) {
  (void)env;
  return std::visit(
      Overloaded{
          [](const TttMove& m) {
            return std::string(1, MarkChar(m.mark)) + ": (" +
                   std::to_string(m.row) + ", " + std::to_string(m.col) + ")";
          },
          [](const C4Move& m) {
            return std::string(1, MarkChar(m.mark)) + ": " +
                   std::to_string(m.col);
          },
          [](HoldemAction a) {
            return "Action: " + std::string(HoldemActionName(a));
          },
          [](const HanabiMove& m) {
            switch (m.kind) {
              case HanabiMove::Kind::kPlay:
                return "Action: Play Card " + std::to_string(m.value);
              case HanabiMove::Kind::kDiscard:
                return "Action: Discard Card " + std::to_string(m.value);
              case HanabiMove::Kind::kRevealColor:
                return "Action: Reveal " +
                       std::string(HanabiColorName(
                           static_cast<HanabiColor>(m.value))) +
                       " Cards for another player";
              case HanabiMove::Kind::kRevealRank:
                return "Action: Reveal " + std::to_string(m.value) +
                       " Cards for another player";
            }
            return std::string();
          },
          [seat](const UndercoverClue& c) {
            return SeatName(seat) + ": " + c.text;
          },
          [](const UndercoverVote& v) {
            return "vote: " + SeatName(v.target) + ".";
          },
          [seat](const BargainMove& m) {
            if (m.deal) return SeatName(seat) + ": Deal.";
            return SeatName(seat) + ": " + PluralItem(m.take[0], "hat") + " " +
                   PluralItem(m.take[1], "ball") + " " +
                   PluralItem(m.take[2], "apple");
          },
          [seat](const BidMove& b) {
            return SeatName(seat) + ": $" + FormatCents(b.cents);
          },
      },
      payload);
}

ActionSpec MakeAction(EnvKind env, int seat, ActionPayload payload) {
  ActionSpec spec;
  spec.env = env;
  spec.surface = RenderSurface(env, seat, payload);
  spec.payload = std::move(payload);
  return spec;
}

std::string ActionClass(const ActionSpec& action) {
  return std::visit(
      Overloaded{
          [](const TttMove&) { return std::string("mark"); },
          [](const C4Move&) { return std::string("drop"); },
          [](HoldemAction a) { return std::string(HoldemActionName(a)); },
          [](const HanabiMove& m) {
            switch (m.kind) {
              case HanabiMove::Kind::kPlay: return std::string("play");
              case HanabiMove::Kind::kDiscard: return std::string("discard");
              default: return std::string("reveal");
            }
          },
          [](const UndercoverClue&) { return std::string("clue"); },
          [](const UndercoverVote&) { return std::string("vote"); },
          [](const BargainMove& m) {
            return std::string(m.deal ? "deal" : "propose");
          },
          [](const BidMove&) { return std::string("bid"); },
      },
      action.payload);
}

}  // namespace arena
