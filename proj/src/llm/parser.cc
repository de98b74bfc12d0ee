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

#include "arena/llm/parser.h"

#include <algorithm>
#include <cctype>
#include <regex>

#include "arena/games/bid.h"

namespace arena {
namespace {

constexpr auto kFlags = std::regex::ECMAScript | std::regex::icase;

const std::regex& TttRe() {
  static const std::regex re(
      R"((?:\b([XO])\s*:\s*)?\(\s*(\d+)\s*,\s*(\d+)\s*\))", kFlags);
  return re;
}
const std::regex& C4Re() {
  static const std::regex re(R"(\b([XO])\s*:\s*(\d+))", kFlags);
  return re;
}
const std::regex& BareIntRe() {
  static const std::regex re(R"(^\s*(\d+)\s*\.?\s*$)", kFlags);
  return re;
}

constexpr const char* kHoldemNames =
    R"((fold|check\s*(?:and|&|/)\s*call|check|call|raise\s+half\s+pot|raise\s+full\s+pot|all[\s-]*in)\b)";

const std::regex& HoldemRe() {
  static const std::regex re(std::string(R"(\baction\s*:\s*\**\s*)") + kHoldemNames,
                             kFlags);
  return re;
}
const std::regex& HoldemBareRe() {
  static const std::regex re(
      std::string(R"(^\s*["'*]*\s*)") + kHoldemNames + R"(\s*["'*.]*\s*$)", kFlags);
  return re;
}
const std::regex& HanabiRe() {
  static const std::regex re(
      R"((?:\baction\s*:\s*\**\s*)?\b(?:(play|discard)\s+(?:card\s*)?(\d+)|reveal\s+(red|yellow|\d+)\s*(?:cards?)?(?:\s+for\s+(?:another|the\s+other)\s+player)?))",
      kFlags);
  return re;
}
const std::regex& VoteRe() {
  static const std::regex re(R"(\bvote\s*:\s*\**\s*player[_ ]?(\d+))", kFlags);
  return re;
}
const std::regex& SeatLineRe() {
  static const std::regex re(R"(\bplayer[_ ]?(\d+)\s*:\s*(.*\S))", kFlags);
  return re;
}
const std::regex& BargainRe() {
  static const std::regex re(
      R"(\bplayer[_ ]?(\d+)\s*:\s*\**\s*(?:(deal)\b|(\d+)\s*hats?\s*,?\s*(?:and\s+)?(\d+)\s*balls?\s*,?\s*(?:and\s+)?(\d+)\s*apples?))",
      kFlags);
  return re;
}
const std::regex& BidRe() {
  static const std::regex re(
      R"(\bplayer[_ ]?(\d+)\s*:\s*\**\s*\$?\s*(\d+(?:\.\d{1,2})?)(?![\d.]*\d))", kFlags);
  return re;
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string StripDecorations(std::string s) {
  const auto junk = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '*' ||
           c == '`';
  };
  while (!s.empty() && junk(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && junk(s[i])) ++i;
  return s.substr(i);
}

// Small integers only; absurd values become -1 so legality rejects them.
int ToInt(const std::string& digits) {
  if (digits.empty() || digits.size() > 6) return -1;
  return std::stoi(digits);
}

std::size_t LineOf(std::string_view raw, std::size_t offset) {
  return static_cast<std::size_t>(
      std::count(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

template <class Fn>
void ForEachMatch(const std::string& text, const std::regex& re, Fn&& fn) {
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
       it != std::sregex_iterator(); ++it) {
    fn(*it);
  }
}

ActionToken Token(const std::string& text, const std::smatch& m,
                  ActionPayload payload, std::optional<int> seat) {
  ActionToken t;
  t.offset = static_cast<std::size_t>(m.position(0));
  t.line = LineOf(text, t.offset);
  t.payload = std::move(payload);
  t.named_seat = seat;
  t.text = m.str(0);
  return t;
}

HoldemAction HoldemFromName(const std::string& name) {
  const std::string n = Lower(name);
  if (n == "fold") return HoldemAction::kFold;
  if (n.rfind("raise", 0) == 0) {
    return n.find("half") != std::string::npos ? HoldemAction::kRaiseHalfPot
                                               : HoldemAction::kRaiseFullPot;
  }
  if (n.rfind("all", 0) == 0) return HoldemAction::kAllIn;
  return HoldemAction::kCheckCall;
}

int MarkSeat(const std::string& mark) {
  return std::toupper(static_cast<unsigned char>(mark[0])) == 'X' ? 0 : 1;
}

}  // namespace

std::vector<ActionToken> FindActionTokens(EnvKind env, std::string_view raw_view,
                                          std::string_view phase) {
  const std::string raw(raw_view);
  std::vector<ActionToken> out;
  switch (env) {
    case EnvKind::kTicTacToe:
      ForEachMatch(raw, TttRe(), [&](const std::smatch& m) {
        TttMove move;
        std::optional<int> seat;
        if (m[1].matched) {
          seat = MarkSeat(m.str(1));
          move.mark = *seat == 0 ? Mark::kX : Mark::kO;
        }
        move.row = ToInt(m.str(2));
        move.col = ToInt(m.str(3));
        out.push_back(Token(raw, m, move, seat));
      });
      break;
    case EnvKind::kConnectFour:
      ForEachMatch(raw, C4Re(), [&](const std::smatch& m) {
        const int seat = MarkSeat(m.str(1));
        out.push_back(Token(raw, m,
                            C4Move{seat == 0 ? Mark::kX : Mark::kO, ToInt(m.str(2))},
                            seat));
      });
      if (out.empty()) {
        std::smatch m;
        if (std::regex_search(raw, m, BareIntRe())) {
          out.push_back(Token(raw, m, C4Move{Mark::kX, ToInt(m.str(1))}, std::nullopt));
        }
      }
      break;
    case EnvKind::kTexasHoldem:
      ForEachMatch(raw, HoldemRe(), [&](const std::smatch& m) {
        out.push_back(Token(raw, m, HoldemFromName(m.str(1)), std::nullopt));
      });
      if (out.empty()) {
        std::smatch m;
        if (std::regex_search(raw, m, HoldemBareRe())) {
          out.push_back(Token(raw, m, HoldemFromName(m.str(1)), std::nullopt));
        }
      }
      break;
    case EnvKind::kHanabi:
      ForEachMatch(raw, HanabiRe(), [&](const std::smatch& m) {
        HanabiMove move;
        if (m[1].matched) {
          move.kind = Lower(m.str(1)) == "play" ? HanabiMove::Kind::kPlay
                                                : HanabiMove::Kind::kDiscard;
          move.value = ToInt(m.str(2));
        } else {
          const std::string what = Lower(m.str(3));
          if (what == "red" || what == "yellow") {
            move.kind = HanabiMove::Kind::kRevealColor;
            move.value = static_cast<int>(what == "red" ? HanabiColor::kRed
                                                        : HanabiColor::kYellow);
          } else {
            move.kind = HanabiMove::Kind::kRevealRank;
            move.value = ToInt(what);
          }
        }
        out.push_back(Token(raw, m, move, std::nullopt));
      });
      break;
    case EnvKind::kUndercover:
      if (phase != "clue") {
        ForEachMatch(raw, VoteRe(), [&](const std::smatch& m) {
          const int target = ToInt(m.str(1));
          out.push_back(Token(raw, m, UndercoverVote{target}, std::nullopt));
        });
      }
      if (phase != "vote") {
        ForEachMatch(raw, SeatLineRe(), [&](const std::smatch& m) {
          std::string clue = StripDecorations(m.str(2));
          if (clue.empty()) return;
          out.push_back(Token(raw, m, UndercoverClue{std::move(clue)}, ToInt(m.str(1))));
        });
      }
      std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.offset < b.offset;
      });
      break;
    case EnvKind::kBargain:
      ForEachMatch(raw, BargainRe(), [&](const std::smatch& m) {
        BargainMove move;
        if (m[2].matched) {
          move.deal = true;
        } else {
          move.take = {ToInt(m.str(3)), ToInt(m.str(4)), ToInt(m.str(5))};
        }
        out.push_back(Token(raw, m, move, ToInt(m.str(1))));
      });
      break;
    case EnvKind::kBid:
      ForEachMatch(raw, BidRe(), [&](const std::smatch& m) {
        const auto cents = ParseDollars(m.str(2));
        if (!cents) return;
        out.push_back(Token(raw, m, BidMove{*cents}, ToInt(m.str(1))));
      });
      break;
  }
  return out;
}

ParseOutcome ParseAction(EnvKind env, std::string_view raw, const Observation& obs) {
  ParseOutcome result;
  result.raw = std::string(raw);
  if (obs.env != env) {
    result.detail = "observation belongs to " + std::string(EnvName(obs.env));
    return result;
  }
  const std::string_view phase =
      env == EnvKind::kUndercover ? std::string_view(obs.phase) : std::string_view();
  const auto tokens = FindActionTokens(env, raw, phase);
  if (tokens.empty()) {
    result.detail = "no " + std::string(EnvName(env)) + " action found";
    return result;
  }
  const ActionToken& last = tokens.back();
  for (const auto& t : tokens) {
    if (t.line == last.line && !(t.payload == last.payload)) {
      result.status = ParseStatus::kAmbiguous;
      result.detail = "conflicting actions '" + t.text + "' and '" + last.text + "'";
      return result;
    }
  }

  const int seat = obs.viewer.index;
  ActionPayload payload = last.payload;
  // Marks default to the viewer's when the answer omits them.
  if (auto* m = std::get_if<TttMove>(&payload); m && !last.named_seat) {
    m->mark = seat == 0 ? Mark::kX : Mark::kO;
  }
  if (auto* m = std::get_if<C4Move>(&payload); m && !last.named_seat) {
    m->mark = seat == 0 ? Mark::kX : Mark::kO;
  }
  ActionSpec action = MakeAction(env, seat, payload);
  if (env == EnvKind::kBargain) {
    action.utterance = StripDecorations(std::string(raw));
  }
  result.action = action;

  if (last.named_seat && *last.named_seat != seat) {
    result.status = ParseStatus::kIllegalReference;
    result.detail = "answer speaks for " +
                    (env == EnvKind::kTicTacToe || env == EnvKind::kConnectFour
                         ? std::string(*last.named_seat == 0 ? "X" : "O")
                         : PlayerId{*last.named_seat}.DisplayName());
    return result;
  }
  if (obs.open_text && std::holds_alternative<UndercoverClue>(payload)) {
    result.status = ParseStatus::kOk;
    return result;
  }
  for (const auto& legal : obs.legal_actions) {
    if (legal.SamePayload(action)) {
      result.action->surface = legal.surface;
      result.status = ParseStatus::kOk;
      return result;
    }
  }
  result.status = ParseStatus::kIllegalReference;
  result.detail = "'" + action.surface + "' is not a legal action";
  return result;
}

std::map<int, std::string> ParseGuesses(std::string_view raw_view,
                                        const std::vector<int>& others) {
  const std::string raw(raw_view);
  std::map<int, std::string> out;
  ForEachMatch(raw, SeatLineRe(), [&](const std::smatch& m) {
    const int seat = ToInt(m.str(1));
    if (std::find(others.begin(), others.end(), seat) == others.end()) return;
    std::string word = StripDecorations(m.str(2));
    while (!word.empty() && (word.back() == '.' || word.back() == '!')) word.pop_back();
    word = StripDecorations(word);
    if (!word.empty()) out[seat] = word;
  });
  return out;
}

}  // namespace arena
