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

#include "arena/games/undercover.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arena/core/assets.h"
#include "arena/core/rng.h"

namespace arena {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Generic clues offered as the enumerable part of the open clue space.
constexpr std::string_view kStockClues[] = {
    "It's something most people have heard of.",
    "You can talk about it with friends.",
    "It shows up in stories.",
    "It's easy to picture.",
    "Children know it too.",
    "It's part of everyday life for some people.",
    "It has a recognizable shape.",
    "People have strong opinions about it.",
    "It appears in pictures.",
    "It's more common than you'd think.",
};

}  // namespace

std::string_view UndercoverResultName(UndercoverResult r) {
  switch (r) {
    case UndercoverResult::kOngoing: return "ongoing";
    case UndercoverResult::kUndercoverWin: return "undercover_win";
    case UndercoverResult::kCiviliansWin: return "civilians_win";
  }
  return "ongoing";
}

std::vector<WordPair> ParseWordPairs(std::string_view text) {
  std::vector<WordPair> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ArenaError("word pair line " + std::to_string(line_no) +
                       " has no tab separator");
    }
    WordPair p{Trim(line.substr(0, tab)), Trim(line.substr(tab + 1))};
    if (p.civilian_word.empty() || p.undercover_word.empty() ||
        Lower(p.civilian_word) == Lower(p.undercover_word)) {
      throw ArenaError("word pair line " + std::to_string(line_no) +
                       " must hold two distinct words");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<WordPair> LoadWordPairs(const std::filesystem::path& path) {
  return ParseWordPairs(ReadTextFile(path));
}

const std::vector<WordPair>& DefaultWordPairs() {
  static const std::vector<WordPair>* pairs =
      new std::vector<WordPair>(LoadWordPairs(AssetDir() / "word_pairs.tsv"));
  return *pairs;
}

UndercoverConfig UndercoverConfig::FromJson(const nlohmann::json& j) {
  UndercoverConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw InvalidConfigError("undercover config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "seats") c.seats = value.get<int>();
    else if (key == "max_rounds") c.max_rounds = value.get<int>();
    else if (key == "corpus") c.corpus_path = value.get<std::string>();
    else if (key == "pair") {
      if (value.is_null()) continue;
      const auto words = value.get<std::vector<std::string>>();
      if (words.size() != 2 || words[0].empty() || words[1].empty() ||
          Lower(words[0]) == Lower(words[1])) {
        throw InvalidConfigError("undercover.pair needs two distinct words");
      }
      c.pair = WordPair{words[0], words[1]};
    } else {
      throw InvalidConfigError("unknown undercover config key '" + key + "'");
    }
  }
  if (c.seats != kUndercoverSeats) {
    throw InvalidConfigError("undercover is played with exactly 5 seats");
  }
  if (c.max_rounds < 1 || c.max_rounds > 2) {
    throw InvalidConfigError("undercover.max_rounds must be 1 or 2");
  }
  return c;
}

nlohmann::json UndercoverConfig::ToJson() const {
  nlohmann::json j = {{"seats", seats}, {"max_rounds", max_rounds}};
  if (pair) j["pair"] = {pair->civilian_word, pair->undercover_word};
  if (!corpus_path.empty()) j["corpus"] = corpus_path;
  return j;
}

int UndercoverSeatFor(std::uint64_t seed, int seats) {
  Rng rng(DeriveSeed(seed, 0x0C0FFEE));
  return static_cast<int>(rng.Below(static_cast<std::uint64_t>(seats)));
}

bool ClueRevealsWord(std::string_view clue, std::string_view word) {
  const std::string w = Lower(Trim(word));
  if (w.empty()) return false;
  return Lower(clue).find(w) != std::string::npos;
}

int UndercoverTally(const std::map<int, int>& votes,
                    const std::vector<bool>& alive, std::uint64_t seed) {
  const int n = static_cast<int>(alive.size());
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const auto& [voter, target] : votes) {
    if (voter < 0 || voter >= n || !alive[voter]) {
      throw UndercoverValidationError("vote from unknown or eliminated seat " +
                                      std::to_string(voter));
    }
    if (target < 0 || target >= n) {
      throw UndercoverValidationError("vote for unknown seat " +
                                      std::to_string(target));
    }
    if (target == voter) {
      throw UndercoverValidationError(PlayerId{voter}.DisplayName() +
                                      " voted for itself");
    }
    if (!alive[target]) {
      throw UndercoverValidationError("vote for eliminated " +
                                      PlayerId{target}.DisplayName());
    }
    ++count[target];
  }
  if (votes.empty()) throw UndercoverValidationError("no votes to tally");
  const int best = *std::max_element(count.begin(), count.end());
  std::vector<int> leaders;
  for (int s = 0; s < n; ++s) {
    if (count[s] == best) leaders.push_back(s);
  }
  if (leaders.size() == 1) return leaders[0];
  Rng rng(seed);
  return leaders[rng.Below(leaders.size())];
}

UndercoverState::UndercoverState(std::uint64_t seed, const WordPair& pair,
                                 const UndercoverConfig& config)
    : GameState(seed), config_(config), pair_(pair) {
  undercover_seat_ = UndercoverSeatFor(seed, config_.seats);
  words_.assign(static_cast<std::size_t>(config_.seats), pair.civilian_word);
  words_[undercover_seat_] = pair.undercover_word;
  alive_.assign(static_cast<std::size_t>(config_.seats), true);
  clues_.assign(static_cast<std::size_t>(config_.max_rounds),
                std::vector<std::string>(static_cast<std::size_t>(config_.seats)));
  returns_.assign(static_cast<std::size_t>(config_.seats), 0.0);
}

int UndercoverState::CurrentSeat() const {
  if (phase_ == UndercoverPhase::kOver) return -1;
  for (int s = 0; s < config_.seats; ++s) {
    if (!alive_[s]) continue;
    if (phase_ == UndercoverPhase::kClues && clues_[round_ - 1][s].empty()) {
      return s;
    }
    if (phase_ == UndercoverPhase::kVoting && !votes_.contains(s)) return s;
  }
  return -1;
}

std::vector<ActionSpec> UndercoverState::LegalActions() const {
  std::vector<ActionSpec> actions;
  const int seat = CurrentSeat();
  if (seat < 0) return actions;
  if (phase_ == UndercoverPhase::kVoting) {
    for (int t = 0; t < config_.seats; ++t) {
      if (t != seat && alive_[t]) {
        actions.push_back(MakeAction(env(), seat, UndercoverVote{t}));
      }
    }
    return actions;
  }
  for (std::string_view clue : kStockClues) {
    ActionSpec a = MakeAction(env(), seat, UndercoverClue{std::string(clue)});
    if (CheckAction(a).ok) actions.push_back(std::move(a));
  }
  return actions;
}

Legality UndercoverState::CheckAction(const ActionSpec& action) const {
  const int seat = CurrentSeat();
  if (seat < 0) return Legality::Reject("game is over");
  if (action.env != env()) return Legality::Reject("not an Undercover action");
  if (phase_ == UndercoverPhase::kVoting) {
    const auto* vote = std::get_if<UndercoverVote>(&action.payload);
    if (vote == nullptr) return Legality::Reject("a vote is expected");
    if (vote->target == seat) return Legality::Reject("cannot vote for yourself");
    if (vote->target < 0 || vote->target >= config_.seats) {
      return Legality::Reject("unknown player");
    }
    if (!alive_[vote->target]) return Legality::Reject("player already eliminated");
    return Legality::Ok();
  }
  const auto* clue = std::get_if<UndercoverClue>(&action.payload);
  if (clue == nullptr) return Legality::Reject("a clue is expected");
  const std::string text = Trim(clue->text);
  if (text.empty()) return Legality::Reject("empty clue");
  if (ClueRevealsWord(text, words_[seat])) {
    return Legality::Reject("clue contains the secret word");
  }
  for (const auto& round : clues_) {
    for (const auto& previous : round) {
      if (!previous.empty() && Lower(previous) == Lower(text)) {
        return Legality::Reject("clue repeats what another player said");
      }
    }
  }
  return Legality::Ok();
}

std::vector<double> UndercoverState::DoApply(const ActionSpec& action) {
  const int seat = CurrentSeat();
  std::vector<double> rewards(static_cast<std::size_t>(config_.seats), 0.0);
  if (phase_ == UndercoverPhase::kClues) {
    clues_[round_ - 1][seat] = Trim(std::get<UndercoverClue>(action.payload).text);
    if (CurrentSeat() < 0) phase_ = UndercoverPhase::kVoting;
    return rewards;
  }
  votes_[seat] = std::get<UndercoverVote>(action.payload).target;
  if (CurrentSeat() >= 0) return rewards;
  ResolveVote();
  if (phase_ == UndercoverPhase::kOver) {
    for (int s = 0; s < config_.seats; ++s) {
      const bool uc = s == undercover_seat_;
      const bool won = (result_ == UndercoverResult::kUndercoverWin) == uc;
      rewards[s] = won ? 1.0 : 0.0;
      returns_[s] += rewards[s];
    }
  }
  return rewards;
}

void UndercoverState::ResolveVote() {
  const int out = UndercoverTally(
      votes_, alive_, DeriveSeed(seed(), static_cast<std::uint64_t>(round_)));
  alive_[out] = false;
  eliminated_.push_back(out);
  vote_history_.push_back(votes_);
  votes_.clear();
  if (out == undercover_seat_) {
    result_ = UndercoverResult::kCiviliansWin;
    phase_ = UndercoverPhase::kOver;
  } else if (round_ >= config_.max_rounds) {
    result_ = UndercoverResult::kUndercoverWin;
    phase_ = UndercoverPhase::kOver;
  } else {
    ++round_;
    phase_ = UndercoverPhase::kClues;
  }
}

UndercoverResult UndercoverState::Result() const {
  if (!votes_.empty()) throw ArenaError("vote in progress");
  return result_;
}

Outcome UndercoverState::GetOutcome() const {
  switch (result_) {
    case UndercoverResult::kUndercoverWin: return Outcome::Win(undercover_seat_);
    case UndercoverResult::kCiviliansWin: {
      std::vector<int> civilians;
      for (int s = 0; s < config_.seats; ++s) {
        if (s != undercover_seat_) civilians.push_back(s);
      }
      return Outcome::Team(std::move(civilians));
    }
    default: return Outcome::Ongoing();
  }
}

std::string UndercoverState::Messages(int viewer) const {
  (void)viewer;
  std::string out;
  for (int r = 1; r <= round_; ++r) {
    if (r < round_) {
      out += "\n\n(Round " + std::to_string(r) + ")";
    }
    for (int s = 0; s < config_.seats; ++s) {
      const auto& clue = clues_[r - 1][s];
      if (clue.empty()) continue;
      out += "\n\n" + PlayerId{s}.DisplayName() + ": " + clue;
    }
    if (r < round_ && r - 1 < static_cast<int>(eliminated_.size())) {
      out += "\n\n" + PlayerId{eliminated_[r - 1]}.DisplayName() +
             " was voted out and is not the undercover.";
    }
    if (r < round_) out += "\n\n(Round " + std::to_string(round_) + ")";
  }
  return out;
}

Observation UndercoverState::Observe(int seat, bool hints_enabled) const {
  Observation obs;
  obs.env = env();
  obs.viewer = PlayerId{seat};
  obs.hints_enabled = hints_enabled;
  obs.phase = phase_ == UndercoverPhase::kVoting ? "vote" : "clue";
  obs.open_text = phase_ == UndercoverPhase::kClues;
  obs.text_blocks["player_name"] = PlayerId{seat}.DisplayName();
  obs.text_blocks["word"] = words_[seat];
  obs.text_blocks["messages"] = Messages(seat);
  obs.text_blocks["round"] = std::to_string(round_);
  if (seat == CurrentSeat()) obs.legal_actions = LegalActions();
  return obs;
}

std::string UndercoverState::Serialize() const {
  std::string s = "undercover;pair=" + pair_.civilian_word + "/" +
                  pair_.undercover_word +
                  ";undercover=" + std::to_string(undercover_seat_) +
                  ";round=" + std::to_string(round_) +
                  ";phase=" + std::to_string(static_cast<int>(phase_)) + ";alive=";
  for (bool a : alive_) s += a ? '1' : '0';
  for (std::size_t r = 0; r < clues_.size(); ++r) {
    s += ";clues" + std::to_string(r + 1) + "=";
    for (const auto& c : clues_[r]) s += c + "|";
  }
  s += ";votes=";
  for (const auto& round : vote_history_) {
    for (const auto& [v, t] : round) {
      s += std::to_string(v) + ">" + std::to_string(t) + ",";
    }
    s += "/";
  }
  for (const auto& [v, t] : votes_) {
    s += std::to_string(v) + ">" + std::to_string(t) + ",";
  }
  s += ";result=" + std::string(UndercoverResultName(result_));
  return s;
}

std::string UndercoverState::Render() const {
  std::string out = "Round " + std::to_string(round_) + " (" +
                    (phase_ == UndercoverPhase::kVoting ? "voting" : "clues") +
                    ")\n";
  for (int s = 0; s < config_.seats; ++s) {
    out += PlayerId{s}.DisplayName() + (alive_[s] ? "" : " [out]");
    const auto& clue = clues_[round_ - 1][s];
    if (!clue.empty()) out += ": " + clue;
    out += "\n";
  }
  if (phase_ == UndercoverPhase::kOver) {
    out += std::string(UndercoverResultName(result_));
  }
  return out;
}

}  // namespace arena
