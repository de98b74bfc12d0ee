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

#ifndef ARENA_GAMES_UNDERCOVER_H_
#define ARENA_GAMES_UNDERCOVER_H_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "arena/core/game.h"

namespace arena {

struct WordPair {
  std::string civilian_word;
  std::string undercover_word;
  bool operator==(const WordPair&) const = default;
};

// Tab-separated "civilian<TAB>undercover" per line; '#' starts a comment.
std::vector<WordPair> LoadWordPairs(const std::filesystem::path& path);
std::vector<WordPair> ParseWordPairs(std::string_view text);
// Corpus shipped under assets/word_pairs.tsv.
const std::vector<WordPair>& DefaultWordPairs();

inline constexpr int kUndercoverSeats = 5;

struct UndercoverConfig {
  int seats = kUndercoverSeats;
  int max_rounds = 2;
  // Fixed pair; otherwise a pair is drawn from the corpus by seed.
  std::optional<WordPair> pair;
  std::string corpus_path;

  static UndercoverConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

enum class UndercoverPhase { kClues, kVoting, kOver };
enum class UndercoverResult { kOngoing, kUndercoverWin, kCiviliansWin };

std::string_view UndercoverResultName(UndercoverResult r);

class UndercoverValidationError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

// Plurality elimination. Every key of `votes` must be alive, vote for another
// alive seat and not for itself; throws UndercoverValidationError otherwise.
// Ties among the leaders are broken by a uniform draw seeded by `seed`.
int UndercoverTally(const std::map<int, int>& votes,
                    const std::vector<bool>& alive, std::uint64_t seed);

class UndercoverState final : public GameState {
 public:
  // Deals `pair` with the undercover seat drawn uniformly from `seed`.
  UndercoverState(std::uint64_t seed, const WordPair& pair,
                  const UndercoverConfig& config = {});

  EnvKind env() const override { return EnvKind::kUndercover; }
  int NumSeats() const override { return config_.seats; }
  bool IsTerminal() const override { return phase_ == UndercoverPhase::kOver; }
  int CurrentSeat() const override;
  std::vector<ActionSpec> LegalActions() const override;
  Legality CheckAction(const ActionSpec& action) const override;
  Observation Observe(int seat, bool hints_enabled) const override;
  Outcome GetOutcome() const override;
  std::vector<double> Returns() const override { return returns_; }
  std::string Serialize() const override;
  std::string Render() const override;
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<UndercoverState>(*this);
  }

  // Throws ArenaError while a vote is partially collected.
  UndercoverResult Result() const;

  int undercover_seat() const { return undercover_seat_; }
  const std::string& word(int seat) const { return words_[seat]; }
  const WordPair& pair() const { return pair_; }
  bool alive(int seat) const { return alive_[seat]; }
  int round() const { return round_; }
  UndercoverPhase phase() const { return phase_; }
  const std::vector<int>& eliminated() const { return eliminated_; }
  // clues_[round - 1][seat], empty when not given.
  const std::vector<std::vector<std::string>>& clues() const { return clues_; }
  const std::map<int, int>& pending_votes() const { return votes_; }

 protected:
  std::vector<double> DoApply(const ActionSpec& action) override;

 private:
  void ResolveVote();
  std::string Messages(int viewer) const;

  UndercoverConfig config_;
  WordPair pair_;
  int undercover_seat_ = 0;
  std::vector<std::string> words_;
  std::vector<bool> alive_;
  int round_ = 1;
  UndercoverPhase phase_ = UndercoverPhase::kClues;
  std::vector<std::vector<std::string>> clues_;
  std::map<int, int> votes_;
  std::vector<std::map<int, int>> vote_history_;
  std::vector<int> eliminated_;
  UndercoverResult result_ = UndercoverResult::kOngoing;
  std::vector<double> returns_;
};

// Undercover seat for (pair, seed); exposed for distribution tests.
int UndercoverSeatFor(std::uint64_t seed, int seats);

// Case-insensitive check that `clue` mentions `word`.
bool ClueRevealsWord(std::string_view clue, std::string_view word);

}  // namespace arena

#endif  // ARENA_GAMES_UNDERCOVER_H_
