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

#ifndef ARENA_ORCHESTRATOR_STORE_H_
#define ARENA_ORCHESTRATOR_STORE_H_

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "arena/match/record.h"
#include "arena/rating/leaderboard.h"
#include "json.hpp"

namespace arena {

// Output directory layout:
//   records.jsonl     one MatchRecord per line, append-only
//   ratings.json      rating config plus the full update log
//   leaderboard.json  ranked tables, origin and normalized scores
//   config.json       snapshot of the tournament config
//   warnings.log      inactive agents, repaired files
//   analysis/         analysis outputs
class Store {
 public:
  explicit Store(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path RecordsPath() const { return dir_ / "records.jsonl"; }
  std::filesystem::path RatingsPath() const { return dir_ / "ratings.json"; }
  std::filesystem::path LeaderboardPath() const { return dir_ / "leaderboard.json"; }
  std::filesystem::path ConfigPath() const { return dir_ / "config.json"; }
  std::filesystem::path WarningsPath() const { return dir_ / "warnings.log"; }
  std::filesystem::path AnalysisDir() const { return dir_ / "analysis"; }

  // Writes the line and fsyncs before returning.
  void AppendRecord(const MatchRecord& record);

  struct Loaded {
    std::vector<MatchRecord> records;
    std::vector<std::string> warnings;
  };
  // A corrupt final line is cut off (with a warning); corruption before the
  // last line throws CorruptRecordError.
  Loaded LoadRecords();

  void WriteRatings(const Leaderboard& board);
  // Folds the persisted log; a missing file yields an empty leaderboard
  // with `config`.
  Leaderboard LoadRatings(const RatingConfig& config) const;
  void WriteLeaderboard(const Leaderboard& board);
  void WriteConfig(const nlohmann::json& config);
  void WriteAnalysis(const std::string& name, const std::string& content);
  void AppendWarning(const std::string& message);

  // Applies every record the leaderboard has not seen, in file order.
  // Returns how many changed it.
  static int Reconcile(Leaderboard& board, const std::vector<MatchRecord>& records);

  // Leaderboard, origin table and normalized table as one document.
  static nlohmann::json LeaderboardDocument(const Leaderboard& board);

 private:
  std::filesystem::path dir_;
  std::mutex mu_;
};

// Write to a temporary sibling, fsync, then rename over `path`.
void WriteFileAtomic(const std::filesystem::path& path, const std::string& content);

}  // namespace arena

#endif  // ARENA_ORCHESTRATOR_STORE_H_
