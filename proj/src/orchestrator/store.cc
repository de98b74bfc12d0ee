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

#include "arena/orchestrator/store.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "arena/core/assets.h"

namespace arena {
namespace {

void WriteAll(int fd, const std::string& data, const std::filesystem::path& path) {
  std::size_t done = 0;
  while (done < data.size()) {
    const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ArenaError("write " + path.string() + ": " + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
}

void SyncDir(const std::filesystem::path& dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

}  // namespace

void WriteFileAtomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) throw ArenaError("open " + tmp.string() + ": " + std::strerror(errno));
  try {
    WriteAll(fd, content, tmp);
  } catch (...) {
    ::close(fd);
    throw;
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    throw ArenaError("fsync " + tmp.string() + ": " + std::strerror(errno));
  }
  ::close(fd);
  std::filesystem::rename(tmp, path);
  SyncDir(path.parent_path().empty() ? "." : path.parent_path());
}

Store::Store(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void Store::AppendRecord(const MatchRecord& record) {
  const std::string line = record.ToJsonLine() + "\n";
  std::lock_guard<std::mutex> lock(mu_);
  const auto path = RecordsPath();
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw ArenaError("open " + path.string() + ": " + std::strerror(errno));
  try {
    WriteAll(fd, line, path);
  } catch (...) {
    ::close(fd);
    throw;
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    throw ArenaError("fsync " + path.string() + ": " + std::strerror(errno));
  }
  ::close(fd);
}

Store::Loaded Store::LoadRecords() {
  std::lock_guard<std::mutex> lock(mu_);
  Loaded out;
  const auto path = RecordsPath();
  if (!std::filesystem::exists(path)) return out;
  const std::string text = ReadTextFile(path);
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    const bool last = end == std::string::npos || end + 1 >= text.size();
    const std::string line =
        text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    ++line_no;
    if (line.empty()) {
      pos = end == std::string::npos ? text.size() : end + 1;
      continue;
    }
    try {
      const auto j = nlohmann::json::parse(line);
      out.records.push_back(MatchRecord::FromJson(j));
    } catch (const std::exception& e) {
      if (!last) {
        throw CorruptRecordError(path.string() + " line " + std::to_string(line_no) +
                                 ": " + e.what());
      }
      std::filesystem::resize_file(path, pos);
      out.warnings.push_back("truncated corrupt trailing line " + std::to_string(line_no) +
                             " of " + path.string());
      break;
    }
    if (end == std::string::npos) {
      // Complete record missing its newline: terminate it for later appends.
      const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND);
      if (fd >= 0) {
        WriteAll(fd, "\n", path);
        ::fsync(fd);
        ::close(fd);
      }
      break;
    }
    pos = end + 1;
  }
  return out;
}

void Store::WriteRatings(const Leaderboard& board) {
  nlohmann::json j;
  j["config"] = board.config().ToJson();
  j["events"] = nlohmann::json::array();
  for (const auto& ev : board.log()) j["events"].push_back(ev.ToJson());
  std::lock_guard<std::mutex> lock(mu_);
  WriteFileAtomic(RatingsPath(), j.dump(1) + "\n");
}

Leaderboard Store::LoadRatings(const RatingConfig& config) const {
  const auto path = RatingsPath();
  if (!std::filesystem::exists(path)) return Leaderboard(config);
  const auto j = nlohmann::json::parse(ReadTextFile(path), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw CorruptRecordError(path.string() + " is not valid JSON");
  }
  Leaderboard board(j.contains("config") ? RatingConfig::FromJson(j["config"]) : config);
  for (const auto& ev : j.value("events", nlohmann::json::array())) {
    board.ApplyEvent(RatingEvent::FromJson(ev));
  }
  return board;
}

nlohmann::json Store::LeaderboardDocument(const Leaderboard& board) {
  nlohmann::json doc;
  doc["leaderboard"] = board.ToJson();
  const auto origin = board.OriginTable();
  auto& o = doc["origin"] = nlohmann::json::object();
  auto& n = doc["normalized"] = nlohmann::json::object();
  for (const auto& [env, scores] : origin) {
    const std::string name(EnvName(env));
    o[name] = scores;
    try {
      n[name] = NormalizeScores(scores);
    } catch (const NormalizationError& e) {
      n[name] = nullptr;
    }
  }
  return doc;
}

void Store::WriteLeaderboard(const Leaderboard& board) {
  const std::string text = LeaderboardDocument(board).dump(1) + "\n";
  std::lock_guard<std::mutex> lock(mu_);
  WriteFileAtomic(LeaderboardPath(), text);
}

void Store::WriteConfig(const nlohmann::json& config) {
  std::lock_guard<std::mutex> lock(mu_);
  WriteFileAtomic(ConfigPath(), config.dump(1) + "\n");
}

void Store::WriteAnalysis(const std::string& name, const std::string& content) {
  std::lock_guard<std::mutex> lock(mu_);
  std::filesystem::create_directories(AnalysisDir());
  WriteFileAtomic(AnalysisDir() / name, content);
}

void Store::AppendWarning(const std::string& message) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto path = WarningsPath();
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw ArenaError("open " + path.string() + ": " + std::strerror(errno));
  WriteAll(fd, message + "\n", path);
  ::fsync(fd);
  ::close(fd);
}

int Store::Reconcile(Leaderboard& board, const std::vector<MatchRecord>& records) {
  int applied = 0;
  for (const auto& r : records) {
    if (board.Apply(r)) ++applied;
  }
  return applied;
}

}  // namespace arena
