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

#ifndef ARENA_LLM_CLIENT_H_
#define ARENA_LLM_CLIENT_H_

#include <chrono>
#include <condition_variable>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "arena/match/agent.h"
#include "json.hpp"

namespace arena {

// OpenAI-compatible chat-completions endpoint. The API key is read from the
// environment variable named by api_key_env at request time.
struct AgentEndpoint {
  std::string base_url;  // e.g. "https://api.openai.com/v1"
  std::string model;
  std::string api_key_env;
  double timeout_seconds = 60.0;
  double temperature = 0.0;
  int max_tokens = 0;  // 0 leaves the server default
  int max_retries = 4;
  double backoff_initial_seconds = 1.0;
  double backoff_max_seconds = 30.0;
  // Minimum spacing between request starts; 0 disables rate limiting.
  double min_interval_seconds = 0.0;

  static AgentEndpoint FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  // Assistant text for `messages`. Throws TransportError.
  virtual std::string Complete(const std::vector<ChatMessage>& messages) = 0;
};

// Backend computing the reply in-process (scripted replies, tests).
class FunctionBackend final : public ChatBackend {
 public:
  using Fn = std::function<std::string(const std::vector<ChatMessage>&)>;
  explicit FunctionBackend(Fn fn) : fn_(std::move(fn)) {}
  std::string Complete(const std::vector<ChatMessage>& messages) override {
    return fn_(messages);
  }

 private:
  Fn fn_;
};

// Process-wide cap on in-flight HTTP requests.
class ConcurrencyLimiter {
 public:
  explicit ConcurrencyLimiter(int slots);
  void Acquire();
  void Release();
  void SetSlots(int slots);
  static ConcurrencyLimiter& Global();

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  int slots_;
  int in_use_ = 0;
};

struct HttpAttempt {
  int status = 0;  // 0 when the transport failed
  std::string error;
  double retry_after_seconds = -1;
};

class HttpChatClient final : public ChatBackend {
 public:
  using Sleeper = std::function<void(std::chrono::duration<double>)>;
  using Logger = std::function<void(const std::string&)>;

  explicit HttpChatClient(AgentEndpoint endpoint,
                          ConcurrencyLimiter* limiter = &ConcurrencyLimiter::Global());

  // Retries transport failures, 429 and 5xx with exponential backoff (or the
  // server's Retry-After) up to max_retries; other statuses fail at once.
  std::string Complete(const std::vector<ChatMessage>& messages) override;

  static nlohmann::json RequestBody(const AgentEndpoint& endpoint,
                                    const std::vector<ChatMessage>& messages);
  // choices[0].message.content; throws TransportError when absent.
  static std::string ExtractContent(const std::string& body);
  // Delay before retry number `retry` (0-based).
  static double BackoffSeconds(const AgentEndpoint& endpoint, int retry,
                               double retry_after_seconds);

  void set_sleeper(Sleeper s) { sleep_ = std::move(s); }
  void set_logger(Logger l) { log_ = std::move(l); }
  const std::vector<HttpAttempt>& attempts() const { return attempts_; }
  int requests() const { return static_cast<int>(attempts_.size()); }
  const AgentEndpoint& endpoint() const { return endpoint_; }

 private:
  void Throttle();

  AgentEndpoint endpoint_;
  ConcurrencyLimiter* limiter_;
  Sleeper sleep_;
  Logger log_;
  std::vector<HttpAttempt> attempts_;
  std::mutex rate_mu_;
  std::chrono::steady_clock::time_point next_start_{};
};

}  // namespace arena

#endif  // ARENA_LLM_CLIENT_H_
