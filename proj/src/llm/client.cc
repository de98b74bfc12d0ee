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

#include "arena/llm/client.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "httplib.h"

namespace arena {
namespace {

struct SplitUrl {
  std::string scheme_host_port;
  std::string path_prefix;
};

SplitUrl Split(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw InvalidConfigError("endpoint base_url needs a scheme: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  SplitUrl out;
  out.scheme_host_port = url.substr(0, path_start);
  if (path_start != std::string::npos) out.path_prefix = url.substr(path_start);
  while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
    out.path_prefix.pop_back();
  }
  return out;
}

double RetryAfter(const httplib::Headers& headers) {
  const auto it = headers.find("Retry-After");
  if (it == headers.end()) return -1;
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || !std::isfinite(v) || v < 0) return -1;
  return v;
}

class SlotGuard {
 public:
  explicit SlotGuard(ConcurrencyLimiter* l) : l_(l) {
    if (l_) l_->Acquire();
  }
  ~SlotGuard() {
    if (l_) l_->Release();
  }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  ConcurrencyLimiter* l_;
};

}  // namespace

AgentEndpoint AgentEndpoint::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidConfigError("endpoint must be an object");
  AgentEndpoint e;
  try {
    e.base_url = j.at("base_url").get<std::string>();
    e.model = j.at("model").get<std::string>();
    e.api_key_env = j.value("api_key_env", std::string());
    e.timeout_seconds = j.value("timeout_seconds", e.timeout_seconds);
    e.temperature = j.value("temperature", e.temperature);
    e.max_tokens = j.value("max_tokens", e.max_tokens);
    e.max_retries = j.value("max_retries", e.max_retries);
    e.backoff_initial_seconds =
        j.value("backoff_initial_seconds", e.backoff_initial_seconds);
    e.backoff_max_seconds = j.value("backoff_max_seconds", e.backoff_max_seconds);
    e.min_interval_seconds = j.value("min_interval_seconds", e.min_interval_seconds);
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidConfigError(std::string("bad endpoint: ") + ex.what());
  }
  if (j.contains("api_key")) {
    throw InvalidConfigError("endpoint keys belong in the environment; use api_key_env");
  }
  if (e.timeout_seconds <= 0 || e.max_retries < 0 || e.backoff_initial_seconds < 0 ||
      e.backoff_max_seconds < 0 || e.min_interval_seconds < 0) {
    throw InvalidConfigError("endpoint timing values must be non-negative");
  }
  Split(e.base_url);
  return e;
}

nlohmann::json AgentEndpoint::ToJson() const {
  return {{"base_url", base_url},
          {"model", model},
          {"api_key_env", api_key_env},
          {"timeout_seconds", timeout_seconds},
          {"temperature", temperature},
          {"max_tokens", max_tokens},
          {"max_retries", max_retries},
          {"backoff_initial_seconds", backoff_initial_seconds},
          {"backoff_max_seconds", backoff_max_seconds},
          {"min_interval_seconds", min_interval_seconds}};
}

ConcurrencyLimiter::ConcurrencyLimiter(int slots) : slots_(std::max(1, slots)) {}

void ConcurrencyLimiter::Acquire() {
  std::unique_lock<std::mutex> lock(mu_);
  cv_.wait(lock, [this] { return in_use_ < slots_; });
  ++in_use_;
}

void ConcurrencyLimiter::Release() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    --in_use_;
  }
  cv_.notify_one();
}

void ConcurrencyLimiter::SetSlots(int slots) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    slots_ = std::max(1, slots);
  }
  cv_.notify_all();
}

ConcurrencyLimiter& ConcurrencyLimiter::Global() {
  static ConcurrencyLimiter limiter(8);
  return limiter;
}

HttpChatClient::HttpChatClient(AgentEndpoint endpoint, ConcurrencyLimiter* limiter)
    : endpoint_(std::move(endpoint)),
      limiter_(limiter),
      sleep_([](std::chrono::duration<double> d) { std::this_thread::sleep_for(d); }) {
  Split(endpoint_.base_url);
}

nlohmann::json HttpChatClient::RequestBody(const AgentEndpoint& endpoint,
                                           const std::vector<ChatMessage>& messages) {
  nlohmann::json msgs = nlohmann::json::array();
  for (const auto& m : messages) {
    msgs.push_back({{"role", m.role}, {"content", m.content}});
  }
  nlohmann::json body = {{"model", endpoint.model},
                         {"messages", std::move(msgs)},
                         {"temperature", endpoint.temperature}};
  if (endpoint.max_tokens > 0) body["max_tokens"] = endpoint.max_tokens;
  return body;
}

std::string HttpChatClient::ExtractContent(const std::string& body) {
  const auto j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded()) throw TransportError("completion body is not JSON");
  const auto* choices = j.contains("choices") ? &j["choices"] : nullptr;
  if (!choices || !choices->is_array() || choices->empty()) {
    throw TransportError("completion has no choices");
  }
  const auto& msg = (*choices)[0].value("message", nlohmann::json::object());
  const auto it = msg.find("content");
  if (it == msg.end() || !it->is_string()) {
    throw TransportError("completion has no message content");
  }
  return it->get<std::string>();
}

double HttpChatClient::BackoffSeconds(const AgentEndpoint& endpoint, int retry,
                                      double retry_after_seconds) {
  if (retry_after_seconds >= 0) {
    return std::min(retry_after_seconds, endpoint.backoff_max_seconds);
  }
  return std::min(endpoint.backoff_initial_seconds * std::ldexp(1.0, retry),
                  endpoint.backoff_max_seconds);
}

void HttpChatClient::Throttle() {
  if (endpoint_.min_interval_seconds <= 0) return;
  std::chrono::steady_clock::time_point start;
  {
    std::lock_guard<std::mutex> lock(rate_mu_);
    const auto now = std::chrono::steady_clock::now();
    start = std::max(now, next_start_);
    next_start_ = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(endpoint_.min_interval_seconds));
  }
  const auto wait = start - std::chrono::steady_clock::now();
  if (wait.count() > 0) sleep_(wait);
}

std::string HttpChatClient::Complete(const std::vector<ChatMessage>& messages) {
  const SplitUrl url = Split(endpoint_.base_url);
  const std::string path = url.path_prefix + "/chat/completions";
  const std::string body = RequestBody(endpoint_, messages).dump();
  std::string key;
  if (!endpoint_.api_key_env.empty()) {
    if (const char* v = std::getenv(endpoint_.api_key_env.c_str())) key = v;
  }

  std::string last_error;
  for (int attempt = 0; attempt <= endpoint_.max_retries; ++attempt) {
    Throttle();
    HttpAttempt record;
    {
      SlotGuard slot(limiter_);
      httplib::Client cli(url.scheme_host_port);
      const auto secs = static_cast<time_t>(endpoint_.timeout_seconds);
      const auto usecs = static_cast<time_t>(
          (endpoint_.timeout_seconds - static_cast<double>(secs)) * 1e6);
      cli.set_connection_timeout(secs, usecs);
      cli.set_read_timeout(secs, usecs);
      cli.set_write_timeout(secs, usecs);
      httplib::Headers headers;
      if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);
      if (log_) log_("POST " + endpoint_.base_url + path + " model=" + endpoint_.model);
      auto res = cli.Post(path, headers, body, "application/json");
      if (!res) {
        record.error = httplib::to_string(res.error());
      } else {
        record.status = res->status;
        record.retry_after_seconds = RetryAfter(res->headers);
        if (log_) log_("status " + std::to_string(res->status));
        if (res->status == 200) {
          {
            std::lock_guard<std::mutex> lock(rate_mu_);
            attempts_.push_back(record);
          }
          return ExtractContent(res->body);
        }
        record.error = "HTTP " + std::to_string(res->status);
      }
    }
    {
      std::lock_guard<std::mutex> lock(rate_mu_);
      attempts_.push_back(record);
    }
    last_error = record.error;
    const bool retryable =
        record.status == 0 || record.status == 429 || record.status >= 500;
    if (!retryable) break;
    if (attempt < endpoint_.max_retries) {
      sleep_(std::chrono::duration<double>(
          BackoffSeconds(endpoint_, attempt, record.retry_after_seconds)));
    }
  }
  throw TransportError(endpoint_.model + " at " + endpoint_.base_url + ": " + last_error);
}

}  // namespace arena
