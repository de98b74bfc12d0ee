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

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "arena/llm/client.h"

namespace arena {
namespace {

std::string Completion(const std::string& text) {
  return nlohmann::json{{"choices", {{{"message", {{"role", "assistant"}, {"content", text}}}}}}}
      .dump();
}

// Chat-completions stand-in on a free local port.
class MockServer {
 public:
  explicit MockServer(httplib::Server::Handler handler) {
    server_.Post("/v1/chat/completions", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockServer() {
    server_.stop();
    thread_.join();
  }
  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

AgentEndpoint EndpointFor(const MockServer& server) {
  AgentEndpoint e;
  e.base_url = server.base_url();
  e.model = "mock";
  e.timeout_seconds = 5.0;
  e.max_retries = 3;
  return e;
}

struct SleepLog {
  std::vector<double> delays;
  HttpChatClient::Sleeper sleeper() {
    return [this](std::chrono::duration<double> d) { delays.push_back(d.count()); };
  }
};

TEST(HttpChatClientTest, RetriesRateLimitsThenSucceeds) {
  std::atomic<int> calls{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    if (calls++ < 2) {
      res.status = 429;
      return;
    }
    res.set_content(Completion("X: (2, 2)"), "application/json");
  });
  ConcurrencyLimiter limiter(2);
  HttpChatClient client(EndpointFor(server), &limiter);
  SleepLog sleeps;
  client.set_sleeper(sleeps.sleeper());
  EXPECT_EQ(client.Complete({{"user", "go"}}), "X: (2, 2)");
  EXPECT_EQ(client.requests(), 3);
  EXPECT_EQ(client.attempts()[0].status, 429);
  EXPECT_EQ(sleeps.delays, (std::vector<double>{1.0, 2.0}));
}

TEST(HttpChatClientTest, PermanentServerErrorExhaustsRetries) {
  std::atomic<int> calls{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 500;
  });
  ConcurrencyLimiter limiter(1);
  HttpChatClient client(EndpointFor(server), &limiter);
  SleepLog sleeps;
  client.set_sleeper(sleeps.sleeper());
  EXPECT_THROW(client.Complete({{"user", "go"}}), TransportError);
  EXPECT_EQ(calls.load(), 4);
  EXPECT_EQ(sleeps.delays.size(), 3u);
}

TEST(HttpChatClientTest, ClientErrorsFailWithoutRetry) {
  std::atomic<int> calls{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 400;
  });
  ConcurrencyLimiter limiter(1);
  HttpChatClient client(EndpointFor(server), &limiter);
  client.set_sleeper([](auto) {});
  EXPECT_THROW(client.Complete({{"user", "go"}}), TransportError);
  EXPECT_EQ(calls.load(), 1);
}

TEST(HttpChatClientTest, SendsModelMessagesAndBearerKey) {
  ::setenv("ARENA_TEST_MOCK_KEY", "sk-test", 1);
  nlohmann::json seen;
  std::string auth;
  MockServer server([&](const httplib::Request& req, httplib::Response& res) {
    seen = nlohmann::json::parse(req.body);
    auth = req.get_header_value("Authorization");
    res.set_content(Completion(seen["messages"].back()["content"].get<std::string>()),
                    "application/json");
  });
  AgentEndpoint e = EndpointFor(server);
  e.api_key_env = "ARENA_TEST_MOCK_KEY";
  e.temperature = 0.7;
  e.max_tokens = 64;
  ConcurrencyLimiter limiter(1);
  HttpChatClient client(e, &limiter);
  EXPECT_EQ(client.Complete({{"system", "rules"}, {"user", "echo me"}}), "echo me");
  EXPECT_EQ(auth, "Bearer sk-test");
  EXPECT_EQ(seen["model"], "mock");
  EXPECT_EQ(seen["messages"].size(), 2u);
  EXPECT_EQ(seen["messages"][0]["role"], "system");
  EXPECT_DOUBLE_EQ(seen["temperature"].get<double>(), 0.7);
  EXPECT_EQ(seen["max_tokens"], 64);
}

TEST(HttpChatClientTest, HonorsRetryAfter) {
  std::atomic<int> calls{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    if (calls++ == 0) {
      res.status = 503;
      res.set_header("Retry-After", "7");
      return;
    }
    res.set_content(Completion("ok"), "application/json");
  });
  ConcurrencyLimiter limiter(1);
  HttpChatClient client(EndpointFor(server), &limiter);
  SleepLog sleeps;
  client.set_sleeper(sleeps.sleeper());
  EXPECT_EQ(client.Complete({{"user", "go"}}), "ok");
  EXPECT_EQ(sleeps.delays, (std::vector<double>{7.0}));
}

TEST(HttpChatClientTest, UnreachableServerIsATransportError) {
  AgentEndpoint e;
  {
    MockServer server([](const httplib::Request&, httplib::Response&) {});
    e = EndpointFor(server);
  }
  e.max_retries = 1;
  e.timeout_seconds = 1.0;
  ConcurrencyLimiter limiter(1);
  HttpChatClient client(e, &limiter);
  client.set_sleeper([](auto) {});
  EXPECT_THROW(client.Complete({{"user", "go"}}), TransportError);
  EXPECT_EQ(client.requests(), 2);
  EXPECT_EQ(client.attempts()[0].status, 0);
}

TEST(HttpChatClientTest, BackoffDoublesUpToTheCap) {
  AgentEndpoint e;
  e.backoff_initial_seconds = 1.0;
  e.backoff_max_seconds = 5.0;
  EXPECT_DOUBLE_EQ(HttpChatClient::BackoffSeconds(e, 0, -1), 1.0);
  EXPECT_DOUBLE_EQ(HttpChatClient::BackoffSeconds(e, 2, -1), 4.0);
  EXPECT_DOUBLE_EQ(HttpChatClient::BackoffSeconds(e, 3, -1), 5.0);
  EXPECT_DOUBLE_EQ(HttpChatClient::BackoffSeconds(e, 0, 60), 5.0);
}

TEST(HttpChatClientTest, ContentExtraction) {
  EXPECT_EQ(HttpChatClient::ExtractContent(Completion("hi")), "hi");
  EXPECT_THROW(HttpChatClient::ExtractContent("{\"choices\": []}"), TransportError);
  EXPECT_THROW(HttpChatClient::ExtractContent("not json"), TransportError);
}

TEST(ConcurrencyLimiterTest, BoundsInFlightWork) {
  ConcurrencyLimiter limiter(2);
  std::atomic<int> active{0}, peak{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      limiter.Acquire();
      const int now = ++active;
      int prev = peak.load();
      while (now > prev && !peak.compare_exchange_weak(prev, now)) {
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
      --active;
      limiter.Release();
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_LE(peak.load(), 2);
}

}  // namespace
}  // namespace arena
