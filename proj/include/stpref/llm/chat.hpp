#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <semaphore>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace stpref::llm {

struct ChatMessage {
  std::string role;
  std::string content;
  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.8;
  double top_p = 0.95;
  int n = 1;
  int max_tokens = 1024;
};

struct ChatResponse {
  std::vector<std::string> choices;
};

// One chat-completion round trip. Implementations must be safe to call from
// several threads at once.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

// OpenAI-compatible wire format.
nlohmann::json to_wire(const ChatRequest& request);
ChatResponse from_wire(const nlohmann::json& body);

struct HttpTransportConfig {
  // full URL of the chat-completions route, http:// or https://
  std::string endpoint;
  // environment variable holding the bearer token; empty disables auth
  std::string api_key_env;
  int max_retries = 4;
  std::chrono::milliseconds initial_backoff{500};
  double backoff_multiplier = 2.0;
  std::chrono::milliseconds max_backoff{30000};
  std::chrono::seconds timeout{120};
  int max_in_flight = 8;
};

// Retries 429, 5xx and connection failures with exponential backoff (a
// Retry-After header, when present, overrides the computed delay). Other
// statuses fail immediately.
class HttpTransport : public ChatTransport {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  explicit HttpTransport(HttpTransportConfig cfg, Sleeper sleeper = nullptr);
  ChatResponse complete(const ChatRequest& request) override;

 private:
  HttpTransportConfig cfg_;
  Sleeper sleep_;
  std::string base_;  // scheme://host:port
  std::string path_;
  std::counting_semaphore<1024> in_flight_;
};

// Replays canned replies in order, one per requested choice. Records every
// request it receives.
class ScriptedTransport : public ChatTransport {
 public:
  explicit ScriptedTransport(std::vector<std::string> replies, bool cycle = false);
  // Every regular file in `dir`, sorted by file name.
  static std::unique_ptr<ScriptedTransport> from_directory(const std::filesystem::path& dir, bool cycle = false);

  ChatResponse complete(const ChatRequest& request) override;

  std::vector<ChatRequest> requests() const;
  std::size_t remaining() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> replies_;
  std::size_t next_ = 0;
  bool cycle_;
  std::vector<ChatRequest> seen_;
};

}  // namespace stpref::llm
