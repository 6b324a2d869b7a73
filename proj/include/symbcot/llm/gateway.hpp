#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <stdexcept>
#include <string>
#include <vector>

namespace symbcot::llm {

struct Message {
  std::string role;  // system, user or assistant
  std::string content;
  friend bool operator==(const Message&, const Message&) = default;
};

struct CompletionRequest {
  std::string model;
  std::vector<Message> messages;
  double temperature = 0.0;
  int max_tokens = 2048;
  // Routing label for scripted backends (e.g. "lockers/solver"); not hashed.
  std::string tag;

  // Throws InvalidRequest.
  void validate() const;
};

enum class BackendKind { Live, Cache, Replay, Scripted };
std::string to_string(BackendKind kind);

struct CompletionResponse {
  std::string content;
  long prompt_tokens = 0;
  long completion_tokens = 0;
  BackendKind backend = BackendKind::Scripted;
};

class GatewayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InvalidRequest : public GatewayError {
 public:
  using GatewayError::GatewayError;
};
class NetworkError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};
class RateLimited : public GatewayError {
 public:
  RateLimited(std::string what, std::optional<double> retry_after)
      : GatewayError(std::move(what)), retry_after(retry_after) {}
  std::optional<double> retry_after;  // seconds, from the server hint
};
class AuthError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};
class ReplayMiss : public GatewayError {
 public:
  ReplayMiss(std::string key, std::string tag)
      : GatewayError("replay miss for " + (tag.empty() ? key : tag + " (" + key + ")")), key(std::move(key)),
        tag(std::move(tag)) {}
  std::string key, tag;
};
class ScriptMiss : public GatewayError {
 public:
  explicit ScriptMiss(const std::string& tag) : GatewayError("no scripted response for " + tag) {}
};

// Hex SHA-256 of the canonical JSON of (model, messages, temperature,
// max_tokens).
std::string cache_key(const CompletionRequest& req);

// Rough token count (four characters per token) for offline backends.
long estimate_tokens(std::string_view text);

struct CacheEntry {
  std::string key;
  CompletionRequest request;
  CompletionResponse response;
  std::string timestamp;  // ISO-8601 UTC
};

// One JSON file per key: {request, response, timestamp}.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<CacheEntry> load(const std::string& key) const;
  // Atomic: writes a temporary file and renames it into place.
  void store(const CompletionRequest& req, const CompletionResponse& resp) const;
  std::vector<CacheEntry> list() const;

  struct GcResult {
    std::size_t removed_temp = 0, removed_corrupt = 0, removed_old = 0, kept = 0;
  };
  // Drops leftover temporaries, unreadable entries and, with `max_age`,
  // entries older than that.
  GcResult gc(std::optional<std::chrono::seconds> max_age = std::nullopt) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual CompletionResponse complete(const CompletionRequest& req) = 0;
};

// Serves fixed responses by request tag, then by rule.
class ScriptedBackend : public Backend {
 public:
  using Rule = std::function<std::optional<std::string>(const CompletionRequest&)>;

  void add(std::string tag, std::string response);
  void add_rule(Rule rule);
  // Loads {"<problem id>": {"<stage>": "<response>"}} with tags "<id>/<stage>".
  static std::shared_ptr<ScriptedBackend> from_transcripts(const std::filesystem::path& path);

  CompletionResponse complete(const CompletionRequest& req) override;
  std::size_t size() const { return by_tag_.size(); }

 private:
  std::map<std::string, std::string> by_tag_;
  std::vector<Rule> rules_;
};

struct HttpReply {
  int status = 0;  // 0 when no response was received
  std::string body;
  std::optional<double> retry_after;
  std::string error;
};

using HttpTransport = std::function<HttpReply(const std::string& url, const std::string& body,
                                              const std::vector<std::pair<std::string, std::string>>& headers)>;

struct LiveConfig {
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string api_key;
  int max_attempts = 5;
  double base_delay_seconds = 1.0;
  double timeout_seconds = 120.0;
  HttpTransport transport;                   // default: HTTPS via cpp-httplib
  std::function<void(double)> sleep;         // default: std::this_thread::sleep_for
};

// Chat-completions over HTTP(S) with retries and exponential backoff.
class LiveBackend : public Backend {
 public:
  explicit LiveBackend(LiveConfig config);
  CompletionResponse complete(const CompletionRequest& req) override;

 private:
  LiveConfig config_;
};

HttpTransport default_transport(double timeout_seconds);

enum class Mode { Live, Replay, Scripted };

class Gateway {
 public:
  // Live: cache first, then the backend (bounded by `max_in_flight`) with the
  // answer persisted. Replay: cache only. Scripted: the backend, recorded to
  // the cache when one is given.
  Gateway(Mode mode, std::shared_ptr<Backend> backend, std::shared_ptr<ResponseCache> cache,
          std::size_t max_in_flight = 4);

  CompletionResponse complete(const CompletionRequest& req);

  Mode mode() const { return mode_; }
  std::size_t backend_calls() const { return backend_calls_; }
  std::size_t cache_hits() const { return cache_hits_; }

 private:
  Mode mode_;
  std::shared_ptr<Backend> backend_;
  std::shared_ptr<ResponseCache> cache_;
  std::counting_semaphore<1024> in_flight_;
  std::atomic<std::size_t> backend_calls_{0}, cache_hits_{0};
};

}  // namespace symbcot::llm
