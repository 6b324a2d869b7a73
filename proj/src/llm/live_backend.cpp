#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cmath>
#include <thread>

#include <json.hpp>

#include "symbcot/llm/gateway.hpp"

namespace symbcot::llm {

using nlohmann::json;

HttpTransport default_transport(double timeout_seconds) {
  return [timeout_seconds](const std::string& url, const std::string& body,
                           const std::vector<std::pair<std::string, std::string>>& headers) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return HttpReply{0, "", std::nullopt, "malformed endpoint " + url};
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    httplib::Client client(origin);
    const auto secs = static_cast<time_t>(timeout_seconds);
    client.set_connection_timeout(secs, 0);
    client.set_read_timeout(secs, 0);
    client.set_write_timeout(secs, 0);
    httplib::Headers h;
    for (const auto& [k, v] : headers) h.emplace(k, v);
    auto res = client.Post(path, h, body, "application/json");
    if (!res) return HttpReply{0, "", std::nullopt, httplib::to_string(res.error())};
    HttpReply reply{res->status, res->body, std::nullopt, ""};
    if (res->has_header("Retry-After")) {
      try {
        reply.retry_after = std::stod(res->get_header_value("Retry-After"));
      } catch (const std::exception&) {
      }
    }
    return reply;
  };
}

LiveBackend::LiveBackend(LiveConfig config) : config_(std::move(config)) {
  if (!config_.transport) config_.transport = default_transport(config_.timeout_seconds);
  if (!config_.sleep)
    config_.sleep = [](double s) { std::this_thread::sleep_for(std::chrono::duration<double>(s)); };
  if (config_.max_attempts < 1) config_.max_attempts = 1;
}

CompletionResponse LiveBackend::complete(const CompletionRequest& req) {
  if (config_.api_key.empty()) throw AuthError("no API key configured for the live backend");
  json messages = json::array();
  for (const auto& m : req.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
  const std::string body =
      json{{"model", req.model}, {"messages", messages}, {"temperature", req.temperature}, {"max_tokens", req.max_tokens}}
          .dump();
  const std::vector<std::pair<std::string, std::string>> headers = {{"Authorization", "Bearer " + config_.api_key}};

  std::exception_ptr last;
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    double delay = config_.base_delay_seconds * std::pow(2.0, attempt);
    HttpReply reply = config_.transport(config_.endpoint, body, headers);
    if (reply.status == 0) {
      last = std::make_exception_ptr(NetworkError("network error: " + reply.error));
    } else if (reply.status == 401 || reply.status == 403) {
      throw AuthError("authentication failed (HTTP " + std::to_string(reply.status) + ")");
    } else if (reply.status == 429) {
      last = std::make_exception_ptr(RateLimited("rate limited (HTTP 429)", reply.retry_after));
      if (reply.retry_after) delay = std::max(delay, *reply.retry_after);
    } else if (reply.status >= 500) {
      last = std::make_exception_ptr(NetworkError("server error (HTTP " + std::to_string(reply.status) + ")"));
    } else if (reply.status >= 400) {
      throw GatewayError("request rejected (HTTP " + std::to_string(reply.status) + "): " + reply.body.substr(0, 300));
    } else {
      try {
        json j = json::parse(reply.body);
        CompletionResponse resp;
        resp.content = j.at("choices").at(0).at("message").at("content").get<std::string>();
        if (j.contains("usage")) {
          resp.prompt_tokens = j["usage"].value("prompt_tokens", 0L);
          resp.completion_tokens = j["usage"].value("completion_tokens", 0L);
        }
        if (resp.completion_tokens <= 0) resp.completion_tokens = estimate_tokens(resp.content);
        resp.backend = BackendKind::Live;
        return resp;
      } catch (const json::exception& e) {
        throw GatewayError(std::string("malformed completion response: ") + e.what());
      }
    }
    if (attempt + 1 < config_.max_attempts) config_.sleep(delay);
  }
  std::rethrow_exception(last);
}

}  // namespace symbcot::llm
