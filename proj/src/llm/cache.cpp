#include <openssl/evp.h>

#include <ctime>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "symbcot/llm/gateway.hpp"

namespace symbcot::llm {

using nlohmann::json;
namespace fs = std::filesystem;

void CompletionRequest::validate() const {
  if (model.empty()) throw InvalidRequest("model is empty");
  if (messages.empty()) throw InvalidRequest("messages are empty");
  if (temperature < 0) throw InvalidRequest("temperature is negative");
  if (max_tokens <= 0) throw InvalidRequest("max_tokens must be positive");
  for (const auto& m : messages) {
    if (m.role != "system" && m.role != "user" && m.role != "assistant")
      throw InvalidRequest("unknown role '" + m.role + "'");
  }
  for (const auto& m : messages) {
    if (m.role == "system") continue;
    if (m.role != "user") throw InvalidRequest("first non-system message must be from the user");
    break;
  }
}

std::string to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::Live: return "live";
    case BackendKind::Cache: return "cache";
    case BackendKind::Replay: return "replay";
    case BackendKind::Scripted: return "scripted";
  }
  return "?";
}

namespace {

json request_json(const CompletionRequest& req) {
  json messages = json::array();
  for (const auto& m : req.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
  return {{"model", req.model}, {"messages", messages}, {"temperature", req.temperature}, {"max_tokens", req.max_tokens}};
}

CompletionRequest request_from_json(const json& j) {
  CompletionRequest req;
  req.model = j.at("model").get<std::string>();
  for (const auto& m : j.at("messages")) req.messages.push_back({m.at("role").get<std::string>(), m.at("content").get<std::string>()});
  req.temperature = j.at("temperature").get<double>();
  req.max_tokens = j.at("max_tokens").get<int>();
  return req;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw GatewayError("SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::optional<std::time_t> parse_utc(const std::string& s) {
  std::tm tm{};
  std::istringstream in(s);
  in >> std::get_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  if (in.fail()) return std::nullopt;
  return timegm(&tm);
}

bool is_key(const std::string& stem) {
  return stem.size() == 64 && stem.find_first_not_of("0123456789abcdef") == std::string::npos;
}

}  // namespace

std::string cache_key(const CompletionRequest& req) { return sha256_hex(request_json(req).dump()); }

long estimate_tokens(std::string_view text) { return static_cast<long>((text.size() + 3) / 4); }

ResponseCache::ResponseCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResponseCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<CacheEntry> ResponseCache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    CacheEntry e;
    e.key = key;
    e.request = request_from_json(j.at("request"));
    const auto& r = j.at("response");
    e.response.content = r.at("content").get<std::string>();
    e.response.prompt_tokens = r.at("prompt_tokens").get<long>();
    e.response.completion_tokens = r.at("completion_tokens").get<long>();
    e.timestamp = j.value("timestamp", "");
    return e;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void ResponseCache::store(const CompletionRequest& req, const CompletionResponse& resp) const {
  fs::create_directories(dir_);
  const std::string key = cache_key(req);
  json j = {{"request", request_json(req)},
            {"response",
             {{"content", resp.content},
              {"prompt_tokens", resp.prompt_tokens},
              {"completion_tokens", resp.completion_tokens}}},
            {"timestamp", utc_now()}};
  thread_local std::mt19937_64 rng{std::random_device{}()};
  const fs::path tmp = dir_ / (key + "." + std::to_string(rng()) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    out << j.dump(2) << '\n';
    if (!out) throw GatewayError("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path_for(key));
}

std::vector<CacheEntry> ResponseCache::list() const {
  std::vector<CacheEntry> out;
  if (!fs::is_directory(dir_)) return out;
  for (const auto& f : fs::directory_iterator(dir_)) {
    if (f.path().extension() != ".json" || !is_key(f.path().stem().string())) continue;
    if (auto e = load(f.path().stem().string())) out.push_back(std::move(*e));
  }
  std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) { return a.key < b.key; });
  return out;
}

ResponseCache::GcResult ResponseCache::gc(std::optional<std::chrono::seconds> max_age) const {
  GcResult result;
  if (!fs::is_directory(dir_)) return result;
  const std::time_t now = std::time(nullptr);
  std::vector<fs::path> paths;
  for (const auto& f : fs::directory_iterator(dir_)) paths.push_back(f.path());
  for (const auto& p : paths) {
    if (p.extension() == ".tmp") {
      fs::remove(p);
      ++result.removed_temp;
      continue;
    }
    if (p.extension() != ".json" || !is_key(p.stem().string())) continue;
    auto entry = load(p.stem().string());
    if (!entry || cache_key(entry->request) != entry->key) {
      fs::remove(p);
      ++result.removed_corrupt;
      continue;
    }
    if (max_age) {
      auto t = parse_utc(entry->timestamp);
      if (!t || now - *t > max_age->count()) {
        fs::remove(p);
        ++result.removed_old;
        continue;
      }
    }
    ++result.kept;
  }
  return result;
}

void ScriptedBackend::add(std::string tag, std::string response) { by_tag_[std::move(tag)] = std::move(response); }

void ScriptedBackend::add_rule(Rule rule) { rules_.push_back(std::move(rule)); }

std::shared_ptr<ScriptedBackend> ScriptedBackend::from_transcripts(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GatewayError("cannot read transcripts " + path.string());
  auto backend = std::make_shared<ScriptedBackend>();
  try {
    json j = json::parse(in);
    for (const auto& [id, stages] : j.items())
      for (const auto& [stage, text] : stages.items()) backend->add(id + "/" + stage, text.get<std::string>());
  } catch (const json::exception& e) {
    throw GatewayError("malformed transcripts " + path.string() + ": " + e.what());
  }
  return backend;
}

CompletionResponse ScriptedBackend::complete(const CompletionRequest& req) {
  std::optional<std::string> text;
  if (auto it = by_tag_.find(req.tag); it != by_tag_.end()) text = it->second;
  for (auto r = rules_.begin(); !text && r != rules_.end(); ++r) text = (*r)(req);
  if (!text) throw ScriptMiss(req.tag.empty() ? cache_key(req) : req.tag);
  long prompt = 0;
  for (const auto& m : req.messages) prompt += estimate_tokens(m.content);
  return {*text, prompt, estimate_tokens(*text), BackendKind::Scripted};
}

}  // namespace symbcot::llm
