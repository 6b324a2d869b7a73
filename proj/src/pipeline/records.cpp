#include "symbcot/pipeline/records.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symbcot::pipeline {

using nlohmann::json;

namespace {

std::string squash(std::string_view s) {
  std::string out;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

json prediction_json(const logic::Prediction& p) { return logic::to_string(p); }

logic::Prediction prediction_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "Undecided") return std::nullopt;
  auto l = logic::parse_label(s);
  if (!l) throw RecordError("unknown label '" + s + "'");
  return l;
}

template <typename T, typename Parse>
T parse_enum(const json& j, Parse parse, const char* what) {
  const auto s = j.get<std::string>();
  auto v = parse(s);
  if (!v) throw RecordError(std::string("unknown ") + what + " '" + s + "'");
  return *v;
}

std::optional<ArtifactKind> parse_artifact(std::string_view s) {
  for (auto k : {ArtifactKind::Translation, ArtifactKind::Plan, ArtifactKind::Reasoning, ArtifactKind::Verdict,
                 ArtifactKind::Answer})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Naive: return "Naive";
    case Method::CoT: return "CoT";
    case Method::SymbCoT: return "SymbCoT";
    case Method::SymbCoTNoVerifier: return "SymbCoTNoVerifier";
    case Method::TranslateThenSolve: return "TranslateThenSolve";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  const auto key = squash(name);
  for (auto m : {Method::Naive, Method::CoT, Method::SymbCoT, Method::SymbCoTNoVerifier, Method::TranslateThenSolve})
    if (squash(to_string(m)) == key) return m;
  if (key == "tts") return Method::TranslateThenSolve;
  return std::nullopt;
}

const std::vector<Stage>& stages_of(Method m) {
  static const std::vector<Stage> naive = {Stage::Naive};
  static const std::vector<Stage> cot = {Stage::CoT};
  static const std::vector<Stage> full = {Stage::Translator, Stage::Planner, Stage::Solver, Stage::Verifier};
  static const std::vector<Stage> no_verifier = {Stage::Translator, Stage::Planner, Stage::Solver};
  static const std::vector<Stage> tts = {Stage::Translator};
  switch (m) {
    case Method::Naive: return naive;
    case Method::CoT: return cot;
    case Method::SymbCoT: return full;
    case Method::SymbCoTNoVerifier: return no_verifier;
    case Method::TranslateThenSolve: return tts;
  }
  return full;
}

std::string to_string(FallbackPolicy p) {
  switch (p) {
    case FallbackPolicy::Abstain: return "abstain";
    case FallbackPolicy::Random: return "random";
    case FallbackPolicy::CotBackup: return "cot_backup";
  }
  return "?";
}

std::optional<FallbackPolicy> parse_fallback(std::string_view name) {
  const auto key = squash(name);
  for (auto p : {FallbackPolicy::Abstain, FallbackPolicy::Random, FallbackPolicy::CotBackup})
    if (squash(to_string(p)) == key) return p;
  return std::nullopt;
}

std::string to_string(Polarity p) { return p == Polarity::Statement ? "statement" : "atom_truth"; }

std::optional<Polarity> parse_polarity(std::string_view name) {
  const auto key = squash(name);
  if (key == "statement") return Polarity::Statement;
  if (key == "atomtruth") return Polarity::AtomTruth;
  return std::nullopt;
}

std::string to_string(ArtifactKind k) {
  switch (k) {
    case ArtifactKind::Translation: return "translation";
    case ArtifactKind::Plan: return "plan";
    case ArtifactKind::Reasoning: return "reasoning";
    case ArtifactKind::Verdict: return "verdict";
    case ArtifactKind::Answer: return "answer";
  }
  return "?";
}

std::string to_json_line(const RunRecord& r) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    stages.push_back({{"stage", to_string(s.stage)},
                      {"prompt", s.prompt},
                      {"response", s.response},
                      {"artifact", to_string(s.artifact)},
                      {"parsed", s.parsed},
                      {"diagnostics", s.diagnostics},
                      {"canonical", s.canonical},
                      {"label", prediction_json(s.label)},
                      {"prompt_tokens", s.prompt_tokens},
                      {"completion_tokens", s.completion_tokens},
                      {"backend", s.backend}});
  }
  json j = {{"id", r.id},
            {"dataset", corpus::to_string(r.dataset)},
            {"method", to_string(r.method)},
            {"gold", logic::to_string(r.gold)},
            {"depth", r.depth ? json(*r.depth) : json(nullptr)},
            {"stages", stages},
            {"executed", r.executed},
            {"label", prediction_json(r.label)},
            {"status", r.status == RunStatus::Ok ? "ok" : "error"},
            {"error", r.error},
            {"engine_result", r.engine_result},
            {"fallback", r.fallback_used ? json(to_string(*r.fallback_used)) : json(nullptr)},
            {"wall_time", r.wall_time}};
  return j.dump();
}

RunRecord run_record_from_json(std::string_view line) {
  try {
    const json j = json::parse(line);
    RunRecord r;
    r.id = j.at("id").get<std::string>();
    r.dataset = parse_enum<corpus::Dataset>(j.at("dataset"), corpus::parse_dataset, "dataset");
    r.method = parse_enum<Method>(j.at("method"), parse_method, "method");
    auto gold = logic::parse_label(j.at("gold").get<std::string>());
    if (!gold) throw RecordError("unknown gold label");
    r.gold = *gold;
    if (j.contains("depth") && !j["depth"].is_null()) r.depth = j["depth"].get<int>();
    for (const auto& s : j.at("stages")) {
      StageRecord st;
      st.stage = parse_enum<Stage>(s.at("stage"), parse_stage, "stage");
      st.prompt = s.at("prompt").get<std::string>();
      st.response = s.at("response").get<std::string>();
      st.artifact = parse_enum<ArtifactKind>(s.at("artifact"), parse_artifact, "artifact");
      st.parsed = s.at("parsed").get<bool>();
      st.diagnostics = s.at("diagnostics").get<std::vector<std::string>>();
      st.canonical = s.at("canonical").get<std::string>();
      st.label = prediction_from(s.at("label"));
      st.prompt_tokens = s.at("prompt_tokens").get<long>();
      st.completion_tokens = s.at("completion_tokens").get<long>();
      st.backend = s.at("backend").get<std::string>();
      r.stages.push_back(std::move(st));
    }
    r.executed = j.at("executed").get<bool>();
    r.label = prediction_from(j.at("label"));
    const auto status = j.at("status").get<std::string>();
    if (status != "ok" && status != "error") throw RecordError("unknown status '" + status + "'");
    r.status = status == "ok" ? RunStatus::Ok : RunStatus::Error;
    r.error = j.value("error", "");
    r.engine_result = j.value("engine_result", "");
    if (j.contains("fallback") && !j["fallback"].is_null())
      r.fallback_used = parse_enum<FallbackPolicy>(j["fallback"], parse_fallback, "fallback policy");
    r.wall_time = j.value("wall_time", 0.0);
    return r;
  } catch (const json::exception& e) {
    throw RecordError(std::string("malformed run record: ") + e.what());
  }
}

std::string to_jsonl(const std::vector<RunRecord>& records) {
  std::string out;
  for (const auto& r : records) out += to_json_line(r) + "\n";
  return out;
}

std::vector<RunRecord> read_jsonl(std::string_view text) {
  std::vector<RunRecord> out;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(run_record_from_json(line));
    } catch (const RecordError& e) {
      throw RecordError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<RunRecord> read_jsonl_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RecordError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_jsonl(ss.str());
}

FileConfig parse_config(std::string_view text) {
  FileConfig c;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw RecordError("config is not a JSON object");
    for (const auto& [key, v] : j.items()) {
      if (key == "method") c.method = parse_enum<Method>(v, parse_method, "method");
      else if (key == "model") c.run.model = v.get<std::string>();
      else if (key == "endpoint") c.endpoint = v.get<std::string>();
      else if (key == "temperature") c.run.temperature = v.get<double>();
      else if (key == "max_tokens") c.run.max_tokens = v.get<int>();
      else if (key == "demos") c.run.demo_count = v.get<std::size_t>();
      else if (key == "fallback") c.run.fallback = parse_enum<FallbackPolicy>(v, parse_fallback, "fallback policy");
      else if (key == "seed") c.run.seed = v.get<std::uint64_t>();
      else if (key == "parallelism") c.run.parallelism = v.get<std::size_t>();
      else if (key == "prontoqa_polarity") c.run.prontoqa_polarity = parse_enum<Polarity>(v, parse_polarity, "polarity");
      else if (key == "templates") c.run.template_dir = v.get<std::string>();
      else if (key == "api_key_env") c.api_key_env = v.get<std::string>();
      else if (key == "dataset") c.dataset = v.get<std::string>();
      else if (key == "input") c.input = v.get<std::string>();
      else if (key == "cache_dir") c.cache_dir = v.get<std::string>();
      else if (key == "out") c.out = v.get<std::string>();
      else throw RecordError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw RecordError(std::string("malformed config: ") + e.what());
  }
  if (c.run.parallelism == 0) throw RecordError("parallelism must be at least 1");
  return c;
}

FileConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RecordError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace symbcot::pipeline
