#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/corpus/problem.hpp"
#include "symbcot/logic/label.hpp"
#include "symbcot/pipeline/templates.hpp"

namespace symbcot::pipeline {

enum class Method { Naive, CoT, SymbCoT, SymbCoTNoVerifier, TranslateThenSolve };
std::string to_string(Method m);
std::optional<Method> parse_method(std::string_view name);  // case- and punctuation-insensitive
// LLM stages run by a method, in order (TranslateThenSolve: Translator only).
const std::vector<Stage>& stages_of(Method m);

enum class FallbackPolicy { Abstain, Random, CotBackup };
std::string to_string(FallbackPolicy p);  // "abstain", "random", "cot_backup"
std::optional<FallbackPolicy> parse_fallback(std::string_view name);

// How a ProntoQA answer relates to the query literal: Statement reads the
// label as the truth of the natural-language statement (the literal as
// written); AtomTruth reads it as the truth of the underlying atom, so a
// negative query literal swaps True and False.
enum class Polarity { Statement, AtomTruth };
std::string to_string(Polarity p);
std::optional<Polarity> parse_polarity(std::string_view name);

enum class ArtifactKind { Translation, Plan, Reasoning, Verdict, Answer };
std::string to_string(ArtifactKind k);

struct StageRecord {
  Stage stage = Stage::Translator;
  std::string prompt;    // flattened messages, demos included
  std::string response;
  ArtifactKind artifact = ArtifactKind::Translation;
  // Translator: the block parsed with no error diagnostics.
  bool parsed = false;
  std::vector<std::string> diagnostics;
  std::string canonical;  // canonical rendering of a parsed translation
  logic::Prediction label;
  long prompt_tokens = 0;
  long completion_tokens = 0;
  std::string backend;

  friend bool operator==(const StageRecord&, const StageRecord&) = default;
};

enum class RunStatus { Ok, Error };

struct RunRecord {
  std::string id;
  corpus::Dataset dataset = corpus::Dataset::ProntoQA;
  Method method = Method::SymbCoT;
  logic::Label gold = logic::Label::Unknown;
  std::optional<int> depth;
  std::vector<StageRecord> stages;
  // Symbolic path parsed and ran (TranslateThenSolve) or an answer was
  // extracted (LLM-only methods).
  bool executed = false;
  logic::Prediction label;
  RunStatus status = RunStatus::Ok;
  std::string error;
  std::string engine_result;  // TranslateThenSolve: the engine's verdict or failure
  std::optional<FallbackPolicy> fallback_used;
  double wall_time = 0.0;  // seconds

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_json_line(const RunRecord& r);  // no trailing newline
RunRecord run_record_from_json(std::string_view line);  // throws RecordError
std::string to_jsonl(const std::vector<RunRecord>& records);
std::vector<RunRecord> read_jsonl(std::string_view text);  // throws RecordError with the line number
std::vector<RunRecord> read_jsonl_file(const std::filesystem::path& path);

struct RunConfig {
  std::string model = "gpt-4";
  double temperature = 0.0;
  int max_tokens = 2048;
  std::size_t demo_count = 2;
  FallbackPolicy fallback = FallbackPolicy::Abstain;
  std::uint64_t seed = 0;
  Polarity prontoqa_polarity = Polarity::Statement;
  std::size_t parallelism = 1;
  std::optional<std::filesystem::path> template_dir;
};

// The JSON run configuration file.
struct FileConfig {
  RunConfig run;
  std::optional<Method> method;
  std::string endpoint;
  // CLI plumbing; empty when absent.
  std::string api_key_env;
  std::string dataset;
  std::string input;
  std::string cache_dir;
  std::string out;
};

// Unknown keys and ill-typed values are errors. Throws RecordError.
FileConfig parse_config(std::string_view json_text);
FileConfig load_config(const std::filesystem::path& path);

}  // namespace symbcot::pipeline
