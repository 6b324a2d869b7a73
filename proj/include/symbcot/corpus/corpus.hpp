#pragma once

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "symbcot/corpus/problem.hpp"

namespace symbcot::corpus {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A record-level failure; the rest of the file still loads.
class RecordError : public CorpusError {
 public:
  RecordError(std::string record_id, std::string message)
      : CorpusError(record_id + ": " + message), record_id(std::move(record_id)) {}
  std::string record_id;
};

class MissingField : public RecordError {
 public:
  MissingField(std::string record_id, std::string field)
      : RecordError(std::move(record_id), "missing field '" + field + "'"), field(std::move(field)) {}
  std::string field;
};

class UnknownLabel : public RecordError {
 public:
  UnknownLabel(std::string record_id, std::string label)
      : RecordError(std::move(record_id), "unknown label '" + label + "'"), label(std::move(label)) {}
  std::string label;
};

struct LoadResult {
  std::vector<Problem> problems;
  // Per-record failures, in file order. Each is a MissingField,
  // UnknownLabel or plain RecordError.
  std::vector<std::shared_ptr<RecordError>> errors;
  std::vector<std::string> warnings;
};

// Reads a JSON array or JSON-lines file in either the Logic-LM record shape
// (id, context, question, options, answer) or the normalized shape
// (id, dataset, context, question, options, gold, depth). Throws CorpusError
// when the file cannot be read or is not JSON at all.
LoadResult load(Dataset dataset, const std::filesystem::path& path);
// Same, for text already in memory.
LoadResult load_text(Dataset dataset, std::string_view text);

// One normalized JSON object per line.
std::string to_json_line(const Problem& p);
std::string to_jsonl(const std::vector<Problem>& problems);

// The embedded worked-example problems, each with a hand-checked translation.
const std::vector<Problem>& mini_corpus();

}  // namespace symbcot::corpus
