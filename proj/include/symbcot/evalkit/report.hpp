#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "symbcot/evalkit/metrics.hpp"

namespace symbcot::evalkit {

struct DatasetReport {
  std::string dataset;
  long total = 0, correct = 0, undecided = 0, executed = 0;
  double accuracy = 0, execution_rate = 1;
  Confusion confusion;
  LabelMetrics metrics;
  std::map<int, double> depth_breakdown;
  std::map<std::string, double> prediction_distribution;
  std::map<std::string, double> stage_output_lengths;
};

struct EvalReport {
  std::string method;  // "mixed" when records disagree
  std::vector<DatasetReport> datasets;  // alphabetical
  std::optional<FaithfulnessTally> faithfulness;
  std::vector<std::string> warnings;
};

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scores records per dataset against `golds`. Throws IdMismatch.
EvalReport evaluate(const std::vector<pipeline::RunRecord>& records, const Golds& golds,
                    std::optional<FaithfulnessTally> faithfulness = std::nullopt);

enum class Format { Markdown, Csv, Json };
std::optional<Format> parse_format(std::string_view name);

// A fraction as a percentage with two decimals: 0.825 → "82.50".
std::string percent(double fraction);

// Deterministic: datasets alphabetical, labels in canonical order.
std::string render_report(const EvalReport& report, Format format);

// Inverse of the JSON rendering. Throws ReportError.
EvalReport report_from_json(std::string_view text);
EvalReport load_report(const std::filesystem::path& path);

// One accuracy table, a row per report (method) and a column per dataset,
// followed by the execution rates.
std::string render_comparison(const std::vector<EvalReport>& reports);

}  // namespace symbcot::evalkit
