#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/logic/label.hpp"
#include "symbcot/pipeline/records.hpp"

namespace symbcot::evalkit {

class IdMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Golds = std::map<std::string, logic::Label>;

// Golds taken from the records themselves.
Golds golds_of(const std::vector<pipeline::RunRecord>& records);

// Fraction of records whose label equals the gold for its id; Undecided is
// wrong. Throws IdMismatch for a record id without gold or a repeated id.
// Empty input scores 0.
double accuracy(const std::vector<pipeline::RunRecord>& records, const Golds& golds);

// executed / total; an empty set is 1.0 and sets `warning`.
double execution_rate(const std::vector<pipeline::RunRecord>& records, std::string* warning = nullptr);

// Rows are gold labels, columns predictions; Undecided predictions are
// counted per gold label in a separate column.
struct Confusion {
  logic::LabelSpace labels;
  std::vector<std::vector<long>> counts;
  std::vector<long> undecided;

  explicit Confusion(logic::LabelSpace labels = {});
  long& at(logic::Label gold, logic::Label predicted);
  long at(logic::Label gold, logic::Label predicted) const;
  std::size_t index_of(logic::Label l) const;  // throws std::out_of_range
  long total() const;
};

// Label set in canonical order: every gold and predicted label seen, widened
// to the full true/false(/unknown) space when any truth label appears.
Confusion confusion_of(const std::vector<pipeline::RunRecord>& records, const Golds& golds);

struct PerLabel {
  logic::Label label = logic::Label::True;
  double precision = 0, recall = 0, f1 = 0;
  // Set where the denominator was zero (the value is then 0).
  bool precision_undefined = false, recall_undefined = false;
  long support = 0;  // gold count, Undecided included
};

struct LabelMetrics {
  std::vector<PerLabel> per_label;
  double macro_precision = 0, macro_recall = 0, macro_f1 = 0;
};

// Recall's denominator is the whole gold row, so Undecided answers count as
// misses.
LabelMetrics label_metrics(const Confusion& confusion);

// Accuracy per reasoning depth over records that carry one.
std::map<int, double> depth_breakdown(const std::vector<pipeline::RunRecord>& records, const Golds& golds);

// Share of each prediction, keyed by label name with "Undecided" for none.
std::map<std::string, double> prediction_distribution(const std::vector<pipeline::RunRecord>& records);

// Mean completion tokens per stage name over the stages present.
std::map<std::string, double> stage_output_lengths(const std::vector<pipeline::RunRecord>& records);

enum class Verdict { Faithful, Unfaithful, False };
std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

struct Annotation {
  std::string problem_id, annotator_id;
  Verdict verdict = Verdict::Faithful;
};

class AnnotationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV with header `problem_id,annotator_id,verdict`. Throws AnnotationError
// with the line number.
std::vector<Annotation> parse_annotations(std::string_view csv);

struct FaithfulnessTally {
  long faithful = 0, unfaithful = 0, false_ = 0;
  // Problems whose top verdict is tied; they are left out of the counts.
  std::vector<std::string> even_split;
  friend bool operator==(const FaithfulnessTally&, const FaithfulnessTally&) = default;
};

// Majority vote per problem (the strictly most frequent verdict), then counts.
FaithfulnessTally faithfulness_tally(const std::vector<Annotation>& annotations);

}  // namespace symbcot::evalkit
