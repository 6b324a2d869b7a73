#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/logic/label.hpp"

namespace symbcot::corpus {

enum class Dataset { ProntoQA, ProofWriter, FOLIO, LogicalDeduction, ARLSAT };
enum class Family { FOL, CSP };

std::string to_string(Dataset d);  // "ProntoQA", ..., "AR-LSAT"
std::optional<Dataset> parse_dataset(std::string_view name);  // case- and punctuation-insensitive
Family family_of(Dataset d);
// Published test-split sizes.
std::size_t expected_size(Dataset d);
const std::vector<Dataset>& all_datasets();

struct Option {
  char letter = 'A';
  std::string text;
  friend bool operator==(const Option&, const Option&) = default;
};

struct Problem {
  std::string id;
  Dataset dataset = Dataset::ProntoQA;
  std::string context;
  std::string question;
  std::vector<Option> options;  // empty for true/false/unknown datasets
  logic::Label gold = logic::Label::Unknown;
  std::optional<int> depth;     // ProofWriter only
  // Hand-checked symbolic translation (mini-corpus only).
  std::string translation;

  Family family() const { return family_of(dataset); }
  friend bool operator==(const Problem&, const Problem&) = default;
};

// The labels a problem may take: {True, False} for ProntoQA, with Unknown for
// ProofWriter and FOLIO, and one letter per option otherwise.
logic::LabelSpace label_space(const Problem& p);
logic::LabelSpace label_space(Dataset d, std::size_t option_count);

// Surface form of a label in a dataset's prompts ("Uncertain" for FOLIO).
std::string surface_label(Dataset d, logic::Label label);

}  // namespace symbcot::corpus
