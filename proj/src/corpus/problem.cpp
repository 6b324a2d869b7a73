#include "symbcot/corpus/problem.hpp"

#include <cctype>

namespace symbcot::corpus {

std::string to_string(Dataset d) {
  switch (d) {
    case Dataset::ProntoQA: return "ProntoQA";
    case Dataset::ProofWriter: return "ProofWriter";
    case Dataset::FOLIO: return "FOLIO";
    case Dataset::LogicalDeduction: return "LogicalDeduction";
    case Dataset::ARLSAT: return "AR-LSAT";
  }
  return "?";
}

std::optional<Dataset> parse_dataset(std::string_view name) {
  std::string key;
  for (char c : name)
    if (std::isalnum(static_cast<unsigned char>(c))) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Dataset d : all_datasets()) {
    std::string canon;
    for (char c : to_string(d))
      if (std::isalnum(static_cast<unsigned char>(c))) canon += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == canon) return d;
  }
  return std::nullopt;
}

Family family_of(Dataset d) {
  return d == Dataset::LogicalDeduction || d == Dataset::ARLSAT ? Family::CSP : Family::FOL;
}

std::size_t expected_size(Dataset d) {
  switch (d) {
    case Dataset::ProntoQA: return 500;
    case Dataset::ProofWriter: return 600;
    case Dataset::FOLIO: return 204;
    case Dataset::LogicalDeduction: return 300;
    case Dataset::ARLSAT: return 230;
  }
  return 0;
}

const std::vector<Dataset>& all_datasets() {
  static const std::vector<Dataset> all = {Dataset::ProntoQA, Dataset::ProofWriter, Dataset::FOLIO,
                                           Dataset::LogicalDeduction, Dataset::ARLSAT};
  return all;
}

logic::LabelSpace label_space(Dataset d, std::size_t option_count) {
  switch (d) {
    case Dataset::ProntoQA: return logic::true_false_space();
    case Dataset::ProofWriter:
    case Dataset::FOLIO: return logic::true_false_unknown_space();
    default: return logic::option_space(option_count);
  }
}

logic::LabelSpace label_space(const Problem& p) { return label_space(p.dataset, p.options.size()); }

std::string surface_label(Dataset d, logic::Label label) {
  if (label == logic::Label::Unknown && d == Dataset::FOLIO) return "Uncertain";
  return logic::to_string(label);
}

}  // namespace symbcot::corpus
