#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/logic/formula.hpp"

namespace symbcot::logic {

enum class InferenceRule {
  ModusPonens,
  ModusTollens,
  UniversalInstantiation,
  ExistentialInstantiation,
  AndElim,
  AndIntro,
  OrIntro,
  DisjunctiveSyllogism,
  HypotheticalSyllogism,
  Contradiction,
  IffElim,
};

inline constexpr std::array<InferenceRule, 11> kAllInferenceRules = {
    InferenceRule::ModusPonens,          InferenceRule::ModusTollens,
    InferenceRule::UniversalInstantiation, InferenceRule::ExistentialInstantiation,
    InferenceRule::AndElim,              InferenceRule::AndIntro,
    InferenceRule::OrIntro,              InferenceRule::DisjunctiveSyllogism,
    InferenceRule::HypotheticalSyllogism, InferenceRule::Contradiction,
    InferenceRule::IffElim,
};

class UnknownRuleError : public std::invalid_argument {
 public:
  explicit UnknownRuleError(const std::string& name)
      : std::invalid_argument("unknown inference rule: " + name) {}
};

std::string to_string(InferenceRule rule);
// Accepts "ModusPonens", "Modus Ponens", "modus_ponens" and similar spellings.
// Throws UnknownRuleError.
InferenceRule parse_inference_rule(std::string_view name);

struct ProofStep {
  std::vector<Formula> premises;
  InferenceRule rule;
  Formula conclusion;
};

}  // namespace symbcot::logic
