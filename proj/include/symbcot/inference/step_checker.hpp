#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/logic/formula.hpp"
#include "symbcot/logic/proof.hpp"

namespace symbcot::inference {

class SchemaArityMismatch : public std::invalid_argument {
 public:
  SchemaArityMismatch(logic::InferenceRule rule, std::size_t given);
  logic::InferenceRule rule() const noexcept { return rule_; }

 private:
  logic::InferenceRule rule_;
};

struct StepVerdict {
  bool valid = false;
  logic::InferenceRule rule_checked{};
  // Matched schema when valid; fallacy name and/or countermodel otherwise.
  std::string reason;
};

// Accepted premise counts, e.g. {2} for modus ponens or {1, 2} for IffElim.
std::vector<std::size_t> premise_counts(logic::InferenceRule rule);

// Checks one derivation step against the named rule's schema, up to
// alpha-equivalence and first-order matching. Propositional steps are also
// confirmed by truth table. Premise order does not matter.
StepVerdict check_step(const std::vector<logic::Formula>& premises, logic::InferenceRule rule,
                       const logic::Formula& conclusion);

// As above with the rule given by name; throws logic::UnknownRuleError.
StepVerdict check_step(const std::vector<logic::Formula>& premises, std::string_view rule,
                       const logic::Formula& conclusion);

inline StepVerdict check_step(const logic::ProofStep& step) {
  return check_step(step.premises, step.rule, step.conclusion);
}

}  // namespace symbcot::inference
