#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symbcot/logic/formula.hpp"

namespace symbcot::inference {

class TooManyAtoms : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truth assignment keyed by atom; atoms are ground and compared structurally.
using Valuation = std::map<logic::Formula, bool>;

// Distinct atoms of quantifier-free formulas, in first-occurrence order.
std::vector<logic::Formula> atoms_of(const std::vector<logic::Formula>& formulas);

// Classical evaluation of a quantifier-free formula. Throws std::logic_error
// on quantifiers or atoms missing from `v`.
bool evaluate(const logic::Formula& f, const Valuation& v);

struct Entailment {
  bool entailed = false;
  // A valuation making every premise true and the conclusion false.
  std::optional<Valuation> countermodel;
};

// Truth-table entailment over at most `max_atoms` atoms (TooManyAtoms beyond).
Entailment entails(const std::vector<logic::Formula>& premises, const logic::Formula& conclusion,
                   std::size_t max_atoms = 12);

// "A=false, B=true", atoms sorted by printed form.
std::string describe(const Valuation& v);

}  // namespace symbcot::inference
