#pragma once

#include <stdexcept>
#include <vector>

#include "symbcot/logic/formula.hpp"
#include "symbcot/logic/label.hpp"

namespace symbcot::inference {

// The formulas fall outside the function-free fragment whose existentials can
// be replaced by constants (no ∃ in the scope of ∀ after normalization).
class OutsideFragment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentPremises : public std::runtime_error {
 public:
  InconsistentPremises() : std::runtime_error("inconsistency: premises are unsatisfiable") {}
};

// Decides a statement against FOL premises by grounding over the finite
// Herbrand universe and SAT checking: True when premises ∧ ¬statement is
// unsatisfiable, False when premises ∧ statement is, Unknown otherwise.
// Free variables are read as universally quantified.
logic::Label decide_formula(const std::vector<logic::Formula>& premises,
                            const logic::Formula& statement);

// Satisfiability of a set of closed formulas in the same fragment.
bool satisfiable(const std::vector<logic::Formula>& formulas);

}  // namespace symbcot::inference
