#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/logic/formula.hpp"
#include "symbcot/logic/knowledge_base.hpp"
#include "symbcot/syntax/diagnostic.hpp"

namespace symbcot::syntax {

// Predicate name -> arity.
using Signature = std::map<std::string, std::size_t>;

// Parses Unicode or ASCII FOL notation.
//
// Connectives, tightest first: ¬ ∧ ∨ ⊕ → ↔. `→`, `⇒` and `↔` associate to the
// right, the others to the left. Quantifiers bind like negation, so a body
// with a binary connective needs parentheses: `∀x (P(x) → Q(x))`.
//
// An argument is a variable when it starts with `$`, is bound by an enclosing
// quantifier, or is one of x, y, z with an optional numeric subscript. Any
// other argument is a constant. A trailing `True`/`False` argument is a
// polarity marker: `P(a, False)` parses as `¬P(a)`.
Parsed<logic::Formula> parse_formula(std::string_view text, const Signature* signature = nullptr);

// Canonical Unicode rendering with minimal parentheses.
std::string print_formula(const logic::Formula& f);

// Renders a rule schema. With `fol_display` the implicit variables are bound
// by explicit universal quantifiers.
std::string print_rule(const logic::Rule& rule, bool fol_display = false);

// Surface spellings accepted for each connective; first entry is canonical.
struct ConnectiveAlias {
  std::string_view alias;
  std::string_view canonical;
};
const std::vector<ConnectiveAlias>& connective_aliases();

// True for names that parse as variables without a binder.
bool is_schema_variable_name(std::string_view name);

}  // namespace symbcot::syntax
