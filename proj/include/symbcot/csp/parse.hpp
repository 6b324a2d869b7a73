#pragma once

#include <string_view>

#include "symbcot/csp/model.hpp"
#include "symbcot/syntax/diagnostic.hpp"

namespace symbcot::csp {

// Parses a single constraint expression. Variable names are taken verbatim.
syntax::Parsed<ConstraintExpr> parse_constraint(std::string_view text);

// Parses a Domain / Variables / Constraints / Query block. Glosses after
// `:::` or `: ` are kept. Constraints over undeclared variables and a missing
// Query section are errors.
syntax::Parsed<CspModel> parse_csp_block(std::string_view text);

std::string print_csp_block(const CspModel& model);

}  // namespace symbcot::csp
