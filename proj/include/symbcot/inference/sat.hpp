#pragma once

#include <optional>
#include <vector>

namespace symbcot::inference {

// CNF over variables 1..num_vars; a literal is ±variable.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int fresh() { return ++num_vars; }
};

// DPLL with unit propagation. Returns a model (index 0 unused) when
// satisfiable.
std::optional<std::vector<bool>> solve_sat(const Cnf& cnf);

}  // namespace symbcot::inference
