#include "symbcot/inference/sat.hpp"

#include <cstdlib>

namespace symbcot::inference {

namespace {

enum : signed char { kUnset = 0, kTrue = 1, kFalse = -1 };

class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : cnf_(cnf), value_(static_cast<std::size_t>(cnf.num_vars) + 1, kUnset) {
    occurs_.resize(value_.size());
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c)
      for (int lit : cnf.clauses[c]) occurs_[static_cast<std::size_t>(std::abs(lit))].push_back(c);
  }

  bool run() {
    for (const auto& clause : cnf_.clauses)
      if (clause.empty()) return false;
    return search();
  }

  std::vector<bool> model() const {
    std::vector<bool> m(value_.size(), false);
    for (std::size_t v = 1; v < value_.size(); ++v) m[v] = value_[v] == kTrue;
    return m;
  }

 private:
  signed char lit_value(int lit) const {
    signed char v = value_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : static_cast<signed char>(-v);
  }

  void assign(int lit) {
    value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? kTrue : kFalse;
    trail_.push_back(std::abs(lit));
  }

  // Propagates units until fixpoint; false on conflict.
  bool propagate(std::size_t from) {
    for (std::size_t head = from; head < trail_.size(); ++head) {
      const int var = trail_[head];
      for (std::size_t c : occurs_[static_cast<std::size_t>(var)]) {
        int unassigned = 0, count = 0;
        bool satisfied = false;
        for (int lit : cnf_.clauses[c]) {
          signed char v = lit_value(lit);
          if (v == kTrue) {
            satisfied = true;
            break;
          }
          if (v == kUnset) {
            unassigned = lit;
            ++count;
          }
        }
        if (satisfied) continue;
        if (count == 0) return false;
        if (count == 1) assign(unassigned);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<std::size_t>(trail_.back())] = kUnset;
      trail_.pop_back();
    }
  }

  bool search() {
    const std::size_t mark = trail_.size();
    // Initial units.
    for (const auto& clause : cnf_.clauses) {
      if (clause.size() != 1) continue;
      signed char v = lit_value(clause[0]);
      if (v == kFalse) return false;
      if (v == kUnset) assign(clause[0]);
    }
    if (!propagate(mark)) {
      undo(mark);
      return false;
    }
    return branch();
  }

  bool branch() {
    int var = 0;
    for (std::size_t v = 1; v < value_.size(); ++v) {
      if (value_[v] == kUnset && !occurs_[v].empty()) {
        var = static_cast<int>(v);
        break;
      }
    }
    if (var == 0) return true;
    for (int lit : {var, -var}) {
      const std::size_t mark = trail_.size();
      assign(lit);
      if (propagate(mark) && branch()) return true;
      undo(mark);
    }
    return false;
  }

  const Cnf& cnf_;
  std::vector<signed char> value_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<int> trail_;
};

}  // namespace

std::optional<std::vector<bool>> solve_sat(const Cnf& cnf) {
  Dpll solver(cnf);
  if (!solver.run()) return std::nullopt;
  return solver.model();
}

}  // namespace symbcot::inference
