#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/csp/model.hpp"
#include "symbcot/logic/label.hpp"

namespace symbcot::csp {

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSolutions : public std::runtime_error {
 public:
  NoSolutions() : std::runtime_error("model has no solutions") {}
};

inline constexpr double kMaxSearchSpace = 1e7;

// Values in the order of model.variables.
using Assignment = std::vector<int>;

struct SolveResult {
  std::vector<Assignment> solutions;  // lexicographic in declaration order
  bool truncated = false;
};

// Every complete assignment satisfying all constraints, up to `limit`.
SolveResult solve_all(const CspModel& model, std::size_t limit = 1'000'000);

enum class Modality { MustBeTrue, MayBeTrue, CannotBeTrue };
std::string to_string(Modality m);

struct OptionVerdict {
  char letter = 'A';
  Modality modality = Modality::CannotBeTrue;
  std::size_t satisfied = 0;  // solutions in which the option holds
};

struct QueryVerdict {
  std::vector<OptionVerdict> options;
  std::size_t solution_count = 0;

  const OptionVerdict* find(char letter) const;
};

// Throws NoSolutions for an over-constrained model.
QueryVerdict evaluate_queries(const CspModel& model);

enum class QuestionMode { MustBeTrue, CouldBeTrue, CannotBeTrue };
std::string to_string(QuestionMode m);

// Keyword detection over the question text; MustBeTrue by default.
QuestionMode detect_question_mode(std::string_view question);

struct Selection {
  logic::Prediction answer;          // nullopt when zero or several options match
  std::vector<char> candidates;      // the matching options
};

Selection select_answer(const QueryVerdict& verdict, QuestionMode mode);

}  // namespace symbcot::csp
