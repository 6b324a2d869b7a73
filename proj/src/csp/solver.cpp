#include "symbcot/csp/solver.hpp"

#include <algorithm>

#include "symbcot/syntax/lines.hpp"

namespace symbcot::csp {

namespace {

class Search {
 public:
  Search(const CspModel& model, std::size_t limit) : model_(model), limit_(limit), values_(model.variables.size(), 0) {
    // Each constraint is checked as soon as its last variable is assigned.
    checks_.resize(model.variables.size() + 1);
    for (const auto& c : model.constraints) {
      std::size_t depth = 0;
      for (const auto& v : referenced_variables(c.expr)) {
        auto idx = model.index_of(v);
        if (!idx) throw std::invalid_argument("undeclared variable " + v);
        depth = std::max(depth, *idx + 1);
      }
      checks_[depth].push_back(&c.expr);
    }
  }

  SolveResult run() {
    for (const auto* e : checks_[0])
      if (!evaluate(*e, model_, values_)) return std::move(result_);
    assign(0);
    return std::move(result_);
  }

 private:
  bool assign(std::size_t i) {
    if (i == model_.variables.size()) {
      if (result_.solutions.size() == limit_) {
        result_.truncated = true;
        return false;
      }
      result_.solutions.push_back(values_);
      return true;
    }
    for (int v : model_.variables[i].domain) {
      values_[i] = v;
      bool ok = true;
      for (const auto* e : checks_[i + 1]) {
        if (!evaluate(*e, model_, values_)) {
          ok = false;
          break;
        }
      }
      if (ok && !assign(i + 1)) return false;
    }
    return true;
  }

  const CspModel& model_;
  std::size_t limit_;
  Assignment values_;
  std::vector<std::vector<const ConstraintExpr*>> checks_;
  SolveResult result_;
};

}  // namespace

SolveResult solve_all(const CspModel& model, std::size_t limit) {
  double space = 1;
  for (const auto& v : model.variables) space *= static_cast<double>(std::max<std::size_t>(v.domain.size(), 1));
  if (space > kMaxSearchSpace)
    throw SearchSpaceTooLarge("search space of " + std::to_string(static_cast<long long>(space)) +
                              " assignments exceeds the limit");
  return Search(model, limit).run();
}

std::string to_string(Modality m) {
  switch (m) {
    case Modality::MustBeTrue: return "must be true";
    case Modality::MayBeTrue: return "may be true";
    case Modality::CannotBeTrue: return "cannot be true";
  }
  return "?";
}

const OptionVerdict* QueryVerdict::find(char letter) const {
  for (const auto& o : options)
    if (o.letter == letter) return &o;
  return nullptr;
}

QueryVerdict evaluate_queries(const CspModel& model) {
  for (const auto& q : model.queries)
    for (const auto& v : referenced_variables(q.expr))
      if (!model.index_of(v)) throw std::invalid_argument("undeclared variable " + v);
  auto solved = solve_all(model);
  if (solved.solutions.empty()) throw NoSolutions();
  QueryVerdict out;
  out.solution_count = solved.solutions.size();
  for (const auto& q : model.queries) {
    OptionVerdict o{q.letter, Modality::CannotBeTrue, 0};
    for (const auto& s : solved.solutions)
      if (evaluate(q.expr, model, s)) ++o.satisfied;
    if (o.satisfied == out.solution_count) o.modality = Modality::MustBeTrue;
    else if (o.satisfied > 0) o.modality = Modality::MayBeTrue;
    out.options.push_back(o);
  }
  return out;
}

std::string to_string(QuestionMode m) {
  switch (m) {
    case QuestionMode::MustBeTrue: return "must be true";
    case QuestionMode::CouldBeTrue: return "could be true";
    case QuestionMode::CannotBeTrue: return "cannot be true";
  }
  return "?";
}

QuestionMode detect_question_mode(std::string_view question) {
  const std::string q = syntax::to_lower(question);
  auto has = [&](std::string_view s) { return q.find(s) != std::string::npos; };
  if (has("cannot be true") || has("can't be true") || has("must be false") || has("could be true except") ||
      has("could be true, except") || has("could not be true") ||
      has("can not be true"))
    return QuestionMode::CannotBeTrue;
  if (has("must be true") || has("must also be true")) return QuestionMode::MustBeTrue;
  if (has("could be true") || has("can be true") || has("may be true") || has("could also be true") ||
      has("might be true") || has("possible"))
    return QuestionMode::CouldBeTrue;
  return QuestionMode::MustBeTrue;
}

Selection select_answer(const QueryVerdict& verdict, QuestionMode mode) {
  Selection out;
  for (const auto& o : verdict.options) {
    bool match = false;
    switch (mode) {
      case QuestionMode::MustBeTrue: match = o.modality == Modality::MustBeTrue; break;
      case QuestionMode::CouldBeTrue: match = o.modality != Modality::CannotBeTrue; break;
      case QuestionMode::CannotBeTrue: match = o.modality == Modality::CannotBeTrue; break;
    }
    if (match) out.candidates.push_back(o.letter);
  }
  if (out.candidates.size() == 1) out.answer = logic::option_letter(out.candidates.front());
  return out;
}

}  // namespace symbcot::csp
