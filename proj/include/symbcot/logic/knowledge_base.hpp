#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symbcot/logic/formula.hpp"

namespace symbcot::logic {

// An atom tagged true or false, as in `Quiet(Anne, True)`. Facts are ground;
// rule patterns may contain variables.
struct SignedLiteral {
  std::string predicate;
  std::vector<Term> args;
  bool polarity = true;

  bool is_ground() const;
  SignedLiteral negated() const { return {predicate, args, !polarity}; }
  Formula to_formula() const;

  friend bool operator==(const SignedLiteral&, const SignedLiteral&) = default;
  friend std::strong_ordering operator<=>(const SignedLiteral& a, const SignedLiteral& b);
};

// Lowers `P(args)` / `¬P(args)` to a signed literal. Returns false for any
// other shape.
bool literal_from_formula(const Formula& f, SignedLiteral& out);

// Horn rule over signed literals. Variables are implicitly universal.
struct Rule {
  std::vector<SignedLiteral> body;
  SignedLiteral head;

  std::set<std::string> variables() const;
  friend bool operator==(const Rule&, const Rule&) = default;
};

class KnowledgeBaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Both polarities of a ground literal are asserted or derivable.
class InconsistencyError : public KnowledgeBaseError {
 public:
  explicit InconsistencyError(SignedLiteral literal);
  const SignedLiteral& literal() const noexcept { return literal_; }

 private:
  SignedLiteral literal_;
};

class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  // Validates ground facts, rule range restriction, function-free arguments,
  // consistent arities and the absence of contradictory facts.
  KnowledgeBase(std::vector<SignedLiteral> facts, std::vector<Rule> rules);

  const std::set<SignedLiteral>& facts() const noexcept { return facts_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::map<std::string, std::size_t>& predicate_arities() const noexcept { return arities_; }

  KnowledgeBase with_fact(SignedLiteral fact) const;
  KnowledgeBase with_rule(Rule rule) const;

 private:
  std::set<SignedLiteral> facts_;
  std::vector<Rule> rules_;
  std::map<std::string, std::size_t> arities_;
};

// `P(a, b)` or `¬P(a, b)`.
std::string to_string(const SignedLiteral& lit);
// `P(a, b, True)` as used in ProofWriter-style translations.
std::string to_polarity_string(const SignedLiteral& lit);
std::string to_string(const Rule& rule);

}  // namespace symbcot::logic
