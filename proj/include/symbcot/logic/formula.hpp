#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "symbcot/logic/term.hpp"

namespace symbcot::logic {

// Immutable first-order formula. Copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Xor, Implies, Iff, ForAll, Exists };

  // Surface symbol of an implication. Rules are usually written with `⇒` and
  // formulas with `→`; both denote the same connective, the style only
  // affects printing.
  enum class ArrowStyle { Arrow, DoubleArrow };

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula exclusive_or(Formula a, Formula b);
  static Formula implication(Formula a, Formula b, ArrowStyle style = ArrowStyle::Arrow);
  static Formula biconditional(Formula a, Formula b);
  static Formula binary(Kind kind, Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula quantified(Kind kind, std::string var, Formula body);

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_binary() const noexcept;
  bool is_quantifier() const noexcept;

  // Atom accessors.
  const std::string& predicate() const;
  const std::vector<Term>& args() const;
  // Not accessor.
  const Formula& operand() const;
  // Binary connective accessors.
  const Formula& lhs() const;
  const Formula& rhs() const;
  ArrowStyle arrow_style() const noexcept;
  // Quantifier accessors.
  const std::string& variable() const;
  const Formula& body() const;

  // Syntactic equality. Arrow style is presentation only and is ignored.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

const char* kind_name(Formula::Kind kind);

std::set<std::string> free_variables(const Formula& f);

// Replaces free occurrences of `var` by `t`, renaming bound variables that
// would capture a variable of `t`.
Formula substitute(const Formula& f, const std::string& var, const Term& t);

// Equality up to consistent renaming of bound variables.
bool alpha_equal(const Formula& a, const Formula& b);

// Every constant name appearing in f, including inside function terms.
std::set<std::string> constants(const Formula& f);

// Maximum nesting depth; an atom has depth 1.
std::size_t depth(const Formula& f);

// Collects predicate arities. Returns false and names the offending predicate
// in `conflict` if some predicate is used with two arities.
bool collect_arities(const Formula& f, std::map<std::string, std::size_t>& arities,
                     std::string* conflict = nullptr);

// True when the formula has no quantifiers and every atom is ground.
bool is_propositional(const Formula& f);

}  // namespace symbcot::logic
