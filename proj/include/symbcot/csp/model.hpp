#pragma once

#include <optional>
#include <string>
#include <vector>

namespace symbcot::csp {

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

// A variable or an integer, plus a constant offset: `x`, `3`, `x + 1`.
struct LinearTerm {
  std::optional<std::string> var;
  int offset = 0;

  static LinearTerm variable(std::string name, int offset = 0) { return {std::move(name), offset}; }
  static LinearTerm constant(int value) { return {std::nullopt, value}; }
  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct ConstraintExpr {
  enum class Kind { Compare, AbsDiff, AllDifferent, Not, And, Or, Implies, Bool };

  Kind kind = Kind::Bool;
  CompareOp op = CompareOp::Eq;
  LinearTerm lhs, rhs;                 // Compare: lhs op rhs
  std::string a, b;                    // AbsDiff: |a - b| op k
  int k = 0;
  std::vector<std::string> variables;  // AllDifferent
  std::vector<ConstraintExpr> children;
  bool value = true;                   // Bool

  static ConstraintExpr compare(LinearTerm lhs, CompareOp op, LinearTerm rhs);
  static ConstraintExpr abs_diff(std::string a, std::string b, CompareOp op, int k);
  // The common `|a - b| != k` form.
  static ConstraintExpr abs_diff_not_equal(std::string a, std::string b, int k) {
    return abs_diff(std::move(a), std::move(b), CompareOp::Ne, k);
  }
  static ConstraintExpr all_different(std::vector<std::string> vars);
  static ConstraintExpr negation(ConstraintExpr e);
  static ConstraintExpr conjunction(std::vector<ConstraintExpr> es);
  static ConstraintExpr disjunction(std::vector<ConstraintExpr> es);
  static ConstraintExpr implication(ConstraintExpr a, ConstraintExpr b);
  static ConstraintExpr boolean(bool v);

  friend bool operator==(const ConstraintExpr&, const ConstraintExpr&) = default;
};

struct CspVariable {
  std::string name;
  std::vector<int> domain;  // sorted, within 1..domain_size
  std::string gloss;
  friend bool operator==(const CspVariable&, const CspVariable&) = default;
};

struct GlossedConstraint {
  ConstraintExpr expr;
  std::string gloss;
  friend bool operator==(const GlossedConstraint&, const GlossedConstraint&) = default;
};

struct OptionQuery {
  char letter = 'A';
  ConstraintExpr expr;
  std::string gloss;
  friend bool operator==(const OptionQuery&, const OptionQuery&) = default;
};

struct CspModel {
  int domain_size = 0;
  // Verbatim endpoint glosses such as "1: oldest" and "3: newest".
  std::string domain_low_gloss, domain_high_gloss;
  std::vector<CspVariable> variables;
  std::vector<GlossedConstraint> constraints;
  std::vector<OptionQuery> queries;

  std::optional<std::size_t> index_of(const std::string& var) const;
  friend bool operator==(const CspModel&, const CspModel&) = default;
};

std::string to_string(CompareOp op);
std::string to_string(const LinearTerm& t);
// Canonical text accepted by the block parser.
std::string to_string(const ConstraintExpr& e);

// Variables referenced by an expression, in first-occurrence order.
std::vector<std::string> referenced_variables(const ConstraintExpr& e);

// Evaluates under a complete assignment indexed like model.variables.
bool evaluate(const ConstraintExpr& e, const CspModel& model, const std::vector<int>& values);

}  // namespace symbcot::csp
