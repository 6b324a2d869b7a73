#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace symbcot::logic {

// A first-order term: a variable, a constant, or a function application.
class Term {
 public:
  enum class Kind { Variable, Constant, Function };

  static Term variable(std::string name);
  static Term constant(std::string name);
  // Throws std::invalid_argument when args is empty.
  static Term function(std::string name, std::vector<Term> args);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  bool is_constant() const noexcept { return kind_ == Kind::Constant; }
  bool is_ground() const;

  // Adds every variable name occurring in this term.
  void collect_variables(std::set<std::string>& out) const;
  bool mentions(const std::string& var) const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(Kind kind, std::string name, std::vector<Term> args);

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

std::string to_string(const Term& t);

}  // namespace symbcot::logic
