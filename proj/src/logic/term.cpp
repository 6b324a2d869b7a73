#include "symbcot/logic/term.hpp"

#include <stdexcept>

namespace symbcot::logic {

Term::Term(Kind kind, std::string name, std::vector<Term> args)
    : kind_(kind), name_(std::move(name)), args_(std::move(args)) {
  if (name_.empty()) throw std::invalid_argument("term name must be non-empty");
}

Term Term::variable(std::string name) { return Term(Kind::Variable, std::move(name), {}); }

Term Term::constant(std::string name) { return Term(Kind::Constant, std::move(name), {}); }

Term Term::function(std::string name, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("function application needs arity >= 1: " + name);
  return Term(Kind::Function, std::move(name), std::move(args));
}

bool Term::is_ground() const {
  if (kind_ == Kind::Variable) return false;
  for (const auto& a : args_)
    if (!a.is_ground()) return false;
  return true;
}

void Term::collect_variables(std::set<std::string>& out) const {
  if (kind_ == Kind::Variable) {
    out.insert(name_);
    return;
  }
  for (const auto& a : args_) a.collect_variables(out);
}

bool Term::mentions(const std::string& var) const {
  if (kind_ == Kind::Variable) return name_ == var;
  for (const auto& a : args_)
    if (a.mentions(var)) return true;
  return false;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                b.args_.end());
}

std::string to_string(const Term& t) {
  if (t.kind() != Term::Kind::Function) return t.name();
  std::string out = t.name() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    out += to_string(t.args()[i]);
  }
  return out + ")";
}

}  // namespace symbcot::logic
