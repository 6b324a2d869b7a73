#include "symbcot/inference/propositional.hpp"

#include <algorithm>
#include <set>

#include "symbcot/syntax/fol.hpp"

namespace symbcot::inference {

using logic::Formula;

namespace {

void collect(const Formula& f, std::vector<Formula>& out, std::set<Formula>& seen) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (seen.insert(f).second) out.push_back(f);
      return;
    case Formula::Kind::Not: return collect(f.operand(), out, seen);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: throw std::logic_error("quantified formula is not propositional");
    default:
      collect(f.lhs(), out, seen);
      collect(f.rhs(), out, seen);
  }
}

}  // namespace

std::vector<Formula> atoms_of(const std::vector<Formula>& formulas) {
  std::vector<Formula> out;
  std::set<Formula> seen;
  for (const auto& f : formulas) collect(f, out, seen);
  return out;
}

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = v.find(f);
      if (it == v.end()) throw std::logic_error("unassigned atom " + syntax::print_formula(f));
      return it->second;
    }
    case Formula::Kind::Not: return !evaluate(f.operand(), v);
    case Formula::Kind::And: return evaluate(f.lhs(), v) && evaluate(f.rhs(), v);
    case Formula::Kind::Or: return evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    case Formula::Kind::Xor: return evaluate(f.lhs(), v) != evaluate(f.rhs(), v);
    case Formula::Kind::Implies: return !evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    case Formula::Kind::Iff: return evaluate(f.lhs(), v) == evaluate(f.rhs(), v);
    default: throw std::logic_error("quantified formula is not propositional");
  }
}

Entailment entails(const std::vector<Formula>& premises, const Formula& conclusion,
                   std::size_t max_atoms) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  auto atoms = atoms_of(all);
  if (atoms.size() > max_atoms)
    throw TooManyAtoms("truth table over " + std::to_string(atoms.size()) + " atoms exceeds limit of " +
                       std::to_string(max_atoms));
  Valuation v;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << atoms.size()); ++bits) {
    for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = (bits >> i) & 1;
    bool premises_hold = std::all_of(premises.begin(), premises.end(),
                                     [&](const Formula& p) { return evaluate(p, v); });
    if (premises_hold && !evaluate(conclusion, v)) return {false, v};
  }
  return {true, std::nullopt};
}

std::string describe(const Valuation& v) {
  std::vector<std::pair<std::string, bool>> items;
  for (const auto& [atom, value] : v) items.emplace_back(syntax::print_formula(atom), value);
  std::sort(items.begin(), items.end());
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += ", ";
    out += name + (value ? "=true" : "=false");
  }
  return out;
}

}  // namespace symbcot::inference
