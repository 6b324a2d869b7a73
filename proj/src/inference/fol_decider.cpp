#include "symbcot/inference/fol_decider.hpp"

#include <map>
#include <set>

#include "symbcot/inference/sat.hpp"

namespace symbcot::inference {

using logic::Formula;
using logic::Term;
using Kind = Formula::Kind;

namespace {

Formula close_universally(const Formula& f) {
  Formula out = f;
  auto free = logic::free_variables(f);
  for (auto it = free.rbegin(); it != free.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

// Negation normal form over {atom, ¬atom, ∧, ∨, ∀, ∃}.
Formula nnf(const Formula& f, bool negate) {
  auto lit = [&](const Formula& a) { return negate ? Formula::negation(a) : a; };
  auto iff = [&](const Formula& a, const Formula& b, bool neg) {
    if (!neg)
      return Formula::conjunction(Formula::disjunction(nnf(a, true), nnf(b, false)),
                                  Formula::disjunction(nnf(a, false), nnf(b, true)));
    return Formula::disjunction(Formula::conjunction(nnf(a, false), nnf(b, true)),
                                Formula::conjunction(nnf(a, true), nnf(b, false)));
  };
  switch (f.kind()) {
    case Kind::Atom: return lit(f);
    case Kind::Not: return nnf(f.operand(), !negate);
    case Kind::And:
      return negate ? Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Kind::Or:
      return negate ? Formula::conjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Kind::Implies:
      return negate ? Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), true))
                    : Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), false));
    case Kind::Iff: return iff(f.lhs(), f.rhs(), negate);
    case Kind::Xor: return iff(f.lhs(), f.rhs(), !negate);
    case Kind::ForAll:
      return negate ? Formula::exists(f.variable(), nnf(f.body(), true))
                    : Formula::forall(f.variable(), nnf(f.body(), false));
    case Kind::Exists:
      return negate ? Formula::forall(f.variable(), nnf(f.body(), true))
                    : Formula::exists(f.variable(), nnf(f.body(), false));
  }
  throw std::logic_error("unreachable");
}

class Grounder {
 public:
  explicit Grounder(const std::vector<Formula>& formulas) {
    for (const auto& f : formulas) {
      check_function_free(f);
      for (const auto& c : logic::constants(f)) used_.insert(c);
    }
  }

  // Replaces top-level existentials with fresh constants.
  Formula skolemize(const Formula& f, int universal_depth = 0) {
    switch (f.kind()) {
      case Kind::Atom:
      case Kind::Not: return f;
      case Kind::And:
      case Kind::Or:
        return Formula::binary(f.kind(), skolemize(f.lhs(), universal_depth), skolemize(f.rhs(), universal_depth));
      case Kind::ForAll: return Formula::forall(f.variable(), skolemize(f.body(), universal_depth + 1));
      case Kind::Exists: {
        if (universal_depth > 0)
          throw OutsideFragment("existential quantifier in the scope of a universal");
        return skolemize(logic::substitute(f.body(), f.variable(), Term::constant(fresh_constant())),
                         universal_depth);
      }
      default: throw std::logic_error("skolemize expects negation normal form");
    }
  }

  Formula ground(const Formula& f) {
    if (domain_.empty()) {
      domain_.assign(used_.begin(), used_.end());
      if (domain_.empty()) domain_.push_back(fresh_constant());
    }
    return ground_rec(f);
  }

 private:
  void check_function_free(const Formula& f) {
    switch (f.kind()) {
      case Kind::Atom:
        for (const auto& t : f.args())
          if (t.kind() == Term::Kind::Function) throw OutsideFragment("function symbol " + t.name());
        return;
      case Kind::Not: return check_function_free(f.operand());
      case Kind::ForAll:
      case Kind::Exists: return check_function_free(f.body());
      default:
        check_function_free(f.lhs());
        check_function_free(f.rhs());
    }
  }

  std::string fresh_constant() {
    std::string name;
    do name = "sk" + std::to_string(++counter_);
    while (used_.contains(name));
    used_.insert(name);
    return name;
  }

  Formula ground_rec(const Formula& f) {
    switch (f.kind()) {
      case Kind::Atom:
      case Kind::Not: return f;
      case Kind::And:
      case Kind::Or: return Formula::binary(f.kind(), ground_rec(f.lhs()), ground_rec(f.rhs()));
      case Kind::ForAll: {
        std::optional<Formula> out;
        for (const auto& c : domain_) {
          auto inst = ground_rec(logic::substitute(f.body(), f.variable(), Term::constant(c)));
          out = out ? Formula::conjunction(*out, inst) : inst;
        }
        return *out;
      }
      default: throw std::logic_error("ground expects skolemized negation normal form");
    }
  }

  std::set<std::string> used_;
  std::vector<std::string> domain_;
  int counter_ = 0;
};

class Encoder {
 public:
  // Encodes `f` as true (Plaisted–Greenbaum; formulas are in NNF).
  void assert_formula(const Formula& f) { cnf_.clauses.push_back({encode(f)}); }
  const Cnf& cnf() const { return cnf_; }

 private:
  int atom_var(const Formula& atom) {
    auto [it, inserted] = atoms_.emplace(atom, 0);
    if (inserted) it->second = cnf_.fresh();
    return it->second;
  }

  int encode(const Formula& f) {
    switch (f.kind()) {
      case Kind::Atom: return atom_var(f);
      case Kind::Not: return -atom_var(f.operand());
      case Kind::And: {
        int v = cnf_.fresh();
        for (int child : {encode(f.lhs()), encode(f.rhs())}) cnf_.clauses.push_back({-v, child});
        return v;
      }
      case Kind::Or: {
        int v = cnf_.fresh();
        cnf_.clauses.push_back({-v, encode(f.lhs()), encode(f.rhs())});
        return v;
      }
      default: throw std::logic_error("encode expects ground negation normal form");
    }
  }

  Cnf cnf_;
  std::map<Formula, int> atoms_;
};

}  // namespace

bool satisfiable(const std::vector<Formula>& formulas) {
  std::vector<Formula> closed;
  for (const auto& f : formulas) closed.push_back(nnf(close_universally(f), false));
  Grounder grounder(closed);
  std::vector<Formula> skolemized;
  for (const auto& f : closed) skolemized.push_back(grounder.skolemize(f));
  Encoder encoder;
  for (const auto& f : skolemized) encoder.assert_formula(grounder.ground(f));
  return solve_sat(encoder.cnf()).has_value();
}

logic::Label decide_formula(const std::vector<Formula>& premises, const Formula& statement) {
  if (!satisfiable(premises)) throw InconsistentPremises();
  auto with = [&](const Formula& extra) {
    auto all = premises;
    all.push_back(extra);
    return satisfiable(all);
  };
  const Formula closed = close_universally(statement);
  if (!with(Formula::negation(closed))) return logic::Label::True;
  if (!with(closed)) return logic::Label::False;
  return logic::Label::Unknown;
}

}  // namespace symbcot::inference
