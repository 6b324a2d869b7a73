#pragma once

// Random proof-step instances for every inference rule: schema-valid steps
// and mutated variants that the model oracle confirms are not entailed.

#include <random>
#include <vector>

#include "model_oracle.hpp"
#include "symbcot/logic/formula.hpp"
#include "symbcot/logic/proof.hpp"

namespace symbcot::testing {

struct StepCase {
  std::vector<logic::Formula> premises;
  logic::InferenceRule rule;
  logic::Formula conclusion;
};

// Oracle verdict for a step. Existential instantiation is judged by witness
// semantics: with a fresh constant c, the step is sound iff the premise
// entails the conclusion with c existentially generalized.
inline bool oracle_valid(const StepCase& c) {
  using logic::Formula;
  std::vector<Formula> all = c.premises;
  all.push_back(c.conclusion);
  if (c.rule == logic::InferenceRule::ExistentialInstantiation) {
    auto premise_consts = logic::constants(c.premises[0]);
    std::optional<std::string> fresh;
    for (const auto& k : logic::constants(c.conclusion))
      if (!premise_consts.contains(k)) fresh = k;
    if (fresh) {
      // Replace the fresh constant by a bound variable.
      std::function<logic::Term(const logic::Term&)> swap_term = [&](const logic::Term& t) {
        return t.is_constant() && t.name() == *fresh ? logic::Term::variable("w_fresh") : t;
      };
      std::function<Formula(const Formula&)> swap = [&](const Formula& f) -> Formula {
        switch (f.kind()) {
          case Formula::Kind::Atom: {
            std::vector<logic::Term> args;
            for (const auto& t : f.args()) args.push_back(swap_term(t));
            return Formula::atom(f.predicate(), args);
          }
          case Formula::Kind::Not: return Formula::negation(swap(f.operand()));
          case Formula::Kind::ForAll:
          case Formula::Kind::Exists: return Formula::quantified(f.kind(), f.variable(), swap(f.body()));
          default: return Formula::binary(f.kind(), swap(f.lhs()), swap(f.rhs()));
        }
      };
      auto generalized = Formula::exists("w_fresh", swap(c.conclusion));
      return ModelOracle({c.premises[0], generalized}).entails(c.premises, generalized);
    }
  }
  return ModelOracle(all).entails(c.premises, c.conclusion);
}

class StepCaseGenerator {
 public:
  explicit StepCaseGenerator(std::mt19937& rng) : rng_(rng) {}

  StepCase valid(logic::InferenceRule rule) {
    using R = logic::InferenceRule;
    using logic::Formula;
    Formula a = prop(), b = prop(), c = prop();
    switch (rule) {
      case R::ModusPonens: return {{a, Formula::implication(a, b)}, rule, b};
      case R::ModusTollens: return {{Formula::negation(b), Formula::implication(a, b)}, rule, Formula::negation(a)};
      case R::UniversalInstantiation: {
        auto body = monadic("x");
        auto k = constant();
        return {{Formula::forall("x", body)}, rule, logic::substitute(body, "x", k)};
      }
      case R::ExistentialInstantiation: {
        auto body = monadic("x");
        return {{Formula::exists("x", body)}, rule, logic::substitute(body, "x", logic::Term::constant("c"))};
      }
      case R::AndElim: return {{Formula::conjunction(a, b)}, rule, coin() ? a : b};
      case R::AndIntro: return {{a, b}, rule, Formula::conjunction(a, b)};
      case R::OrIntro: return {{a}, rule, coin() ? Formula::disjunction(a, b) : Formula::disjunction(b, a)};
      case R::DisjunctiveSyllogism: return {{Formula::disjunction(a, b), Formula::negation(a)}, rule, b};
      case R::HypotheticalSyllogism:
        return {{Formula::implication(a, b), Formula::implication(b, c)}, rule, Formula::implication(a, c)};
      case R::Contradiction:
        if (coin()) return {{a, Formula::negation(a)}, rule, c};
        return {{Formula::implication(a, b), Formula::implication(a, Formula::negation(b))}, rule,
                Formula::negation(a)};
      case R::IffElim:
        if (coin()) return {{Formula::biconditional(a, b)}, rule, Formula::implication(a, b)};
        return {{Formula::biconditional(a, b), a}, rule, b};
    }
    throw std::logic_error("unreachable");
  }

  // A structurally perturbed step; may or may not still be entailed.
  StepCase mutate(StepCase c) {
    using logic::Formula;
    switch (pick(5)) {
      case 0: c.conclusion = Formula::negation(c.conclusion); break;
      case 1: c.conclusion = c.rule == logic::InferenceRule::UniversalInstantiation ||
                                     c.rule == logic::InferenceRule::ExistentialInstantiation
                                 ? logic::substitute(monadic("x"), "x", constant())
                                 : prop();
        break;
      case 2:
        // Fallacy shapes: swap antecedent and consequent roles.
        if (c.premises.size() == 2 && c.premises[1].kind() == Formula::Kind::Implies) {
          auto imp = c.premises[1];
          if (c.rule == logic::InferenceRule::ModusPonens) {
            c.premises[0] = imp.rhs();
            c.conclusion = imp.lhs();
            break;
          }
          if (c.rule == logic::InferenceRule::ModusTollens) {
            c.premises[0] = Formula::negation(imp.lhs());
            c.conclusion = Formula::negation(imp.rhs());
            break;
          }
        }
        [[fallthrough]];
      case 3: {
        auto& p = c.premises[static_cast<std::size_t>(pick(static_cast<int>(c.premises.size())))];
        p = p.is_quantifier() ? Formula::quantified(p.kind(), p.variable(), monadic(p.variable())) : prop();
        break;
      }
      default:
        if (c.rule == logic::InferenceRule::ExistentialInstantiation) {
          // Reuse a constant of the premise, violating freshness.
          c.premises[0] = Formula::conjunction(c.premises[0], Formula::atom("P", {logic::Term::constant("c")}));
        } else {
          c.conclusion = Formula::conjunction(c.conclusion, prop());
        }
    }
    return c;
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin() { return pick(2) == 1; }

  logic::Term constant() { return logic::Term::constant(coin() ? "a" : "b"); }

  // Formulas over the propositional atoms A..D.
  logic::Formula prop(int depth = 2) {
    using logic::Formula;
    static const char* atoms[] = {"A", "B", "C", "D"};
    if (depth == 0 || pick(3) == 0) return Formula::atom(atoms[pick(4)]);
    switch (pick(6)) {
      case 0: return Formula::negation(prop(depth - 1));
      case 1: return Formula::conjunction(prop(depth - 1), prop(depth - 1));
      case 2: return Formula::disjunction(prop(depth - 1), prop(depth - 1));
      case 3: return Formula::implication(prop(depth - 1), prop(depth - 1));
      case 4: return Formula::biconditional(prop(depth - 1), prop(depth - 1));
      default: return Formula::exclusive_or(prop(depth - 1), prop(depth - 1));
    }
  }

  // Quantifier-free formulas over P(var), Q(var) and P(a).
  logic::Formula monadic(const std::string& var, int depth = 2) {
    using logic::Formula;
    if (depth == 0 || pick(3) == 0) {
      int k = pick(5);
      auto arg = k == 4 ? logic::Term::constant("a") : logic::Term::variable(var);
      return Formula::atom(k % 2 ? "Q" : "P", {arg});
    }
    switch (pick(4)) {
      case 0: return Formula::negation(monadic(var, depth - 1));
      case 1: return Formula::conjunction(monadic(var, depth - 1), monadic(var, depth - 1));
      case 2: return Formula::disjunction(monadic(var, depth - 1), monadic(var, depth - 1));
      default: return Formula::implication(monadic(var, depth - 1), monadic(var, depth - 1));
    }
  }

  std::mt19937& rng_;
};

}  // namespace symbcot::testing
