#include "symbcot/inference/step_checker.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "symbcot/inference/propositional.hpp"

namespace symbcot::inference {

using logic::Formula;
using logic::InferenceRule;
using logic::Term;
using Kind = Formula::Kind;

SchemaArityMismatch::SchemaArityMismatch(InferenceRule rule, std::size_t given)
    : std::invalid_argument(logic::to_string(rule) + " does not take " + std::to_string(given) +
                            " premise(s)"),
      rule_(rule) {}

std::vector<std::size_t> premise_counts(InferenceRule rule) {
  switch (rule) {
    case InferenceRule::ModusPonens:
    case InferenceRule::ModusTollens:
    case InferenceRule::AndIntro:
    case InferenceRule::DisjunctiveSyllogism:
    case InferenceRule::HypotheticalSyllogism:
    case InferenceRule::Contradiction: return {2};
    case InferenceRule::IffElim: return {1, 2};
    default: return {1};
  }
}

namespace {

bool same(const Formula& a, const Formula& b) { return logic::alpha_equal(a, b); }

// One is the negation of the other.
bool complement(const Formula& a, const Formula& b) {
  return (a.kind() == Kind::Not && same(a.operand(), b)) || (b.kind() == Kind::Not && same(b.operand(), a));
}

void flatten(const Formula& f, Kind kind, std::vector<Formula>& out) {
  if (f.kind() == kind) {
    flatten(f.lhs(), kind, out);
    flatten(f.rhs(), kind, out);
  } else {
    out.push_back(f);
  }
}

std::vector<Formula> flattened(const Formula& f, Kind kind) {
  std::vector<Formula> out;
  flatten(f, kind, out);
  return out;
}

bool same_list(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), same);
}

void collect_terms(const Term& t, std::set<Term>& out) {
  out.insert(t);
  for (const auto& a : t.args()) collect_terms(a, out);
}

void collect_terms(const Formula& f, std::set<Term>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      for (const auto& a : f.args()) collect_terms(a, out);
      return;
    case Kind::Not: return collect_terms(f.operand(), out);
    case Kind::ForAll:
    case Kind::Exists: return collect_terms(f.body(), out);
    default:
      collect_terms(f.lhs(), out);
      collect_terms(f.rhs(), out);
  }
}

// Tries `f` and every instance obtained by instantiating leading universal
// quantifiers with candidate terms.
bool some_universal_instance(const Formula& f, const std::vector<Term>& candidates,
                             const std::function<bool(const Formula&)>& ok, bool include_self = true) {
  if (include_self && ok(f)) return true;
  if (f.kind() != Kind::ForAll) return false;
  if (!logic::free_variables(f.body()).contains(f.variable()))
    return some_universal_instance(f.body(), candidates, ok);
  for (const auto& t : candidates)
    if (some_universal_instance(logic::substitute(f.body(), f.variable(), t), candidates, ok)) return true;
  return false;
}

struct Context {
  const std::vector<Formula>& premises;
  const Formula& conclusion;
  std::vector<Term> candidates;
};

// Calls `ok(p, q)` over both orders of a two-premise step.
bool either_order(const std::vector<Formula>& ps, const std::function<bool(const Formula&, const Formula&)>& ok) {
  return ok(ps[0], ps[1]) || ok(ps[1], ps[0]);
}

bool matches_schema(InferenceRule rule, const Context& c, std::string& schema) {
  const auto& ps = c.premises;
  const auto& concl = c.conclusion;
  auto implication_instance = [&](const Formula& q, const std::function<bool(const Formula&)>& ok) {
    return some_universal_instance(q, c.candidates,
                                   [&](const Formula& inst) { return inst.kind() == Kind::Implies && ok(inst); });
  };
  switch (rule) {
    case InferenceRule::ModusPonens:
      schema = "A, A → B ⊢ B";
      return either_order(ps, [&](const Formula& p, const Formula& q) {
        return implication_instance(q, [&](const Formula& i) { return same(i.lhs(), p) && same(i.rhs(), concl); });
      });
    case InferenceRule::ModusTollens:
      schema = "¬B, A → B ⊢ ¬A";
      return either_order(ps, [&](const Formula& p, const Formula& q) {
        return implication_instance(
            q, [&](const Formula& i) { return complement(i.rhs(), p) && complement(i.lhs(), concl); });
      });
    case InferenceRule::UniversalInstantiation:
      schema = "∀x φ ⊢ φ[x:=t]";
      return ps[0].kind() == Kind::ForAll &&
             some_universal_instance(ps[0], c.candidates, [&](const Formula& i) { return same(i, concl); }, false);
    case InferenceRule::ExistentialInstantiation: {
      schema = "∃x φ ⊢ φ[x:=c], c fresh";
      if (ps[0].kind() != Kind::Exists) return false;
      const auto used = logic::constants(ps[0]);
      for (const auto& t : c.candidates) {
        if (!t.is_constant() || used.contains(t.name())) continue;
        if (same(logic::substitute(ps[0].body(), ps[0].variable(), t), concl)) return true;
      }
      return !logic::free_variables(ps[0].body()).contains(ps[0].variable()) && same(ps[0].body(), concl);
    }
    case InferenceRule::AndElim: {
      schema = "A ∧ B ⊢ A";
      if (ps[0].kind() != Kind::And) return false;
      auto parts = flattened(ps[0], Kind::And);
      return std::any_of(parts.begin(), parts.end(), [&](const Formula& f) { return same(f, concl); }) ||
             same(ps[0].lhs(), concl) || same(ps[0].rhs(), concl);
    }
    case InferenceRule::AndIntro:
      schema = "A, B ⊢ A ∧ B";
      return concl.kind() == Kind::And && either_order(ps, [&](const Formula& p, const Formula& q) {
               return same(concl.lhs(), p) && same(concl.rhs(), q);
             });
    case InferenceRule::OrIntro: {
      schema = "A ⊢ A ∨ B";
      if (concl.kind() != Kind::Or) return false;
      auto parts = flattened(concl, Kind::Or);
      return std::any_of(parts.begin(), parts.end(), [&](const Formula& f) { return same(f, ps[0]); }) ||
             same(concl.lhs(), ps[0]) || same(concl.rhs(), ps[0]);
    }
    case InferenceRule::DisjunctiveSyllogism:
      schema = "A ∨ B, ¬A ⊢ B";
      return either_order(ps, [&](const Formula& d, const Formula& n) {
        if (d.kind() != Kind::Or) return false;
        if ((complement(d.lhs(), n) && same(d.rhs(), concl)) || (complement(d.rhs(), n) && same(d.lhs(), concl)))
          return true;
        auto parts = flattened(d, Kind::Or);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (!complement(parts[i], n)) continue;
          auto rest = parts;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          if (same_list(rest, flattened(concl, Kind::Or))) return true;
        }
        return false;
      });
    case InferenceRule::HypotheticalSyllogism:
      schema = "A → B, B → C ⊢ A → C";
      return concl.kind() == Kind::Implies && either_order(ps, [&](const Formula& p, const Formula& q) {
               return p.kind() == Kind::Implies && q.kind() == Kind::Implies && same(p.rhs(), q.lhs()) &&
                      same(p.lhs(), concl.lhs()) && same(q.rhs(), concl.rhs());
             });
    case InferenceRule::Contradiction:
      schema = "A, ¬A ⊢ C  |  A → B, A → ¬B ⊢ ¬A";
      return either_order(ps, [&](const Formula& p, const Formula& q) {
        if (complement(p, q)) return true;
        return p.kind() == Kind::Implies && q.kind() == Kind::Implies && same(p.lhs(), q.lhs()) &&
               complement(p.rhs(), q.rhs()) && complement(p.lhs(), concl);
      });
    case InferenceRule::IffElim:
      schema = "A ↔ B ⊢ A → B  |  A ↔ B, A ⊢ B";
      if (ps.size() == 1) {
        const auto& e = ps[0];
        return e.kind() == Kind::Iff && concl.kind() == Kind::Implies &&
               ((same(concl.lhs(), e.lhs()) && same(concl.rhs(), e.rhs())) ||
                (same(concl.lhs(), e.rhs()) && same(concl.rhs(), e.lhs())));
      }
      return either_order(ps, [&](const Formula& e, const Formula& p) {
        return some_universal_instance(e, c.candidates, [&](const Formula& i) {
          if (i.kind() != Kind::Iff) return false;
          return (same(p, i.lhs()) && same(concl, i.rhs())) || (same(p, i.rhs()) && same(concl, i.lhs())) ||
                 (complement(p, i.lhs()) && complement(concl, i.rhs())) ||
                 (complement(p, i.rhs()) && complement(concl, i.lhs()));
        });
      });
  }
  return false;
}

std::string fallacy(InferenceRule rule, const std::vector<Formula>& ps, const Formula& concl) {
  if (ps.size() != 2) return {};
  std::string name;
  either_order(ps, [&](const Formula& p, const Formula& q) {
    if (q.kind() != Kind::Implies) return false;
    if (same(p, q.rhs()) && same(concl, q.lhs())) name = "affirming the consequent";
    else if (complement(p, q.lhs()) && complement(concl, q.rhs())) name = "denying the antecedent";
    return !name.empty();
  });
  return name;
}

}  // namespace

StepVerdict check_step(const std::vector<Formula>& premises, InferenceRule rule, const Formula& conclusion) {
  const auto counts = premise_counts(rule);
  if (std::find(counts.begin(), counts.end(), premises.size()) == counts.end())
    throw SchemaArityMismatch(rule, premises.size());

  std::set<Term> terms;
  collect_terms(conclusion, terms);
  for (const auto& p : premises) collect_terms(p, terms);
  Context ctx{premises, conclusion, {terms.begin(), terms.end()}};

  StepVerdict verdict;
  verdict.rule_checked = rule;
  std::string schema;
  const bool matched = matches_schema(rule, ctx, schema);

  const bool propositional = logic::is_propositional(conclusion) &&
                             std::all_of(premises.begin(), premises.end(), logic::is_propositional);
  std::optional<Entailment> table;
  if (propositional) {
    try {
      table = entails(premises, conclusion);
    } catch (const TooManyAtoms&) {
    }
  }

  if (matched && (!table || table->entailed)) {
    verdict.valid = true;
    verdict.reason = "matches " + logic::to_string(rule) + " schema " + schema;
    return verdict;
  }
  std::string reason = fallacy(rule, premises, conclusion);
  if (reason.empty()) reason = "does not match " + logic::to_string(rule) + " schema " + schema;
  if (table && table->countermodel) reason += "; countermodel " + describe(*table->countermodel);
  else if (table && table->entailed) reason += "; the conclusion is entailed, but not by this rule";
  verdict.reason = std::move(reason);
  return verdict;
}

StepVerdict check_step(const std::vector<Formula>& premises, std::string_view rule, const Formula& conclusion) {
  return check_step(premises, logic::parse_inference_rule(rule), conclusion);
}

}  // namespace symbcot::inference
