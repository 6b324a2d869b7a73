#include "symbcot/logic/knowledge_base.hpp"

#include <algorithm>

namespace symbcot::logic {

bool SignedLiteral::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

Formula SignedLiteral::to_formula() const {
  Formula atom = Formula::atom(predicate, args);
  return polarity ? atom : Formula::negation(std::move(atom));
}

std::strong_ordering operator<=>(const SignedLiteral& a, const SignedLiteral& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                      b.args.end());
      c != 0)
    return c;
  return a.polarity <=> b.polarity;
}

bool literal_from_formula(const Formula& f, SignedLiteral& out) {
  if (f.is_atom()) {
    out = {f.predicate(), f.args(), true};
    return true;
  }
  if (f.kind() == Formula::Kind::Not && f.operand().is_atom()) {
    out = {f.operand().predicate(), f.operand().args(), false};
    return true;
  }
  return false;
}

std::set<std::string> Rule::variables() const {
  std::set<std::string> vars;
  for (const auto& lit : body)
    for (const auto& t : lit.args) t.collect_variables(vars);
  for (const auto& t : head.args) t.collect_variables(vars);
  return vars;
}

InconsistencyError::InconsistencyError(SignedLiteral literal)
    : KnowledgeBaseError("inconsistency: " + to_string(literal) + " and " +
                         to_string(literal.negated())),
      literal_(std::move(literal)) {}

namespace {

void check_function_free(const SignedLiteral& lit) {
  for (const auto& t : lit.args)
    if (t.kind() == Term::Kind::Function)
      throw KnowledgeBaseError("function terms are not supported in knowledge bases: " +
                               to_string(lit));
}

void record_arity(std::map<std::string, std::size_t>& arities, const SignedLiteral& lit) {
  auto [it, inserted] = arities.emplace(lit.predicate, lit.args.size());
  if (!inserted && it->second != lit.args.size())
    throw KnowledgeBaseError("predicate " + lit.predicate + " used with arity " +
                             std::to_string(lit.args.size()) + " and " + std::to_string(it->second));
}

}  // namespace

KnowledgeBase::KnowledgeBase(std::vector<SignedLiteral> facts, std::vector<Rule> rules)
    : rules_(std::move(rules)) {
  for (auto& fact : facts) {
    if (!fact.is_ground()) throw KnowledgeBaseError("fact is not ground: " + to_string(fact));
    check_function_free(fact);
    record_arity(arities_, fact);
    if (facts_.contains(fact.negated())) throw InconsistencyError(fact);
    facts_.insert(std::move(fact));
  }
  for (const auto& rule : rules_) {
    if (rule.body.empty()) throw KnowledgeBaseError("rule has an empty body: " + to_string(rule));
    std::set<std::string> body_vars;
    for (const auto& lit : rule.body) {
      check_function_free(lit);
      record_arity(arities_, lit);
      for (const auto& t : lit.args) t.collect_variables(body_vars);
    }
    check_function_free(rule.head);
    record_arity(arities_, rule.head);
    std::set<std::string> head_vars;
    for (const auto& t : rule.head.args) t.collect_variables(head_vars);
    for (const auto& v : head_vars)
      if (!body_vars.contains(v))
        throw KnowledgeBaseError("rule is not range-restricted (variable " + v +
                                 " only in head): " + to_string(rule));
  }
}

KnowledgeBase KnowledgeBase::with_fact(SignedLiteral fact) const {
  std::vector<SignedLiteral> facts(facts_.begin(), facts_.end());
  facts.push_back(std::move(fact));
  return KnowledgeBase(std::move(facts), rules_);
}

KnowledgeBase KnowledgeBase::with_rule(Rule rule) const {
  std::vector<Rule> rules = rules_;
  rules.push_back(std::move(rule));
  return KnowledgeBase(std::vector<SignedLiteral>(facts_.begin(), facts_.end()), std::move(rules));
}

namespace {

std::string args_string(const std::vector<Term>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(args[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const SignedLiteral& lit) {
  std::string out = lit.polarity ? "" : "¬";
  out += lit.predicate;
  if (!lit.args.empty()) out += "(" + args_string(lit.args) + ")";
  return out;
}

std::string to_polarity_string(const SignedLiteral& lit) {
  std::string out = lit.predicate + "(" + args_string(lit.args);
  if (!lit.args.empty()) out += ", ";
  return out + (lit.polarity ? "True)" : "False)");
}

std::string to_string(const Rule& rule) {
  std::string out;
  for (std::size_t i = 0; i < rule.body.size(); ++i) {
    if (i) out += " ∧ ";
    out += to_polarity_string(rule.body[i]);
  }
  return out + " ⇒ " + to_polarity_string(rule.head);
}

}  // namespace symbcot::logic
