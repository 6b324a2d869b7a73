#include "symbcot/logic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace symbcot::logic {

struct Formula::Node {
  Kind kind;
  std::string name;  // predicate or bound variable
  std::vector<Term> args;
  std::vector<Formula> children;
  ArrowStyle style = ArrowStyle::Arrow;
};

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  if (predicate.empty()) throw std::invalid_argument("predicate name must be non-empty");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), std::move(args), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}}));
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  switch (kind) {
    case Kind::And:
    case Kind::Or:
    case Kind::Xor:
    case Kind::Implies:
    case Kind::Iff:
      break;
    default:
      throw std::invalid_argument("not a binary connective");
  }
  return Formula(std::make_shared<const Node>(Node{kind, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::conjunction(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disjunction(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::exclusive_or(Formula a, Formula b) { return binary(Kind::Xor, std::move(a), std::move(b)); }
Formula Formula::biconditional(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }

Formula Formula::implication(Formula a, Formula b, ArrowStyle style) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, {}, {std::move(a), std::move(b)}, style}));
}

Formula Formula::quantified(Kind kind, std::string var, Formula body) {
  if (kind != Kind::ForAll && kind != Kind::Exists) throw std::invalid_argument("not a quantifier");
  if (var.empty()) throw std::invalid_argument("quantified variable must be non-empty");
  return Formula(std::make_shared<const Node>(Node{kind, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantified(Kind::ForAll, std::move(var), std::move(body));
}
Formula Formula::exists(std::string var, Formula body) {
  return quantified(Kind::Exists, std::move(var), std::move(body));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  switch (kind()) {
    case Kind::And:
    case Kind::Or:
    case Kind::Xor:
    case Kind::Implies:
    case Kind::Iff:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const noexcept {
  return kind() == Kind::ForAll || kind() == Kind::Exists;
}

const std::string& Formula::predicate() const {
  require(is_atom(), "predicate() on non-atom");
  return node_->name;
}
const std::vector<Term>& Formula::args() const {
  require(is_atom(), "args() on non-atom");
  return node_->args;
}
const Formula& Formula::operand() const {
  require(kind() == Kind::Not, "operand() on non-negation");
  return node_->children[0];
}
const Formula& Formula::lhs() const {
  require(is_binary(), "lhs() on non-binary formula");
  return node_->children[0];
}
const Formula& Formula::rhs() const {
  require(is_binary(), "rhs() on non-binary formula");
  return node_->children[1];
}
Formula::ArrowStyle Formula::arrow_style() const noexcept { return node_->style; }
const std::string& Formula::variable() const {
  require(is_quantifier(), "variable() on non-quantifier");
  return node_->name;
}
const Formula& Formula::body() const {
  require(is_quantifier(), "body() on non-quantifier");
  return node_->children[0];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.args == y.args && x.children == y.children;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.name != y.name) return x.name < y.name;
  if (x.args != y.args) return x.args < y.args;
  return std::lexicographical_compare(x.children.begin(), x.children.end(), y.children.begin(),
                                      y.children.end());
}

const char* kind_name(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Atom: return "Atom";
    case Formula::Kind::Not: return "Not";
    case Formula::Kind::And: return "And";
    case Formula::Kind::Or: return "Or";
    case Formula::Kind::Xor: return "Xor";
    case Formula::Kind::Implies: return "Implies";
    case Formula::Kind::Iff: return "Iff";
    case Formula::Kind::ForAll: return "ForAll";
    case Formula::Kind::Exists: return "Exists";
  }
  return "?";
}

namespace {

void free_vars_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::set<std::string> vars;
      for (const auto& t : f.args()) t.collect_variables(vars);
      for (const auto& v : vars)
        if (!bound.contains(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Not:
      free_vars_into(f.operand(), bound, out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      const bool fresh = bound.insert(f.variable()).second;
      free_vars_into(f.body(), bound, out);
      if (fresh) bound.erase(f.variable());
      return;
    }
    default:
      free_vars_into(f.lhs(), bound, out);
      free_vars_into(f.rhs(), bound, out);
  }
}

void all_vars_into(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& t : f.args()) t.collect_variables(out);
      return;
    case Formula::Kind::Not:
      all_vars_into(f.operand(), out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      out.insert(f.variable());
      all_vars_into(f.body(), out);
      return;
    default:
      all_vars_into(f.lhs(), out);
      all_vars_into(f.rhs(), out);
  }
}

Term substitute_term(const Term& t, const std::string& var, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.name() == var ? replacement : t;
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Function: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute_term(a, var, replacement));
      return Term::function(t.name(), std::move(args));
    }
  }
  return t;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  // Strip an existing numeric suffix so repeated renaming stays readable.
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (int i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(substitute_term(a, var, t));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(substitute(f.operand(), var, t));
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      const std::string& bound = f.variable();
      if (bound == var) return f;
      if (!free_variables(f.body()).contains(var)) return f;
      std::set<std::string> term_vars;
      t.collect_variables(term_vars);
      if (!term_vars.contains(bound)) {
        return Formula::quantified(f.kind(), bound, substitute(f.body(), var, t));
      }
      std::set<std::string> avoid = term_vars;
      all_vars_into(f.body(), avoid);
      avoid.insert(var);
      const std::string renamed = fresh_name(bound, avoid);
      Formula body = substitute(f.body(), bound, Term::variable(renamed));
      return Formula::quantified(f.kind(), renamed, substitute(body, var, t));
    }
    case Formula::Kind::Implies:
      return Formula::implication(substitute(f.lhs(), var, t), substitute(f.rhs(), var, t),
                                  f.arrow_style());
    default:
      return Formula::binary(f.kind(), substitute(f.lhs(), var, t), substitute(f.rhs(), var, t));
  }
}

namespace {

using Env = std::vector<std::string>;

// Index of the innermost binder of `name`, or -1 when free.
int binder_index(const Env& env, const std::string& name) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

bool alpha_terms(const Term& a, const Env& ea, const Term& b, const Env& eb) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Term::Kind::Variable) {
    const int ia = binder_index(ea, a.name());
    const int ib = binder_index(eb, b.name());
    if (ia != ib) return false;
    return ia >= 0 || a.name() == b.name();
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_terms(a.args()[i], ea, b.args()[i], eb)) return false;
  return true;
}

bool alpha_rec(const Formula& a, Env& ea, const Formula& b, Env& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom: {
      if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_terms(a.args()[i], ea, b.args()[i], eb)) return false;
      return true;
    }
    case Formula::Kind::Not:
      return alpha_rec(a.operand(), ea, b.operand(), eb);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      ea.push_back(a.variable());
      eb.push_back(b.variable());
      const bool ok = alpha_rec(a.body(), ea, b.body(), eb);
      ea.pop_back();
      eb.pop_back();
      return ok;
    }
    default:
      return alpha_rec(a.lhs(), ea, b.lhs(), eb) && alpha_rec(a.rhs(), ea, b.rhs(), eb);
  }
}

void constants_into(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Constant) out.insert(t.name());
  for (const auto& a : t.args()) constants_into(a, out);
}

void constants_into(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& t : f.args()) constants_into(t, out);
      return;
    case Formula::Kind::Not:
      constants_into(f.operand(), out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      constants_into(f.body(), out);
      return;
    default:
      constants_into(f.lhs(), out);
      constants_into(f.rhs(), out);
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  Env ea, eb;
  return alpha_rec(a, ea, b, eb);
}

std::set<std::string> constants(const Formula& f) {
  std::set<std::string> out;
  constants_into(f, out);
  return out;
}

std::size_t depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return 1;
    case Formula::Kind::Not:
      return 1 + depth(f.operand());
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return 1 + depth(f.body());
    default:
      return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
  }
}

bool collect_arities(const Formula& f, std::map<std::string, std::size_t>& arities,
                     std::string* conflict) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto [it, inserted] = arities.emplace(f.predicate(), f.args().size());
      if (!inserted && it->second != f.args().size()) {
        if (conflict) *conflict = f.predicate();
        return false;
      }
      return true;
    }
    case Formula::Kind::Not:
      return collect_arities(f.operand(), arities, conflict);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return collect_arities(f.body(), arities, conflict);
    default:
      return collect_arities(f.lhs(), arities, conflict) &&
             collect_arities(f.rhs(), arities, conflict);
  }
}

bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return std::all_of(f.args().begin(), f.args().end(),
                         [](const Term& t) { return t.is_ground(); });
    case Formula::Kind::Not:
      return is_propositional(f.operand());
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return false;
    default:
      return is_propositional(f.lhs()) && is_propositional(f.rhs());
  }
}

}  // namespace symbcot::logic
