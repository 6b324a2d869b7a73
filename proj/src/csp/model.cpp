#include "symbcot/csp/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace symbcot::csp {

ConstraintExpr ConstraintExpr::compare(LinearTerm lhs, CompareOp op, LinearTerm rhs) {
  ConstraintExpr e;
  e.kind = Kind::Compare;
  e.lhs = std::move(lhs);
  e.op = op;
  e.rhs = std::move(rhs);
  return e;
}

ConstraintExpr ConstraintExpr::abs_diff(std::string a, std::string b, CompareOp op, int k) {
  if (k < 0) throw std::invalid_argument("absolute difference bound must be non-negative");
  ConstraintExpr e;
  e.kind = Kind::AbsDiff;
  e.a = std::move(a);
  e.b = std::move(b);
  e.op = op;
  e.k = k;
  return e;
}

ConstraintExpr ConstraintExpr::all_different(std::vector<std::string> vars) {
  ConstraintExpr e;
  e.kind = Kind::AllDifferent;
  e.variables = std::move(vars);
  return e;
}

ConstraintExpr ConstraintExpr::negation(ConstraintExpr inner) {
  ConstraintExpr e;
  e.kind = Kind::Not;
  e.children.push_back(std::move(inner));
  return e;
}

ConstraintExpr ConstraintExpr::conjunction(std::vector<ConstraintExpr> es) {
  if (es.size() == 1) return std::move(es.front());
  ConstraintExpr e;
  e.kind = Kind::And;
  e.children = std::move(es);
  return e;
}

ConstraintExpr ConstraintExpr::disjunction(std::vector<ConstraintExpr> es) {
  if (es.size() == 1) return std::move(es.front());
  ConstraintExpr e;
  e.kind = Kind::Or;
  e.children = std::move(es);
  return e;
}

ConstraintExpr ConstraintExpr::implication(ConstraintExpr a, ConstraintExpr b) {
  ConstraintExpr e;
  e.kind = Kind::Implies;
  e.children = {std::move(a), std::move(b)};
  return e;
}

ConstraintExpr ConstraintExpr::boolean(bool v) {
  ConstraintExpr e;
  e.kind = Kind::Bool;
  e.value = v;
  return e;
}

std::optional<std::size_t> CspModel::index_of(const std::string& var) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i].name == var) return i;
  return std::nullopt;
}

std::string to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "==";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

std::string to_string(const LinearTerm& t) {
  if (!t.var) return std::to_string(t.offset);
  if (t.offset == 0) return *t.var;
  return *t.var + (t.offset > 0 ? " + " : " - ") + std::to_string(std::abs(t.offset));
}

namespace {

bool needs_parens(const ConstraintExpr& child, ConstraintExpr::Kind parent) {
  using K = ConstraintExpr::Kind;
  if (child.kind == K::Implies) return true;
  if (child.kind == K::Or) return parent != K::Or;
  if (child.kind == K::And) return parent == K::Not;
  return false;
}

std::string join_children(const ConstraintExpr& e, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) out += sep;
    const auto& c = e.children[i];
    bool wrap = needs_parens(c, e.kind) || (e.kind == c.kind && e.kind != ConstraintExpr::Kind::Not);
    out += wrap ? "(" + to_string(c) + ")" : to_string(c);
  }
  return out;
}

bool compare(int l, CompareOp op, int r) {
  switch (op) {
    case CompareOp::Eq: return l == r;
    case CompareOp::Ne: return l != r;
    case CompareOp::Lt: return l < r;
    case CompareOp::Le: return l <= r;
    case CompareOp::Gt: return l > r;
    case CompareOp::Ge: return l >= r;
  }
  return false;
}

void collect(const ConstraintExpr& e, std::vector<std::string>& out) {
  auto add = [&](const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  switch (e.kind) {
    case ConstraintExpr::Kind::Compare:
      if (e.lhs.var) add(*e.lhs.var);
      if (e.rhs.var) add(*e.rhs.var);
      return;
    case ConstraintExpr::Kind::AbsDiff:
      add(e.a);
      add(e.b);
      return;
    case ConstraintExpr::Kind::AllDifferent:
      for (const auto& v : e.variables) add(v);
      return;
    default:
      for (const auto& c : e.children) collect(c, out);
  }
}

}  // namespace

std::string to_string(const ConstraintExpr& e) {
  using K = ConstraintExpr::Kind;
  switch (e.kind) {
    case K::Compare: return to_string(e.lhs) + " " + to_string(e.op) + " " + to_string(e.rhs);
    case K::AbsDiff: return "|" + e.a + " - " + e.b + "| " + to_string(e.op) + " " + std::to_string(e.k);
    case K::AllDifferent: {
      std::string out = "AllDifferent([";
      for (std::size_t i = 0; i < e.variables.size(); ++i) out += (i ? ", " : "") + e.variables[i];
      return out + "])";
    }
    case K::Not: {
      const auto& c = e.children[0];
      bool wrap = c.kind != K::Bool && c.kind != K::AllDifferent;
      return wrap ? "not (" + to_string(c) + ")" : "not " + to_string(c);
    }
    case K::And: return join_children(e, " and ");
    case K::Or: return join_children(e, " or ");
    case K::Implies: {
      auto side = [&](const ConstraintExpr& c) {
        return c.kind == K::Implies ? "(" + to_string(c) + ")" : to_string(c);
      };
      return side(e.children[0]) + " -> " + side(e.children[1]);
    }
    case K::Bool: return e.value ? "true" : "false";
  }
  return {};
}

std::vector<std::string> referenced_variables(const ConstraintExpr& e) {
  std::vector<std::string> out;
  collect(e, out);
  return out;
}

namespace {

int value_of(const LinearTerm& t, const CspModel& model, const std::vector<int>& values) {
  if (!t.var) return t.offset;
  auto idx = model.index_of(*t.var);
  if (!idx) throw std::invalid_argument("undeclared variable " + *t.var);
  return values[*idx] + t.offset;
}

}  // namespace

bool evaluate(const ConstraintExpr& e, const CspModel& model, const std::vector<int>& values) {
  using K = ConstraintExpr::Kind;
  switch (e.kind) {
    case K::Compare: return compare(value_of(e.lhs, model, values), e.op, value_of(e.rhs, model, values));
    case K::AbsDiff: {
      int d = value_of(LinearTerm::variable(e.a), model, values) - value_of(LinearTerm::variable(e.b), model, values);
      return compare(std::abs(d), e.op, e.k);
    }
    case K::AllDifferent: {
      std::set<int> seen;
      for (const auto& v : e.variables)
        if (!seen.insert(value_of(LinearTerm::variable(v), model, values)).second) return false;
      return true;
    }
    case K::Not: return !evaluate(e.children[0], model, values);
    case K::And:
      return std::all_of(e.children.begin(), e.children.end(),
                         [&](const ConstraintExpr& c) { return evaluate(c, model, values); });
    case K::Or:
      return std::any_of(e.children.begin(), e.children.end(),
                         [&](const ConstraintExpr& c) { return evaluate(c, model, values); });
    case K::Implies: return !evaluate(e.children[0], model, values) || evaluate(e.children[1], model, values);
    case K::Bool: return e.value;
  }
  return false;
}

}  // namespace symbcot::csp
