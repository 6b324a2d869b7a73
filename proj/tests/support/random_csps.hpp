#pragma once

// Random CSP models with independently built predicates, plus a brute-force
// enumeration oracle; shared by unit and acceptance tests.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symbcot/csp/solver.hpp"

namespace symbcot::testing {

// Brute-force oracle over an independently built predicate.
using Predicate = std::function<bool(const std::vector<int>&)>;

std::vector<csp::Assignment> enumerate(const std::vector<std::vector<int>>& domains, const Predicate& ok) {
  std::vector<csp::Assignment> out;
  csp::Assignment a(domains.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == domains.size()) {
      if (ok(a)) out.push_back(a);
      return;
    }
    for (int v : domains[i]) {
      a[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

struct RandomModel {
  std::string text;
  std::vector<std::vector<int>> domains;
  std::vector<Predicate> constraints;
  std::vector<Predicate> queries;
};

class ModelGenerator {
 public:
  explicit ModelGenerator(std::uint32_t seed) : rng_(seed) {}

  RandomModel next() {
    RandomModel m;
    const int n = pick(2, 5);
    const int nvars = pick(1, 4);
    m.text = "Domain:\n1: low\n" + std::to_string(n) + ": high\nVariables:\n";
    for (int i = 0; i < nvars; ++i) {
      std::vector<int> dom;
      for (int v = 1; v <= n; ++v)
        if (pick(0, 3) > 0) dom.push_back(v);
      if (dom.empty()) dom.push_back(pick(1, n));
      m.text += name(i) + " ∈ {";
      for (std::size_t j = 0; j < dom.size(); ++j) m.text += (j ? ", " : "") + std::to_string(dom[j]);
      m.text += "}\n";
      m.domains.push_back(dom);
    }
    m.text += "Constraints:\n";
    for (int c = pick(0, 4); c > 0; --c) {
      auto [text, pred] = expr(nvars, n, 2);
      m.text += text + " ::: constraint\n";
      m.constraints.push_back(pred);
    }
    m.text += "Query:\n";
    for (int q = 0; q < 3; ++q) {
      auto [text, pred] = expr(nvars, n, 1);
      m.text += std::string(1, static_cast<char>('A' + q)) + ") " + text + "\n";
      m.queries.push_back(pred);
    }
    return m;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  static std::string name(int i) { return "v" + std::to_string(i); }

  static bool cmp(int x, int op, int y) {
    switch (op) {
      case 0: return x == y;
      case 1: return x != y;
      case 2: return x < y;
      case 3: return x <= y;
      case 4: return x > y;
      default: return x >= y;
    }
  }

  std::pair<std::string, Predicate> expr(int nvars, int n, int depth) {
    static const char* ops[] = {"==", "!=", "<", "<=", ">", ">="};
    static const char* alt_ops[] = {"=", "≠", "<", "≤", ">", "≥"};
    const int kind = pick(0, depth > 0 ? 8 : 3);
    const int a = pick(0, nvars - 1), b = pick(0, nvars - 1), op = pick(0, 5);
    const char* op_text = pick(0, 1) ? ops[op] : alt_ops[op];
    switch (kind) {
      case 0: {
        const int k = pick(1, n);
        return {name(a) + " " + op_text + " " + std::to_string(k), [=](const auto& v) { return cmp(v[a], op, k); }};
      }
      case 1: {
        const int off = pick(-2, 2);
        std::string lhs = name(a) + (off > 0 ? " + " + std::to_string(off) : off < 0 ? " - " + std::to_string(-off) : "");
        return {lhs + " " + op_text + " " + name(b), [=](const auto& v) { return cmp(v[a] + off, op, v[b]); }};
      }
      case 2: {
        const int k = pick(0, 2);
        return {"|" + name(a) + " - " + name(b) + "| " + op_text + " " + std::to_string(k),
                [=](const auto& v) { return cmp(std::abs(v[a] - v[b]), op, k); }};
      }
      case 3: {
        if (nvars < 2) return {"true", [](const auto&) { return true; }};
        return {"AllDifferentConstraint([" + name(a) + ", " + name((a + 1) % nvars) + "])",
                [=](const auto& v) { return v[a] != v[(a + 1) % nvars]; }};
      }
      case 4: {
        auto [t, p] = expr(nvars, n, depth - 1);
        return {"not (" + t + ")", [p](const auto& v) { return !p(v); }};
      }
      case 5:
      case 6: {
        auto [t1, p1] = expr(nvars, n, depth - 1);
        auto [t2, p2] = expr(nvars, n, depth - 1);
        if (kind == 5) return {"(" + t1 + ") and (" + t2 + ")", [p1, p2](const auto& v) { return p1(v) && p2(v); }};
        return {"(" + t1 + ") or (" + t2 + ")", [p1, p2](const auto& v) { return p1(v) || p2(v); }};
      }
      case 7: {
        auto [t1, p1] = expr(nvars, n, depth - 1);
        auto [t2, p2] = expr(nvars, n, depth - 1);
        return {"(" + t1 + ") -> (" + t2 + ")", [p1, p2](const auto& v) { return !p1(v) || p2(v); }};
      }
      default: {
        const bool value = pick(0, 1);
        return {value ? "true" : "false", [value](const auto&) { return value; }};
      }
    }
  }

  std::mt19937 rng_;
};

}  // namespace symbcot::testing
