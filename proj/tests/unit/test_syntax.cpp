#include <random>

#include "doctest.h"
#include "support/random_formulas.hpp"
#include "symbcot/syntax/fol.hpp"
#include "symbcot/syntax/translation.hpp"

using namespace symbcot;
using logic::Formula;
using logic::Term;

namespace {
Formula parse_ok(std::string_view text) {
  auto p = syntax::parse_formula(text);
  INFO(text);
  for (const auto& d : p.diagnostics) INFO(syntax::to_string(d));
  REQUIRE(p);
  return *p.value;
}
Formula A(const char* p, const char* c) { return Formula::atom(p, {Term::constant(c)}); }
Formula Ax(const char* p) { return Formula::atom(p, {Term::variable("x")}); }
}  // namespace

TEST_CASE("parses the Simpsons premises") {
  CHECK(parse_ok("∀x (Yellow(x) → Simpsons(x))") ==
        Formula::forall("x", Formula::implication(Ax("Yellow"), Ax("Simpsons"))));
  CHECK(parse_ok("(Yellow(ben) ∨ Ugly(ben))") ==
        Formula::disjunction(A("Yellow", "ben"), A("Ugly", "ben")));
}

TEST_CASE("ascii aliases give the same tree") {
  CHECK(parse_ok("forall x (P(x) -> Q(x))") == parse_ok("∀x (P(x) → Q(x))"));
  CHECK(parse_ok("~P(a) & Q(a) | R(a) ^ S(a) <-> T(a)") ==
        parse_ok("¬P(a) ∧ Q(a) ∨ R(a) ⊕ S(a) ↔ T(a)"));
  CHECK(parse_ok("not P(a)") == parse_ok("¬P(a)"));
  CHECK(parse_ok("P(a) ⇒ Q(a)") == parse_ok("P(a) → Q(a)"));
}

TEST_CASE("alias table is closed") {
  const std::map<std::string_view, std::string> samples = {
      {"∧", "P(a) {} Q(a)"}, {"∨", "P(a) {} Q(a)"}, {"⊕", "P(a) {} Q(a)"},
      {"→", "P(a) {} Q(a)"}, {"↔", "P(a) {} Q(a)"}, {"¬", "{} P(a)"},
      {"∀", "{} x P(x)"},    {"∃", "{} x P(x)"}};
  for (const auto& [alias, canonical] : syntax::connective_aliases()) {
    auto it = samples.find(canonical);
    REQUIRE(it != samples.end());
    auto fill = [&](std::string_view sym) {
      std::string s = it->second;
      s.replace(s.find("{}"), 2, sym);
      return s;
    };
    INFO(alias);
    CHECK(parse_ok(fill(alias)) == parse_ok(fill(canonical)));
  }
}

TEST_CASE("precedence and associativity") {
  auto f = parse_ok("P(a) → Q(a) → R(a)");
  CHECK(f == Formula::implication(A("P", "a"), Formula::implication(A("Q", "a"), A("R", "a"))));
  auto g = parse_ok("P(a) ∧ Q(a) ∨ R(a)");
  CHECK(g.kind() == Formula::Kind::Or);
  auto h = parse_ok("P(a) ∨ Q(a) ⊕ R(a)");
  CHECK(h.kind() == Formula::Kind::Xor);
}

TEST_CASE("polarity markers and variable conventions") {
  CHECK(parse_ok("Shy(Alex, False)") == Formula::negation(A("Shy", "Alex")));
  CHECK(parse_ok("Quiet(Anne, True)") == A("Quiet", "Anne"));
  auto r = parse_ok("Quiet($x, True) ⇒ Red($x, True)");
  CHECK(r.lhs().args()[0].is_variable());
  CHECK(parse_ok("P(x_1)").args()[0].is_variable());
  CHECK(parse_ok("P(ben)").args()[0].is_constant());
  CHECK(parse_ok("∀w P(w)").body().args()[0].is_variable());
}

TEST_CASE("printer canonical forms") {
  using syntax::print_formula;
  CHECK(print_formula(Formula::forall("x", Formula::implication(Ax("P"), Ax("Q")))) ==
        "∀x (P(x) → Q(x))");
  CHECK(print_formula(Formula::exclusive_or(A("A", "c"), A("B", "c"))) == "A(c) ⊕ B(c)");
  CHECK(print_formula(Formula::negation(Formula::negation(A("P", "a")))) == "¬¬P(a)");
  CHECK(print_formula(Formula::implication(Formula::implication(A("P", "a"), A("Q", "a")), A("R", "a"))) ==
        "(P(a) → Q(a)) → R(a)");
  CHECK(print_formula(Formula::conjunction(A("P", "a"), Formula::conjunction(A("Q", "a"), A("R", "a")))) ==
        "P(a) ∧ (Q(a) ∧ R(a))");
}

TEST_CASE("round trip over random formulas") {
  std::mt19937 rng(2024);
  testing::FormulaGenerator gen(rng);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    auto f = gen.closed(1 + static_cast<int>(rng() % 6));
    auto text = syntax::print_formula(f);
    auto back = syntax::parse_formula(text);
    if (!back || !logic::alpha_equal(*back.value, f)) {
      ++failures;
      INFO(text);
      CHECK(false);
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("diagnostics are positioned inside the input") {
  auto check_error = [](std::string_view text, std::string_view needle) {
    auto p = syntax::parse_formula(text);
    INFO(text);
    REQUIRE_FALSE(p);
    REQUIRE_FALSE(p.diagnostics.empty());
    CHECK(p.diagnostics.front().position <= text.size());
    CHECK(p.diagnostics.front().message.find(needle) != std::string::npos);
  };
  check_error("∀x (P(x)", "unbalanced parenthesis");
  check_error("P(a))", "unbalanced parenthesis");
  check_error("P(a) @ Q(a)", "unknown symbol");
  check_error("∀x", "dangling quantifier");
  check_error("", "");
  auto p = syntax::parse_formula("∀x (P(x)");
  CHECK(p.diagnostics.front().position == std::string_view("∀x (P(x)").size());

  syntax::Signature sig{{"P", 2}};
  auto q = syntax::parse_formula("P(a)", &sig);
  REQUIRE_FALSE(q);
  CHECK(q.diagnostics.front().message.find("arity") != std::string::npos);
}

TEST_CASE("rule printing") {
  logic::Rule r{{{"Jompus", {Term::variable("x")}, true}}, {"Fruity", {Term::variable("x")}, true}};
  CHECK(syntax::print_rule(r) == "Jompus(x, True) ⇒ Fruity(x, True)");
  CHECK(syntax::print_rule(r, true) == "∀x (Jompus(x) → Fruity(x))");
}

namespace {
const char* kProntoQA = R"(Predicates:
- Jompus($x, bool) ::: Does x belong to Jompus?
- Fruity($x, bool) ::: Is x fruity?
- Tumpus($x, bool) ::: Does x belong to Tumpus?
- Shy($x, bool) ::: Is x shy?
- Dumpus($x, bool) ::: Does x belong to Dumpus?
Facts:
- Tumpus(Alex, True) ::: Alex is a tumpus.
Rules:
- Jompus($x, True) >>> Fruity($x, True) ::: Each jompus is fruity.
- Tumpus($x, True) ⇒ Dumpus($x, True) ::: Tumpuses are dumpuses.
- Dumpus($x, True) ⇒ Shy($x, False) ::: Every dumpus is not shy.
Query:
- Shy(Alex, False) ::: Alex is not shy
)";
}

TEST_CASE("translation block: signed-literal style") {
  std::string text = kProntoQA;
  text.replace(text.find(">>>"), 3, "⇒");
  auto p = syntax::parse_translation_block(text);
  REQUIRE(p);
  CHECK(p.diagnostics.empty());
  CHECK(p->executable);
  REQUIRE(p->kb.has_value());
  CHECK(p->kb->facts().size() == 1);
  CHECK(p->kb->rules().size() == 3);
  CHECK(p->predicates.size() == 5);
  CHECK(p->predicates[0].arity == 1);
  REQUIRE(p->query.has_value());
  CHECK(p->query->polarity == false);
  CHECK(p->statement->gloss == "Alex is not shy");
}

TEST_CASE("translation block: one malformed line") {
  auto p = syntax::parse_translation_block(kProntoQA);  // contains ">>>"
  REQUIRE(p);
  CHECK(p.diagnostics.size() == 1);
  CHECK(p.diagnostics[0].line == 10);
  CHECK_FALSE(p->executable);
  CHECK(p.diagnostics[0].position < std::string_view(kProntoQA).size());
}

TEST_CASE("translation block: FOL style with colon glosses") {
  const char* text = R"(**Predicates:**
Yellow(x): x is yellow
Simpsons(x): x is a Simpsons character
Loved(x): x is loved
**Premises:**
1. ∀x (Yellow(x) → Simpsons(x)) ::: All yellow cartoon characters are Simpsons.
2. ¬Loved(ben) ::: Ben is not loved.
**Conclusion:**
(Yellow(ben) ∨ Ugly(ben)) ::: Ben is either yellow or ugly.
)";
  auto p = syntax::parse_translation_block(text);
  REQUIRE(p);
  CHECK(p.diagnostics.empty());
  CHECK(p->executable);
  CHECK_FALSE(p->kb.has_value());
  CHECK(p->premises.size() == 2);
  CHECK(p->premises[0].formula == parse_ok("∀x (Yellow(x) → Simpsons(x))"));
  CHECK(p->statement->formula.kind() == Formula::Kind::Or);
  // The canonical print parses back to the same block.
  auto again = syntax::parse_translation_block(syntax::print_translation_block(*p.value));
  REQUIRE(again);
  CHECK(again->premises.size() == 2);
  CHECK(again->statement->formula == p->statement->formula);
}

TEST_CASE("translation block errors") {
  auto empty = syntax::parse_translation_block("");
  CHECK_FALSE(empty);
  REQUIRE(empty.diagnostics.size() == 1);
  CHECK(empty.diagnostics[0].message == "no sections found");

  auto no_query = syntax::parse_translation_block("Premises:\nP(a)\n");
  CHECK_FALSE(no_query);
  CHECK(no_query.has_errors());

  auto contradiction = syntax::parse_translation_block("Facts:\nP(a, True)\nP(a, False)\nQuery:\nP(a, True)\n");
  REQUIRE(contradiction);
  CHECK_FALSE(contradiction->executable);

  auto arity = syntax::parse_translation_block("Premises:\nP(a)\nP(a, b)\nQuery:\nP(a)\n");
  REQUIRE(arity);
  CHECK_FALSE(arity->executable);
}

TEST_CASE("rules_from_formula lowers disjunctive bodies and conjunctive heads") {
  auto f = parse_ok("∀x (Red(x) ∨ Blue(x) → Big(x) ∧ ¬Small(x))");
  auto rules = syntax::rules_from_formula(f);
  REQUIRE(rules.has_value());
  CHECK(rules->size() == 4);
  std::string why;
  CHECK_FALSE(syntax::rules_from_formula(parse_ok("P(x) → Q(y)"), &why));
  CHECK(why.find("range") != std::string::npos);
}
