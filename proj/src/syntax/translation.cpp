#include "symbcot/syntax/translation.hpp"

#include <algorithm>

namespace symbcot::syntax {

using logic::Formula;
using logic::Rule;
using logic::SignedLiteral;

namespace {

enum class Section { None, Ignored, Predicates, Premises, Facts, Rules, Query };

std::optional<Section> section_for(const std::string& name) {
  if (name.find("rule") != std::string::npos) return Section::Rules;
  auto starts = [&](std::string_view p) { return name.rfind(p, 0) == 0; };
  if (starts("predicate")) return Section::Predicates;
  if (starts("premise")) return Section::Premises;
  if (starts("fact")) return Section::Facts;
  if (starts("quer") || starts("statement") || starts("conclusion") || starts("hypothesis"))
    return Section::Query;
  for (std::string_view ignored :
       {"translation", "problem", "question", "context", "plan", "task", "options", "output",
        "input", "answer", "explanation", "note"})
    if (starts(ignored)) return Section::Ignored;
  return std::nullopt;
}

void flatten_and(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::And) {
    flatten_and(f.lhs(), out);
    flatten_and(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

void flatten_or(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::Or) {
    flatten_or(f.lhs(), out);
    flatten_or(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

bool literals_of_conjunction(const Formula& f, std::vector<SignedLiteral>& out) {
  std::vector<Formula> parts;
  flatten_and(f, parts);
  for (const auto& p : parts) {
    SignedLiteral lit;
    if (!logic::literal_from_formula(p, lit)) return false;
    out.push_back(std::move(lit));
  }
  return true;
}

}  // namespace

// Lowers `∀x (A(x) ∧ B(x) → C(x))`-shaped formulas to Horn rules. A
// disjunctive body yields one rule per disjunct and a conjunctive head one
// rule per conjunct.
std::optional<std::vector<Rule>> rules_from_formula(const Formula& formula, std::string* why) {
  Formula f = formula;
  while (f.kind() == Formula::Kind::ForAll) f = f.body();
  if (f.kind() != Formula::Kind::Implies) {
    if (why) *why = "rule is not an implication";
    return std::nullopt;
  }
  std::vector<Formula> disjuncts;
  flatten_or(f.lhs(), disjuncts);
  std::vector<SignedLiteral> heads;
  if (!literals_of_conjunction(f.rhs(), heads)) {
    if (why) *why = "rule head is not a literal or conjunction of literals";
    return std::nullopt;
  }
  std::vector<Rule> rules;
  for (const auto& d : disjuncts) {
    std::vector<SignedLiteral> body;
    if (!literals_of_conjunction(d, body)) {
      if (why) *why = "rule body is not a conjunction of literals";
      return std::nullopt;
    }
    for (const auto& h : heads) rules.push_back({body, h});
  }
  for (const auto& r : rules) {
    std::set<std::string> body_vars;
    for (const auto& lit : r.body)
      for (const auto& t : lit.args) t.collect_variables(body_vars);
    std::set<std::string> head_vars;
    for (const auto& t : r.head.args) t.collect_variables(head_vars);
    for (const auto& v : head_vars) {
      if (!body_vars.contains(v)) {
        if (why) *why = "rule is not range-restricted: variable " + v + " occurs only in the head";
        return std::nullopt;
      }
    }
  }
  return rules;
}

namespace {

class BlockParser {
 public:
  explicit BlockParser(std::string_view text) : text_(text) {}

  Parsed<TranslationBlock> run() {
    Parsed<TranslationBlock> result;
    if (trim(text_).empty()) {
      result.diagnostics.push_back({0, "no sections found"});
      return result;
    }
    Section section = Section::None;
    bool any_section = false;
    for (const auto& line : split_lines(text_)) {
      std::string cleaned = clean_line(line.raw);
      if (cleaned.empty()) continue;
      std::string name, rest;
      if (parse_header(cleaned, name, rest)) {
        if (auto s = section_for(name)) {
          section = *s;
          any_section = any_section || section != Section::Ignored;
          if (!rest.empty()) handle(section, line, rest);
          continue;
        }
      }
      if (section == Section::None || section == Section::Ignored) continue;
      handle(section, line, cleaned);
    }
    if (!any_section) {
      result.diagnostics = {{0, "no sections found"}};
      return result;
    }
    if (!block_.statement) {
      diag(text_.size(), 0, "missing Query/Statement section");
      result.diagnostics = std::move(block_.diagnostics);
      return result;
    }
    if (kb_style_) {
      try {
        block_.kb = logic::KnowledgeBase(facts_, rules_);
      } catch (const logic::KnowledgeBaseError& e) {
        diag(0, 0, e.what());
      }
    }
    block_.executable = std::none_of(block_.diagnostics.begin(), block_.diagnostics.end(),
                                     [](const ParseDiagnostic& d) { return d.is_error(); });
    result.diagnostics = block_.diagnostics;
    result.value = std::move(block_);
    return result;
  }

 private:
  void diag(std::size_t pos, std::size_t line, std::string message,
            ParseDiagnostic::Severity sev = ParseDiagnostic::Severity::Error) {
    block_.diagnostics.push_back({std::min(pos, text_.size()), std::move(message), sev, line});
  }

  std::optional<Formula> formula(const SourceLine& line, const std::string& logic_text) {
    auto parsed = parse_formula(logic_text, &signature_);
    const std::size_t base = line.offset + offset_within(line.raw, logic_text);
    if (!parsed) {
      for (const auto& d : parsed.diagnostics) diag(base + d.position, line.number, d.message);
      return std::nullopt;
    }
    std::string conflict;
    if (!logic::collect_arities(*parsed.value, signature_, &conflict)) {
      diag(base, line.number, "arity mismatch for predicate " + conflict);
      return std::nullopt;
    }
    return parsed.value;
  }

  void handle(Section section, const SourceLine& line, const std::string& content) {
    switch (section) {
      case Section::Predicates: return handle_predicate(line, content);
      case Section::Premises: return handle_premise(line, content);
      case Section::Facts: return handle_fact(line, content);
      case Section::Rules: return handle_rule(line, content);
      case Section::Query: return handle_query(line, content);
      default: return;
    }
  }

  void handle_predicate(const SourceLine& line, const std::string& content) {
    auto [logic_text, gloss] = split_gloss(content, true);
    // `Quiet($x, bool)` declares a unary predicate in polarity style.
    std::string decl = logic_text;
    for (std::string_view marker : {", bool)", ",bool)"}) {
      if (auto pos = decl.find(marker); pos != std::string::npos) decl.replace(pos, marker.size(), ")");
    }
    auto parsed = parse_formula(decl);
    const std::size_t base = line.offset + offset_within(line.raw, logic_text);
    if (!parsed || !parsed.value->is_atom()) {
      if (!parsed) {
        for (const auto& d : parsed.diagnostics) diag(base + d.position, line.number, d.message);
      } else {
        diag(base, line.number, "predicate declaration is not an atom");
      }
      return;
    }
    const auto& atom = *parsed.value;
    auto [it, inserted] = signature_.emplace(atom.predicate(), atom.args().size());
    if (!inserted && it->second != atom.args().size()) {
      diag(base, line.number, "arity mismatch for predicate " + atom.predicate());
      return;
    }
    block_.predicates.push_back({atom.predicate(), atom.args().size(), gloss});
  }

  void handle_premise(const SourceLine& line, const std::string& content) {
    auto [logic_text, gloss] = split_gloss(content, true);
    if (auto f = formula(line, logic_text))
      block_.premises.push_back({*f, gloss, GlossedFormula::Origin::Premise});
  }

  void handle_fact(const SourceLine& line, const std::string& content) {
    kb_style_ = true;
    auto [logic_text, gloss] = split_gloss(content, true);
    auto f = formula(line, logic_text);
    if (!f) return;
    std::vector<SignedLiteral> lits;
    const std::size_t base = line.offset + offset_within(line.raw, logic_text);
    if (!literals_of_conjunction(*f, lits)) {
      diag(base, line.number, "fact is not a literal or conjunction of literals");
      return;
    }
    for (auto& lit : lits) {
      if (!lit.is_ground()) {
        diag(base, line.number, "fact is not ground: " + logic::to_string(lit));
        return;
      }
    }
    facts_.insert(facts_.end(), lits.begin(), lits.end());
    block_.premises.push_back({*f, gloss, GlossedFormula::Origin::Fact});
  }

  void handle_rule(const SourceLine& line, const std::string& content) {
    kb_style_ = true;
    auto [logic_text, gloss] = split_gloss(content, true);
    auto f = formula(line, logic_text);
    if (!f) return;
    const std::size_t base = line.offset + offset_within(line.raw, logic_text);
    // Ground literals listed under a rules header are facts.
    std::vector<SignedLiteral> lits;
    if (literals_of_conjunction(*f, lits) &&
        std::all_of(lits.begin(), lits.end(), [](const SignedLiteral& l) { return l.is_ground(); })) {
      facts_.insert(facts_.end(), lits.begin(), lits.end());
      block_.premises.push_back({*f, gloss, GlossedFormula::Origin::Fact});
      return;
    }
    std::string why;
    auto rules = rules_from_formula(*f, &why);
    if (!rules) {
      diag(base, line.number, why);
      return;
    }
    rules_.insert(rules_.end(), rules->begin(), rules->end());
    block_.premises.push_back({*f, gloss, GlossedFormula::Origin::Rule});
  }

  void handle_query(const SourceLine& line, const std::string& content) {
    auto [logic_text, gloss] = split_gloss(content, true);
    if (block_.statement) {
      diag(line.offset, line.number, "additional query line ignored",
           ParseDiagnostic::Severity::Warning);
      return;
    }
    auto f = formula(line, logic_text);
    if (!f) {
      query_failed_ = true;
      // Keep a placeholder so a malformed query is a line diagnostic rather
      // than a missing section.
      block_.statement = GlossedFormula{Formula::atom("Malformed"), gloss,
                                        GlossedFormula::Origin::Statement};
      return;
    }
    block_.statement = GlossedFormula{*f, gloss, GlossedFormula::Origin::Statement};
    SignedLiteral lit;
    if (logic::literal_from_formula(*f, lit) && lit.is_ground()) block_.query = lit;
  }

  std::string_view text_;
  TranslationBlock block_;
  Signature signature_;
  std::vector<SignedLiteral> facts_;
  std::vector<Rule> rules_;
  bool kb_style_ = false;
  bool query_failed_ = false;
};

}  // namespace

Parsed<TranslationBlock> parse_translation_block(std::string_view text) {
  return BlockParser(text).run();
}

std::string print_translation_block(const TranslationBlock& block) {
  std::string out;
  auto line = [&](const std::string& logic_text, const std::string& gloss) {
    out += logic_text;
    if (!gloss.empty()) out += " ::: " + gloss;
    out += "\n";
  };
  if (!block.predicates.empty()) {
    out += "Predicates:\n";
    for (const auto& p : block.predicates) {
      std::string sig = p.name;
      if (p.arity) {
        sig += "(";
        for (std::size_t i = 0; i < p.arity; ++i) {
          if (i) sig += ", ";
          sig += i < 3 ? std::string(1, static_cast<char>('x' + i)) : "x" + std::to_string(i);
        }
        sig += ")";
      }
      line(sig, p.gloss);
    }
  }
  using Origin = GlossedFormula::Origin;
  for (auto [origin, header] : {std::pair{Origin::Premise, "Premises:\n"},
                                std::pair{Origin::Fact, "Facts:\n"},
                                std::pair{Origin::Rule, "Rules:\n"}}) {
    bool any = false;
    for (const auto& p : block.premises) {
      if (p.origin != origin) continue;
      if (!any) out += header;
      any = true;
      line(print_formula(p.formula), p.gloss);
    }
  }
  if (block.statement) {
    out += "Query:\n";
    line(print_formula(block.statement->formula), block.statement->gloss);
  }
  return out;
}

}  // namespace symbcot::syntax
