#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/logic/formula.hpp"
#include "symbcot/logic/knowledge_base.hpp"
#include "symbcot/syntax/diagnostic.hpp"
#include "symbcot/syntax/fol.hpp"
#include "symbcot/syntax/lines.hpp"

namespace symbcot::syntax {

struct PredicateDecl {
  std::string name;
  std::size_t arity = 0;
  std::string gloss;
};

struct GlossedFormula {
  enum class Origin { Premise, Fact, Rule, Statement };

  logic::Formula formula;
  std::string gloss;
  Origin origin = Origin::Premise;
};

// The symbolic context produced by the translation stage.
struct TranslationBlock {
  std::vector<PredicateDecl> predicates;
  // Every parsed premise, fact and rule line, in input order.
  std::vector<GlossedFormula> premises;
  std::optional<GlossedFormula> statement;
  // Present when the block uses Facts/Rules sections (signed-literal style).
  std::optional<logic::KnowledgeBase> kb;
  // The statement as a signed literal, when it is one.
  std::optional<logic::SignedLiteral> query;
  std::vector<ParseDiagnostic> diagnostics;
  // False when any line failed to parse; the symbolic engines must not run.
  bool executable = false;
};

// Splits the block on its labeled headers (Predicates, Premises, Facts, Rules,
// Query/Statement/Conclusion) and parses each line. `::: gloss` suffixes are
// kept as metadata. Returns no value for empty input or a block without a
// statement; otherwise a block whose `executable` flag reflects per-line
// failures.
Parsed<TranslationBlock> parse_translation_block(std::string_view text);

// Lowers a universally closed implication with a literal-conjunction
// (optionally disjunctive) body and a literal-conjunction head to Horn rules.
// Returns nullopt and sets `why` for any other shape.
std::optional<std::vector<logic::Rule>> rules_from_formula(const logic::Formula& f,
                                                          std::string* why = nullptr);

// Canonical rendering of a block, one section per header.
std::string print_translation_block(const TranslationBlock& block);

}  // namespace symbcot::syntax
