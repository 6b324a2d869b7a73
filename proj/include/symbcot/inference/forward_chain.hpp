#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symbcot/logic/knowledge_base.hpp"
#include "symbcot/logic/label.hpp"

namespace symbcot::inference {

using Substitution = std::map<std::string, logic::Term>;

struct RuleApplication {
  logic::Rule rule;
  Substitution substitution;
};

struct Derivation {
  logic::SignedLiteral literal;
  std::size_t depth = 0;               // 0 for given facts
  std::optional<RuleApplication> via;  // absent exactly when depth == 0
};

struct ChainResult {
  // Sorted by depth, then literal.
  std::vector<Derivation> derivations;
  // Rounds stopped at max_depth while new literals were still derivable.
  bool truncated = false;

  const Derivation* find(const logic::SignedLiteral& lit) const;
};

inline constexpr std::size_t kDefaultMaxDepth = 20;

// Least fixpoint of rule application, each literal at its minimal depth.
// Throws logic::InconsistencyError when both polarities become derivable.
ChainResult forward_chain(const logic::KnowledgeBase& kb, std::size_t max_depth = kDefaultMaxDepth);

// Open-world answer for a ground query literal: True when derivable, False
// when its negation is, Unknown otherwise.
logic::Label decide(const logic::KnowledgeBase& kb, const logic::SignedLiteral& query,
                    std::size_t max_depth = kDefaultMaxDepth);

}  // namespace symbcot::inference
