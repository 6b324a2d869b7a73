#include "symbcot/logic/proof.hpp"

#include <cctype>

namespace symbcot::logic {

std::string to_string(InferenceRule rule) {
  switch (rule) {
    case InferenceRule::ModusPonens: return "ModusPonens";
    case InferenceRule::ModusTollens: return "ModusTollens";
    case InferenceRule::UniversalInstantiation: return "UniversalInstantiation";
    case InferenceRule::ExistentialInstantiation: return "ExistentialInstantiation";
    case InferenceRule::AndElim: return "AndElim";
    case InferenceRule::AndIntro: return "AndIntro";
    case InferenceRule::OrIntro: return "OrIntro";
    case InferenceRule::DisjunctiveSyllogism: return "DisjunctiveSyllogism";
    case InferenceRule::HypotheticalSyllogism: return "HypotheticalSyllogism";
    case InferenceRule::Contradiction: return "Contradiction";
    case InferenceRule::IffElim: return "IffElim";
  }
  return "?";
}

InferenceRule parse_inference_rule(std::string_view name) {
  std::string key;
  for (char c : name)
    if (std::isalpha(static_cast<unsigned char>(c)))
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (InferenceRule rule : kAllInferenceRules) {
    std::string canonical;
    for (char c : to_string(rule)) canonical += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == canonical) return rule;
  }
  // Common long-form spellings.
  if (key == "andelimination" || key == "simplification") return InferenceRule::AndElim;
  if (key == "andintroduction" || key == "conjunction") return InferenceRule::AndIntro;
  if (key == "orintroduction" || key == "addition") return InferenceRule::OrIntro;
  if (key == "iffelimination" || key == "biconditionalelimination") return InferenceRule::IffElim;
  if (key == "proofbycontradiction" || key == "reductioadabsurdum") return InferenceRule::Contradiction;
  throw UnknownRuleError(std::string(name));
}

}  // namespace symbcot::logic
