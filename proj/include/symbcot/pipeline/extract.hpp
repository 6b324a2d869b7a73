#pragma once

#include <map>
#include <string_view>

#include "symbcot/logic/label.hpp"

namespace symbcot::pipeline {

// Option letters that stand for labels outside the option space, e.g.
// "A) True" / "B) False" in prompts for true/false datasets.
using LetterAliases = std::map<char, logic::Label>;

// Finds the answer a model response commits to, trying in order: the last
// brace-wrapped label ("{false}", "{B}"); the last answer phrase ("final
// answer is A", "The correct option is: B)", "the answer is unknown"); for
// truth-value spaces the last "is/be/remains true|false|unknown"; and a
// standalone option letter on the last concluding line. Only labels in
// `space` count; "uncertain" reads as Unknown. Undecided when nothing matches.
logic::Prediction extract_label(std::string_view text, const logic::LabelSpace& space,
                                const LetterAliases& aliases = {});

}  // namespace symbcot::pipeline
