#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symbcot::logic {

// Answer labels: truth values for true/false/unknown datasets and option
// letters for multiple choice (seven-object LogicalDeduction puzzles reach G).
enum class Label { True, False, Unknown, A, B, C, D, E, F, G };

// A prediction; std::nullopt means Undecided.
using Prediction = std::optional<Label>;

std::string to_string(Label label);
std::string to_string(const Prediction& prediction);  // "Undecided" for nullopt

// Case-insensitive. Accepts true/false/unknown, "uncertain" as Unknown,
// T/F/U and the letters A-G.
std::optional<Label> parse_label(std::string_view text);

bool is_truth_value(Label label);
std::optional<Label> option_letter(char c);
char letter_of(Label option);  // 'A'..'G'; throws for truth values

// The labels a dataset allows, in canonical order.
using LabelSpace = std::vector<Label>;

LabelSpace true_false_space();
LabelSpace true_false_unknown_space();
LabelSpace option_space(std::size_t count);  // A.. up to G

}  // namespace symbcot::logic
