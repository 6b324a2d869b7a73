#include "symbcot/logic/label.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace symbcot::logic {

std::string to_string(Label label) {
  switch (label) {
    case Label::True: return "True";
    case Label::False: return "False";
    case Label::Unknown: return "Unknown";
    case Label::A: return "A";
    case Label::B: return "B";
    case Label::C: return "C";
    case Label::D: return "D";
    case Label::E: return "E";
    case Label::F: return "F";
    case Label::G: return "G";
  }
  return "?";
}

std::string to_string(const Prediction& prediction) {
  return prediction ? to_string(*prediction) : "Undecided";
}

std::optional<Label> parse_label(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "true" || s == "t") return Label::True;
  if (s == "false" || s == "f") return Label::False;
  if (s == "unknown" || s == "uncertain" || s == "u") return Label::Unknown;
  if (s.size() == 1) return option_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
  return std::nullopt;
}

bool is_truth_value(Label label) {
  return label == Label::True || label == Label::False || label == Label::Unknown;
}

std::optional<Label> option_letter(char c) {
  switch (c) {
    case 'A': return Label::A;
    case 'B': return Label::B;
    case 'C': return Label::C;
    case 'D': return Label::D;
    case 'E': return Label::E;
    case 'F': return Label::F;
    case 'G': return Label::G;
    default: return std::nullopt;
  }
}

char letter_of(Label option) {
  if (is_truth_value(option)) throw std::invalid_argument("not an option letter: " + to_string(option));
  return static_cast<char>('A' + (static_cast<int>(option) - static_cast<int>(Label::A)));
}

LabelSpace true_false_space() { return {Label::True, Label::False}; }
LabelSpace true_false_unknown_space() { return {Label::True, Label::False, Label::Unknown}; }

LabelSpace option_space(std::size_t count) {
  LabelSpace out;
  for (std::size_t i = 0; i < std::min<std::size_t>(count, 7); ++i)
    out.push_back(static_cast<Label>(static_cast<int>(Label::A) + static_cast<int>(i)));
  return out;
}

}  // namespace symbcot::logic
