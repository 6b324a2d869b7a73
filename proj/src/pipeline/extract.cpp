#include "symbcot/pipeline/extract.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <string>
#include <vector>

namespace symbcot::pipeline {

using logic::Label;
using logic::Prediction;

namespace {

bool in_space(const logic::LabelSpace& space, Label l) {
  return std::find(space.begin(), space.end(), l) != space.end();
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Strips markdown/LaTeX emphasis so "**B)**" and "\textbf{B)}" read as "B)".
std::string strip_emphasis(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 8) == "\\textbf{") {
      const auto close = text.find('}', i);
      if (close != std::string_view::npos) {
        out.append(text.substr(i + 8, close - i - 8));
        i = close;
        continue;
      }
    }
    if (text[i] == '*' || text[i] == '`') continue;
    out += text[i];
  }
  return out;
}

class Matcher {
 public:
  Matcher(const logic::LabelSpace& space, const LetterAliases& aliases) : space_(space), aliases_(aliases) {}

  bool truth_space() const {
    return std::any_of(space_.begin(), space_.end(), [](Label l) { return logic::is_truth_value(l); });
  }

  Prediction word(std::string_view w) const {
    auto l = logic::parse_label(w);
    if (!l || !logic::is_truth_value(*l) || !in_space(space_, *l)) return std::nullopt;
    return l;
  }

  Prediction letter(char c) const {
    if (auto it = aliases_.find(c); it != aliases_.end() && in_space(space_, it->second)) return it->second;
    auto l = logic::option_letter(c);
    if (l && in_space(space_, *l)) return l;
    return std::nullopt;
  }

  // A label token starting at `pos` of `text`: a truth word or an uppercase
  // option letter that stands alone.
  Prediction token_at(const std::string& text, std::size_t pos) const {
    while (pos < text.size() && (text[pos] == '(' || text[pos] == '[' || text[pos] == '"' || text[pos] == '\''))
      ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) return std::nullopt;
    if (end - pos == 1) return std::isupper(static_cast<unsigned char>(text[pos])) ? letter(text[pos]) : std::nullopt;
    return word(std::string_view(text).substr(pos, end - pos));
  }

 private:
  const logic::LabelSpace& space_;
  const LetterAliases& aliases_;
};

Prediction braced(const std::string& text, const Matcher& m) {
  static const std::regex pattern(R"(\{\s*([A-Za-z]+)\s*\})");
  Prediction found;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern); it != std::sregex_iterator(); ++it) {
    const std::string body = (*it)[1];
    Prediction p = body.size() == 1
                       ? m.letter(static_cast<char>(std::toupper(static_cast<unsigned char>(body[0]))))
                       : m.word(body);
    if (p) found = p;
  }
  return found;
}

Prediction answer_phrase(const std::string& text, const Matcher& m) {
  // Matched on the lower-cased text; the label token is read from the original
  // so that option letters must be uppercase.
  static const std::regex pattern(
      R"((final answer|correct option|correct answer|answer)\s*(is|:|=|-)?\s*(:)?\s*(option\s+)?)");
  const std::string low = lower(text);
  Prediction found;
  for (auto it = std::sregex_iterator(low.begin(), low.end(), pattern); it != std::sregex_iterator(); ++it) {
    const auto start = static_cast<std::size_t>(it->position(0));
    if (start > 0 && is_word_char(low[start - 1])) continue;
    if (auto p = m.token_at(text, start + static_cast<std::size_t>(it->length(0)))) found = p;
  }
  return found;
}

Prediction truth_phrase(const std::string& text, const Matcher& m) {
  static const std::regex pattern(R"(\b(is|be|remains|remain|as)\s+"?(true|false|unknown|uncertain)\b)");
  const std::string low = lower(text);
  Prediction found;
  for (auto it = std::sregex_iterator(low.begin(), low.end(), pattern); it != std::sregex_iterator(); ++it)
    if (auto p = m.word((*it)[2].str())) found = p;
  return found;
}

Prediction conclusion_letter(const std::string& text, const Matcher& m) {
  static const std::regex cue(R"(\b(therefore|thus|hence|conclusion|answer)\b)");
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (auto line = lines.rbegin(); line != lines.rend(); ++line) {
    if (!std::regex_search(lower(*line), cue)) continue;
    Prediction found;
    for (std::size_t i = 0; i < line->size(); ++i) {
      const char c = (*line)[i];
      if (!std::isupper(static_cast<unsigned char>(c))) continue;
      const bool alone_before = i == 0 || !is_word_char((*line)[i - 1]);
      const bool alone_after = i + 1 == line->size() || !is_word_char((*line)[i + 1]);
      if (alone_before && alone_after)
        if (auto p = m.letter(c)) found = p;
    }
    return found;
  }
  return std::nullopt;
}

}  // namespace

Prediction extract_label(std::string_view raw, const logic::LabelSpace& space, const LetterAliases& aliases) {
  const Matcher m(space, aliases);
  const std::string text = strip_emphasis(raw);
  if (auto p = braced(text, m)) return p;
  if (auto p = answer_phrase(text, m)) return p;
  if (m.truth_space())
    if (auto p = truth_phrase(text, m)) return p;
  return conclusion_letter(text, m);
}

}  // namespace symbcot::pipeline
