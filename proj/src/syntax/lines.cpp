#include "symbcot/syntax/lines.hpp"

#include <cctype>

namespace symbcot::syntax {

std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    out.push_back({start, number++, raw});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

void erase_all(std::string& s, std::string_view what) {
  for (std::size_t pos; (pos = s.find(what)) != std::string::npos;) s.erase(pos, what.size());
}

}  // namespace

std::string clean_line(std::string_view line) {
  std::string s = trim(line);
  erase_all(s, "**");
  erase_all(s, "`");
  s = trim(s);
  while (!s.empty() && s.front() == '#') s = trim(std::string_view(s).substr(1));
  for (std::string_view bullet : {"- ", "* ", "• ", "+ "}) {
    if (starts_with(s, bullet)) {
      s = trim(std::string_view(s).substr(bullet.size()));
      break;
    }
  }
  // "1. " or "12) " numbering, but not option letters such as "A) x == 1".
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i > 0 && i + 1 < s.size() && (s[i] == '.' || s[i] == ')') && s[i + 1] == ' ')
    s = trim(std::string_view(s).substr(i + 2));
  return s;
}

std::pair<std::string, std::string> split_gloss(std::string_view line, bool allow_colon) {
  if (auto pos = line.find(":::"); pos != std::string_view::npos)
    return {trim(line.substr(0, pos)), trim(line.substr(pos + 3))};
  if (allow_colon) {
    int depth = 0;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      const char c = line[i];
      if (c == '(' || c == '[' || c == '{') ++depth;
      else if (c == ')' || c == ']' || c == '}') --depth;
      else if (c == ':' && depth == 0 && line[i + 1] == ' ')
        return {trim(line.substr(0, i)), trim(line.substr(i + 1))};
    }
  }
  return {trim(line), {}};
}

bool parse_header(std::string_view cleaned, std::string& name, std::string& rest) {
  std::string_view head = cleaned;
  std::string_view tail;
  if (auto colon = cleaned.find(':'); colon != std::string_view::npos) {
    head = cleaned.substr(0, colon);
    tail = cleaned.substr(colon + 1);
    if (!tail.empty() && tail.front() == ':') return false;  // ":::" gloss
  }
  if (head.find('(') != std::string_view::npos && head.find(')') != std::string_view::npos &&
      head.find('(') < head.find(')')) {
    // Allow "Queries for Options (which one ... must be true?)" style headers,
    // but a predicate application such as "Jompus(x)" is never one.
    const auto open = head.find('(');
    if (open == 0 || head[open - 1] != ' ') return false;
    head = head.substr(0, open);
  }
  std::string words = trim(head);
  if (words.empty()) return false;
  std::size_t word_count = 1;
  for (char c : words) {
    if (c == ' ') ++word_count;
    else if (!std::isalpha(static_cast<unsigned char>(c)) && c != '-' && c != '_') return false;
  }
  if (word_count > 5) return false;
  name = to_lower(words);
  rest = trim(tail);
  return true;
}

std::size_t offset_within(std::string_view line, std::string_view needle) {
  if (needle.empty()) return 0;
  auto pos = line.find(needle);
  return pos == std::string_view::npos ? 0 : pos;
}

}  // namespace symbcot::syntax
