#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symbcot::syntax {

struct SourceLine {
  std::size_t offset = 0;  // byte offset of the line start
  std::size_t number = 0;  // 1-based
  std::string_view raw;
};

std::vector<SourceLine> split_lines(std::string_view text);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Strips list bullets, numbering, backticks and bold markers from a line.
std::string clean_line(std::string_view line);

// Splits `logic ::: gloss`; when `allow_colon` is set a single `: ` at
// parenthesis depth zero also separates the gloss.
std::pair<std::string, std::string> split_gloss(std::string_view line, bool allow_colon);

// Recognizes a section header such as `Facts:` or `**Query:** P(a)`.
// `name` receives the lower-cased header words, `rest` any inline content
// after the colon. Lines whose header part contains '(' are never headers.
bool parse_header(std::string_view cleaned, std::string& name, std::string& rest);

// Offset of `needle` inside `line`, falling back to 0.
std::size_t offset_within(std::string_view line, std::string_view needle);

}  // namespace symbcot::syntax
