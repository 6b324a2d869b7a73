#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symbcot::syntax {

struct ParseDiagnostic {
  enum class Severity { Error, Warning };

  std::size_t position = 0;  // byte offset into the parsed text
  std::string message;
  Severity severity = Severity::Error;
  std::size_t line = 0;  // 1-based line for block parsers, 0 when not applicable

  bool is_error() const noexcept { return severity == Severity::Error; }
};

std::string to_string(const ParseDiagnostic& d);

// Outcome of a parse: a value, diagnostics, or both (partial success).
template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  explicit operator bool() const noexcept { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
  bool has_errors() const {
    for (const auto& d : diagnostics)
      if (d.is_error()) return true;
    return false;
  }
};

}  // namespace symbcot::syntax
