#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symbcot/corpus/problem.hpp"
#include "symbcot/llm/gateway.hpp"

namespace symbcot::pipeline {

enum class Stage { Translator, Planner, Solver, Verifier, Naive, CoT };

std::string to_string(Stage s);        // "Translator", ...
std::string file_stem(Stage s);        // "translator", ...
std::optional<Stage> parse_stage(std::string_view name);  // case-insensitive

// Directory name of a dataset's template set ("prontoqa", ..., "arlsat").
std::string template_dir_name(corpus::Dataset d);

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Demo {
  std::string input, output;
};

struct PromptTemplate {
  Stage stage = Stage::Translator;
  corpus::Dataset dataset = corpus::Dataset::ProntoQA;
  std::string text;
  std::vector<Demo> demos;

  // Placeholder names referenced by `text`, in first-occurrence order.
  std::vector<std::string> placeholders() const;
};

// The placeholders every template for `stage` must reference.
const std::vector<std::string>& required_placeholders(Stage s);

using Bindings = std::map<std::string, std::string>;

// Parses the `=== template ===` / `=== demo input ===` / `=== demo output ===`
// file format and checks the stage's required placeholders. Throws
// TemplateError.
PromptTemplate parse_template(Stage stage, corpus::Dataset dataset, std::string_view text);

// The embedded template, or the file <dir>/<dataset>/<stage>.txt when `dir`
// is given. Throws TemplateError.
PromptTemplate load_template(Stage stage, corpus::Dataset dataset,
                             const std::optional<std::filesystem::path>& dir = std::nullopt);

// Substitutes every known placeholder; other braces (e.g. "{true/false}") are
// left alone. Throws TemplateError when a referenced placeholder is unbound.
std::string render(std::string_view text, const Bindings& bindings);

// One user/assistant pair per demo (at most `demo_count`), then the rendered
// prompt as the final user message.
std::vector<llm::Message> build_messages(const PromptTemplate& t, const Bindings& bindings,
                                         std::size_t demo_count);

// Flattened view of the messages, as stored in stage records.
std::string flatten(const std::vector<llm::Message>& messages);

}  // namespace symbcot::pipeline
