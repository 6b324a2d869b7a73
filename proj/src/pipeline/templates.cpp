#include "symbcot/pipeline/templates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "symbcot/data/embedded.hpp"

namespace symbcot::pipeline {

namespace {

constexpr std::array<std::string_view, 6> kPlaceholders = {"context", "question", "options",
                                                           "premises_sym", "plan", "reasoning"};

constexpr std::string_view kTemplateMarker = "=== template ===";
constexpr std::string_view kInputMarker = "=== demo input ===";
constexpr std::string_view kOutputMarker = "=== demo output ===";

// Calls `f(name, begin, end)` for each `{name}` occurrence of a known placeholder.
template <typename F>
void scan_placeholders(std::string_view text, F&& f) {
  for (std::size_t pos = text.find('{'); pos != std::string_view::npos; pos = text.find('{', pos + 1)) {
    const auto close = text.find('}', pos);
    if (close == std::string_view::npos) return;
    const auto name = text.substr(pos + 1, close - pos - 1);
    if (std::find(kPlaceholders.begin(), kPlaceholders.end(), name) != kPlaceholders.end()) f(name, pos, close + 1);
  }
}

}  // namespace

std::string to_string(Stage s) {
  switch (s) {
    case Stage::Translator: return "Translator";
    case Stage::Planner: return "Planner";
    case Stage::Solver: return "Solver";
    case Stage::Verifier: return "Verifier";
    case Stage::Naive: return "Naive";
    case Stage::CoT: return "CoT";
  }
  return "?";
}

std::string file_stem(Stage s) {
  std::string out = to_string(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<Stage> parse_stage(std::string_view name) {
  std::string key(name);
  for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Stage s : {Stage::Translator, Stage::Planner, Stage::Solver, Stage::Verifier, Stage::Naive, Stage::CoT})
    if (file_stem(s) == key) return s;
  return std::nullopt;
}

std::string template_dir_name(corpus::Dataset d) {
  switch (d) {
    case corpus::Dataset::ProntoQA: return "prontoqa";
    case corpus::Dataset::ProofWriter: return "proofwriter";
    case corpus::Dataset::FOLIO: return "folio";
    case corpus::Dataset::LogicalDeduction: return "logicaldeduction";
    case corpus::Dataset::ARLSAT: return "arlsat";
  }
  return "?";
}

std::vector<std::string> PromptTemplate::placeholders() const {
  std::vector<std::string> out;
  scan_placeholders(text, [&](std::string_view name, std::size_t, std::size_t) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.emplace_back(name);
  });
  return out;
}

const std::vector<std::string>& required_placeholders(Stage s) {
  static const std::vector<std::string> translator = {"context", "question"};
  static const std::vector<std::string> planner = {"premises_sym"};
  static const std::vector<std::string> solver = {"premises_sym", "plan", "question"};
  static const std::vector<std::string> verifier = {"premises_sym", "reasoning", "question"};
  static const std::vector<std::string> direct = {"context", "question", "options"};
  switch (s) {
    case Stage::Translator: return translator;
    case Stage::Planner: return planner;
    case Stage::Solver: return solver;
    case Stage::Verifier: return verifier;
    case Stage::Naive:
    case Stage::CoT: return direct;
  }
  return direct;
}

PromptTemplate parse_template(Stage stage, corpus::Dataset dataset, std::string_view text) {
  PromptTemplate t;
  t.stage = stage;
  t.dataset = dataset;
  const std::string where = template_dir_name(dataset) + "/" + file_stem(stage);

  enum class Part { None, Template, Input, Output } part = Part::None;
  std::string* sink = nullptr;
  bool seen_template = false;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == kTemplateMarker) {
      if (seen_template) throw TemplateError(where + ": more than one template section");
      seen_template = true;
      part = Part::Template;
      sink = &t.text;
      continue;
    }
    if (line == kInputMarker) {
      if (part == Part::Input) throw TemplateError(where + ": demo input without output");
      t.demos.emplace_back();
      part = Part::Input;
      sink = &t.demos.back().input;
      continue;
    }
    if (line == kOutputMarker) {
      if (part != Part::Input) throw TemplateError(where + ": demo output without input");
      part = Part::Output;
      sink = &t.demos.back().output;
      continue;
    }
    if (!sink) {
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      throw TemplateError(where + ": text before the template section");
    }
    *sink += line;
    *sink += '\n';
  }
  if (!seen_template) throw TemplateError(where + ": missing template section");
  if (part == Part::Input) throw TemplateError(where + ": demo input without output");
  const auto present = t.placeholders();
  for (const auto& name : required_placeholders(stage))
    if (std::find(present.begin(), present.end(), name) == present.end())
      throw TemplateError(where + ": template does not reference {" + name + "}");
  return t;
}

PromptTemplate load_template(Stage stage, corpus::Dataset dataset, const std::optional<std::filesystem::path>& dir) {
  const std::string relative = "templates/" + template_dir_name(dataset) + "/" + file_stem(stage) + ".txt";
  if (dir) {
    const auto path = *dir / template_dir_name(dataset) / (file_stem(stage) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TemplateError("cannot read template " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_template(stage, dataset, ss.str());
  }
  auto text = data::embedded_file(relative);
  if (!text) throw TemplateError("no embedded template " + relative);
  return parse_template(stage, dataset, *text);
}

std::string render(std::string_view text, const Bindings& bindings) {
  std::string out;
  std::size_t last = 0;
  scan_placeholders(text, [&](std::string_view name, std::size_t begin, std::size_t end) {
    auto it = bindings.find(std::string(name));
    if (it == bindings.end()) throw TemplateError("no binding for placeholder {" + std::string(name) + "}");
    out.append(text.substr(last, begin - last));
    out += it->second;
    last = end;
  });
  out.append(text.substr(last));
  return out;
}

std::vector<llm::Message> build_messages(const PromptTemplate& t, const Bindings& bindings, std::size_t demo_count) {
  std::vector<llm::Message> messages;
  const std::size_t n = std::min(demo_count, t.demos.size());
  for (std::size_t i = 0; i < n; ++i) {
    messages.push_back({"user", t.demos[i].input});
    messages.push_back({"assistant", t.demos[i].output});
  }
  messages.push_back({"user", render(t.text, bindings)});
  return messages;
}

std::string flatten(const std::vector<llm::Message>& messages) {
  std::string out;
  for (const auto& m : messages) {
    out += "[" + m.role + "]\n" + m.content;
    if (!m.content.empty() && m.content.back() != '\n') out += '\n';
  }
  return out;
}

}  // namespace symbcot::pipeline
