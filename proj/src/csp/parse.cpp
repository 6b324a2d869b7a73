#include "symbcot/csp/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "symbcot/syntax/lines.hpp"

namespace symbcot::csp {

using syntax::ParseDiagnostic;
using syntax::Parsed;

namespace {

struct Token {
  enum class Kind { Ident, Int, Op, End } kind;
  std::string text;
  std::size_t pos;
  int value = 0;
};

struct ParseError {
  std::size_t pos;
  std::string message;
};

// Multi-byte and multi-character symbols, longest first within each prefix.
const std::vector<std::pair<std::string_view, std::string_view>>& symbols() {
  static const std::vector<std::pair<std::string_view, std::string_view>> table = {
      {"==", "=="}, {"!=", "!="}, {"<>", "!="}, {"<=", "<="}, {">=", ">="}, {"->", "->"}, {"=>", "->"},
      {"&&", "and"}, {"||", "or"}, {"≠", "!="}, {"≤", "<="}, {"≥", ">="}, {"→", "->"}, {"⇒", "->"},
      {"∧", "and"}, {"∨", "or"}, {"¬", "not"}, {"−", "-"}, {"=", "=="}, {"<", "<"}, {">", ">"},
      {"!", "not"}, {"+", "+"}, {"-", "-"}, {"|", "|"}, {"(", "("}, {")", ")"}, {"[", "["},
      {"]", "]"}, {",", ","}};
  return table;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(text.substr(i, j - i)), i, std::stoi(std::string(text.substr(i, j - i)))});
      i = j;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word(text.substr(i, j - i));
      std::string lower = syntax::to_lower(word);
      if (lower == "and" || lower == "or" || lower == "not") out.push_back({Token::Kind::Op, lower, i});
      else if (lower == "implies") out.push_back({Token::Kind::Op, "->", i});
      else out.push_back({Token::Kind::Ident, word, i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [sym, canon] : symbols()) {
      if (text.substr(i, sym.size()) == sym) {
        out.push_back({Token::Kind::Op, std::string(canon), i});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::size_t len = 1;
      if (c >= 0xC0) len = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : 2;
      throw ParseError{i, "unknown symbol '" + std::string(text.substr(i, len)) + "'"};
    }
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

std::optional<CompareOp> compare_op(const std::string& s) {
  if (s == "==") return CompareOp::Eq;
  if (s == "!=") return CompareOp::Ne;
  if (s == "<") return CompareOp::Lt;
  if (s == "<=") return CompareOp::Le;
  if (s == ">") return CompareOp::Gt;
  if (s == ">=") return CompareOp::Ge;
  return std::nullopt;
}

CompareOp mirror(CompareOp op) {
  switch (op) {
    case CompareOp::Lt: return CompareOp::Gt;
    case CompareOp::Le: return CompareOp::Ge;
    case CompareOp::Gt: return CompareOp::Lt;
    case CompareOp::Ge: return CompareOp::Le;
    default: return op;
  }
}

bool is_all_different(const std::string& word) {
  std::string w = syntax::to_lower(word);
  w.erase(std::remove(w.begin(), w.end(), '_'), w.end());
  return w == "alldifferent" || w == "alldifferentconstraint" || w == "alldiff" || w == "distinct";
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : tokens_(lex(text)) {}

  ConstraintExpr parse() {
    auto e = implication();
    if (peek().kind != Token::Kind::End) throw ParseError{peek().pos, "unexpected '" + peek().text + "'"};
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool accept(std::string_view op) {
    if (peek().kind == Token::Kind::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view op) {
    if (!accept(op)) {
      const auto& t = peek();
      throw ParseError{t.pos, t.kind == Token::Kind::End ? "expected '" + std::string(op) + "' before end of input"
                                                         : "expected '" + std::string(op) + "' but found '" + t.text + "'"};
    }
  }

  ConstraintExpr implication() {
    auto lhs = disjunction();
    if (accept("->")) return ConstraintExpr::implication(std::move(lhs), implication());
    return lhs;
  }

  ConstraintExpr disjunction() {
    std::vector<ConstraintExpr> parts{conjunction()};
    while (accept("or")) parts.push_back(conjunction());
    return ConstraintExpr::disjunction(std::move(parts));
  }

  ConstraintExpr conjunction() {
    std::vector<ConstraintExpr> parts{unary()};
    while (accept("and")) parts.push_back(unary());
    return ConstraintExpr::conjunction(std::move(parts));
  }

  ConstraintExpr unary() {
    if (accept("not")) return ConstraintExpr::negation(unary());
    if (accept("(")) {
      auto inner = implication();
      expect(")");
      return inner;
    }
    const auto& t = peek();
    if (t.kind == Token::Kind::Ident) {
      std::string lower = syntax::to_lower(t.text);
      if (lower == "true" || lower == "false") {
        ++pos_;
        return ConstraintExpr::boolean(lower == "true");
      }
      if (is_all_different(t.text) && peek(1).text == "(") {
        ++pos_;
        return all_different();
      }
    }
    return comparison();
  }

  ConstraintExpr all_different() {
    expect("(");
    bool bracket = accept("[");
    std::vector<std::string> vars;
    do {
      const auto& t = next();
      if (t.kind != Token::Kind::Ident) throw ParseError{t.pos, "expected a variable name in AllDifferent"};
      vars.push_back(t.text);
    } while (accept(","));
    if (bracket) expect("]");
    expect(")");
    if (vars.size() < 2) throw ParseError{peek().pos, "AllDifferent needs at least two variables"};
    return ConstraintExpr::all_different(std::move(vars));
  }

  // Sum of signed variables plus a constant.
  struct Linear {
    std::vector<std::pair<std::string, int>> vars;  // name, sign
    int constant = 0;
    std::optional<std::pair<std::string, std::string>> abs;  // |a - b|
    std::size_t pos = 0;
  };

  Linear linear() {
    Linear out;
    out.pos = peek().pos;
    if (accept("|")) {
      const auto& a = next();
      if (a.kind != Token::Kind::Ident) throw ParseError{a.pos, "expected a variable after '|'"};
      expect("-");
      const auto& b = next();
      if (b.kind != Token::Kind::Ident) throw ParseError{b.pos, "expected a variable in |a - b|"};
      expect("|");
      out.abs = {{a.text, b.text}};
      return out;
    }
    int sign = 1;
    if (accept("-")) sign = -1;
    for (;;) {
      const auto& t = next();
      if (t.kind == Token::Kind::Int) out.constant += sign * t.value;
      else if (t.kind == Token::Kind::Ident) out.vars.push_back({t.text, sign});
      else if (t.kind == Token::Kind::End) throw ParseError{t.pos, "unexpected end of input"};
      else throw ParseError{t.pos, "unexpected '" + t.text + "'"};
      if (accept("+")) sign = 1;
      else if (accept("-")) sign = -1;
      else break;
    }
    return out;
  }

  ConstraintExpr comparison() {
    Linear lhs = linear();
    const auto& op_tok = peek();
    auto op = op_tok.kind == Token::Kind::Op ? compare_op(op_tok.text) : std::nullopt;
    if (!op) {
      throw ParseError{op_tok.pos, op_tok.kind == Token::Kind::End ? "expected a comparison before end of input"
                                                                   : "expected a comparison but found '" + op_tok.text + "'"};
    }
    ++pos_;
    Linear rhs = linear();
    if (lhs.abs || rhs.abs) {
      if (lhs.abs && rhs.abs) throw ParseError{rhs.pos, "absolute difference on both sides"};
      const Linear& abs_side = lhs.abs ? lhs : rhs;
      const Linear& other = lhs.abs ? rhs : lhs;
      if (!other.vars.empty()) throw ParseError{other.pos, "absolute difference must be compared to a constant"};
      if (other.constant < 0) throw ParseError{other.pos, "absolute difference bound must be non-negative"};
      return ConstraintExpr::abs_diff(abs_side.abs->first, abs_side.abs->second, lhs.abs ? *op : mirror(*op),
                                      other.constant);
    }
    // Normalize to P + c op N.
    std::optional<std::string> pos_var, neg_var;
    auto place = [&](const std::string& name, int sign) {
      auto& slot = sign > 0 ? pos_var : neg_var;
      if (slot) throw ParseError{lhs.pos, "only one variable per side is supported"};
      slot = name;
    };
    for (const auto& [name, sign] : lhs.vars) place(name, sign);
    for (const auto& [name, sign] : rhs.vars) place(name, -sign);
    const int c = lhs.constant - rhs.constant;
    if (pos_var && neg_var) return ConstraintExpr::compare(LinearTerm::variable(*pos_var, c), *op, LinearTerm::variable(*neg_var));
    if (pos_var) return ConstraintExpr::compare(LinearTerm::variable(*pos_var), *op, LinearTerm::constant(-c));
    if (neg_var) return ConstraintExpr::compare(LinearTerm::constant(c), *op, LinearTerm::variable(*neg_var));
    return ConstraintExpr::compare(LinearTerm::constant(lhs.constant), *op, LinearTerm::constant(rhs.constant));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

enum class Section { None, Ignored, Domain, Variables, Constraints, Query };

std::optional<Section> section_for(const std::string& name) {
  auto starts = [&](std::string_view p) { return name.rfind(p, 0) == 0; };
  if (starts("domain")) return Section::Domain;
  if (starts("variable")) return Section::Variables;
  if (starts("constraint")) return Section::Constraints;
  if (starts("quer")) return Section::Query;
  for (std::string_view ignored : {"translation", "problem", "question", "context", "options", "plan", "task",
                                   "input", "output", "answer", "note"})
    if (starts(ignored)) return Section::Ignored;
  return std::nullopt;
}

// Removes the LaTeX markup models sometimes wrap around expressions.
std::string strip_latex(std::string s) {
  for (std::string_view command : {"\\textbf{", "\\textit{", "\\text{", "\\mathrm{"}) {
    for (std::size_t p; (p = s.find(command)) != std::string::npos;) {
      auto close = s.find('}', p);
      if (close == std::string::npos) break;
      s.erase(close, 1);
      s.erase(p, command.size());
    }
  }
  const std::pair<std::string_view, std::string_view> replacements[] = {
      {"\\item", ""}, {"\\_", "_"}, {"\\(", ""}, {"\\)", ""}, {"\\{", "{"}, {"\\}", "}"},
      {"\\in", "∈"}, {"\\\\", " "}, {"$", ""}};
  for (const auto& [junk, replacement] : replacements)
    for (std::size_t p; (p = s.find(junk)) != std::string::npos;) s.replace(p, junk.size(), replacement);
  return s;
}

std::vector<int> integers_in(std::string_view s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size();) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back(std::stoi(std::string(s.substr(i, j - i))));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

class BlockParser {
 public:
  explicit BlockParser(std::string_view text) : text_(text) {}

  Parsed<CspModel> run() {
    Parsed<CspModel> result;
    Section section = Section::None;
    bool saw_query = false, saw_variables = false;
    for (const auto& line : syntax::split_lines(text_)) {
      std::string cleaned = strip_latex(syntax::clean_line(line.raw));
      cleaned = syntax::trim(cleaned);
      if (cleaned.empty() || cleaned.front() == '\\' ||
          std::none_of(cleaned.begin(), cleaned.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); }))
        continue;
      std::string name, rest;
      if (syntax::parse_header(cleaned, name, rest)) {
        if (auto s = section_for(name)) {
          section = *s;
          saw_query = saw_query || section == Section::Query;
          saw_variables = saw_variables || section == Section::Variables;
          if (!rest.empty() && section != Section::Ignored) handle(section, line, rest);
          continue;
        }
      }
      handle(section, line, cleaned);
    }
    if (!saw_variables && model_.variables.empty()) diag(text_.size(), 0, "missing Variables section");
    if (!saw_query) diag(text_.size(), 0, "missing Query section");
    finish();
    result.diagnostics = std::move(diags_);
    if (!saw_query || model_.variables.empty()) return result;
    result.value = std::move(model_);
    return result;
  }

 private:
  void diag(std::size_t pos, std::size_t line, std::string msg,
            ParseDiagnostic::Severity sev = ParseDiagnostic::Severity::Error) {
    diags_.push_back({std::min(pos, text_.size()), std::move(msg), sev, line});
  }

  std::size_t base(const syntax::SourceLine& line, std::string_view part) const {
    return line.offset + syntax::offset_within(line.raw, part);
  }

  void handle(Section section, const syntax::SourceLine& line, const std::string& content) {
    switch (section) {
      case Section::Domain: return handle_domain(content);
      case Section::Variables: return handle_variable(line, content);
      case Section::Constraints: return handle_constraint(line, content);
      case Section::Query: return handle_query(line, content);
      default: return;
    }
  }

  void handle_domain(const std::string& content) {
    auto ints = integers_in(content);
    if (ints.empty()) return;
    domain_lines_.push_back(content);
    for (int v : ints) domain_max_ = std::max(domain_max_, v);
  }

  void handle_variable(const syntax::SourceLine& line, const std::string& content) {
    auto [text, gloss] = syntax::split_gloss(content, false);
    std::size_t i = 0;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (i == 0 || std::isdigit(static_cast<unsigned char>(text[0]))) {
      diag(base(line, text), line.number, "expected a variable declaration");
      return;
    }
    CspVariable var{text.substr(0, i), {}, gloss};
    std::string rest = syntax::trim(std::string_view(text).substr(i));
    for (std::string_view marker : {"∈", "in ", ":"}) {
      if (rest.rfind(marker, 0) == 0) {
        rest = syntax::trim(std::string_view(rest).substr(marker.size()));
        break;
      }
    }
    if (!rest.empty()) {
      auto ints = integers_in(rest);
      const bool range = rest.find(" to ") != std::string::npos || rest.find("..") != std::string::npos;
      if (ints.empty()) {
        diag(base(line, rest), line.number, "cannot read the domain '" + rest + "'");
        return;
      }
      if (range && ints.size() >= 2) {
        for (int v = ints.front(); v <= ints.back(); ++v) var.domain.push_back(v);
      } else {
        var.domain = ints;
      }
      std::sort(var.domain.begin(), var.domain.end());
      var.domain.erase(std::unique(var.domain.begin(), var.domain.end()), var.domain.end());
    }
    if (model_.index_of(var.name)) {
      diag(base(line, text), line.number, "duplicate variable " + var.name);
      return;
    }
    lines_of_vars_.push_back({line.offset, line.number});
    model_.variables.push_back(std::move(var));
  }

  // Tries `expr ::: gloss`, then `expr: gloss`, then `title: expr`.
  std::optional<std::pair<ConstraintExpr, std::string>> expression_with_gloss(const syntax::SourceLine& line,
                                                                               const std::string& content) {
    std::vector<std::pair<std::string, std::string>> attempts;
    if (content.find(":::") != std::string::npos) {
      attempts.push_back(syntax::split_gloss(content, false));
    } else {
      auto split = syntax::split_gloss(content, true);
      attempts.push_back(split);
      if (!split.second.empty()) {
        attempts.push_back({split.second, split.first});
        attempts.push_back({content, ""});
      }
    }
    std::optional<ParseError> first_error;
    std::string first_text;
    for (const auto& [expr_text, gloss] : attempts) {
      try {
        return std::pair{ExprParser(expr_text).parse(), gloss};
      } catch (const ParseError& e) {
        if (!first_error) {
          first_error = e;
          first_text = expr_text;
        }
      }
    }
    diag(base(line, first_text) + first_error->pos, line.number, first_error->message);
    return std::nullopt;
  }

  void handle_constraint(const syntax::SourceLine& line, const std::string& content) {
    auto parsed = expression_with_gloss(line, content);
    if (!parsed) return;
    pending_.push_back({line.offset, line.number});
    model_.constraints.push_back({std::move(parsed->first), std::move(parsed->second)});
  }

  void handle_query(const syntax::SourceLine& line, const std::string& content) {
    // "A) expr", "A: expr" or "A. expr".
    if (content.size() < 3 || content[0] < 'A' || content[0] > 'G' ||
        (content[1] != ')' && content[1] != ':' && content[1] != '.') || content[2] != ' ') {
      diag(base(line, content), line.number, "query line must start with an option letter such as 'A)'");
      return;
    }
    const char letter = content[0];
    std::string body = syntax::trim(std::string_view(content).substr(2));
    std::string prefix_gloss;
    if (auto q = body.find("Query:"); q != std::string::npos) {
      prefix_gloss = syntax::trim(std::string_view(body).substr(0, q));
      body = syntax::trim(std::string_view(body).substr(q + 6));
    }
    auto parsed = expression_with_gloss(line, body);
    if (!parsed) return;
    for (const auto& q : model_.queries) {
      if (q.letter == letter) {
        diag(line.offset, line.number, std::string("duplicate option ") + letter);
        return;
      }
    }
    query_lines_.push_back({line.offset, line.number});
    model_.queries.push_back({letter, std::move(parsed->first), prefix_gloss.empty() ? parsed->second : prefix_gloss});
  }

  void finish() {
    if (!domain_lines_.empty()) {
      model_.domain_low_gloss = domain_lines_.front();
      model_.domain_high_gloss = domain_lines_.back();
    }
    int n = domain_max_;
    for (const auto& v : model_.variables)
      if (!v.domain.empty()) n = std::max(n, v.domain.back());
    model_.domain_size = n;
    for (std::size_t i = 0; i < model_.variables.size(); ++i) {
      auto& v = model_.variables[i];
      if (v.domain.empty())
        for (int x = 1; x <= n; ++x) v.domain.push_back(x);
      if (v.domain.empty() || v.domain.front() < 1)
        diag(lines_of_vars_[i].first, lines_of_vars_[i].second, "variable " + v.name + " has an empty or invalid domain");
    }
    auto check = [&](const ConstraintExpr& e, std::pair<std::size_t, std::size_t> where) {
      for (const auto& v : referenced_variables(e))
        if (!model_.index_of(v)) diag(where.first, where.second, "undeclared variable " + v);
    };
    for (std::size_t i = 0; i < model_.constraints.size(); ++i) check(model_.constraints[i].expr, pending_[i]);
    for (std::size_t i = 0; i < model_.queries.size(); ++i) check(model_.queries[i].expr, query_lines_[i]);
  }

  std::string_view text_;
  CspModel model_;
  std::vector<ParseDiagnostic> diags_;
  std::vector<std::string> domain_lines_;
  int domain_max_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> lines_of_vars_, pending_, query_lines_;
};

}  // namespace

Parsed<ConstraintExpr> parse_constraint(std::string_view text) {
  Parsed<ConstraintExpr> out;
  try {
    out.value = ExprParser(text).parse();
  } catch (const ParseError& e) {
    out.diagnostics.push_back({std::min(e.pos, text.size()), e.message});
  }
  return out;
}

Parsed<CspModel> parse_csp_block(std::string_view text) {
  if (syntax::trim(text).empty()) {
    Parsed<CspModel> out;
    out.diagnostics.push_back({0, "no sections found"});
    return out;
  }
  return BlockParser(text).run();
}

std::string print_csp_block(const CspModel& model) {
  std::string out = "Domain:\n";
  if (!model.domain_low_gloss.empty()) {
    out += model.domain_low_gloss + "\n";
    if (model.domain_high_gloss != model.domain_low_gloss) out += model.domain_high_gloss + "\n";
  } else {
    out += "1 to " + std::to_string(model.domain_size) + "\n";
  }
  out += "Variables:\n";
  for (const auto& v : model.variables) {
    out += v.name + " ∈ {";
    for (std::size_t i = 0; i < v.domain.size(); ++i) out += (i ? ", " : "") + std::to_string(v.domain[i]);
    out += "}";
    if (!v.gloss.empty()) out += " ::: " + v.gloss;
    out += "\n";
  }
  out += "Constraints:\n";
  for (const auto& c : model.constraints) {
    out += to_string(c.expr);
    if (!c.gloss.empty()) out += " ::: " + c.gloss;
    out += "\n";
  }
  out += "Query:\n";
  for (const auto& q : model.queries) {
    out += std::string(1, q.letter) + ") " + to_string(q.expr);
    if (!q.gloss.empty()) out += " ::: " + q.gloss;
    out += "\n";
  }
  return out;
}

}  // namespace symbcot::csp
