#include "symbcot/syntax/fol.hpp"

#include <cctype>
#include <optional>

namespace symbcot::syntax {

using logic::Formula;
using logic::Term;

std::string to_string(const ParseDiagnostic& d) {
  std::string out = d.is_error() ? "error" : "warning";
  if (d.line) out += " (line " + std::to_string(d.line) + ")";
  out += " at offset " + std::to_string(d.position) + ": " + d.message;
  return out;
}

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Not,
  And,
  Or,
  Xor,
  Implies,
  DoubleImplies,
  Iff,
  ForAll,
  Exists,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

struct SyntaxError {
  std::size_t pos;
  std::string message;
};

// Longest-match symbol table. ASCII aliases and Unicode forms.
struct Symbol {
  std::string_view text;
  Tok kind;
};

constexpr Symbol kSymbols[] = {
    {"<->", Tok::Iff},     {"<=>", Tok::Iff},      {"->", Tok::Implies},  {"=>", Tok::DoubleImplies},
    {"&&", Tok::And},      {"||", Tok::Or},        {"&", Tok::And},       {"|", Tok::Or},
    {"^", Tok::Xor},       {"~", Tok::Not},        {"!", Tok::Not},       {"¬", Tok::Not},
    {"∧", Tok::And},       {"∨", Tok::Or},         {"⊕", Tok::Xor},       {"→", Tok::Implies},
    {"⇒", Tok::DoubleImplies}, {"↔", Tok::Iff},    {"⇔", Tok::Iff},       {"∀", Tok::ForAll},
    {"∃", Tok::Exists},    {"(", Tok::LParen},     {")", Tok::RParen},    {",", Tok::Comma},
    {".", Tok::Dot},
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(static_cast<unsigned char>(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "forall") kind = Tok::ForAll;
      else if (word == "exists") kind = Tok::Exists;
      else if (word == "not") kind = Tok::Not;
      if (word == "$") throw SyntaxError{i, "unknown symbol '$'"};
      out.push_back({kind, i, std::move(word)});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& sym : kSymbols) {
      if (text.substr(i, sym.text.size()) == sym.text) {
        out.push_back({sym.kind, i, std::string(sym.text)});
        i += sym.text.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // Report one whole UTF-8 sequence.
    std::size_t len = 1;
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    throw SyntaxError{i, "unknown symbol '" + std::string(text.substr(i, len)) + "'"};
  }
  out.push_back({Tok::End, text.size(), {}});
  return out;
}

bool is_polarity_marker(const std::string& s) {
  return s == "True" || s == "False" || s == "true" || s == "false";
}

class Parser {
 public:
  Parser(std::string_view text, const Signature* signature)
      : text_(text), tokens_(lex(text)), signature_(signature) {}

  Formula parse() {
    Formula f = parse_iff();
    if (peek().kind == Tok::RParen) throw SyntaxError{peek().pos, "unbalanced parenthesis"};
    if (peek().kind != Tok::End) throw SyntaxError{peek().pos, "unexpected '" + peek().text + "'"};
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& next() { return tokens_[index_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept(Tok::Iff)) return Formula::biconditional(lhs, parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_xor();
    if (peek().kind == Tok::Implies || peek().kind == Tok::DoubleImplies) {
      const auto style = next().kind == Tok::DoubleImplies ? Formula::ArrowStyle::DoubleArrow
                                                           : Formula::ArrowStyle::Arrow;
      return Formula::implication(lhs, parse_implies(), style);
    }
    return lhs;
  }

  Formula parse_xor() {
    Formula f = parse_or();
    while (accept(Tok::Xor)) f = Formula::exclusive_or(f, parse_or());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = Formula::disjunction(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::And)) f = Formula::conjunction(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Not:
        ++index_;
        return Formula::negation(parse_unary());
      case Tok::ForAll:
      case Tok::Exists:
        return parse_quantifier();
      case Tok::LParen: {
        ++index_;
        Formula inner = parse_iff();
        if (!accept(Tok::RParen)) {
          if (peek().kind == Tok::End) throw SyntaxError{text_.size(), "unbalanced parenthesis"};
          throw SyntaxError{peek().pos, "expected ')' but found '" + peek().text + "'"};
        }
        return inner;
      }
      case Tok::Ident:
        return parse_atom();
      case Tok::End:
        throw SyntaxError{tok.pos, "unexpected end of input"};
      case Tok::RParen:
        throw SyntaxError{tok.pos, "unbalanced parenthesis"};
      default:
        throw SyntaxError{tok.pos, "unexpected '" + tok.text + "'"};
    }
  }

  Formula parse_quantifier() {
    const Token& q = next();
    const auto kind = q.kind == Tok::ForAll ? Formula::Kind::ForAll : Formula::Kind::Exists;
    std::vector<std::string> vars;
    do {
      if (peek().kind != Tok::Ident)
        throw SyntaxError{q.pos, "dangling quantifier: expected a variable after '" + q.text + "'"};
      vars.push_back(next().text);
    } while (accept(Tok::Comma));
    accept(Tok::Dot);
    if (peek().kind == Tok::End || peek().kind == Tok::RParen)
      throw SyntaxError{q.pos, "dangling quantifier: '" + q.text + vars.front() + "' has no body"};
    for (const auto& v : vars) bound_.push_back(v);
    Formula body = parse_unary();
    bound_.resize(bound_.size() - vars.size());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::quantified(kind, *it, body);
    return body;
  }

  Formula parse_atom() {
    const Token& name = next();
    if (name.text.front() == '$')
      throw SyntaxError{name.pos, "variable '" + name.text + "' used as a predicate"};
    std::vector<Term> args;
    bool negate = false;
    if (accept(Tok::LParen)) {
      if (peek().kind != Tok::RParen) {
        do {
          args.push_back(parse_term());
        } while (accept(Tok::Comma));
      }
      if (!accept(Tok::RParen)) {
        if (peek().kind == Tok::End) throw SyntaxError{text_.size(), "unbalanced parenthesis"};
        throw SyntaxError{peek().pos, "expected ')' or ',' in argument list"};
      }
      if (!args.empty() && args.back().is_constant() && is_polarity_marker(args.back().name())) {
        negate = args.back().name() == "False" || args.back().name() == "false";
        args.pop_back();
      }
    }
    check_arity(name, args.size());
    Formula atom = Formula::atom(name.text, std::move(args));
    return negate ? Formula::negation(std::move(atom)) : atom;
  }

  Term parse_term() {
    if (peek().kind != Tok::Ident) {
      if (peek().kind == Tok::End) throw SyntaxError{text_.size(), "unbalanced parenthesis"};
      throw SyntaxError{peek().pos, "expected a term but found '" + peek().text + "'"};
    }
    const Token& name = next();
    if (accept(Tok::LParen)) {
      std::vector<Term> args;
      do {
        args.push_back(parse_term());
      } while (accept(Tok::Comma));
      if (!accept(Tok::RParen)) {
        if (peek().kind == Tok::End) throw SyntaxError{text_.size(), "unbalanced parenthesis"};
        throw SyntaxError{peek().pos, "expected ')' in function term"};
      }
      return Term::function(name.text, std::move(args));
    }
    if (is_bound(name.text) || is_schema_variable_name(name.text)) return Term::variable(name.text);
    return Term::constant(name.text);
  }

  bool is_bound(const std::string& name) const {
    for (const auto& b : bound_)
      if (b == name) return true;
    return false;
  }

  void check_arity(const Token& name, std::size_t arity) {
    auto [it, inserted] = seen_.emplace(name.text, arity);
    if (!inserted && it->second != arity)
      throw SyntaxError{name.pos, "arity mismatch: " + name.text + " used with " +
                                      std::to_string(arity) + " and " + std::to_string(it->second) +
                                      " arguments"};
    if (signature_) {
      auto sig = signature_->find(name.text);
      if (sig != signature_->end() && sig->second != arity)
        throw SyntaxError{name.pos, "arity mismatch: " + name.text + " expects " +
                                        std::to_string(sig->second) + " arguments, got " +
                                        std::to_string(arity)};
    }
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::vector<std::string> bound_;
  Signature seen_;
  const Signature* signature_;
};

}  // namespace

bool is_schema_variable_name(std::string_view name) {
  if (name.empty()) return false;
  if (name.front() == '$') return name.size() > 1;
  if (name[0] != 'x' && name[0] != 'y' && name[0] != 'z') return false;
  std::size_t i = 1;
  if (i < name.size() && name[i] == '_') ++i;
  if (i == name.size()) return i == 1;
  for (; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

Parsed<Formula> parse_formula(std::string_view text, const Signature* signature) {
  Parsed<Formula> result;
  try {
    result.value = Parser(text, signature).parse();
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back({std::min(e.pos, text.size()), e.message});
  }
  return result;
}

namespace {

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Xor: return 3;
    case Formula::Kind::Or: return 4;
    case Formula::Kind::And: return 5;
    case Formula::Kind::Not:
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: return 6;
    case Formula::Kind::Atom: return 7;
  }
  return 0;
}

const char* symbol(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::And: return "∧";
    case Formula::Kind::Or: return "∨";
    case Formula::Kind::Xor: return "⊕";
    case Formula::Kind::Implies:
      return f.arrow_style() == Formula::ArrowStyle::DoubleArrow ? "⇒" : "→";
    case Formula::Kind::Iff: return "↔";
    default: return "?";
  }
}

bool right_associative(const Formula& f) {
  return f.kind() == Formula::Kind::Implies || f.kind() == Formula::Kind::Iff;
}

std::string parenthesize(const std::string& s, bool wrap) { return wrap ? "(" + s + ")" : s; }

void print_into(const Formula& f, std::string& out);

std::string print_child(const Formula& child, bool wrap) {
  std::string s;
  print_into(child, s);
  return parenthesize(s, wrap);
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.predicate();
      if (!f.args().empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          out += logic::to_string(f.args()[i]);
        }
        out += ")";
      }
      return;
    case Formula::Kind::Not:
      out += "¬";
      out += print_child(f.operand(), precedence(f.operand()) < precedence(f));
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      out += f.kind() == Formula::Kind::ForAll ? "∀" : "∃";
      out += f.variable();
      out += " ";
      out += print_child(f.body(), f.body().is_binary());
      return;
    default: {
      const int p = precedence(f);
      const bool right = right_associative(f);
      const int pl = precedence(f.lhs());
      const int pr = precedence(f.rhs());
      out += print_child(f.lhs(), right ? pl <= p : pl < p);
      out += " ";
      out += symbol(f);
      out += " ";
      out += print_child(f.rhs(), right ? pr < p : pr <= p);
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::string print_rule(const logic::Rule& rule, bool fol_display) {
  if (!fol_display) return logic::to_string(rule);
  std::string body;
  for (std::size_t i = 0; i < rule.body.size(); ++i) {
    if (i) body += " ∧ ";
    body += logic::to_string(rule.body[i]);
  }
  std::string out;
  for (const auto& v : rule.variables()) out += "∀" + v + " ";
  const std::string inner = body + " → " + logic::to_string(rule.head);
  return out.empty() ? inner : out + "(" + inner + ")";
}

const std::vector<ConnectiveAlias>& connective_aliases() {
  static const std::vector<ConnectiveAlias> table = {
      {"forall", "∀"}, {"exists", "∃"}, {"&", "∧"},   {"|", "∨"},   {"^", "⊕"},
      {"~", "¬"},      {"not", "¬"},    {"->", "→"},  {"<->", "↔"}, {"⇒", "→"},
  };
  return table;
}

}  // namespace symbcot::syntax
