#include "hsk/syntax/text.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "hsk/error.hpp"

namespace hsk {

namespace {

enum class Tok { ident, var, unknown, lparen, rparen, comma, eq, bang, amp, bar, arrow, dot, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::var: return "variable";
    case Tok::unknown: return "unknown";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::eq: return "'='";
    case Tok::bang: return "'!'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::dot: return "'.'";
    case Tok::end: return "end of input";
  }
  return "token";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '@' || c == '\'';
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t tl = line, tc = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), tl, tc});
      advance(1);
    };
    switch (c) {
      case '(': single(Tok::lparen); continue;
      case ')': single(Tok::rparen); continue;
      case ',': single(Tok::comma); continue;
      case '=': single(Tok::eq); continue;
      case '!': single(Tok::bang); continue;
      case '&': single(Tok::amp); continue;
      case '|': single(Tok::bar); continue;
      case '.': single(Tok::dot); continue;
      default: break;
    }
    if (c == '-') {
      if (i + 1 < src.size() && src[i + 1] == '>') {
        out.push_back({Tok::arrow, "->", tl, tc});
        advance(2);
        continue;
      }
      throw ParseError("expected '->'", tl, tc);
    }
    if (c == '?' || c == '*') {
      std::size_t j = i + 1;
      bool ok = j < src.size() && (ident_start(src[j]) || (c == '*' && std::isdigit(static_cast<unsigned char>(src[j]))));
      if (!ok) throw ParseError(c == '?' ? "expected variable name after '?'" : "expected unknown name after '*'", tl, tc);
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({c == '?' ? Tok::var : Tok::unknown, std::string(src.substr(i + 1, j - i - 1)), tl, tc});
      advance(j - i);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Formula formula_eof() {
    Formula f = implication();
    expect(Tok::end);
    return f;
  }

  Term term_eof() {
    Term t = term();
    expect(Tok::end);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k) {
    if (peek().kind != k) fail(std::string("expected ") + describe(k) + ", found " + found(peek()));
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }
  static std::string found(const Token& t) {
    switch (t.kind) {
      case Tok::ident:
      case Tok::var:
      case Tok::unknown:
        return std::string(describe(t.kind)) + " '" + t.text + "'";
      default:
        return describe(t.kind);
    }
  }

  Formula implication() {
    Formula left = disjunction();
    if (accept(Tok::arrow)) return Formula::implication(std::move(left), implication());
    return left;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept(Tok::bar)) acc = Formula::disjunction(std::move(acc), conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept(Tok::amp)) acc = Formula::conjunction(std::move(acc), unary());
    return acc;
  }

  Formula unary() {
    if (accept(Tok::bang)) return Formula::negation(unary());
    if (peek().kind == Tok::ident && (peek().text == "exists" || peek().text == "forall")) {
      bool is_exists = next().text == "exists";
      const Token& v = expect(Tok::var);
      Term var = Term::variable(v.text);
      expect(Tok::dot);
      Formula body = implication();
      return is_exists ? Formula::exists(std::move(var), std::move(body))
                       : Formula::forall(std::move(var), std::move(body));
    }
    if (accept(Tok::lparen)) {
      Formula f = implication();
      expect(Tok::rparen);
      return f;
    }
    return atom();
  }

  Formula atom() {
    if (peek().kind == Tok::ident) {
      const Token& head = next();
      check_name(head);
      std::vector<Term> args;
      if (accept(Tok::lparen)) args = arguments();
      if (peek().kind == Tok::eq) {
        Term lhs = application(head, std::move(args));
        next();
        return Formula::equality(std::move(lhs), term());
      }
      note_arity(predicate_arity_, "predicate", head, args.size());
      PredicateSymbol symbol(head.text, static_cast<unsigned>(args.size()));
      return Formula::predicate(std::move(symbol), std::move(args));
    }
    if (peek().kind == Tok::var || peek().kind == Tok::unknown) {
      Term lhs = term();
      expect(Tok::eq);
      return Formula::equality(std::move(lhs), term());
    }
    fail("expected a formula, found " + found(peek()));
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    args.push_back(term());
    while (accept(Tok::comma)) args.push_back(term());
    expect(Tok::rparen);
    return args;
  }

  Term term() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::var: return Term::variable(t.text);
      case Tok::unknown: return Term::unknown(t.text);
      case Tok::ident: {
        check_name(t);
        std::vector<Term> args;
        if (accept(Tok::lparen)) args = arguments();
        return application(t, std::move(args));
      }
      default: --pos_; fail("expected a term, found " + found(t));
    }
  }

  Term application(const Token& head, std::vector<Term> args) {
    note_arity(function_arity_, "function", head, args.size());
    try {
      FunctionSymbol symbol(head.text, static_cast<unsigned>(args.size()));
      return Term::apply(std::move(symbol), std::move(args));
    } catch (const ContractError& e) {
      fail_at(head, e.what());
    }
  }

  void note_arity(std::map<std::string, std::size_t>& table, const char* what, const Token& head, std::size_t arity) {
    auto [it, inserted] = table.emplace(head.text, arity);
    if (!inserted && it->second != arity) {
      fail_at(head, std::string(what) + " '" + head.text + "' used with arity " + std::to_string(arity) +
                        " but first seen with arity " + std::to_string(it->second));
    }
  }

  static void check_name(const Token& t) {
    if (is_keyword(t.text)) fail_at(t, "'" + t.text + "' is a keyword");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> function_arity_;
  std::map<std::string, std::size_t> predicate_arity_;
};

// Binding strength used by the printer; atoms and negations bind tightest.
int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::implication: return 1;
    case Formula::Kind::disjunction: return 2;
    case Formula::Kind::conjunction: return 3;
    case Formula::Kind::exists:
    case Formula::Kind::forall: return 0;
    default: return 4;
  }
}

void print_term(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::variable: os << '?' << t.name(); return;
    case Term::Kind::unknown: os << '*' << t.name(); return;
    case Term::Kind::application: break;
  }
  os << t.symbol().name();
  if (t.args().empty()) return;
  os << '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) os << ',';
    print_term(os, t.arg(i));
  }
  os << ')';
}

void print_formula(std::ostream& os, const Formula& f);

// Quantifiers extend as far right as possible, so they are bare only at the
// top and directly under another quantifier.
void print_operand(std::ostream& os, const Formula& f, bool parens) {
  if (parens || f.is_quantifier()) {
    os << '(';
    print_formula(os, f);
    os << ')';
  } else {
    print_formula(os, f);
  }
}

void print_formula(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::equality:
      print_term(os, f.lhs());
      os << " = ";
      print_term(os, f.rhs());
      return;
    case Formula::Kind::predicate: {
      os << f.predicate_symbol().name();
      if (f.args().empty()) return;
      os << '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) os << ',';
        print_term(os, f.args()[i]);
      }
      os << ')';
      return;
    }
    case Formula::Kind::negation: {
      const Formula& g = f.operand();
      os << '!';
      print_operand(os, g, g.kind() == Formula::Kind::equality || g.is_binary());
      return;
    }
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      int me = level(f);
      print_operand(os, f.left(), level(f.left()) < me);
      os << (f.kind() == Formula::Kind::conjunction ? " & " : " | ");
      print_operand(os, f.right(), level(f.right()) <= me);
      return;
    }
    case Formula::Kind::implication:
      print_operand(os, f.left(), level(f.left()) <= 1);
      os << " -> ";
      print_operand(os, f.right(), level(f.right()) < 1);
      return;
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      os << (f.kind() == Formula::Kind::exists ? "exists " : "forall ");
      print_term(os, f.bound_variable());
      os << ". ";
      print_formula(os, f.body());
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula_eof(); }

Term parse_term(std::string_view text) { return Parser(text).term_eof(); }

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print_formula(os, f);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print_term(os, t);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print_formula(os, f);
  return os;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') ++i;
      pending_space = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

}  // namespace hsk
