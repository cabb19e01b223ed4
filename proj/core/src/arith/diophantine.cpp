#include "hsk/arith/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hsk/error.hpp"
#include "hsk/models/natural.hpp"
#include "hsk/syntax/symbol.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::arith {

namespace {

const FunctionSymbol& zero() {
  static const FunctionSymbol z = FunctionSymbol::special(SpecialBase::zero);
  return z;
}

bool valid_argument(const Term& t) { return t.is_variable() || numeral_of(t, zero()).has_value(); }

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

  DiophantineAtom atom() {
    Term a = argument();
    skip();
    AtomKind kind;
    if (peek() == '+') kind = AtomKind::add;
    else if (peek() == '*') kind = AtomKind::mul;
    else fail("expected '+' or '*'");
    ++pos_;
    Term b = argument();
    expect('=');
    Term c = argument();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return DiophantineAtom{kind, a, b, c};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t number() {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  std::string ident() {
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected an identifier");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\'') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Term argument() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return numeral(number(), Term::constant(zero()));
    if (peek() == '?') {
      ++pos_;
      return Term::variable(ident(), VariableKind::numeric);
    }
    std::size_t start = pos_;
    std::string name = ident();
    if (name == "z") return Term::constant(zero());
    if (name != "s") return Term::variable(name, VariableKind::numeric);
    std::size_t times = 1;
    if (peek() == '^') {
      ++pos_;
      times = number();
    }
    expect('(');
    Term inner = argument();
    expect(')');
    if (!numeral_of(inner, zero())) {
      pos_ = start;
      fail("successor applied to a variable");
    }
    return numeral(times, inner);
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

void print_argument(std::ostream& out, const Term& t) {
  if (t.is_variable()) {
    out << '?' << t.name();
    return;
  }
  std::size_t m = *numeral_of(t, zero());
  if (m == 0) out << 'z';
  else if (m == 1) out << "s(z)";
  else out << "s^" << m << "(z)";
}

models::Natural value(const Term& t) { return models::Natural(*numeral_of(t, zero())); }

}  // namespace

DiophantineFormula::DiophantineFormula(std::vector<DiophantineAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ContractError("a diophantine formula needs at least one atom");
  for (const auto& at : atoms_) {
    for (const Term* t : {&at.a, &at.b, &at.c}) {
      if (!valid_argument(*t)) throw ContractError("diophantine argument must be a variable or numeral: " + hsk::to_string(*t));
    }
  }
}

std::vector<Term> DiophantineFormula::variables() const {
  std::vector<Term> out;
  for (const auto& at : atoms_) {
    for (const Term* t : {&at.a, &at.b, &at.c}) {
      if (t->is_variable() && std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
    }
  }
  return out;
}

DiophantineFormula parse_diophantine(std::string_view text) {
  std::vector<DiophantineAtom> atoms;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) atoms.push_back(LineParser(line, line_no).atom());
    start = end + 1;
  }
  if (atoms.empty()) throw ParseError("no diophantine atoms", line_no, 1);
  return DiophantineFormula(std::move(atoms));
}

std::string to_string(const DiophantineFormula& psi) {
  std::ostringstream out;
  for (const auto& at : psi.atoms()) {
    print_argument(out, at.a);
    out << (at.kind == AtomKind::add ? " + " : " * ");
    print_argument(out, at.b);
    out << " = ";
    print_argument(out, at.c);
    out << '\n';
  }
  return out.str();
}

bool eval_diophantine(const DiophantineFormula& psi) {
  if (!psi.is_closed()) throw ContractError("cannot evaluate a diophantine formula with free variables");
  return std::all_of(psi.atoms().begin(), psi.atoms().end(), [](const DiophantineAtom& at) {
    models::Natural a = value(at.a), b = value(at.b), c = value(at.c);
    models::Natural lhs = at.kind == AtomKind::add ? models::Natural(a + b) : models::Natural(a * b);
    return lhs == c;
  });
}

DiophantineFormula instantiate(const DiophantineFormula& psi, const Term& x, std::size_t m) {
  const Term n = numeral(m, Term::constant(zero()));
  auto swap = [&](const Term& t) { return t == x ? n : t; };
  std::vector<DiophantineAtom> atoms;
  for (const auto& at : psi.atoms()) atoms.push_back({at.kind, swap(at.a), swap(at.b), swap(at.c)});
  return DiophantineFormula(std::move(atoms));
}

}  // namespace hsk::arith
