#include "hsk/syntax/term.hpp"

#include <algorithm>
#include <unordered_set>

#include "hsk/error.hpp"

namespace hsk {

struct Term::Node {
  Kind kind;
  std::string name;
  VariableKind variable_kind = VariableKind::plain;
  std::optional<FunctionSymbol> symbol;
  std::vector<Term> args;
  std::size_t hash = 0;
  std::size_t size = 0;
  bool ground = true;
  bool unknown_free = true;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Unknowns named by numbers sort numerically and before named ones.
std::strong_ordering compare_unknown_names(const std::string& a, const std::string& b) {
  bool na = is_numeric(a), nb = is_numeric(b);
  if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
  if (na && a.size() != b.size()) return a.size() <=> b.size();
  int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

int kind_rank(Term::Kind k) {
  switch (k) {
    case Term::Kind::unknown: return 0;
    case Term::Kind::variable: return 1;
    case Term::Kind::application: return 2;
  }
  return 3;
}

}  // namespace

Term Term::variable(std::string name, VariableKind kind) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->name = std::move(name);
  node->variable_kind = kind;
  node->hash = mix(0x51ed27, std::hash<std::string>{}(node->name));
  node->ground = false;
  return Term(std::move(node));
}

Term Term::unknown(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::unknown;
  node->name = std::move(name);
  node->hash = mix(0x2b7e15, std::hash<std::string>{}(node->name));
  node->unknown_free = false;
  return Term(std::move(node));
}

Term Term::apply(FunctionSymbol symbol, std::vector<Term> args) {
  if (args.size() != symbol.arity()) {
    throw ContractError("symbol '" + symbol.name() + "' expects " + std::to_string(symbol.arity()) +
                        " argument(s), got " + std::to_string(args.size()));
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::application;
  node->hash = mix(0x3c6ef3, std::hash<FunctionSymbol>{}(symbol));
  node->size = 1;
  for (const Term& a : args) {
    node->hash = mix(node->hash, a.hash());
    node->size += a.size();
    node->ground = node->ground && a.is_ground();
    node->unknown_free = node->unknown_free && !a.has_unknowns();
  }
  node->symbol = std::move(symbol);
  node->args = std::move(args);
  return Term(std::move(node));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const {
  if (node_->kind == Kind::application) throw ContractError("application terms have no name");
  return node_->name;
}

VariableKind Term::variable_kind() const {
  if (node_->kind != Kind::variable) throw ContractError("not a variable");
  return node_->variable_kind;
}

const FunctionSymbol& Term::symbol() const {
  if (node_->kind != Kind::application) throw ContractError("not an application");
  return *node_->symbol;
}

std::span<const Term> Term::args() const { return node_->args; }

std::size_t Term::size() const noexcept { return node_->size; }
bool Term::is_ground() const noexcept { return node_->ground; }
bool Term::is_solution_eligible() const noexcept { return node_->ground && node_->unknown_free; }
bool Term::has_unknowns() const noexcept { return !node_->unknown_free; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  if (x.kind != Term::Kind::application) return x.name == y.name;
  if (!(*x.symbol == *y.symbol)) return false;
  return std::equal(x.args.begin(), x.args.end(), y.args.begin());
}

std::strong_ordering compare_canonical(const Term& a, const Term& b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = kind_rank(a.kind()) <=> kind_rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::unknown: return compare_unknown_names(a.name(), b.name());
    case Term::Kind::variable: {
      int c = a.name().compare(b.name());
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Term::Kind::application: break;
  }
  if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (auto c = compare_canonical(a.arg(i), b.arg(i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Term successor(Term t) { return Term::apply(FunctionSymbol::successor(), {std::move(t)}); }

Term pair(Term a, Term b) { return Term::apply(FunctionSymbol::pairing(), {std::move(a), std::move(b)}); }

Term numeral(std::size_t m, Term base) {
  for (std::size_t i = 0; i < m; ++i) base = successor(std::move(base));
  return base;
}

std::optional<std::size_t> numeral_of(const Term& t, const FunctionSymbol& base) {
  if (!base.is_constant()) throw ContractError("numeral base '" + base.name() + "' must be a constant");
  std::size_t m = 0;
  const Term* cur = &t;
  while (cur->is_application() && cur->symbol().is_successor()) {
    ++m;
    cur = &cur->arg(0);
  }
  if (cur->is_application() && cur->symbol() == base) return m;
  return std::nullopt;
}

std::optional<std::size_t> numeral_of(const Term& t, const Term& base) {
  if (!base.is_application() || !base.symbol().is_constant()) {
    throw ContractError("numeral base must be a constant");
  }
  return numeral_of(t, base.symbol());
}

void collect_subterms(const Term& t, std::vector<Term>& out) {
  for (const Term& a : t.args()) collect_subterms(a, out);
  out.push_back(t);
}

namespace {

void collect_kind(const Term& t, Term::Kind kind, std::vector<Term>& out) {
  if (t.kind() == kind) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return;
  }
  if (kind == Term::Kind::unknown && !t.has_unknowns()) return;
  if (kind == Term::Kind::variable && t.is_ground()) return;
  for (const Term& a : t.args()) collect_kind(a, kind, out);
}

}  // namespace

void collect_unknowns(const Term& t, std::vector<Term>& out) { collect_kind(t, Term::Kind::unknown, out); }

void collect_variables(const Term& t, std::vector<Term>& out) { collect_kind(t, Term::Kind::variable, out); }

bool occurs_in(const Term& needle, const Term& haystack) {
  if (needle == haystack) return true;
  if (needle.size() >= haystack.size() && haystack.size() > 0 && needle.size() > 0) return false;
  for (const Term& a : haystack.args()) {
    if (occurs_in(needle, a)) return true;
  }
  return false;
}

}  // namespace hsk
