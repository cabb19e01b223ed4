#include "hsk/syntax/formula.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "hsk/error.hpp"

namespace hsk {

struct Formula::Node {
  Kind kind;
  std::optional<PredicateSymbol> predicate;
  std::vector<Term> terms;       // atom arguments, or the bound variable
  std::vector<Formula> children;
  std::size_t hash = 0;
  bool quantifier_free = true;
  bool unknowns = false;
  bool variable_free = true;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::equality(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::equality;
  node->hash = mix(mix(0x1001, lhs.hash()), rhs.hash());
  node->unknowns = lhs.has_unknowns() || rhs.has_unknowns();
  node->variable_free = lhs.is_ground() && rhs.is_ground();
  node->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::predicate(PredicateSymbol symbol, std::vector<Term> args) {
  if (args.size() != symbol.arity()) {
    throw ContractError("predicate '" + symbol.name() + "' expects " + std::to_string(symbol.arity()) +
                        " argument(s), got " + std::to_string(args.size()));
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::predicate;
  node->hash = mix(0x2002, std::hash<PredicateSymbol>{}(symbol));
  for (const Term& a : args) {
    node->hash = mix(node->hash, a.hash());
    node->unknowns = node->unknowns || a.has_unknowns();
    node->variable_free = node->variable_free && a.is_ground();
  }
  node->predicate = std::move(symbol);
  node->terms = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::negation;
  node->hash = mix(0x3003, operand.hash());
  node->quantifier_free = operand.is_quantifier_free();
  node->unknowns = operand.has_unknowns();
  node->variable_free = operand.is_variable_free();
  node->children = {std::move(operand)};
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->hash = mix(mix(0x4004 + static_cast<std::size_t>(kind), left.hash()), right.hash());
  node->quantifier_free = left.is_quantifier_free() && right.is_quantifier_free();
  node->unknowns = left.has_unknowns() || right.has_unknowns();
  node->variable_free = left.is_variable_free() && right.is_variable_free();
  node->children = {std::move(left), std::move(right)};
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return binary(Kind::conjunction, std::move(left), std::move(right));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return binary(Kind::disjunction, std::move(left), std::move(right));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return binary(Kind::implication, std::move(antecedent), std::move(consequent));
}

Formula Formula::quantifier(Kind kind, Term variable, Formula body) {
  if (!variable.is_variable()) throw ContractError("quantifiers bind variables only");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->hash = mix(mix(0x5005 + static_cast<std::size_t>(kind), variable.hash()), body.hash());
  node->quantifier_free = false;
  node->unknowns = body.has_unknowns();
  node->variable_free = false;
  node->terms = {std::move(variable)};
  node->children = {std::move(body)};
  return Formula(std::move(node));
}

Formula Formula::exists(Term variable, Formula body) {
  return quantifier(Kind::exists, std::move(variable), std::move(body));
}

Formula Formula::forall(Term variable, Formula body) {
  return quantifier(Kind::forall, std::move(variable), std::move(body));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  Kind k = kind();
  return k == Kind::conjunction || k == Kind::disjunction || k == Kind::implication;
}

const Term& Formula::lhs() const {
  if (kind() != Kind::equality) throw ContractError("not an equality");
  return node_->terms[0];
}

const Term& Formula::rhs() const {
  if (kind() != Kind::equality) throw ContractError("not an equality");
  return node_->terms[1];
}

const PredicateSymbol& Formula::predicate_symbol() const {
  if (kind() != Kind::predicate) throw ContractError("not a predicate atom");
  return *node_->predicate;
}

std::span<const Term> Formula::args() const {
  if (!is_atom()) throw ContractError("not an atom");
  return node_->terms;
}

const Formula& Formula::operand() const {
  if (kind() != Kind::negation) throw ContractError("not a negation");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (!is_binary()) throw ContractError("not a binary connective");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw ContractError("not a binary connective");
  return node_->children[1];
}

const Term& Formula::bound_variable() const {
  if (!is_quantifier()) throw ContractError("not a quantifier");
  return node_->terms[0];
}

const Formula& Formula::body() const {
  if (!is_quantifier()) throw ContractError("not a quantifier");
  return node_->children[0];
}

bool Formula::is_quantifier_free() const noexcept { return node_->quantifier_free; }
bool Formula::has_unknowns() const noexcept { return node_->unknowns; }
bool Formula::is_variable_free() const noexcept { return node_->variable_free; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind) return false;
  if (x.predicate != y.predicate) return false;
  return x.terms == y.terms && x.children == y.children;
}

Formula conjoin(std::span<const Formula> parts) {
  if (parts.empty()) throw ContractError("cannot conjoin an empty list");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conjunction(std::move(acc), parts[i]);
  return acc;
}

Formula disjoin(std::span<const Formula> parts) {
  if (parts.empty()) throw ContractError("cannot disjoin an empty list");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::disjunction(std::move(acc), parts[i]);
  return acc;
}

namespace {

void flatten(const Formula& f, Formula::Kind kind, std::vector<Formula>& out) {
  if (f.kind() == kind) {
    flatten(f.left(), kind, out);
    flatten(f.right(), kind, out);
  } else {
    out.push_back(f);
  }
}

void free_vars(const Formula& f, std::vector<Term>& bound, std::vector<Term>& out) {
  auto visit_term = [&](const Term& t) {
    std::vector<Term> vars;
    collect_variables(t, vars);
    for (const Term& v : vars) {
      if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  };
  switch (f.kind()) {
    case Formula::Kind::equality:
    case Formula::Kind::predicate:
      for (const Term& t : f.args()) visit_term(t);
      return;
    case Formula::Kind::negation: free_vars(f.operand(), bound, out); return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
      free_vars(f.left(), bound, out);
      free_vars(f.right(), bound, out);
      return;
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      bound.push_back(f.bound_variable());
      free_vars(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

void visit_atoms(const Formula& f, std::vector<Formula>& out, std::unordered_set<Formula, FormulaHash>& seen) {
  if (f.is_atom()) {
    if (seen.insert(f).second) out.push_back(f);
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::negation: visit_atoms(f.operand(), out, seen); return;
    case Formula::Kind::exists:
    case Formula::Kind::forall: visit_atoms(f.body(), out, seen); return;
    default:
      visit_atoms(f.left(), out, seen);
      visit_atoms(f.right(), out, seen);
  }
}

}  // namespace

std::vector<Formula> flatten_conjunction(const Formula& f) {
  std::vector<Formula> out;
  flatten(f, Formula::Kind::conjunction, out);
  return out;
}

std::vector<Formula> flatten_disjunction(const Formula& f) {
  std::vector<Formula> out;
  flatten(f, Formula::Kind::disjunction, out);
  return out;
}

std::vector<Term> free_variables(const Formula& f) {
  std::vector<Term> bound, out;
  if (f.is_variable_free()) return out;
  free_vars(f, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return f.is_variable_free() || free_variables(f).empty(); }

std::vector<Term> unknowns_of(const Formula& f) {
  std::vector<Term> out;
  if (!f.has_unknowns()) return out;
  for (const Formula& atom : atoms_of(f)) {
    for (const Term& t : atom.args()) collect_unknowns(t, out);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Formula> atoms_of(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  visit_atoms(f, out, seen);
  return out;
}

}  // namespace hsk
