#include "hsk/arith/pc_formula.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hsk/error.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::arith {

namespace {

bool contains(const std::vector<Term>& v, const Term& t) { return std::find(v.begin(), v.end(), t) != v.end(); }

// Moves special constants to language `to` and rewrites variable names.
template <class Rename>
Term rename(const Term& t, unsigned to, const Rename& var_name) {
  switch (t.kind()) {
    case Term::Kind::variable:
      return Term::variable(var_name(t.name()), t.variable_kind());
    case Term::Kind::unknown:
      return t;
    case Term::Kind::application:
      break;
  }
  if (const auto& tag = t.symbol().special_tag()) return special(tag->base, to);
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(rename(a, to, var_name));
  return Term::apply(t.symbol(), std::move(args));
}

std::string suffixed(const std::string& name, unsigned i) { return name + "@" + std::to_string(i); }

std::string unsuffixed(const std::string& name) {
  auto at = name.rfind('@');
  return at == std::string::npos ? name : name.substr(0, at);
}

template <class F>
PCArithFormula map_terms(const PCArithFormula& phi, unsigned language, const F& f) {
  std::vector<Block> blocks;
  for (const Block& b : phi.blocks()) {
    Block nb{b.kind, {}};
    for (const Term& a : b.args) nb.args.push_back(f(a));
    blocks.push_back(std::move(nb));
  }
  std::vector<Term> numeric, table;
  for (const Term& v : phi.numeric_vars()) numeric.push_back(f(v));
  for (const Term& v : phi.table_vars()) table.push_back(f(v));
  return PCArithFormula(std::move(blocks), std::move(numeric), std::move(table), language, phi.similarity());
}

Formula map_formula(const Formula& f, const std::function<Term(const Term&)>& g) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::equality:
      return Formula::equality(g(f.lhs()), g(f.rhs()));
    case K::predicate: {
      std::vector<Term> args;
      for (const Term& a : f.args()) args.push_back(g(a));
      return Formula::predicate(f.predicate_symbol(), std::move(args));
    }
    case K::negation:
      return Formula::negation(map_formula(f.operand(), g));
    case K::conjunction:
      return Formula::conjunction(map_formula(f.left(), g), map_formula(f.right(), g));
    case K::disjunction:
      return Formula::disjunction(map_formula(f.left(), g), map_formula(f.right(), g));
    case K::implication:
      return Formula::implication(map_formula(f.left(), g), map_formula(f.right(), g));
    case K::exists:
      return Formula::exists(g(f.bound_variable()), map_formula(f.body(), g));
    case K::forall:
      return Formula::forall(g(f.bound_variable()), map_formula(f.body(), g));
  }
  throw ContractError("unknown formula kind");
}

}  // namespace

PCArithFormula::PCArithFormula(std::vector<Block> blocks, std::vector<Term> numeric_vars, std::vector<Term> table_vars,
                               unsigned language, MulSimilarity similarity)
    : blocks_(std::move(blocks)),
      numeric_vars_(std::move(numeric_vars)),
      table_vars_(std::move(table_vars)),
      language_(language),
      similarity_(similarity) {
  static constexpr std::size_t arity[] = {1, 4, 5};
  for (const Block& b : blocks_) {
    if (b.args.size() != arity[static_cast<int>(b.kind)]) throw ContractError("block with the wrong number of arguments");
  }
  for (const Term& x : numeric_vars_) {
    if (contains(table_vars_, x)) throw ContractError("?" + x.name() + " is both numeric and a table variable");
    bool covered = std::any_of(blocks_.begin(), blocks_.end(),
                               [&](const Block& b) { return b.kind == Block::Kind::num && b.args.front() == x; });
    if (!covered) throw ContractError("numeric variable ?" + x.name() + " has no Num conjunct");
  }
}

Formula PCArithFormula::formula() const {
  std::vector<Formula> parts;
  for (const Block& b : blocks_) {
    const auto& a = b.args;
    switch (b.kind) {
      case Block::Kind::num:
        parts.push_back(num(a[0], language_));
        break;
      case Block::Kind::add:
        parts.push_back(add(a[0], a[1], a[2], a[3], language_));
        break;
      case Block::Kind::mul:
        parts.push_back(mul(a[0], a[1], a[2], a[3], a[4], similarity_, language_));
        break;
    }
  }
  return conjoin(parts);
}

PCArithFormula associate(const DiophantineFormula& psi, MulSimilarity similarity) {
  const std::vector<Term> numeric = psi.variables();
  std::set<std::string> taken;
  for (const Term& v : numeric) taken.insert(v.name());
  std::size_t counter = 0;
  std::vector<Term> tables;
  auto fresh = [&] {
    std::string name;
    do name = "w" + std::to_string(++counter);
    while (taken.count(name));
    tables.push_back(Term::variable(name, VariableKind::table));
    return tables.back();
  };
  std::vector<Block> blocks;
  for (const auto& at : psi.atoms()) {
    for (const Term* t : {&at.a, &at.b, &at.c}) blocks.push_back(Block{Block::Kind::num, {*t}});
    if (at.kind == AtomKind::add) {
      blocks.push_back(Block{Block::Kind::add, {at.a, at.b, at.c, fresh()}});
    } else {
      Term w = fresh();
      blocks.push_back(Block{Block::Kind::mul, {at.a, at.b, at.c, w, fresh()}});
    }
  }
  return PCArithFormula(std::move(blocks), numeric, std::move(tables), 0, similarity);
}

PCArithFormula instantiate_numeral(const PCArithFormula& phi, const Term& x, std::size_t m) {
  if (!contains(phi.numeric_vars(), x)) throw ContractError(to_string(x) + " is not a numeric variable");
  const Term n = numeral(m, special(SpecialBase::zero, phi.language()));
  std::vector<Block> blocks = phi.blocks();
  for (Block& b : blocks) {
    for (Term& a : b.args) {
      if (a == x) a = n;
    }
  }
  std::vector<Term> numeric;
  for (const Term& v : phi.numeric_vars()) {
    if (!(v == x)) numeric.push_back(v);
  }
  return PCArithFormula(std::move(blocks), std::move(numeric), phi.table_vars(), phi.language(), phi.similarity());
}

Term variant_term(const Term& t, unsigned i) {
  return rename(t, i, [i](const std::string& n) { return suffixed(n, i); });
}

Formula variant_formula(const Formula& f, unsigned i) {
  return map_formula(f, [i](const Term& t) { return variant_term(t, i); });
}

PCArithFormula make_variant(const PCArithFormula& phi, unsigned i) {
  if (phi.language() != 0) throw ContractError("variants are taken of formulas over the base language");
  if (i == 0) throw ContractError("variant languages are numbered from 1");
  return map_terms(phi, i, [i](const Term& t) { return variant_term(t, i); });
}

PCArithFormula erase_variant(const PCArithFormula& phi) {
  return map_terms(phi, 0, [](const Term& t) { return rename(t, 0, unsuffixed); });
}

Formula AssignedFormula::formula() const {
  std::vector<Formula> parts;
  for (const auto& v : variants) parts.push_back(v.formula());
  return conjoin(parts);
}

std::vector<Term> AssignedFormula::variables() const {
  std::vector<Term> out;
  for (const auto& v : variants) {
    out.insert(out.end(), v.numeric_vars().begin(), v.numeric_vars().end());
    out.insert(out.end(), v.table_vars().begin(), v.table_vars().end());
  }
  return out;
}

AssignedFormula assign_n(const PCArithFormula& phi, std::size_t n) {
  if (n == 0) throw ContractError("assignment needs n >= 1");
  AssignedFormula out;
  for (std::size_t i = 1; i <= n; ++i) out.variants.push_back(make_variant(phi, static_cast<unsigned>(i)));
  return out;
}

skeleton::ExistentialFormula reduction_f(const DiophantineFormula& psi, const Term& x, std::size_t m, std::size_t n,
                                         MulSimilarity similarity) {
  if (n == 0) throw ContractError("reduction needs n >= 1");
  PCArithFormula phi = associate(psi, similarity);
  if (!x.is_variable() || !contains(phi.numeric_vars(), x)) {
    throw ContractError(to_string(x) + " is not a free variable of the diophantine formula");
  }
  if (n == 1) {
    PCArithFormula inst = instantiate_numeral(phi, x, m);
    AssignedFormula single{{inst}};
    return skeleton::ExistentialFormula(single.variables(), inst.formula());
  }
  AssignedFormula assigned = assign_n(phi, n);
  for (std::size_t i = 0; i < n; ++i) {
    assigned.variants[i] = instantiate_numeral(assigned.variants[i], variant_term(x, static_cast<unsigned>(i + 1)), m);
  }
  return skeleton::ExistentialFormula(assigned.variables(), assigned.formula());
}

}  // namespace hsk::arith
