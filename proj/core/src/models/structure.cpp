#include "hsk/models/structure.hpp"

#include <algorithm>
#include <set>

#include "hsk/error.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::models {

Structure::Structure(std::string name, std::optional<std::vector<Natural>> elements, FunctionRule fallback,
                     PredicateRule predicate_fallback)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      fallback_(std::move(fallback)),
      predicate_fallback_(std::move(predicate_fallback)) {
  if (!fallback_) throw ContractError("structure '" + name_ + "' needs a default function rule");
  if (elements_) {
    if (elements_->empty()) throw ContractError("structure '" + name_ + "' has an empty domain");
    std::sort(elements_->begin(), elements_->end());
  }
}

Structure& Structure::define(const FunctionSymbol& f, FunctionRule rule) {
  functions_.insert_or_assign(f, std::move(rule));
  return *this;
}

Structure& Structure::define(const PredicateSymbol& p, PredicateRule rule) {
  predicates_.insert_or_assign(p, std::move(rule));
  return *this;
}

const std::vector<Natural>& Structure::elements() const {
  if (!elements_) throw ContractError("structure '" + name_ + "' has an infinite domain");
  return *elements_;
}

Natural Structure::apply(const FunctionSymbol& f, std::span<const Natural> args) const {
  auto it = functions_.find(f);
  return it != functions_.end() ? it->second(f, args) : fallback_(f, args);
}

bool Structure::apply(const PredicateSymbol& p, std::span<const Natural> args) const {
  auto it = predicates_.find(p);
  if (it != predicates_.end()) return it->second(p, args);
  return predicate_fallback_ ? predicate_fallback_(p, args) : false;
}

Natural eval_term(const Structure& m, const Term& t) {
  if (!t.is_application()) {
    throw ContractError("cannot evaluate " + to_string(t) + ": only terms without variables or unknowns have a value");
  }
  std::vector<Natural> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(eval_term(m, a));
  return m.apply(t.symbol(), args);
}

bool holds(const Structure& m, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::equality: return eval_term(m, f.lhs()) == eval_term(m, f.rhs());
    case K::predicate: {
      std::vector<Natural> args;
      for (const Term& a : f.args()) args.push_back(eval_term(m, a));
      return m.apply(f.predicate_symbol(), args);
    }
    case K::negation: return !holds(m, f.operand());
    case K::conjunction: return holds(m, f.left()) && holds(m, f.right());
    case K::disjunction: return holds(m, f.left()) || holds(m, f.right());
    case K::implication: return !holds(m, f.left()) || holds(m, f.right());
    case K::exists:
    case K::forall: break;
  }
  throw ContractError("holds needs a quantifier-free formula: " + to_string(f));
}

Structure two_point_structure() {
  const FunctionSymbol zero = FunctionSymbol::special(SpecialBase::zero);
  Structure m("two-point", std::vector<Natural>{0, 1}, [zero](const FunctionSymbol& f, std::span<const Natural> args) {
    if (f == zero) return Natural(0);
    if (f.is_successor()) return args[0];
    return Natural(1);
  });
  return m;
}

Structure table_structure() {
  const FunctionSymbol zh = FunctionSymbol::special(SpecialBase::zero_hat);
  const FunctionSymbol zt = FunctionSymbol::special(SpecialBase::zero_tilde);
  const FunctionSymbol kt = FunctionSymbol::special(SpecialBase::k_tilde);
  return Structure("table", std::vector<Natural>{0, 2, 3, 4, 5},
                   [=](const FunctionSymbol& f, std::span<const Natural> args) {
                     if (f == zh) return Natural(2);
                     if (f == zt) return Natural(3);
                     if (f == kt) return Natural(4);
                     if (f.is_successor()) return (args[0] == 2 || args[0] == 3) ? args[0] : Natural(0);
                     if (f.is_pairing()) {
                       if (args[0] == 2 && args[1] == 3) return Natural(5);
                       if (args[0] == 5 && args[1] == 4) return Natural(4);
                     }
                     return Natural(0);
                   });
}

void AlphaAssignment::set(const FunctionSymbol& constant, Natural value) {
  if (!constant.special_tag()) throw ContractError("'" + constant.name() + "' is not a special constant");
  values_.insert_or_assign(*constant.special_tag(), std::move(value));
}

void AlphaAssignment::set(SpecialBase base, unsigned language, Natural value) {
  values_.insert_or_assign(SpecialTag{base, language}, std::move(value));
}

Natural AlphaAssignment::get(const FunctionSymbol& constant) const {
  if (!constant.special_tag()) throw ContractError("'" + constant.name() + "' is not a special constant");
  auto it = values_.find(*constant.special_tag());
  return it == values_.end() ? Natural(0) : it->second;
}

Natural AlphaAssignment::get(SpecialBase base, unsigned language) const {
  auto it = values_.find(SpecialTag{base, language});
  return it == values_.end() ? Natural(0) : it->second;
}

std::vector<std::pair<FunctionSymbol, Natural>> AlphaAssignment::entries() const {
  std::vector<std::pair<SpecialTag, Natural>> sorted(values_.begin(), values_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.language != b.first.language) return a.first.language < b.first.language;
    return a.first.base < b.first.base;
  });
  std::vector<std::pair<FunctionSymbol, Natural>> out;
  for (auto& [tag, value] : sorted) out.emplace_back(FunctionSymbol::special(tag.base, tag.language), value);
  return out;
}

namespace {

Natural successor_rule(const Natural& d) {
  auto jk = unpair(d);
  if (!jk) return 0;
  const auto& [j, i] = *jk;
  if (j == 0) return pairing_J(0, i + 1);
  if (j >= 1 && j <= 3) return d;
  return 0;
}

Natural pairing_rule(const Natural& a, const Natural& b) {
  auto x = unpair(a);
  auto y = unpair(b);
  if (!x || !y) return 0;
  const auto& [ja, ia] = *x;
  const auto& [jb, ib] = *y;
  if (ja == 0 && jb == 0) return pairing_J(0, pairing_J(ia, ib));
  if (ia != ib) return 0;
  if ((ja == 1 && jb == 1) || (ja == 2 && jb == 3)) return pairing_J(5, ia);
  if (ja == 5 && jb == 4) return pairing_J(4, ia);
  return 0;
}

}  // namespace

Structure m_alpha(const AlphaAssignment& alpha) {
  return Structure("m-alpha", std::nullopt, [alpha](const FunctionSymbol& f, std::span<const Natural> args) {
    if (f.is_special()) return alpha.get(f);
    if (f.is_successor()) return successor_rule(args[0]);
    if (f.is_pairing()) return pairing_rule(args[0], args[1]);
    return Natural(0);
  });
}

std::string_view failure_case_name(FailureCase c) {
  switch (c) {
    case FailureCase::numeral_or_table: return "i";
    case FailureCase::tilde_numeral_or_table: return "ii";
    case FailureCase::similarity: return "iii";
    case FailureCase::arithmetic: return "iv";
  }
  return "?";
}

AlphaAssignment construct_alpha(std::span<const Diagnosis> failing) {
  AlphaAssignment alpha;
  std::set<unsigned> seen;
  for (const Diagnosis& d : failing) {
    const unsigned i = d.language;
    if (!seen.insert(i).second) throw ContractError("two diagnoses for language " + std::to_string(i));
    auto set = [&](SpecialBase base, Natural v) { alpha.set(base, i, std::move(v)); };
    switch (d.failure) {
      case FailureCase::numeral_or_table:
        set(SpecialBase::zero, pairing_J(1, i));
        set(SpecialBase::k, pairing_J(4, i));
        set(SpecialBase::zero_hat, 0);
        set(SpecialBase::zero_tilde, 0);
        set(SpecialBase::k_tilde, 0);
        break;
      case FailureCase::tilde_numeral_or_table:
        set(SpecialBase::zero_hat, pairing_J(2, i));
        set(SpecialBase::zero_tilde, pairing_J(3, i));
        set(SpecialBase::k_tilde, pairing_J(4, i));
        set(SpecialBase::zero, 0);
        set(SpecialBase::k, 0);
        break;
      case FailureCase::similarity:
        for (SpecialBase b : kSpecialBases) set(b, pairing_J(0, 0));
        break;
      case FailureCase::arithmetic:
        if (!d.m) throw ContractError("arithmetic failure in language " + std::to_string(i) + " lacks m");
        set(SpecialBase::zero, pairing_J(0, 0));
        set(SpecialBase::k, pairing_J(0, 0));
        set(SpecialBase::zero_hat, pairing_J(0, 1));
        set(SpecialBase::zero_tilde, pairing_J(0, *d.m));
        set(SpecialBase::k_tilde, pairing_J(0, pairing_J(pairing_J(0, 0), 0)));
        break;
      default: throw ContractError("unknown failure case " + std::to_string(static_cast<int>(d.failure)));
    }
  }
  return alpha;
}

}  // namespace hsk::models
