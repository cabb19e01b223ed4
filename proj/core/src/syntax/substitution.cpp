#include "hsk/syntax/substitution.hpp"

#include <algorithm>
#include <vector>

#include "hsk/error.hpp"

namespace hsk {

Substitution::Substitution(std::initializer_list<std::pair<Term, Term>> bindings) {
  for (const auto& [slot, value] : bindings) bind(slot, value);
}

void Substitution::bind(Term slot, Term value) {
  if (slot.is_application()) throw ContractError("only variables and unknowns can be bound");
  bindings_.insert_or_assign(std::move(slot), std::move(value));
}

std::optional<Term> Substitution::lookup(const Term& slot) const {
  auto it = bindings_.find(slot);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Term Substitution::apply(const Term& t) const {
  if (bindings_.empty()) return t;
  if (!t.is_application()) {
    auto it = bindings_.find(t);
    return it == bindings_.end() ? t : it->second;
  }
  if (t.is_ground() && !t.has_unknowns()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::apply(t.symbol(), std::move(args)) : t;
}

namespace {

bool occurs_in_body(const Term& slot, const Formula& body) {
  std::vector<Term> slots = slot.is_unknown() ? unknowns_of(body) : free_variables(body);
  return std::find(slots.begin(), slots.end(), slot) != slots.end();
}

void check_capture(const Substitution& s, const Term& bound, const Formula& body) {
  if (s.contains(bound)) {
    throw CaptureError("variable ?" + bound.name() + " is bound in the formula and cannot be substituted");
  }
  for (const auto& [slot, value] : s) {
    if (occurs_in(bound, value) && occurs_in_body(slot, body)) {
      throw CaptureError("replacement for " + std::string(slot.is_unknown() ? "*" : "?") + slot.name() +
                         " would be captured by the quantifier on ?" + bound.name());
    }
  }
}

}  // namespace

Formula Substitution::apply(const Formula& f) const {
  if (bindings_.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::equality: return Formula::equality(apply(f.lhs()), apply(f.rhs()));
    case Formula::Kind::predicate: {
      std::vector<Term> args;
      for (const Term& a : f.args()) args.push_back(apply(a));
      return Formula::predicate(f.predicate_symbol(), std::move(args));
    }
    case Formula::Kind::negation: return Formula::negation(apply(f.operand()));
    case Formula::Kind::conjunction: return Formula::conjunction(apply(f.left()), apply(f.right()));
    case Formula::Kind::disjunction: return Formula::disjunction(apply(f.left()), apply(f.right()));
    case Formula::Kind::implication: return Formula::implication(apply(f.left()), apply(f.right()));
    case Formula::Kind::exists:
      check_capture(*this, f.bound_variable(), f.body());
      return Formula::exists(f.bound_variable(), apply(f.body()));
    case Formula::Kind::forall:
      check_capture(*this, f.bound_variable(), f.body());
      return Formula::forall(f.bound_variable(), apply(f.body()));
  }
  return f;
}

}  // namespace hsk
