#pragma once

#include <span>
#include <vector>

#include "hsk/syntax/formula.hpp"

namespace hsk::qcheck {

/// A signed ground atom.
struct Literal {
  bool positive = true;
  Formula atom;

  Literal(bool positive, Formula atom);
  static Literal pos(Formula atom) { return Literal(true, std::move(atom)); }
  static Literal neg(Formula atom) { return Literal(false, std::move(atom)); }
  Formula to_formula() const { return positive ? atom : Formula::negation(atom); }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Whether some structure satisfies all literals: congruence closure over the
/// positive equalities, then no disequality inside a class and no predicate
/// asserted both ways on congruent arguments.
bool e_satisfiable(std::span<const Literal> literals);

/// Whether a ground quantifier-free formula holds in every structure.
/// Unknowns are allowed and treated as uninterpreted constants. Throws
/// ContractError on variables or quantifiers.
bool is_quasitautology(const Formula& f);

}  // namespace hsk::qcheck
