#pragma once

#include <vector>

#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk::skeleton {

/// exists x1 ... exists xn. matrix, with a quantifier-free, unknown-free
/// matrix whose free variables are among the bound ones.
class ExistentialFormula {
 public:
  /// Throws ContractError if the invariants fail.
  ExistentialFormula(std::vector<Term> bound_vars, Formula matrix);

  /// Peels the leading existential quantifiers.
  static ExistentialFormula from_formula(const Formula& f);

  const std::vector<Term>& bound_vars() const noexcept { return bound_vars_; }
  const Formula& matrix() const noexcept { return matrix_; }
  Formula to_formula() const;

  friend bool operator==(const ExistentialFormula&, const ExistentialFormula&) = default;

 private:
  std::vector<Term> bound_vars_;
  Formula matrix_;
};

}  // namespace hsk::skeleton
