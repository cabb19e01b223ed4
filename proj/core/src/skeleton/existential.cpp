#include "hsk/skeleton/existential.hpp"

#include <algorithm>

#include "hsk/error.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::skeleton {

ExistentialFormula::ExistentialFormula(std::vector<Term> bound_vars, Formula matrix)
    : bound_vars_(std::move(bound_vars)), matrix_(std::move(matrix)) {
  for (std::size_t i = 0; i < bound_vars_.size(); ++i) {
    if (!bound_vars_[i].is_variable()) throw ContractError("existential prefix binds a non-variable");
    for (std::size_t j = 0; j < i; ++j) {
      if (bound_vars_[j] == bound_vars_[i]) {
        throw ContractError("variable ?" + bound_vars_[i].name() + " is bound twice");
      }
    }
  }
  if (!matrix_.is_quantifier_free()) throw ContractError("matrix must be quantifier-free: " + to_string(matrix_));
  if (matrix_.has_unknowns()) throw ContractError("matrix must not contain unknowns: " + to_string(matrix_));
  for (const Term& v : free_variables(matrix_)) {
    if (std::find(bound_vars_.begin(), bound_vars_.end(), v) == bound_vars_.end()) {
      throw ContractError("free variable ?" + v.name() + " is not bound by the prefix");
    }
  }
}

ExistentialFormula ExistentialFormula::from_formula(const Formula& f) {
  std::vector<Term> vars;
  const Formula* cur = &f;
  while (cur->kind() == Formula::Kind::exists) {
    vars.push_back(cur->bound_variable());
    cur = &cur->body();
  }
  return ExistentialFormula(std::move(vars), *cur);
}

Formula ExistentialFormula::to_formula() const {
  Formula out = matrix_;
  for (auto it = bound_vars_.rbegin(); it != bound_vars_.rend(); ++it) out = Formula::exists(*it, std::move(out));
  return out;
}

}  // namespace hsk::skeleton
