#include "hsk/skeleton/skeleton.hpp"

#include "hsk/error.hpp"
#include "hsk/qcheck/quasitautology.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::skeleton {

std::vector<Term> Skeleton::unknowns() const {
  std::vector<Term> out;
  for (const auto& tuple : unknown_tuples) out.insert(out.end(), tuple.begin(), tuple.end());
  return out;
}

Skeleton make_skeleton(const ExistentialFormula& psi, std::size_t n) {
  if (n == 0) throw ContractError("a skeleton needs at least one copy");
  std::size_t counter = 0;
  std::vector<std::vector<Term>> tuples;
  std::vector<Formula> copies;
  for (std::size_t j = 0; j < n; ++j) {
    Substitution rename;
    std::vector<Term> tuple;
    for (const Term& v : psi.bound_vars()) {
      tuple.push_back(Term::unknown(++counter));
      rename.bind(v, tuple.back());
    }
    copies.push_back(rename.apply(psi.matrix()));
    tuples.push_back(std::move(tuple));
  }
  return Skeleton{psi, n, std::move(tuples), disjoin(copies)};
}

bool verify_solution(const Skeleton& sk, const Solution& sol) {
  for (const Term& u : sk.unknowns()) {
    auto t = sol.lookup(u);
    if (!t) throw ContractError("solution does not bind " + to_string(u));
    if (!t->is_solution_eligible()) throw ContractError("solution maps " + to_string(u) + " to " + to_string(*t));
  }
  return qcheck::is_quasitautology(sol.apply(sk.formula));
}

std::optional<Solution> solve_bounded(const Skeleton& sk, const Signature& sig, std::size_t max_size,
                                      const SearchOptions& options) {
  const std::vector<Term> unknowns = sk.unknowns();
  return solve_formula(sk.formula, unknowns, sig, max_size, options);
}

std::optional<Solution> solve_bounded(const Skeleton& sk, std::size_t max_size, const SearchOptions& options) {
  return solve_bounded(sk, signature_of(sk.formula), max_size, options);
}

}  // namespace hsk::skeleton
