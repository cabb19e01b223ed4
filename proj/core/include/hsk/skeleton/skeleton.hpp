#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsk/skeleton/existential.hpp"
#include "hsk/skeleton/search.hpp"
#include "hsk/syntax/signature.hpp"
#include "hsk/syntax/substitution.hpp"

namespace hsk::skeleton {

/// A solution maps every unknown of a skeleton to a term without variables
/// or unknowns.
using Solution = Substitution;

/// The disjunction of n matrix copies, copy j using its own fresh unknowns.
struct Skeleton {
  ExistentialFormula source;
  std::size_t n;
  std::vector<std::vector<Term>> unknown_tuples;
  Formula formula;

  /// All unknowns, copy by copy.
  std::vector<Term> unknowns() const;
};

/// Unknowns are numbered *1, *2, ... copy by copy. Throws ContractError for n = 0.
Skeleton make_skeleton(const ExistentialFormula& psi, std::size_t n);

/// Throws ContractError if `sol` misses an unknown or maps one to a term
/// that is not solution-eligible.
bool verify_solution(const Skeleton& sk, const Solution& sol);

std::optional<Solution> solve_bounded(const Skeleton& sk, const Signature& sig, std::size_t max_size,
                                      const SearchOptions& options = {});
/// Enumerates over the symbols of the skeleton itself.
std::optional<Solution> solve_bounded(const Skeleton& sk, std::size_t max_size, const SearchOptions& options = {});

}  // namespace hsk::skeleton
