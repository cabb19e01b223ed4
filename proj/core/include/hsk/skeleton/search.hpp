#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/signature.hpp"
#include "hsk/syntax/substitution.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk::skeleton {

struct SearchOptions {
  /// Worker threads for the search; results never depend on this.
  unsigned threads = 1;
};

/// All terms over `sig` with size <= max_size, in canonical order. A fresh
/// constant `c#0` is added when `sig` has none.
std::vector<Term> enumerate_terms(const Signature& sig, std::size_t max_size);

/// Same terms, grouped by size: result[s] holds the terms of size s.
std::vector<std::vector<Term>> enumerate_terms_by_size(const Signature& sig, std::size_t max_size);

/// Members of the congruence class of `seed` modulo the ground equations
/// `equations`, over `sig`, with size <= max_size, in canonical order.
std::vector<Term> class_members(std::span<const Formula> equations, const Term& seed, const Signature& sig,
                                std::size_t max_size);

/// First assignment of `unknowns` (each mapped to a term of size <= max_size
/// over `sig`) that turns `f` into a quasitautology. Assignments are ordered
/// by total size, then lexicographically along `unknowns` in canonical term
/// order. Unknowns of `f` missing from `unknowns` raise ContractError.
std::optional<Substitution> solve_formula(const Formula& f, std::span<const Term> unknowns, const Signature& sig,
                                          std::size_t max_size, const SearchOptions& options = {});

/// Every such assignment in the same order, stopping after `limit`.
std::vector<Substitution> all_solutions(const Formula& f, std::span<const Term> unknowns, const Signature& sig,
                                        std::size_t max_size,
                                        std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace hsk::skeleton
