#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsk/skeleton/search.hpp"
#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/signature.hpp"
#include "hsk/syntax/substitution.hpp"

namespace hsk::sreu {

/// A1 & ... & An -> B1 | ... | Bm over atoms.
struct Clause {
  std::vector<Formula> antecedent;
  std::vector<Formula> consequent;

  bool is_horn() const noexcept { return consequent.size() == 1; }
  /// Throws ContractError for an empty consequent.
  Formula to_formula() const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

using ClauseConjunction = std::vector<Clause>;

/// Equalities imply an equality. The hypotheses may be empty.
struct RigidConstraint {
  std::vector<Formula> hypotheses;
  Formula conclusion;

  Formula to_formula() const;

  friend bool operator==(const RigidConstraint&, const RigidConstraint&) = default;
};

struct SREUProblem {
  std::vector<RigidConstraint> constraints;

  /// Unknowns of all constraints, in canonical order.
  std::vector<Term> unknowns() const;
  /// Conjunction of the constraints; an empty problem is the valid `c#0 = c#0`.
  Formula to_formula() const;

  friend bool operator==(const SREUProblem&, const SREUProblem&) = default;
};

/// Equivalent clause list: negation normal form, distribution, then negative
/// literals to the antecedent and positive ones to the consequent. An empty
/// consequent becomes `c#n = d#n` with n = 1, 2, ... per call.
std::vector<Clause> to_clause_conjunction(const Formula& phi);

/// Splits non-Horn clauses (leftmost first) until only Horn clauses remain.
/// Structurally identical alternatives are kept once.
std::vector<ClauseConjunction> horn_split(const std::vector<ClauseConjunction>& gamma);

/// Removes predicate atoms from Horn-clause conjunctions. Throws
/// ContractError on a non-Horn clause.
std::vector<SREUProblem> eliminate_predicates(const std::vector<ClauseConjunction>& gamma);

/// The three steps composed. Throws ContractError on quantifiers.
std::vector<SREUProblem> convert_to_sreu(const Formula& phi);

/// Bounded search for a solution of the conjunction of the constraints.
std::optional<Substitution> solve_sreu_bounded(const SREUProblem& problem, const Signature& sig, std::size_t max_size,
                                               const skeleton::SearchOptions& options = {});

/// One line per constraint: `[i.j] h1 & h2 -> lhs = rhs`, problems numbered from 1.
std::string format_problems(const std::vector<SREUProblem>& problems);

}  // namespace hsk::sreu
