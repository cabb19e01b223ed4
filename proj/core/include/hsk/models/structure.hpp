#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsk/models/natural.hpp"
#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/symbol.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk::models {

/// An interpretation over naturals given by rule tables. Every symbol has an
/// interpretation through the mandatory fallback rule, so no registration is
/// needed for symbols a structure does not care about.
class Structure {
 public:
  using FunctionRule = std::function<Natural(const FunctionSymbol&, std::span<const Natural>)>;
  using PredicateRule = std::function<bool(const PredicateSymbol&, std::span<const Natural>)>;

  /// `elements` empty means the domain is all naturals.
  Structure(std::string name, std::optional<std::vector<Natural>> elements, FunctionRule fallback,
            PredicateRule predicate_fallback = nullptr);

  Structure& define(const FunctionSymbol& f, FunctionRule rule);
  Structure& define(const PredicateSymbol& p, PredicateRule rule);

  const std::string& name() const noexcept { return name_; }
  bool is_finite() const noexcept { return elements_.has_value(); }
  /// Domain elements of a finite structure, ascending.
  const std::vector<Natural>& elements() const;

  Natural apply(const FunctionSymbol& f, std::span<const Natural> args) const;
  bool apply(const PredicateSymbol& p, std::span<const Natural> args) const;

 private:
  std::string name_;
  std::optional<std::vector<Natural>> elements_;
  FunctionRule fallback_;
  PredicateRule predicate_fallback_;
  std::map<FunctionSymbol, FunctionRule> functions_;
  std::map<PredicateSymbol, PredicateRule> predicates_;
};

/// Denotation of a term. Throws ContractError on variables and unknowns.
Natural eval_term(const Structure& m, const Term& t);
/// Truth of a quantifier-free formula without variables or unknowns.
bool holds(const Structure& m, const Formula& f);

/// Domain {0,1}: z is 0, s is the identity, every other symbol yields 1.
Structure two_point_structure();

/// Domain {0,2,3,4,5}: zh=2, zt=3, kt=4; s fixes 2 and 3, else 0;
/// pair(2,3)=5, pair(5,4)=4, else 0; every other symbol yields 0.
Structure table_structure();

/// Interpretation of the special constants of all languages; unset ones are 0.
class AlphaAssignment {
 public:
  /// Throws ContractError if `constant` is not a special constant.
  void set(const FunctionSymbol& constant, Natural value);
  void set(SpecialBase base, unsigned language, Natural value);
  Natural get(const FunctionSymbol& constant) const;
  Natural get(SpecialBase base, unsigned language) const;
  /// Explicitly set entries, ordered by language then base.
  std::vector<std::pair<FunctionSymbol, Natural>> entries() const;

  friend bool operator==(const AlphaAssignment&, const AlphaAssignment&) = default;

 private:
  std::map<SpecialTag, Natural> values_;
};

/// Countermodel over all naturals: special constants via alpha, S and pair by
/// the J-partition rule tables, every other function 0, predicates false.
Structure m_alpha(const AlphaAssignment& alpha);

/// Which class of conjunct failed in a variant, in the order they are tried.
enum class FailureCase {
  numeral_or_table,              // Num_i or Tab_i
  tilde_numeral_or_table,        // Num~_i or Tab~_i
  similarity,                    // Sim_i or Sim~_i
  arithmetic,                    // Plus_i or Tim_i; needs m
};

std::string_view failure_case_name(FailureCase c);

struct Diagnosis {
  unsigned language = 0;
  FailureCase failure = FailureCase::numeral_or_table;
  /// Numeral exponent of the first argument of the failing Plus/Tim.
  std::optional<std::size_t> m;
  /// Human-readable failing conjunct.
  std::string conjunct;

  friend bool operator==(const Diagnosis&, const Diagnosis&) = default;
};

/// Assembles the stage-wise alpha falsifying every diagnosed variant at once.
/// Throws ContractError on an out-of-range case, a missing m for the
/// arithmetic case, or two diagnoses for one language.
AlphaAssignment construct_alpha(std::span<const Diagnosis> failing);

}  // namespace hsk::models
