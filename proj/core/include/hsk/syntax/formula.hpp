#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hsk/syntax/symbol.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk {

/// Immutable first-order formula with identity.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    equality,
    predicate,
    negation,
    conjunction,
    disjunction,
    implication,
    exists,
    forall
  };

  static Formula equality(Term lhs, Term rhs);
  static Formula predicate(PredicateSymbol symbol, std::vector<Term> args);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula antecedent, Formula consequent);
  /// `variable` must be a Variable term.
  static Formula exists(Term variable, Formula body);
  static Formula forall(Term variable, Formula body);

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::equality || kind() == Kind::predicate; }
  bool is_binary() const noexcept;
  bool is_quantifier() const noexcept { return kind() == Kind::exists || kind() == Kind::forall; }

  const Term& lhs() const;
  const Term& rhs() const;
  const PredicateSymbol& predicate_symbol() const;
  /// Arguments of a predicate atom; {lhs, rhs} for an equality.
  std::span<const Term> args() const;
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;
  const Term& bound_variable() const;
  const Formula& body() const;

  bool is_quantifier_free() const noexcept;
  bool has_unknowns() const noexcept;
  /// No variables at all, free or bound.
  bool is_variable_free() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Kind kind, Formula left, Formula right);
  static Formula quantifier(Kind kind, Term variable, Formula body);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Left-nested conjunction/disjunction; the list must be nonempty.
Formula conjoin(std::span<const Formula> parts);
Formula disjoin(std::span<const Formula> parts);

/// Top-level conjuncts (disjuncts), left to right, regardless of nesting.
std::vector<Formula> flatten_conjunction(const Formula& f);
std::vector<Formula> flatten_disjunction(const Formula& f);

bool is_closed(const Formula& f);
/// Free variables in first-occurrence order.
std::vector<Term> free_variables(const Formula& f);
/// Unknowns in canonical order.
std::vector<Term> unknowns_of(const Formula& f);
/// Distinct atoms in first-occurrence order.
std::vector<Formula> atoms_of(const Formula& f);

}  // namespace hsk

template <>
struct std::hash<hsk::Formula> {
  std::size_t operator()(const hsk::Formula& f) const noexcept { return f.hash(); }
};
