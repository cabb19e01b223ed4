#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsk/syntax/symbol.hpp"

namespace hsk {

/// Annotation carried by variables. It does not take part in equality:
/// two variables are the same variable iff their names agree.
enum class VariableKind : std::uint8_t { plain, numeric, table };

/// Immutable, structurally shared first-order term. Unknowns are their own
/// constructor rather than constants, so they never count towards size and
/// can never sneak into a solution.
class Term {
 public:
  enum class Kind : std::uint8_t { variable, unknown, application };

  static Term variable(std::string name, VariableKind kind = VariableKind::plain);
  static Term unknown(std::string name);
  static Term unknown(std::size_t index) { return unknown(std::to_string(index)); }
  static Term apply(FunctionSymbol symbol, std::vector<Term> args);
  static Term constant(FunctionSymbol symbol) { return apply(std::move(symbol), {}); }
  static Term constant(std::string name) { return constant(FunctionSymbol(std::move(name), 0)); }

  Kind kind() const noexcept;
  bool is_variable() const noexcept { return kind() == Kind::variable; }
  bool is_unknown() const noexcept { return kind() == Kind::unknown; }
  bool is_application() const noexcept { return kind() == Kind::application; }

  /// Name of a variable or unknown (without the `?`/`*` sigil).
  const std::string& name() const;
  VariableKind variable_kind() const;
  const FunctionSymbol& symbol() const;
  std::span<const Term> args() const;
  const Term& arg(std::size_t i) const { return args()[i]; }

  /// Number of application nodes.
  std::size_t size() const noexcept;
  /// No variables.
  bool is_ground() const noexcept;
  /// No variables and no unknowns.
  bool is_solution_eligible() const noexcept;
  bool has_unknowns() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical order: size, then kind (unknowns, variables, applications),
/// then symbol name and arguments left to right.
std::strong_ordering compare_canonical(const Term& a, const Term& b);

struct CanonicalLess {
  bool operator()(const Term& a, const Term& b) const { return compare_canonical(a, b) < 0; }
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

Term successor(Term t);
Term pair(Term a, Term b);
/// S^m(base).
Term numeral(std::size_t m, Term base);
/// m with t = S^m(base), if any. `base` must be a constant.
std::optional<std::size_t> numeral_of(const Term& t, const FunctionSymbol& base);
std::optional<std::size_t> numeral_of(const Term& t, const Term& base);

/// Appends every subterm of t (including t) in post-order.
void collect_subterms(const Term& t, std::vector<Term>& out);
/// Appends the distinct unknowns of t in first-occurrence order.
void collect_unknowns(const Term& t, std::vector<Term>& out);
/// Appends the distinct variables of t in first-occurrence order.
void collect_variables(const Term& t, std::vector<Term>& out);
bool occurs_in(const Term& needle, const Term& haystack);

}  // namespace hsk

template <>
struct std::hash<hsk::Term> {
  std::size_t operator()(const hsk::Term& t) const noexcept { return t.hash(); }
};
