#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk {

/// Finite map from unknowns and variables to terms, applied simultaneously:
/// replacement terms are never rewritten again.
class Substitution {
 public:
  using Map = std::map<Term, Term, CanonicalLess>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Term, Term>> bindings);

  /// Binds a variable or unknown; rebinding overwrites. Throws ContractError
  /// for any other slot.
  void bind(Term slot, Term value);
  std::optional<Term> lookup(const Term& slot) const;
  bool contains(const Term& slot) const { return bindings_.count(slot) != 0; }

  bool empty() const noexcept { return bindings_.empty(); }
  std::size_t size() const noexcept { return bindings_.size(); }
  Map::const_iterator begin() const { return bindings_.begin(); }
  Map::const_iterator end() const { return bindings_.end(); }

  Term apply(const Term& t) const;
  /// Throws CaptureError when a mapped variable is bound inside `f`, or when a
  /// replacement mentions a variable that a quantifier of `f` would capture.
  Formula apply(const Formula& f) const;

  friend bool operator==(const Substitution& a, const Substitution& b) { return a.bindings_ == b.bindings_; }

 private:
  Map bindings_;
};

inline Term substitute(const Term& t, const Substitution& s) { return s.apply(t); }
inline Formula substitute(const Formula& f, const Substitution& s) { return s.apply(f); }

}  // namespace hsk
