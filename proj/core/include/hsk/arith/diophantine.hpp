#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk::arith {

enum class AtomKind { add, mul };

/// a + b = c or a * b = c; each argument a numeric variable or a z-numeral.
struct DiophantineAtom {
  AtomKind kind;
  Term a, b, c;

  friend bool operator==(const DiophantineAtom&, const DiophantineAtom&) = default;
};

/// A nonempty conjunction of atoms.
class DiophantineFormula {
 public:
  /// Throws ContractError on an empty list or a bad argument.
  explicit DiophantineFormula(std::vector<DiophantineAtom> atoms);

  const std::vector<DiophantineAtom>& atoms() const noexcept { return atoms_; }
  /// Variables in order of first occurrence.
  std::vector<Term> variables() const;
  bool is_closed() const { return variables().empty(); }

  friend bool operator==(const DiophantineFormula&, const DiophantineFormula&) = default;

 private:
  std::vector<DiophantineAtom> atoms_;
};

/// One atom per line, `a + b = c` or `a * b = c`. Numerals are `z`, `s(...)`,
/// `s^k(z)` or a decimal k; variables are `?x` or a bare identifier. `%`
/// comments and blank lines are skipped. Throws ParseError.
DiophantineFormula parse_diophantine(std::string_view text);

/// Lines in the input syntax, numerals as s^k(z).
std::string to_string(const DiophantineFormula& psi);

/// Truth over the naturals. Throws ContractError if a variable occurs.
bool eval_diophantine(const DiophantineFormula& psi);

/// Replaces the variable x by S^m(z).
DiophantineFormula instantiate(const DiophantineFormula& psi, const Term& x, std::size_t m);

}  // namespace hsk::arith
