#pragma once

#include <cstddef>
#include <vector>

#include "hsk/arith/builders.hpp"
#include "hsk/arith/diophantine.hpp"
#include "hsk/skeleton/existential.hpp"
#include "hsk/syntax/formula.hpp"

namespace hsk::arith {

/// One building block of a PC-arithmetic formula.
struct Block {
  enum class Kind { num, add, mul };
  Kind kind;
  /// num: {a}; add: {a, b, c, w}; mul: {a, b, c, w, wt}.
  std::vector<Term> args;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A conjunction of Num/Add/Mul blocks over the language with the given
/// index. Variables of a variant carry the suffix `@i`.
class PCArithFormula {
 public:
  /// Throws ContractError if a numeric variable lacks its Num block or a
  /// variable is both numeric and a table variable.
  PCArithFormula(std::vector<Block> blocks, std::vector<Term> numeric_vars, std::vector<Term> table_vars,
                 unsigned language = 0, MulSimilarity similarity = MulSimilarity::table);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<Term>& numeric_vars() const noexcept { return numeric_vars_; }
  const std::vector<Term>& table_vars() const noexcept { return table_vars_; }
  unsigned language() const noexcept { return language_; }
  MulSimilarity similarity() const noexcept { return similarity_; }

  /// The blocks built and conjoined left to right.
  Formula formula() const;

  friend bool operator==(const PCArithFormula&, const PCArithFormula&) = default;

 private:
  std::vector<Block> blocks_;
  std::vector<Term> numeric_vars_;
  std::vector<Term> table_vars_;
  unsigned language_;
  MulSimilarity similarity_;
};

/// Num(a) & Num(b) & Num(c) & Add/Mul per atom, with fresh table variables
/// ?w1, ?w2, ... allocated left to right.
PCArithFormula associate(const DiophantineFormula& psi, MulSimilarity similarity = MulSimilarity::table);

/// Substitutes S^m(z_lang) for the numeric variable x. Throws ContractError
/// if x is not one of its numeric variables.
PCArithFormula instantiate_numeral(const PCArithFormula& phi, const Term& x, std::size_t m);

/// Renames special constants into language i and variables ?x to ?x@i.
/// Throws ContractError unless phi is over language 0 and i >= 1.
PCArithFormula make_variant(const PCArithFormula& phi, unsigned i);
/// Inverse of make_variant.
PCArithFormula erase_variant(const PCArithFormula& phi);
/// Same renaming on a single term or formula (e.g. to carry a solution over).
Term variant_term(const Term& t, unsigned i);
Formula variant_formula(const Formula& f, unsigned i);

/// The variants 1..n of phi; their conjunction is the assigned formula.
struct AssignedFormula {
  std::vector<PCArithFormula> variants;

  Formula formula() const;
  std::vector<Term> variables() const;
};

/// Throws ContractError for n = 0.
AssignedFormula assign_n(const PCArithFormula& phi, std::size_t n);

/// For n = 1 the existential closure of associate(psi) with S^m(z) for x;
/// for n > 1 that of the n variants with S^m(z_i) for x@i. Numeric variables
/// precede table variables in each block of the prefix.
skeleton::ExistentialFormula reduction_f(const DiophantineFormula& psi, const Term& x, std::size_t m, std::size_t n,
                                         MulSimilarity similarity = MulSimilarity::table);

}  // namespace hsk::arith
