#pragma once

#include <set>
#include <vector>

#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/symbol.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk {

struct Signature {
  std::set<FunctionSymbol> functions;
  std::set<PredicateSymbol> predicates;

  void add(const Term& t);
  void add(const Formula& f);
  void merge(const Signature& other);
  bool has_constant() const;
  std::vector<FunctionSymbol> constants() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const Term& t);
Signature signature_of(const Formula& f);

}  // namespace hsk
