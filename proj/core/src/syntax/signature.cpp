#include "hsk/syntax/signature.hpp"

#include <algorithm>

namespace hsk {

void Signature::add(const Term& t) {
  if (!t.is_application()) return;
  functions.insert(t.symbol());
  for (const Term& a : t.args()) add(a);
}

void Signature::add(const Formula& f) {
  for (const Formula& atom : atoms_of(f)) {
    if (atom.kind() == Formula::Kind::predicate) predicates.insert(atom.predicate_symbol());
    for (const Term& t : atom.args()) add(t);
  }
}

void Signature::merge(const Signature& other) {
  functions.insert(other.functions.begin(), other.functions.end());
  predicates.insert(other.predicates.begin(), other.predicates.end());
}

bool Signature::has_constant() const {
  return std::any_of(functions.begin(), functions.end(), [](const FunctionSymbol& f) { return f.is_constant(); });
}

std::vector<FunctionSymbol> Signature::constants() const {
  std::vector<FunctionSymbol> out;
  for (const FunctionSymbol& f : functions) {
    if (f.is_constant()) out.push_back(f);
  }
  return out;
}

Signature signature_of(const Term& t) {
  Signature sig;
  sig.add(t);
  return sig;
}

Signature signature_of(const Formula& f) {
  Signature sig;
  sig.add(f);
  return sig;
}

}  // namespace hsk
