#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "hsk/models/structure.hpp"
#include "hsk/syntax/formula.hpp"

namespace hsk::arith {

enum class Primitive { num, num_tilde, sim, plus, tab, tab_tilde, sim_tilde, tim };

std::string_view primitive_name(Primitive p);

/// A conjunct identified as one of the primitive formulas.
struct RecognizedConjunct {
  Primitive kind;
  unsigned language;
  /// Arguments in builder order, e.g. tim(x, y, z, w, wt).
  std::vector<Term> args;
};

/// Which primitive `f` is, if any: it must equal the primitive rebuilt from
/// its own arguments.
std::optional<RecognizedConjunct> recognize(const Formula& f);

using Oracle = std::function<bool(const Formula&)>;

/// For a ground instance of a variant that is not valid: the first failing
/// conjunct class in the order Num/Tab, Num~/Tab~, Sim/Sim~, Plus/Tim, with m
/// taken from the first argument of a failing Plus/Tim. Throws ContractError
/// if a conjunct is not a primitive, the instance mixes languages, or every
/// conjunct is valid. The oracle defaults to the quasitautology test.
models::Diagnosis classify_failures(const Formula& instance, const Oracle& oracle = {});

}  // namespace hsk::arith
