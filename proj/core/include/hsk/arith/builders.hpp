#pragma once

#include "hsk/syntax/formula.hpp"
#include "hsk/syntax/symbol.hpp"
#include "hsk/syntax/term.hpp"

namespace hsk::arith {

/// Special constant of language `lang` (0 is the unindexed language).
Term special(SpecialBase base, unsigned lang = 0);

// The building blocks, over the special constants of language `lang`.

/// z = s(z) -> z = x
Formula num(const Term& x, unsigned lang = 0);
/// zt = s(zt) -> zt = x
Formula num_tilde(const Term& x, unsigned lang = 0);
/// z = zt -> x = y
Formula sim(const Term& x, const Term& y, unsigned lang = 0);
/// zt = x -> z = y
Formula plus(const Term& x, const Term& y, const Term& z, unsigned lang = 0);
/// Num~(w) & Sim(y, w) & Plus(x, w, z)
Formula add(const Term& x, const Term& y, const Term& z, const Term& w, unsigned lang = 0);
/// z = s(z) & k = pair(pair(z, z), k) -> k = x
Formula tab(const Term& x, unsigned lang = 0);
/// zh = s(zh) & zt = s(zt) & kt = pair(pair(zh, zt), kt) -> kt = x
Formula tab_tilde(const Term& x, unsigned lang = 0);
/// z = zh & z = zt & k = kt -> x = y
Formula sim_tilde(const Term& x, const Term& y, unsigned lang = 0);
/// zh = s(z) & zt = x & kt = pair(pair(z, z), k) -> wt = pair(pair(y, z), w)
Formula tim(const Term& x, const Term& y, const Term& z, const Term& w, const Term& wt, unsigned lang = 0);

/// Which similarity conjunct Mul uses for its two tables.
enum class MulSimilarity {
  table,    // Sim~(w, wt), the one the table lemmas need
  numeral,  // Sim(w, wt), as Mul is literally written down
};

/// Tab(w) & Tab~(wt) & <similarity>(w, wt) & Tim(x, y, z, w, wt)
Formula mul(const Term& x, const Term& y, const Term& z, const Term& w, const Term& wt,
            MulSimilarity similarity = MulSimilarity::table, unsigned lang = 0);

}  // namespace hsk::arith
