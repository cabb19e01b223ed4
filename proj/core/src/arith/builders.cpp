#include "hsk/arith/builders.hpp"

namespace hsk::arith {

namespace {

Formula eq(Term a, Term b) { return Formula::equality(std::move(a), std::move(b)); }

Formula rule(std::initializer_list<Formula> hyps, Formula concl) {
  return Formula::implication(conjoin(std::vector<Formula>(hyps)), std::move(concl));
}

}  // namespace

Term special(SpecialBase base, unsigned lang) { return Term::constant(FunctionSymbol::special(base, lang)); }

Formula num(const Term& x, unsigned lang) {
  Term z = special(SpecialBase::zero, lang);
  return rule({eq(z, successor(z))}, eq(z, x));
}

Formula num_tilde(const Term& x, unsigned lang) {
  Term zt = special(SpecialBase::zero_tilde, lang);
  return rule({eq(zt, successor(zt))}, eq(zt, x));
}

Formula sim(const Term& x, const Term& y, unsigned lang) {
  return rule({eq(special(SpecialBase::zero, lang), special(SpecialBase::zero_tilde, lang))}, eq(x, y));
}

Formula plus(const Term& x, const Term& y, const Term& z, unsigned lang) {
  return rule({eq(special(SpecialBase::zero_tilde, lang), x)}, eq(z, y));
}

Formula add(const Term& x, const Term& y, const Term& z, const Term& w, unsigned lang) {
  return Formula::conjunction(Formula::conjunction(num_tilde(w, lang), sim(y, w, lang)), plus(x, w, z, lang));
}

Formula tab(const Term& x, unsigned lang) {
  Term z = special(SpecialBase::zero, lang), k = special(SpecialBase::k, lang);
  return rule({eq(z, successor(z)), eq(k, pair(pair(z, z), k))}, eq(k, x));
}

Formula tab_tilde(const Term& x, unsigned lang) {
  Term zh = special(SpecialBase::zero_hat, lang), zt = special(SpecialBase::zero_tilde, lang);
  Term kt = special(SpecialBase::k_tilde, lang);
  return rule({eq(zh, successor(zh)), eq(zt, successor(zt)), eq(kt, pair(pair(zh, zt), kt))}, eq(kt, x));
}

Formula sim_tilde(const Term& x, const Term& y, unsigned lang) {
  Term z = special(SpecialBase::zero, lang);
  return rule({eq(z, special(SpecialBase::zero_hat, lang)), eq(z, special(SpecialBase::zero_tilde, lang)),
               eq(special(SpecialBase::k, lang), special(SpecialBase::k_tilde, lang))},
              eq(x, y));
}

Formula tim(const Term& x, const Term& y, const Term& z, const Term& w, const Term& wt, unsigned lang) {
  Term zero = special(SpecialBase::zero, lang);
  return rule({eq(special(SpecialBase::zero_hat, lang), successor(zero)), eq(special(SpecialBase::zero_tilde, lang), x),
               eq(special(SpecialBase::k_tilde, lang), pair(pair(zero, zero), special(SpecialBase::k, lang)))},
              eq(wt, pair(pair(y, z), w)));
}

Formula mul(const Term& x, const Term& y, const Term& z, const Term& w, const Term& wt, MulSimilarity similarity,
            unsigned lang) {
  Formula similar = similarity == MulSimilarity::table ? sim_tilde(w, wt, lang) : sim(w, wt, lang);
  return conjoin(std::vector<Formula>{tab(w, lang), tab_tilde(wt, lang), similar, tim(x, y, z, w, wt, lang)});
}

}  // namespace hsk::arith
