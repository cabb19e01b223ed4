#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "hsk/arith/builders.hpp"
#include "hsk/error.hpp"
#include "hsk/qcheck/quasitautology.hpp"
#include "hsk/skeleton/search.hpp"
#include "hsk/skeleton/skeleton.hpp"
#include "hsk/syntax/text.hpp"
#include "oracles.hpp"

namespace hsk::skeleton {
namespace {

Term T(std::string_view s) { return parse_term(s); }
Formula F(std::string_view s) { return parse_formula(s); }
ExistentialFormula E(std::string_view s) { return ExistentialFormula::from_formula(F(s)); }

const char* kTwo = "exists ?x. p(a) | p(b) -> p(?x)";

TEST(Existential, Invariants) {
  EXPECT_THROW(E("exists ?x. p(?y)"), ContractError);
  EXPECT_THROW(E("exists ?x. forall ?y. p(?x)"), ContractError);
  EXPECT_THROW(E("exists ?x. p(*1)"), ContractError);
  EXPECT_THROW(E("exists ?x. exists ?x. p(?x)"), ContractError);
  const auto psi = E("exists ?x. exists ?w. q(?x, ?w)");
  EXPECT_EQ(psi.bound_vars(), (std::vector<Term>{T("?x"), T("?w")}));
  EXPECT_EQ(psi.to_formula(), F("exists ?x. exists ?w. q(?x, ?w)"));
}

TEST(MakeSkeleton, TwoCopies) {
  const Skeleton sk = make_skeleton(E(kTwo), 2);
  EXPECT_EQ(sk.formula, F("(p(a) | p(b) -> p(*1)) | (p(a) | p(b) -> p(*2))"));
  EXPECT_EQ(sk.unknown_tuples, (std::vector<std::vector<Term>>{{T("*1")}, {T("*2")}}));
  EXPECT_EQ(sk.unknowns(), (std::vector<Term>{T("*1"), T("*2")}));
}

TEST(MakeSkeleton, SingleCopy) {
  EXPECT_EQ(make_skeleton(E("exists ?x. p(?x)"), 1).formula, F("p(*1)"));
}

TEST(MakeSkeleton, TupleLengthTwo) {
  const Skeleton sk = make_skeleton(E("exists ?x. exists ?w. ?x = ?w & q(?w)"), 1);
  EXPECT_EQ(sk.formula, F("*1 = *2 & q(*2)"));
  const Skeleton sk3 = make_skeleton(E("exists ?x. exists ?w. ?x = ?w & q(?w)"), 3);
  EXPECT_EQ(sk3.unknown_tuples.back(), (std::vector<Term>{T("*5"), T("*6")}));
}

TEST(MakeSkeleton, ZeroCopiesRejected) { EXPECT_THROW(make_skeleton(E(kTwo), 0), ContractError); }

TEST(VerifySolution, Examples) {
  EXPECT_TRUE(verify_solution(make_skeleton(E(kTwo), 2), {{T("*1"), T("a")}, {T("*2"), T("b")}}));
  EXPECT_FALSE(verify_solution(make_skeleton(E(kTwo), 1), {{T("*1"), T("a")}}));
  const Skeleton trivial = make_skeleton(E("exists ?x. p(?x) -> p(?x)"), 1);
  testing::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(verify_solution(trivial, {{T("*1"), testing::random_term(rng, {{"a", 0}, {"f", 1}, {"g", 2}}, 6)}}));
  }
}

TEST(VerifySolution, AgreesWithSmallModels) {
  const Skeleton sk = make_skeleton(E(kTwo), 2);
  for (const char* x : {"a", "b", "c"}) {
    for (const char* y : {"a", "b", "c"}) {
      const Solution sol{{T("*1"), T(x)}, {T("*2"), T(y)}};
      EXPECT_EQ(verify_solution(sk, sol), testing::small_model_valid(substitute(sk.formula, sol))) << x << y;
    }
  }
}

TEST(VerifySolution, ContractErrors) {
  const Skeleton sk = make_skeleton(E(kTwo), 2);
  EXPECT_THROW(verify_solution(sk, {{T("*1"), T("a")}}), ContractError);
  EXPECT_THROW(verify_solution(sk, {{T("*1"), T("a")}, {T("*2"), T("*1")}}), ContractError);
  EXPECT_THROW(verify_solution(sk, {{T("*1"), T("a")}, {T("*2"), T("?x")}}), ContractError);
}

TEST(Enumerate, Examples) {
  Signature a;
  a.functions = {FunctionSymbol("a", 0)};
  EXPECT_EQ(enumerate_terms(a, 2), std::vector<Term>{T("a")});

  Signature nat;
  nat.functions = {FunctionSymbol::special(SpecialBase::zero), FunctionSymbol::successor()};
  EXPECT_EQ(enumerate_terms(nat, 4), (std::vector<Term>{T("z"), T("s(z)"), T("s(s(z))"), T("s(s(s(z)))")}));

  Signature none;
  none.functions = {FunctionSymbol("f", 1)};
  const auto fresh = enumerate_terms(none, 2);
  ASSERT_EQ(fresh.size(), 2u);
  EXPECT_EQ(to_string(fresh[0]), "c#0");
  EXPECT_EQ(to_string(fresh[1]), "f(c#0)");
}

TEST(Enumerate, CountsMatchRecursion) {
  const std::vector<FunctionSymbol> af{{"a", 0}, {"f", 2}};
  const std::vector<FunctionSymbol> mixed{{"a", 0}, {"b", 0}, {"f", 1}, {"g", 2}, {"h", 3}};
  for (const auto* symbols : {&af, &mixed}) {
    Signature sig;
    sig.functions.insert(symbols->begin(), symbols->end());
    for (std::size_t bound = 1; bound <= 7; ++bound) {
      const auto terms = enumerate_terms(sig, bound);
      std::size_t expected = 0;
      for (std::size_t s = 1; s <= bound; ++s) expected += testing::count_terms(*symbols, s);
      EXPECT_EQ(terms.size(), expected) << bound;
      std::unordered_set<Term, TermHash> unique(terms.begin(), terms.end());
      EXPECT_EQ(unique.size(), terms.size());
      EXPECT_TRUE(std::is_sorted(terms.begin(), terms.end(), CanonicalLess{}));
      for (const Term& t : terms) EXPECT_LE(t.size(), bound);
    }
  }
  Signature sig;
  sig.functions = {FunctionSymbol("a", 0), FunctionSymbol("f", 2)};
  // a and f(a,a); nothing has size 2.
  EXPECT_EQ(enumerate_terms(sig, 3).size(), 2u);
}

TEST(Enumerate, ClassMembersAreTheCongruentTerms) {
  Signature sig;
  sig.functions = {FunctionSymbol("a", 0), FunctionSymbol("b", 0), FunctionSymbol("f", 1), FunctionSymbol("g", 2)};
  const std::vector<Formula> eqs{F("f(a) = b"), F("g(b,b) = a")};
  for (const char* seed : {"a", "b", "f(b)", "g(a,a)"}) {
    const auto members = class_members(eqs, T(seed), sig, 5);
    std::vector<Term> expected;
    for (const Term& t : enumerate_terms(sig, 5)) {
      const Formula f = Formula::implication(conjoin(eqs), Formula::equality(t, T(seed)));
      if (qcheck::is_quasitautology(f)) expected.push_back(t);
    }
    EXPECT_EQ(members, expected) << seed;
  }
}

TEST(SolveBounded, TwoSkeleton) {
  Signature sig = signature_of(E(kTwo).matrix());
  const auto sol = solve_bounded(make_skeleton(E(kTwo), 2), sig, 1);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, (Solution{{T("*1"), T("a")}, {T("*2"), T("b")}}));
}

TEST(SolveBounded, OneSkeletonUnsolvable) {
  EXPECT_FALSE(solve_bounded(make_skeleton(E(kTwo), 1), 3).has_value());
}

TEST(SolveBounded, AddHasTheUniqueTildeWitness) {
  const Term z = T("z");
  const Formula add = arith::add(numeral(2, z), numeral(3, z), numeral(5, z), T("?w"));
  const Skeleton sk = make_skeleton(ExistentialFormula({T("?w")}, add), 1);
  const auto sol = solve_bounded(sk, 8);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol->lookup(T("*1")), T("s(s(s(zt)))"));
  EXPECT_EQ(all_solutions(sk.formula, sk.unknowns(), signature_of(sk.formula), 8).size(), 1u);
}

TEST(SolveBounded, BoundIsPerTerm) {
  // Needs *1 := f(f(a)) (size 3) and *2 := g(a,a) (size 3).
  const auto psi = E("exists ?x. exists ?y. ?x = f(f(a)) & ?y = g(a,a)");
  const Skeleton sk = make_skeleton(psi, 1);
  EXPECT_FALSE(solve_bounded(sk, 2).has_value());
  EXPECT_TRUE(solve_bounded(sk, 3).has_value());
}

// Every assignment of pool terms to the unknowns, checked one by one.
std::vector<Solution> brute_force(const Skeleton& sk, const Signature& sig, std::size_t bound) {
  std::vector<Solution> out;
  const auto terms = enumerate_terms(sig, bound);
  for (const auto& tuple : testing::all_tuples(terms, sk.unknowns().size())) {
    Solution sol;
    for (std::size_t i = 0; i < tuple.size(); ++i) sol.bind(sk.unknowns()[i], tuple[i]);
    if (verify_solution(sk, sol)) out.push_back(sol);
  }
  return out;
}

std::size_t total_size(const Solution& s) {
  std::size_t n = 0;
  for (const auto& [slot, t] : s) n += t.size();
  return n;
}

const std::vector<const char*> kFormulas{
    "exists ?x. p(a) | p(b) -> p(?x)",
    "exists ?x. exists ?y. f(?x) = ?y & ?y = f(a)",
    "exists ?x. exists ?y. (a = b -> ?x = ?y) & p(?x) -> p(b)",
    "exists ?x. exists ?y. g(?x, ?y) = g(?y, ?x) & !(?x = ?y) | ?x = f(b)",
    "exists ?x. f(?x) = a -> f(f(?x)) = f(a)",
    "exists ?x. exists ?y. (?x = a | ?x = b) & (?y = ?x -> f(?y) = f(b))",
};

TEST(SolveBounded, FirstInOrderAndComplete) {
  for (const char* text : kFormulas) {
    for (std::size_t n = 1; n <= 2; ++n) {
      const Skeleton sk = make_skeleton(E(text), n);
      if (sk.unknowns().size() > 2 && n > 1) continue;
      const Signature sig = signature_of(sk.formula);
      const std::size_t bound = 3;
      const auto all = brute_force(sk, sig, bound);
      const auto got = solve_bounded(sk, sig, bound);
      ASSERT_EQ(got.has_value(), !all.empty()) << text << " n=" << n;
      if (!got) continue;
      EXPECT_TRUE(verify_solution(sk, *got));
      // Smallest total size first.
      std::size_t best = total_size(all.front());
      for (const auto& s : all) best = std::min(best, total_size(s));
      EXPECT_EQ(total_size(*got), best) << text;
      const auto listed = all_solutions(sk.formula, sk.unknowns(), sig, bound);
      EXPECT_EQ(listed.size(), all.size()) << text;
      EXPECT_EQ(listed.front(), *got);
    }
  }
}

TEST(SolveBounded, ParallelSearchReturnsTheSequentialWitness) {
  for (const char* text : kFormulas) {
    const Skeleton sk = make_skeleton(E(text), 2);
    const auto seq = solve_bounded(sk, 3, {1});
    for (unsigned threads : {2u, 3u, 8u}) EXPECT_EQ(solve_bounded(sk, 3, {threads}), seq) << text;
  }
  const Term z = T("z");
  const Formula mul = arith::mul(numeral(2, z), numeral(2, z), numeral(4, z), T("?w"), T("?v"));
  const Skeleton sk = make_skeleton(ExistentialFormula({T("?w"), T("?v")}, mul), 1);
  EXPECT_EQ(solve_bounded(sk, 12, {4}), solve_bounded(sk, 12, {1}));
}

TEST(SolveBounded, SizeMonotonicity) {
  for (const char* text : kFormulas) {
    const ExistentialFormula psi = E(text);
    for (std::size_t n = 1; n <= 2; ++n) {
      const Skeleton sk = make_skeleton(psi, n);
      const auto sol = solve_bounded(sk, 3);
      if (!sol) continue;
      // Pad with the first tuple's terms for the extra copy.
      const Skeleton bigger = make_skeleton(psi, n + 1);
      Solution padded = *sol;
      for (std::size_t j = 0; j < bigger.unknown_tuples.back().size(); ++j) {
        padded.bind(bigger.unknown_tuples.back()[j], *sol->lookup(sk.unknown_tuples.front()[j]));
      }
      EXPECT_TRUE(verify_solution(bigger, padded)) << text;
    }
  }
}

TEST(SolveBounded, RenamingInvariance) {
  const Skeleton sk = make_skeleton(E(kTwo), 2);
  const Solution sol{{T("*1"), T("a")}, {T("*2"), T("b")}};
  // Rename the unknowns in both the skeleton and the solution.
  const Substitution swap{{T("*1"), T("*7")}, {T("*2"), T("*9")}};
  Skeleton renamed = sk;
  renamed.formula = substitute(sk.formula, swap);
  renamed.unknown_tuples = {{T("*7")}, {T("*9")}};
  EXPECT_EQ(verify_solution(renamed, {{T("*7"), T("a")}, {T("*9"), T("b")}}), verify_solution(sk, sol));
  EXPECT_EQ(verify_solution(renamed, {{T("*7"), T("a")}, {T("*9"), T("a")}}),
            verify_solution(sk, {{T("*1"), T("a")}, {T("*2"), T("a")}}));
}

TEST(SolveFormula, ContractErrors) {
  Signature sig = signature_of(F("p(a)"));
  const std::vector<Term> slots{T("*1")};
  EXPECT_THROW(solve_formula(F("p(*2)"), slots, sig, 2), ContractError);
  EXPECT_THROW(solve_formula(F("p(?x)"), slots, sig, 2), ContractError);
  EXPECT_THROW(solve_formula(F("exists ?x. p(*1)"), slots, sig, 2), ContractError);
  const std::vector<Term> twice{T("*1"), T("*1")};
  EXPECT_THROW(solve_formula(F("p(*1)"), twice, sig, 2), ContractError);
}

}  // namespace
}  // namespace hsk::skeleton
