// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "golden.hpp"
#include "hsk/arith/builders.hpp"
#include "hsk/arith/classify.hpp"
#include "hsk/arith/diophantine.hpp"
#include "hsk/arith/pc_formula.hpp"
#include "hsk/arith/semitable.hpp"
#include "hsk/models/structure.hpp"
#include "hsk/qcheck/quasitautology.hpp"
#include "hsk/skeleton/skeleton.hpp"
#include "hsk/sreu/sreu.hpp"
#include "hsk/syntax/text.hpp"
#include "oracles.hpp"

namespace {

using namespace hsk;
using qcheck::is_quasitautology;

const std::string kFixtures = HSK_FIXTURES_DIR;

/// Collects deviations; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

Term T(std::string_view s) { return parse_term(s); }
Formula F(std::string_view s) { return parse_formula(s); }
skeleton::ExistentialFormula E(std::string_view s) { return skeleton::ExistentialFormula::from_formula(F(s)); }

Term special(SpecialBase b, unsigned lang = 0) { return arith::special(b, lang); }

std::vector<arith::Semitable> semitables(std::size_t max_len, std::size_t max_exp) {
  std::vector<arith::Semitable> out{arith::Semitable{}};
  std::vector<arith::Semitable> frontier = out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<arith::Semitable> next;
    for (const auto& a : frontier) {
      for (std::size_t p = 0; p <= max_exp; ++p) {
        for (std::size_t q = 0; q <= max_exp; ++q) {
          auto b = a;
          b.rows.insert(b.rows.begin(), {p, q});
          next.push_back(b);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Solvable-within-bound for the 1-skeleton of an existential formula.
std::optional<skeleton::Solution> solve1(const skeleton::ExistentialFormula& psi, std::size_t bound) {
  return skeleton::solve_bounded(skeleton::make_skeleton(psi, 1), bound);
}

// ---------------------------------------------------------------------------

void rigid_pipeline(Check& c) {
  const skeleton::Skeleton sk = skeleton::make_skeleton(E(testing::read_file(kFixtures + "/rigid_four.hsk")), 1);
  const auto problems = sreu::convert_to_sreu(sk.formula);
  c.expect(problems.size() == 4, "expected 4 problems, got " + std::to_string(problems.size()));
  // Hypotheses x = a, x = b; the conclusions pick a or b for each.
  const char* expected[4][2] = {{"a = c", "a = c"}, {"a = c", "b = c"}, {"b = c", "a = c"}, {"b = c", "b = c"}};
  for (std::size_t i = 0; i < std::min<std::size_t>(4, problems.size()); ++i) {
    const sreu::SREUProblem want{{{{F("*1 = a")}, F(expected[i][0])}, {{F("*1 = b")}, F(expected[i][1])}}};
    c.expect(problems[i] == want, "problem " + std::to_string(i + 1) + " differs");
  }
  const Signature sig = signature_of(sk.formula);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto sol = sreu::solve_sreu_bounded(problems[i], sig, 3);
    if (i == 1) {
      c.expect(sol && *sol == Substitution{{T("*1"), T("c")}}, "problem 2 should be solved by c");
    } else {
      c.expect(!sol, "problem " + std::to_string(i + 1) + " should be unsolvable");
    }
  }
}

void herbrand_skeletons(Check& c) {
  const auto psi = E(testing::read_file(kFixtures + "/herbrand_two.hsk"));
  const auto two = skeleton::solve_bounded(skeleton::make_skeleton(psi, 2), 1);
  c.expect(two && *two == skeleton::Solution{{T("*1"), T("a")}, {T("*2"), T("b")}}, "2-skeleton witness");
  c.expect(!skeleton::solve_bounded(skeleton::make_skeleton(psi, 1), 3), "1-skeleton should be unsolvable");
}

void identity_axioms(Check& c) {
  testing::Rng rng(2024);
  const std::vector<FunctionSymbol> symbols{{"a", 0}, {"b", 0}, {"c", 0}, {"f", 1}, {"g", 2}, {"h", 3}};
  const FunctionSymbol g("g", 2);
  const PredicateSymbol p("p", 2);
  auto t = [&] { return testing::random_term(rng, symbols, 5); };
  auto eq = [](const Term& x, const Term& y) { return Formula::equality(x, y); };
  for (int i = 0; i < 100; ++i) {
    const Term x = t(), y = t(), z = t(), x2 = t(), y2 = t();
    const std::vector<Formula> axioms{
        eq(x, x),
        Formula::implication(eq(x, y), eq(y, x)),
        Formula::implication(Formula::conjunction(eq(x, y), eq(y, z)), eq(x, z)),
        Formula::implication(Formula::conjunction(eq(x, y), eq(x2, y2)),
                             eq(Term::apply(g, {x, x2}), Term::apply(g, {y, y2}))),
        Formula::implication(
            Formula::conjunction(Formula::conjunction(eq(x, y), eq(x2, y2)), Formula::predicate(p, {x, x2})),
            Formula::predicate(p, {y, y2})),
    };
    for (const Formula& a : axioms) c.expect(is_quasitautology(a), to_string(a));
  }
}

void oracle_equivalence(Check& c) {
  testing::Rng rng(77);
  const std::vector<FunctionSymbol> symbols{{"a", 0}, {"b", 0}, {"f", 1}, {"g", 2}};
  std::size_t done = 0, valid = 0;
  while (done < 200) {
    std::vector<Term> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(testing::random_term(rng, symbols, 3));
    const testing::FormulaShape shape{pool, {PredicateSymbol("p", 1)}, 3};
    const Formula f = testing::random_formula(rng, shape);
    if (testing::distinct_subterms(f) > 6) continue;
    ++done;
    const bool qt = is_quasitautology(f);
    valid += qt;
    c.expect(qt == testing::small_model_valid(f), to_string(f));
  }
  c.expect(valid >= 10 && valid <= 190, "sample lacks variety: " + std::to_string(valid) + " valid");
}

void lemma_suite(Check& c) {
  using namespace arith;
  const Term z = special(SpecialBase::zero), zh = special(SpecialBase::zero_hat),
             zt = special(SpecialBase::zero_tilde), k = special(SpecialBase::k), kt = special(SpecialBase::k_tilde);

  // Num and Num~ hold exactly for the numerals of their base.
  Signature sig;
  sig.functions = {z.symbol(), zt.symbol(), k.symbol(), FunctionSymbol::successor(), FunctionSymbol::pairing()};
  for (const Term& t : skeleton::enumerate_terms(sig, 4)) {
    c.expect(is_quasitautology(num(t)) == numeral_of(t, z).has_value(), "Num " + to_string(t));
    c.expect(is_quasitautology(num_tilde(t)) == numeral_of(t, zt).has_value(), "Num~ " + to_string(t));
  }
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t p = 0; p <= 6; ++p) {
      c.expect(is_quasitautology(sim(numeral(m, z), numeral(p, zt))) == (m == p), "Sim");
    }
  }
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t p = 0; p <= 5; ++p) {
      for (std::size_t q = 0; q <= 5; ++q) {
        c.expect(is_quasitautology(plus(numeral(m, z), numeral(p, zt), numeral(q, z))) == (q == m + p), "Plus");
      }
    }
  }
  // Add: solvable iff q = m + p, and then only by S^p(zt).
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t p = 0; p <= 4; ++p) {
      for (std::size_t q = 0; q <= 4; ++q) {
        const Formula f = add(numeral(m, z), numeral(p, z), numeral(q, z), T("?w"));
        const auto sk = skeleton::make_skeleton(skeleton::ExistentialFormula({T("?w")}, f), 1);
        const auto all = skeleton::all_solutions(sk.formula, sk.unknowns(), signature_of(sk.formula), m + p + 3, 2);
        const std::string tag = "Add " + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(q);
        if (q == m + p) {
          c.expect(all.size() == 1 && *all[0].lookup(T("*1")) == numeral(p, zt), tag);
        } else {
          c.expect(all.empty(), tag);
        }
      }
    }
  }

  // Tab and Tab~ accept every semitable instance.
  const auto tables = semitables(3, 2);
  for (const auto& a : tables) {
    c.expect(is_quasitautology(tab(a.instantiate(z, z, k))), "Tab");
    c.expect(is_quasitautology(tab_tilde(a.instantiate(zh, zt, kt))), "Tab~");
  }
  // ... and reject perturbed ones, which the table model also falsifies.
  models::AlphaAssignment tab_alpha;
  tab_alpha.set(SpecialBase::zero, 0, models::pairing_J(1, 0));
  tab_alpha.set(SpecialBase::k, 0, models::pairing_J(4, 0));
  const models::Structure tab_model = models::m_alpha(tab_alpha);
  std::vector<Term> perturbed;
  for (std::size_t i = 1; perturbed.size() < 20 && i < tables.size(); i += 7) {
    const auto& a = tables[i];
    perturbed.push_back(a.instantiate(z, z, zt));                   // wrong terminal
    perturbed.push_back(a.instantiate(zt, z, k));                   // wrong numeral base
    perturbed.push_back(successor(a.instantiate(z, z, k)));         // not a pair
    perturbed.push_back(pair(k, a.instantiate(z, z, k)));           // row is not a pair
    perturbed.push_back(pair(pair(z, k), a.instantiate(z, z, k)));  // row entry is not a numeral
  }
  perturbed.erase(perturbed.begin() + 20, perturbed.end());
  for (const Term& t : perturbed) {
    c.expect(!Semitable::match(t, z, z, k).has_value(), "perturbed term is a table: " + to_string(t));
    c.expect(!is_quasitautology(tab(t)), "Tab accepts " + to_string(t));
    c.expect(!models::holds(tab_model, tab(t)), "table model satisfies Tab " + to_string(t));
  }

  // Sim~ relates exactly the identical semitables.
  const auto short_tables = semitables(2, 2);
  for (const auto& a : short_tables) {
    for (const auto& b : short_tables) {
      c.expect(is_quasitautology(sim_tilde(a.instantiate(z, z, k), b.instantiate(zh, zt, kt))) == (a == b), "Sim~");
    }
  }

  // The (m,p)-table equation, by direct term construction.
  const Term base = pair(pair(z, z), k);
  for (std::size_t m = 0; m <= 2; ++m) {
    for (const auto& a : tables) {
      const Term lhs = a.instantiate(successor(z), numeral(m, z), base);
      const Term rest = a.instantiate(z, z, k);
      for (std::size_t p = 0; p <= 3; ++p) {
        for (std::size_t q = 0; q <= 6; ++q) {
          const bool eq = lhs == pair(pair(numeral(p, z), numeral(q, z)), rest);
          c.expect(eq == (q == m * p && a.is_mp(m, p)), "(m,p)-table equation");
        }
      }
    }
  }

  // Mul: solvable iff q = m * p, by the (m,p)-table pair only.
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t p = 0; p <= 2; ++p) {
      for (std::size_t q = 0; q <= 4; ++q) {
        const Formula f = mul(numeral(m, z), numeral(p, z), numeral(q, z), T("?w"), T("?v"));
        const auto sk = skeleton::make_skeleton(skeleton::ExistentialFormula({T("?w"), T("?v")}, f), 1);
        const auto all =
            skeleton::all_solutions(sk.formula, sk.unknowns(), signature_of(sk.formula), mp_table_size(m, p), 2);
        const std::string tag = "Mul " + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(q);
        if (q == m * p) {
          const Semitable t = Semitable::mp(m, p);
          c.expect(all.size() == 1 && *all[0].lookup(T("*1")) == t.instantiate(z, z, k) &&
                       *all[0].lookup(T("*2")) == t.instantiate(zh, zt, kt),
                   tag);
        } else {
          c.expect(all.empty(), tag);
        }
      }
    }
  }
}

// Term-size bound under which the association of a closed system is solved
// when it is true: per atom, the size of its table witnesses.
std::size_t association_bound(const arith::DiophantineFormula& psi) {
  std::size_t bound = 1;
  for (const auto& atom : psi.atoms()) {
    const std::size_t a = *numeral_of(atom.a, T("z")), b = *numeral_of(atom.b, T("z"));
    bound = std::max(bound, atom.kind == arith::AtomKind::add ? a + b + 3 : arith::mp_table_size(a, b));
  }
  return bound;
}

void closed_systems(Check& c) {
  const std::vector<const char*> systems{
      "2 + 3 = 5",
      "2 + 3 = 4",
      "3 * 3 = 9",
      "2 * 3 = 5",
      "1 + 1 = 2\n2 * 1 = 2",
      "1 + 1 = 2\n2 * 2 = 3",
      "0 * 3 = 0",
      "3 * 0 = 1",
      "3 + 0 = 3\n1 * 3 = 3\n2 + 1 = 3",
      "0 + 0 = 0\n3 * 2 = 6\n1 + 2 = 2",
  };
  for (const char* text : systems) {
    const auto psi = arith::parse_diophantine(text);
    const auto phi = arith::associate(psi);
    const skeleton::ExistentialFormula closure(phi.table_vars(), phi.formula());
    const bool solvable = solve1(closure, association_bound(psi)).has_value();
    c.expect(solvable == arith::eval_diophantine(psi), text);
  }
}

void interference(Check& c) {
  const auto phi = arith::associate(arith::parse_diophantine("?x + 1 = 0"));
  const Term x = T("?x"), w = T("?w1");
  auto at = [&](const Term& a, const Term& b) { return substitute(phi.formula(), Substitution{{x, a}, {w, b}}); };
  const Formula first = at(T("z"), T("zt"));
  const Formula second = at(T("s(z)"), T("s(zt)"));
  c.expect(is_quasitautology(Formula::disjunction(first, second)), "the disjunction should be valid");
  for (const Formula& d : {first, second}) {
    c.expect(!is_quasitautology(d), "a single disjunct should not be valid");
    const models::Diagnosis diag = arith::classify_failures(d);
    const auto structure = models::m_alpha(models::construct_alpha(std::span(&diag, 1)));
    c.expect(!models::holds(structure, d), "no structure falsifies " + to_string(d));
  }
  const skeleton::ExistentialFormula psi({x, w}, phi.formula());
  const auto two = skeleton::make_skeleton(psi, 2);
  c.expect(skeleton::verify_solution(
               two, {{T("*1"), T("z")}, {T("*2"), T("zt")}, {T("*3"), T("s(z)")}, {T("*4"), T("s(zt)")}}),
           "the interfering pair should solve the 2-skeleton");
  c.expect(skeleton::solve_bounded(two, 2).has_value(), "2-skeleton search");
  c.expect(!solve1(psi, 3).has_value(), "1-skeleton should be unsolvable");
}

struct Family {
  const char* system;
  std::size_t n;
  // Numeric-variable values making the system true, for the valid variant.
  std::vector<std::size_t> solution;
};

std::vector<Term> language_terms(unsigned lang) {
  Signature sig;
  for (SpecialBase b : {SpecialBase::zero, SpecialBase::zero_hat, SpecialBase::zero_tilde, SpecialBase::k,
                        SpecialBase::k_tilde}) {
    sig.functions.insert(FunctionSymbol::special(b, lang));
  }
  sig.functions.insert(FunctionSymbol::successor());
  sig.functions.insert(FunctionSymbol::pairing());
  return skeleton::enumerate_terms(sig, 4);
}

// A ground instance of variant i that is not valid.
Formula failing_instance(const arith::PCArithFormula& phi, unsigned i, testing::Rng& rng) {
  const auto variant = arith::make_variant(phi, i);
  const auto pool = language_terms(i);
  const Term zi = special(SpecialBase::zero, i), zti = special(SpecialBase::zero_tilde, i);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), small(0, 3), coin(0, 2);
  while (true) {
    Substitution s;
    for (const Term& v : variant.numeric_vars()) s.bind(v, coin(rng) ? numeral(small(rng), zi) : pool[pick(rng)]);
    for (const Term& v : variant.table_vars()) s.bind(v, coin(rng) == 0 ? numeral(small(rng), zti) : pool[pick(rng)]);
    Formula f = substitute(variant.formula(), s);
    if (!is_quasitautology(f)) return f;
  }
}

// A valid ground instance of variant i: the numerals given, tables found by search.
Formula valid_instance(const arith::PCArithFormula& phi, const std::vector<std::size_t>& values, unsigned i) {
  auto inst = phi;
  const auto vars = phi.numeric_vars();
  for (std::size_t j = 0; j < vars.size(); ++j) inst = arith::instantiate_numeral(inst, vars[j], values[j]);
  const skeleton::ExistentialFormula closure(inst.table_vars(), inst.formula());
  const auto sk = skeleton::make_skeleton(closure, 1);
  const auto sol = skeleton::solve_bounded(sk, 12);
  if (!sol) throw std::runtime_error("no table witness");
  Substitution s;
  for (std::size_t j = 0; j < closure.bound_vars().size(); ++j) {
    s.bind(closure.bound_vars()[j], *sol->lookup(sk.unknown_tuples[0][j]));
  }
  return arith::variant_formula(substitute(inst.formula(), s), i);
}

void main_lemma(Check& c) {
  const std::vector<Family> families{
      {"?x + 1 = 1", 1, {0}},
      {"?x + ?x = 2", 2, {1}},
      {"2 + ?x = 3", 3, {1}},
      {"?x + ?y = 2", 2, {1, 1}},
      {"?x + 1 = 3", 3, {2}},
      {"?x * 2 = ?y", 1, {1, 2}},
      {"?x * 2 = ?y", 2, {2, 4}},
      {"?x * ?y = 2\n?x + 1 = ?y", 2, {1, 2}},
      {"1 + ?x = ?y\n?y * 1 = 2", 3, {1, 2}},
      {"?x * 1 = 1\n1 + ?x = 2", 3, {1}},
  };
  testing::Rng rng(99);
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    const auto& fam = families[fi];
    const auto phi = arith::associate(arith::parse_diophantine(fam.system));
    const std::string tag = "family " + std::to_string(fi + 1);

    std::vector<Formula> instances;
    std::vector<models::Diagnosis> diags;
    for (unsigned i = 1; i <= fam.n; ++i) {
      instances.push_back(failing_instance(phi, i, rng));
      diags.push_back(arith::classify_failures(instances.back()));
    }
    const auto structure = models::m_alpha(models::construct_alpha(diags));
    for (const Formula& f : instances) c.expect(!models::holds(structure, f), tag + ": disjunct survives");
    c.expect(!is_quasitautology(disjoin(instances)), tag + ": failing disjunction accepted");

    // Same family with one variant replaced by a solution.
    const unsigned valid_at = static_cast<unsigned>(1 + fi % fam.n);
    instances[valid_at - 1] = valid_instance(phi, fam.solution, valid_at);
    c.expect(is_quasitautology(instances[valid_at - 1]), tag + ": solution instance not valid");
    c.expect(is_quasitautology(disjoin(instances)), tag + ": disjunction with a valid variant rejected");
  }
}

void solution_equivalence(Check& c) {
  std::istringstream in(testing::read_file(kFixtures + "/equivalence.corpus"));
  std::size_t formulas = 0, solved = 0, unsolved = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '%') continue;
    ++formulas;
    const Formula f = F(line);
    const auto unknowns = unknowns_of(f);
    const auto problems = sreu::convert_to_sreu(f);
    const auto terms = skeleton::enumerate_terms(signature_of(f), 3);
    for (const auto& tuple : testing::all_tuples(terms, unknowns.size())) {
      Substitution s;
      for (std::size_t j = 0; j < tuple.size(); ++j) s.bind(unknowns[j], tuple[j]);
      bool some = false;
      for (const auto& p : problems) some = some || is_quasitautology(substitute(p.to_formula(), s));
      const bool qt = is_quasitautology(substitute(f, s));
      (qt ? solved : unsolved) += 1;
      c.expect(qt == some, line);
    }
  }
  c.expect(formulas == 20, "expected 20 corpus formulas");
  c.expect(solved > 0 && unsolved > 0, "corpus lacks variety");
}

void determinism(Check& c) {
  const auto goldens = testing::load_goldens(kFixtures);
  c.expect(!goldens.empty(), "no goldens");
  const unsigned wide = std::max(8u, std::thread::hardware_concurrency());
  for (const auto& g : goldens) {
    for (int round = 0; round < 3; ++round) {
      const auto why = testing::golden_mismatch(g, testing::run_golden(g, kFixtures));
      c.expect(why.empty(), g.name + " run " + std::to_string(round + 1) + ": " + why);
    }
    const auto why = testing::golden_mismatch(g, testing::run_golden(g, kFixtures, wide));
    c.expect(why.empty(), g.name + " with " + std::to_string(wide) + " threads: " + why);
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rigid example converts to four problems, only the second solvable", 1, rigid_pipeline},
      {2, "two-copy skeleton solvable, one-copy skeleton not", 1, herbrand_skeletons},
      {3, "500 identity-axiom instances are quasitautologies", 10, identity_axioms},
      {4, "quasitautology test agrees with small-model enumeration", 60, oracle_equivalence},
      {5, "building-block lemmas at desk scale", 300, lemma_suite},
      {6, "closed diophantine systems: truth iff association solvable", 0, closed_systems},
      {7, "interference: disjunction valid, each disjunct falsified", 0, interference},
      {8, "countermodels falsify failing variant disjunctions", 120, main_lemma},
      {9, "solutions agree with the converted problems", 0, solution_equivalence},
      {10, "golden outputs are reproducible and thread-independent", 0, determinism},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.limit_seconds > 0 && secs > crit.limit_seconds) {
      check.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(crit.limit_seconds));
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", crit.id, crit.title, check.cases,
                secs);
    for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i) {
      std::printf("    %s\n", check.failures[i].c_str());
    }
    if (check.failures.size() > 5) std::printf("    ... %zu more\n", check.failures.size() - 5);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
