#include "hsk/sreu/sreu.hpp"

#include <algorithm>
#include <sstream>

#include "hsk/error.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::sreu {

namespace {

using Kind = Formula::Kind;

struct Lit {
  bool positive;
  Formula atom;
};

using Cnf = std::vector<std::vector<Lit>>;

Cnf cnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Kind::equality:
    case Kind::predicate:
      return {{Lit{positive, f}}};
    case Kind::negation:
      return cnf(f.operand(), !positive);
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::implication: {
      const bool left_sign = f.kind() == Kind::implication ? !positive : positive;
      Cnf left = cnf(f.left(), left_sign);
      Cnf right = cnf(f.right(), positive);
      // Under the given polarity the node is either an "and" or an "or".
      const bool is_and = (f.kind() == Kind::conjunction) == positive;
      if (is_and) {
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
      Cnf out;
      for (const auto& a : left) {
        for (const auto& b : right) {
          auto clause = a;
          clause.insert(clause.end(), b.begin(), b.end());
          out.push_back(std::move(clause));
        }
      }
      return out;
    }
    default:
      throw ContractError("clause conversion needs a quantifier-free formula: " + to_string(f));
  }
}

void push_unique(std::vector<Formula>& v, const Formula& f) {
  if (std::find(v.begin(), v.end(), f) == v.end()) v.push_back(f);
}

template <class T>
std::vector<T> unique_in_order(std::vector<T> items) {
  std::vector<T> out;
  for (auto& x : items) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

void split(const ClauseConjunction& f, std::vector<ClauseConjunction>& out) {
  auto it = std::find_if(f.begin(), f.end(), [](const Clause& c) { return c.consequent.size() > 1; });
  if (it == f.end()) {
    out.push_back(f);
    return;
  }
  const std::size_t at = static_cast<std::size_t>(it - f.begin());
  for (const Formula& b : it->consequent) {
    ClauseConjunction alt = f;
    alt[at].consequent = {b};
    split(alt, out);
  }
}

bool is_pred(const Formula& a) { return a.kind() == Kind::predicate; }

void eliminate(const ClauseConjunction& f, std::vector<ClauseConjunction>& out) {
  auto it = std::find_if(f.begin(), f.end(), [](const Clause& c) {
    return is_pred(c.consequent.front()) || std::any_of(c.antecedent.begin(), c.antecedent.end(), is_pred);
  });
  if (it == f.end()) {
    out.push_back(f);
    return;
  }
  const std::size_t at = static_cast<std::size_t>(it - f.begin());
  const Clause& clause = *it;
  const Formula& head = clause.consequent.front();

  if (!is_pred(head)) {
    // Predicate hypotheses never help derive an equality: drop them all.
    ClauseConjunction next = f;
    auto& ante = next[at].antecedent;
    ante.erase(std::remove_if(ante.begin(), ante.end(), is_pred), ante.end());
    eliminate(next, out);
    return;
  }
  const auto& p = head.predicate_symbol();
  auto same = [&](const Formula& a) { return is_pred(a) && a.predicate_symbol() == p; };
  if (std::none_of(clause.antecedent.begin(), clause.antecedent.end(), same)) return;  // falsifiable

  const auto atom_it = std::find_if(clause.antecedent.begin(), clause.antecedent.end(), is_pred);
  const std::size_t atom_at = static_cast<std::size_t>(atom_it - clause.antecedent.begin());
  std::vector<Formula> rest = clause.antecedent;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(atom_at));

  if (atom_it->predicate_symbol() == p) {
    // First the alternative identifying the arguments, then the one
    // discarding the hypothesis.
    ClauseConjunction unify(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(at));
    for (std::size_t i = 0; i < head.args().size(); ++i) {
      unify.push_back(Clause{rest, {Formula::equality(atom_it->args()[i], head.args()[i])}});
    }
    unify.insert(unify.end(), f.begin() + static_cast<std::ptrdiff_t>(at) + 1, f.end());
    eliminate(unify, out);
  }
  ClauseConjunction drop = f;
  drop[at].antecedent = std::move(rest);
  eliminate(drop, out);
}

}  // namespace

Formula Clause::to_formula() const {
  if (consequent.empty()) throw ContractError("clause without consequent");
  Formula head = disjoin(consequent);
  if (antecedent.empty()) return head;
  return Formula::implication(conjoin(antecedent), head);
}

Formula RigidConstraint::to_formula() const {
  if (hypotheses.empty()) return conclusion;
  return Formula::implication(conjoin(hypotheses), conclusion);
}

std::vector<Term> SREUProblem::unknowns() const { return unknowns_of(to_formula()); }

Formula SREUProblem::to_formula() const {
  if (constraints.empty()) return Formula::equality(Term::constant("c#0"), Term::constant("c#0"));
  std::vector<Formula> parts;
  for (const auto& c : constraints) parts.push_back(c.to_formula());
  return conjoin(parts);
}

std::vector<Clause> to_clause_conjunction(const Formula& phi) {
  std::vector<Clause> out;
  std::size_t fresh = 0;
  for (const auto& lits : cnf(phi, true)) {
    Clause c;
    for (const Lit& l : lits) push_unique(l.positive ? c.consequent : c.antecedent, l.atom);
    if (c.consequent.empty()) {
      ++fresh;
      c.consequent.push_back(Formula::equality(Term::constant("c#" + std::to_string(fresh)),
                                               Term::constant("d#" + std::to_string(fresh))));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClauseConjunction> horn_split(const std::vector<ClauseConjunction>& gamma) {
  std::vector<ClauseConjunction> out;
  for (const auto& f : gamma) split(f, out);
  return unique_in_order(std::move(out));
}

std::vector<SREUProblem> eliminate_predicates(const std::vector<ClauseConjunction>& gamma) {
  std::vector<ClauseConjunction> done;
  for (const auto& f : gamma) {
    for (const Clause& c : f) {
      if (!c.is_horn()) throw ContractError("predicate elimination needs Horn clauses");
    }
    eliminate(f, done);
  }
  std::vector<SREUProblem> out;
  for (const auto& f : unique_in_order(std::move(done))) {
    SREUProblem p;
    for (const Clause& c : f) p.constraints.push_back(RigidConstraint{c.antecedent, c.consequent.front()});
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SREUProblem> convert_to_sreu(const Formula& phi) {
  return eliminate_predicates(horn_split({to_clause_conjunction(phi)}));
}

std::optional<Substitution> solve_sreu_bounded(const SREUProblem& problem, const Signature& sig, std::size_t max_size,
                                               const skeleton::SearchOptions& options) {
  const std::vector<Term> unknowns = problem.unknowns();
  return skeleton::solve_formula(problem.to_formula(), unknowns, sig, max_size, options);
}

std::string format_problems(const std::vector<SREUProblem>& problems) {
  std::ostringstream out;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto& cs = problems[i].constraints;
    if (cs.empty()) out << '[' << i + 1 << ".0] (no constraints)\n";
    for (std::size_t j = 0; j < cs.size(); ++j) {
      out << '[' << i + 1 << '.' << j + 1 << "] ";
      for (std::size_t h = 0; h < cs[j].hypotheses.size(); ++h) {
        if (h) out << " & ";
        out << to_string(cs[j].hypotheses[h]);
      }
      if (!cs[j].hypotheses.empty()) out << ' ';
      out << "-> " << to_string(cs[j].conclusion) << '\n';
    }
  }
  return out.str();
}

}  // namespace hsk::sreu
