#include "hsk/qcheck/quasitautology.hpp"

#include <map>

#include "hsk/error.hpp"
#include "hsk/qcheck/congruence.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::qcheck {

Literal::Literal(bool positive, Formula atom) : positive(positive), atom(std::move(atom)) {
  if (!this->atom.is_atom()) throw ContractError("literal over non-atomic formula " + to_string(this->atom));
}

bool e_satisfiable(std::span<const Literal> literals) {
  CongruenceClosure cc;
  for (const Literal& l : literals) {
    for (const Term& t : l.atom.args()) cc.add(t);
  }
  for (const Literal& l : literals) {
    if (l.positive && l.atom.kind() == Formula::Kind::equality) cc.merge(l.atom.lhs(), l.atom.rhs());
  }
  std::map<PredicateSymbol, std::vector<const Literal*>> positive, negative;
  for (const Literal& l : literals) {
    if (l.atom.kind() == Formula::Kind::equality) {
      if (!l.positive && cc.equivalent(l.atom.lhs(), l.atom.rhs())) return false;
    } else {
      (l.positive ? positive : negative)[l.atom.predicate_symbol()].push_back(&l);
    }
  }
  for (const auto& [symbol, pos_atoms] : positive) {
    auto it = negative.find(symbol);
    if (it == negative.end()) continue;
    for (const Literal* p : pos_atoms) {
      for (const Literal* n : it->second) {
        bool congruent = true;
        for (std::size_t i = 0; i < symbol.arity() && congruent; ++i) {
          congruent = cc.equivalent(p->atom.args()[i], n->atom.args()[i]);
        }
        if (congruent) return false;
      }
    }
  }
  return true;
}

namespace {

// Negation normal form with flattened n-ary connectives.
struct Nnf {
  enum class Kind { literal, all, any } kind;
  std::vector<Literal> literal;  // exactly one element for Kind::literal
  std::vector<Nnf> parts;
};

Nnf make_nnf(const Formula& f, bool positive) {
  using K = Formula::Kind;
  auto junction = [&](bool conjunctive, const Formula& a, bool pa, const Formula& b, bool pb) {
    Nnf out{conjunctive ? Nnf::Kind::all : Nnf::Kind::any, {}, {}};
    for (Nnf part : {make_nnf(a, pa), make_nnf(b, pb)}) {
      if (part.kind == out.kind) {
        for (Nnf& p : part.parts) out.parts.push_back(std::move(p));
      } else {
        out.parts.push_back(std::move(part));
      }
    }
    return out;
  };
  switch (f.kind()) {
    case K::equality:
    case K::predicate: return Nnf{Nnf::Kind::literal, {Literal(positive, f)}, {}};
    case K::negation: return make_nnf(f.operand(), !positive);
    case K::conjunction: return junction(positive, f.left(), positive, f.right(), positive);
    case K::disjunction: return junction(!positive, f.left(), positive, f.right(), positive);
    case K::implication: return junction(!positive, f.left(), !positive, f.right(), positive);
    case K::exists:
    case K::forall: break;
  }
  throw ContractError("quasitautology check needs a quantifier-free formula");
}

// Branch search over the NNF: conjunctions extend the branch, disjunctions
// split it, and each partial branch is closed as soon as its literal set is
// E-unsatisfiable.
bool branch_satisfiable(std::vector<Literal> literals, std::vector<const Nnf*> agenda) {
  std::vector<const Nnf*> choices;
  while (!agenda.empty()) {
    const Nnf* n = agenda.back();
    agenda.pop_back();
    switch (n->kind) {
      case Nnf::Kind::literal: literals.push_back(n->literal.front()); break;
      case Nnf::Kind::all:
        for (auto it = n->parts.rbegin(); it != n->parts.rend(); ++it) agenda.push_back(&*it);
        break;
      case Nnf::Kind::any: choices.push_back(n); break;
    }
  }
  if (!e_satisfiable(literals)) return false;
  if (choices.empty()) return true;
  const Nnf* split = choices.front();
  for (const Nnf& option : split->parts) {
    std::vector<const Nnf*> next(choices.rbegin(), choices.rend() - 1);
    next.push_back(&option);
    if (branch_satisfiable(literals, std::move(next))) return true;
  }
  return false;
}

}  // namespace

bool is_quasitautology(const Formula& f) {
  if (!f.is_quantifier_free()) throw ContractError("quasitautology check needs a quantifier-free formula: " + to_string(f));
  if (!f.is_variable_free()) throw ContractError("quasitautology check needs a ground formula: " + to_string(f));
  Nnf negated = make_nnf(f, false);
  return !branch_satisfiable({}, {&negated});
}

}  // namespace hsk::qcheck
