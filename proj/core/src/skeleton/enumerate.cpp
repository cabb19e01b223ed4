#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hsk/error.hpp"
#include "hsk/qcheck/congruence.hpp"
#include "hsk/skeleton/search.hpp"

namespace hsk::skeleton {

namespace {

// Calls emit(args) for every argument tuple whose sizes sum to `budget`,
// where pool(i, s) lists the candidates of size s for argument i.
void for_each_tuple(std::size_t arity, std::size_t budget,
                    const std::function<const std::vector<Term>&(std::size_t, std::size_t)>& pool,
                    const std::function<void(const std::vector<Term>&)>& emit) {
  std::vector<Term> args;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == arity) {
      for (const Term& t : pool(i, left)) {
        args.push_back(t);
        emit(args);
        args.pop_back();
      }
      return;
    }
    std::size_t rest = arity - i - 1;  // every remaining argument needs size >= 1
    for (std::size_t s = 1; s + rest <= left; ++s) {
      for (const Term& t : pool(i, s)) {
        args.push_back(t);
        rec(i + 1, left - s);
        args.pop_back();
      }
    }
  };
  if (arity == 0) {
    if (budget == 0) emit(args);
    return;
  }
  rec(0, budget);
}

}  // namespace

std::vector<std::vector<Term>> enumerate_terms_by_size(const Signature& sig, std::size_t max_size) {
  std::vector<FunctionSymbol> symbols(sig.functions.begin(), sig.functions.end());
  if (!sig.has_constant()) symbols.emplace_back("c#0", 0);
  std::sort(symbols.begin(), symbols.end());

  std::vector<std::vector<Term>> by_size(max_size + 1);
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (const FunctionSymbol& f : symbols) {
      if (f.arity() == 0) {
        if (s == 1) by_size[1].push_back(Term::constant(f));
        continue;
      }
      if (s < 1 + f.arity()) continue;
      for_each_tuple(
          f.arity(), s - 1, [&](std::size_t, std::size_t k) -> const std::vector<Term>& { return by_size[k]; },
          [&](const std::vector<Term>& args) { by_size[s].push_back(Term::apply(f, args)); });
    }
    std::sort(by_size[s].begin(), by_size[s].end(), CanonicalLess{});
  }
  return by_size;
}

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t max_size) {
  std::vector<Term> out;
  for (auto& level : enumerate_terms_by_size(sig, max_size)) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Term> class_members(std::span<const Formula> equations, const Term& seed, const Signature& sig,
                                std::size_t max_size) {
  using NodeId = qcheck::CongruenceClosure::NodeId;
  qcheck::CongruenceClosure cc;
  for (const Formula& eq : equations) {
    if (eq.kind() != Formula::Kind::equality || eq.has_unknowns() || !eq.is_variable_free()) {
      throw ContractError("class enumeration needs ground equations without unknowns");
    }
    cc.merge(eq.lhs(), eq.rhs());
  }
  if (!seed.is_solution_eligible()) throw ContractError("class enumeration needs a seed without unknowns");
  const NodeId target = cc.representative(cc.add(seed));

  // One transition per distinct (symbol, argument classes) -> class. A term
  // lies in a class of the closure iff it is built along these transitions;
  // every other term is only congruent to itself.
  struct Transition {
    FunctionSymbol symbol;
    std::vector<NodeId> args;
    NodeId result;
  };
  std::vector<Transition> transitions;
  std::set<std::vector<NodeId>> seen;
  for (NodeId n = 0; n < cc.node_count(); ++n) {
    const FunctionSymbol& f = cc.symbol(cc.symbol_of(n));
    if (!sig.functions.count(f)) continue;
    std::vector<NodeId> key{cc.symbol_of(n)};
    std::vector<NodeId> args;
    for (NodeId c : cc.children_of(n)) args.push_back(cc.representative(c));
    key.insert(key.end(), args.begin(), args.end());
    if (!seen.insert(key).second) continue;
    transitions.push_back({f, std::move(args), cc.representative(n)});
  }

  std::map<NodeId, std::vector<std::vector<Term>>> members;
  const std::vector<Term> none;
  auto pool = [&](NodeId cls, std::size_t s) -> const std::vector<Term>& {
    auto it = members.find(cls);
    if (it == members.end() || s >= it->second.size()) return none;
    return it->second[s];
  };
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::map<NodeId, std::vector<Term>> level;
    for (const Transition& tr : transitions) {
      if (tr.args.empty()) {
        if (s == 1) level[tr.result].push_back(Term::constant(tr.symbol));
        continue;
      }
      if (s < 1 + tr.args.size()) continue;
      for_each_tuple(
          tr.args.size(), s - 1,
          [&](std::size_t i, std::size_t k) -> const std::vector<Term>& { return pool(tr.args[i], k); },
          [&](const std::vector<Term>& args) { level[tr.result].push_back(Term::apply(tr.symbol, args)); });
    }
    for (auto& [cls, terms] : level) {
      auto& slots = members[cls];
      slots.resize(max_size + 1);
      slots[s] = std::move(terms);
    }
  }

  std::vector<Term> out;
  if (auto it = members.find(target); it != members.end()) {
    for (auto& level : it->second) {
      std::sort(level.begin(), level.end(), CanonicalLess{});
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  return out;
}

}  // namespace hsk::skeleton
