#include "hsk/skeleton/search.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "hsk/error.hpp"
#include "hsk/qcheck/congruence.hpp"
#include "hsk/qcheck/quasitautology.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::skeleton {

namespace {

using qcheck::CongruenceClosure;
using NodeId = CongruenceClosure::NodeId;

// Validity test for one conjunct under a (complete for that conjunct)
// assignment. Checkers cache work between calls and are therefore cloned
// per worker thread.
class Checker {
 public:
  virtual ~Checker() = default;
  virtual bool valid(const Substitution& s) = 0;
  virtual std::unique_ptr<Checker> clone() const = 0;
};

class QuasitautologyChecker final : public Checker {
 public:
  explicit QuasitautologyChecker(Formula f) : f_(std::move(f)) {}
  bool valid(const Substitution& s) override { return qcheck::is_quasitautology(s.apply(f_)); }
  std::unique_ptr<Checker> clone() const override { return std::make_unique<QuasitautologyChecker>(*this); }

 private:
  Formula f_;
};

// E -> l = r with E ground and free of unknowns: valid iff l and r fall into
// one class of the closure of E. The closure is built once; instantiated
// sides are added to it, which never disturbs existing classes.
class RigidChecker final : public Checker {
 public:
  RigidChecker(const std::vector<Formula>& hypotheses, Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    for (const Formula& h : hypotheses) theory_.merge(h.lhs(), h.rhs());
  }
  bool valid(const Substitution& s) override { return class_of(s.apply(lhs_)) == class_of(s.apply(rhs_)); }
  std::unique_ptr<Checker> clone() const override { return std::make_unique<RigidChecker>(*this); }
  NodeId class_of(const Term& t) { return theory_.representative(theory_.add(t)); }

 private:
  CongruenceClosure theory_;
  Term lhs_;
  Term rhs_;
};

struct RigidShape {
  std::vector<Formula> hypotheses;
  Term lhs;
  Term rhs;
};

std::optional<RigidShape> rigid_shape(const Formula& f) {
  if (f.kind() == Formula::Kind::equality) return RigidShape{{}, f.lhs(), f.rhs()};
  if (f.kind() != Formula::Kind::implication || f.right().kind() != Formula::Kind::equality) return std::nullopt;
  std::vector<Formula> hyps = flatten_conjunction(f.left());
  for (const Formula& h : hyps) {
    if (h.kind() != Formula::Kind::equality || h.has_unknowns()) return std::nullopt;
  }
  return RigidShape{std::move(hyps), f.right().lhs(), f.right().rhs()};
}

struct Conjunct {
  Formula formula;
  std::vector<std::size_t> slots;  // indices into the unknown list
  std::optional<RigidShape> rigid;

  std::unique_ptr<Checker> make_checker() const {
    if (rigid) return std::make_unique<RigidChecker>(rigid->hypotheses, rigid->lhs, rigid->rhs);
    return std::make_unique<QuasitautologyChecker>(formula);
  }
};

// Candidates of a later unknown that agree with an earlier side of a rigid
// conjunct, bucketed by their class in that conjunct's closure.
struct Join {
  std::size_t checker;
  Term other_side;
  std::unordered_map<NodeId, std::vector<std::size_t>> buckets;
};

struct Plan {
  std::vector<Term> unknowns;                     // by position
  std::vector<std::vector<Term>> candidates;      // by position, canonical order
  std::vector<std::vector<std::size_t>> checks;   // checker indices, by position
  std::vector<std::optional<Join>> joins;         // by position
  std::vector<std::unique_ptr<Checker>> checkers;
  std::vector<std::size_t> min_size, max_size;
};

using Visitor = std::function<bool(const Substitution&)>;

class Worker {
 public:
  Worker(const Plan& plan) : plan_(plan) {
    for (const auto& c : plan.checkers) checkers_.push_back(c->clone());
  }

  // Visits, in order, the assignments of total size `total` whose first
  // candidate index lies in [first_lo, first_hi). Returns true if stopped.
  bool run(std::size_t total, std::size_t first_lo, std::size_t first_hi, const Visitor& visit) {
    first_lo_ = first_lo;
    first_hi_ = first_hi;
    return dfs(0, total, visit);
  }

 private:
  bool dfs(std::size_t pos, std::size_t remaining, const Visitor& visit) {
    const std::size_t n = plan_.unknowns.size();
    if (pos == n) return remaining == 0 && visit(current_);
    std::size_t min_rest = 0, max_rest = 0;
    for (std::size_t j = pos + 1; j < n; ++j) {
      min_rest += plan_.min_size[j];
      max_rest += plan_.max_size[j];
    }
    if (remaining < min_rest) return false;
    const std::size_t lo = remaining > max_rest ? remaining - max_rest : 0;
    const std::size_t hi = remaining - min_rest;
    const auto& cands = plan_.candidates[pos];

    auto try_candidate = [&](std::size_t ci) {
      const Term& t = cands[ci];
      current_.bind(plan_.unknowns[pos], t);
      for (std::size_t c : plan_.checks[pos]) {
        if (!checkers_[c]->valid(current_)) return false;
      }
      return dfs(pos + 1, remaining - t.size(), visit);
    };

    if (const auto& join = plan_.joins[pos]) {
      auto* rigid = static_cast<RigidChecker*>(checkers_[join->checker].get());
      auto it = join->buckets.find(rigid->class_of(current_.apply(join->other_side)));
      if (it == join->buckets.end()) return false;
      for (std::size_t ci : it->second) {
        std::size_t s = cands[ci].size();
        if (s < lo) continue;
        if (s > hi) break;
        if (try_candidate(ci)) return true;
      }
      return false;
    }
    std::size_t begin = 0, end = cands.size();
    if (pos == 0) {
      begin = first_lo_;
      end = first_hi_;
    }
    for (std::size_t ci = begin; ci < end; ++ci) {
      std::size_t s = cands[ci].size();
      if (s < lo) continue;
      if (s > hi) break;
      if (try_candidate(ci)) return true;
    }
    return false;
  }

  const Plan& plan_;
  std::vector<std::unique_ptr<Checker>> checkers_;
  Substitution current_;
  std::size_t first_lo_ = 0, first_hi_ = 0;
};

class Engine {
 public:
  Engine(const Formula& f, std::span<const Term> unknowns, const Signature& sig, std::size_t max_size)
      : unknowns_(unknowns.begin(), unknowns.end()), sig_(sig), max_size_(max_size) {
    if (!f.is_quantifier_free()) throw ContractError("search needs a quantifier-free formula");
    if (!f.is_variable_free()) throw ContractError("search needs a formula without variables: " + to_string(f));
    for (std::size_t i = 0; i < unknowns_.size(); ++i) {
      if (!unknowns_[i].is_unknown()) throw ContractError("search slot " + to_string(unknowns_[i]) + " is not an unknown");
      for (std::size_t j = 0; j < i; ++j) {
        if (unknowns_[j] == unknowns_[i]) throw ContractError("unknown " + to_string(unknowns_[i]) + " listed twice");
      }
    }
    for (const Formula& part : flatten_conjunction(f)) {
      Conjunct c{part, {}, rigid_shape(part)};
      for (const Term& u : unknowns_of(part)) {
        auto it = std::find(unknowns_.begin(), unknowns_.end(), u);
        if (it == unknowns_.end()) throw ContractError("unknown " + to_string(u) + " has no search slot");
        c.slots.push_back(static_cast<std::size_t>(it - unknowns_.begin()));
      }
      std::sort(c.slots.begin(), c.slots.end());
      conjuncts_.push_back(std::move(c));
    }
  }

  bool ground_part_valid() const {
    for (const Conjunct& c : conjuncts_) {
      if (c.slots.empty() && !c.make_checker()->valid(Substitution{})) return false;
    }
    return true;
  }

  // Unknown indices grouped into independent components, each ascending.
  std::vector<std::vector<std::size_t>> components() const {
    std::vector<std::size_t> parent(unknowns_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const Conjunct& c : conjuncts_) {
      for (std::size_t k = 1; k < c.slots.size(); ++k) parent[find(c.slots[k])] = find(c.slots[0]);
    }
    std::vector<std::vector<std::size_t>> groups;
    std::unordered_map<std::size_t, std::size_t> group_of;
    for (std::size_t i = 0; i < unknowns_.size(); ++i) {
      auto [it, inserted] = group_of.emplace(find(i), groups.size());
      if (inserted) groups.emplace_back();
      groups[it->second].push_back(i);
    }
    return groups;
  }

  std::vector<std::size_t> all_slots() const {
    std::vector<std::size_t> v(unknowns_.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  // Candidate lists, checks and joins for the unknowns in `slots`.
  std::optional<Plan> plan(const std::vector<std::size_t>& slots) {
    Plan p;
    std::unordered_map<std::size_t, std::size_t> position;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      position[slots[k]] = k;
      p.unknowns.push_back(unknowns_[slots[k]]);
    }
    std::vector<const Conjunct*> singles_of_any, multi;
    for (const Conjunct& c : conjuncts_) {
      if (c.slots.empty() || !position.count(c.slots.front())) continue;
      (c.slots.size() == 1 ? singles_of_any : multi).push_back(&c);
    }

    for (std::size_t k = 0; k < slots.size(); ++k) {
      const Term& u = p.unknowns[k];
      std::vector<const Conjunct*> singles;
      for (const Conjunct* c : singles_of_any) {
        if (c->slots.front() == slots[k]) singles.push_back(c);
      }
      std::vector<Term> cands;
      bool generated = false;
      for (const Conjunct* c : singles) {
        if (!c->rigid) continue;
        const RigidShape& r = *c->rigid;
        const Term* seed = nullptr;
        if (r.lhs == u && !r.rhs.has_unknowns()) seed = &r.rhs;
        if (r.rhs == u && !r.lhs.has_unknowns()) seed = &r.lhs;
        if (!seed) continue;
        cands = class_members(r.hypotheses, *seed, sig_, max_size_);
        generated = true;
        break;
      }
      if (!generated) cands = all_terms();
      std::vector<std::unique_ptr<Checker>> filters;
      for (const Conjunct* c : singles) filters.push_back(c->make_checker());
      std::vector<Term> kept;
      Substitution s;
      for (const Term& t : cands) {
        s.bind(u, t);
        if (std::all_of(filters.begin(), filters.end(), [&](auto& f) { return f->valid(s); })) kept.push_back(t);
      }
      if (kept.empty()) return std::nullopt;
      p.min_size.push_back(kept.front().size());
      p.max_size.push_back(kept.back().size());
      p.candidates.push_back(std::move(kept));
    }

    p.checks.resize(slots.size());
    p.joins.resize(slots.size());
    for (const Conjunct* c : multi) {
      std::size_t last = position.at(c->slots.back());
      std::size_t id = p.checkers.size();
      p.checkers.push_back(c->make_checker());
      const Term& u = p.unknowns[last];
      if (c->rigid && !p.joins[last]) {
        const RigidShape& r = *c->rigid;
        const Term* other = nullptr;
        if (r.rhs == u && !occurs_in(u, r.lhs)) other = &r.lhs;
        else if (r.lhs == u && !occurs_in(u, r.rhs)) other = &r.rhs;
        if (other) {
          Join join{id, *other, {}};
          auto* rigid = static_cast<RigidChecker*>(p.checkers[id].get());
          for (std::size_t ci = 0; ci < p.candidates[last].size(); ++ci) {
            join.buckets[rigid->class_of(p.candidates[last][ci])].push_back(ci);
          }
          p.joins[last] = std::move(join);
          continue;
        }
      }
      p.checks[last].push_back(id);
    }
    // Cheap closure lookups before full quasitautology checks.
    for (auto& list : p.checks) {
      std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return dynamic_cast<RigidChecker*>(p.checkers[a].get()) && !dynamic_cast<RigidChecker*>(p.checkers[b].get());
      });
    }
    return p;
  }

 private:
  const std::vector<Term>& all_terms() {
    if (!all_terms_) all_terms_ = enumerate_terms(sig_, max_size_);
    return *all_terms_;
  }

  std::vector<Term> unknowns_;
  Signature sig_;
  std::size_t max_size_;
  std::vector<Conjunct> conjuncts_;
  std::optional<std::vector<Term>> all_terms_;
};

std::pair<std::size_t, std::size_t> total_range(const Plan& p) {
  return {std::accumulate(p.min_size.begin(), p.min_size.end(), std::size_t{0}),
          std::accumulate(p.max_size.begin(), p.max_size.end(), std::size_t{0})};
}

std::optional<Substitution> first_solution(const Plan& plan, unsigned threads) {
  auto [lo, hi] = total_range(plan);
  const std::size_t first_count = plan.candidates.front().size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(first_count)));
  std::vector<std::unique_ptr<Worker>> workers;
  for (unsigned i = 0; i < threads; ++i) workers.push_back(std::make_unique<Worker>(plan));

  for (std::size_t total = lo; total <= hi; ++total) {
    if (threads == 1) {
      std::optional<Substitution> found;
      workers[0]->run(total, 0, first_count, [&](const Substitution& s) {
        found = s;
        return true;
      });
      if (found) return found;
      continue;
    }
    // Contiguous chunks of the first unknown's candidates; the lowest chunk
    // with a hit holds the sequentially first assignment.
    std::vector<std::optional<Substitution>> found(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      std::size_t begin = first_count * w / threads, end = first_count * (w + 1) / threads;
      pool.emplace_back([&, w, begin, end] {
        workers[w]->run(total, begin, end, [&](const Substitution& s) {
          found[w] = s;
          return true;
        });
      });
    }
    for (auto& t : pool) t.join();
    for (auto& f : found) {
      if (f) return f;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Substitution> solve_formula(const Formula& f, std::span<const Term> unknowns, const Signature& sig,
                                          std::size_t max_size, const SearchOptions& options) {
  Engine engine(f, unknowns, sig, max_size);
  if (!engine.ground_part_valid()) return std::nullopt;
  Substitution result;
  for (const auto& component : engine.components()) {
    auto plan = engine.plan(component);
    if (!plan) return std::nullopt;
    auto found = first_solution(*plan, options.threads);
    if (!found) return std::nullopt;
    for (const auto& [u, t] : *found) result.bind(u, t);
  }
  return result;
}

std::vector<Substitution> all_solutions(const Formula& f, std::span<const Term> unknowns, const Signature& sig,
                                        std::size_t max_size, std::size_t limit) {
  std::vector<Substitution> out;
  Engine engine(f, unknowns, sig, max_size);
  if (limit == 0 || !engine.ground_part_valid()) return out;
  if (unknowns.empty()) {
    out.emplace_back();
    return out;
  }
  auto plan = engine.plan(engine.all_slots());
  if (!plan) return out;
  auto [lo, hi] = total_range(*plan);
  Worker worker(*plan);
  for (std::size_t total = lo; total <= hi && out.size() < limit; ++total) {
    worker.run(total, 0, plan->candidates.front().size(), [&](const Substitution& s) {
      out.push_back(s);
      return out.size() >= limit;
    });
  }
  return out;
}

}  // namespace hsk::skeleton
