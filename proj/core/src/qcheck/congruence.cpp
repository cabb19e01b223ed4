#include "hsk/qcheck/congruence.hpp"

#include <algorithm>
#include <map>

#include "hsk/error.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::qcheck {

std::size_t CongruenceClosure::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::size_t h = key.size();
  for (std::uint32_t v : key) h = h * 0x100000001b3ULL ^ v;
  return h;
}

std::uint32_t CongruenceClosure::intern(const FunctionSymbol& f) {
  auto [it, inserted] = symbol_ids_.emplace(f, static_cast<std::uint32_t>(symbols_.size()));
  if (inserted) symbols_.push_back(f);
  return it->second;
}

std::vector<std::uint32_t> CongruenceClosure::signature(NodeId n) const {
  const Node& node = nodes_[n];
  std::vector<std::uint32_t> key;
  key.reserve(node.children.size() + 1);
  key.push_back(node.symbol);
  for (NodeId c : node.children) key.push_back(rep_[c]);
  return key;
}

CongruenceClosure::NodeId CongruenceClosure::make_node(std::uint32_t symbol, std::vector<NodeId> children,
                                                       std::optional<Term> term) {
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({symbol, std::move(children), std::move(term)});
  rep_.push_back(id);
  members_.push_back({id});
  uses_.emplace_back();
  for (NodeId c : nodes_[id].children) uses_[rep_[c]].push_back(id);
  auto key = signature(id);
  if (auto it = table_.find(key); it != table_.end()) {
    pending_.emplace_back(it->second, id);
    process();
  } else {
    table_.emplace(std::move(key), id);
  }
  return id;
}

CongruenceClosure::NodeId CongruenceClosure::add(const Term& t) {
  if (auto it = term_index_.find(t); it != term_index_.end()) return it->second;
  NodeId id = 0;
  switch (t.kind()) {
    case Term::Kind::variable: throw ContractError("congruence closure needs ground terms, got ?" + t.name());
    case Term::Kind::unknown: id = make_node(intern(FunctionSymbol("*" + t.name(), 0)), {}, t); break;
    case Term::Kind::application: {
      std::vector<NodeId> children;
      children.reserve(t.args().size());
      for (const Term& a : t.args()) children.push_back(add(a));
      id = make_node(intern(t.symbol()), std::move(children), t);
      break;
    }
  }
  term_index_.emplace(t, id);
  return id;
}

std::optional<CongruenceClosure::NodeId> CongruenceClosure::find_term(const Term& t) const {
  auto it = term_index_.find(t);
  if (it == term_index_.end()) return std::nullopt;
  return it->second;
}

CongruenceClosure::NodeId CongruenceClosure::apply(const FunctionSymbol& f, std::span<const NodeId> args) {
  std::vector<std::uint32_t> key;
  key.push_back(intern(f));
  for (NodeId a : args) key.push_back(rep_[a]);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  return make_node(key[0], std::vector<NodeId>(args.begin(), args.end()), std::nullopt);
}

void CongruenceClosure::merge(NodeId a, NodeId b) {
  pending_.emplace_back(a, b);
  process();
}

void CongruenceClosure::process() {
  while (!pending_.empty()) {
    auto [a, b] = pending_.back();
    pending_.pop_back();
    NodeId ra = rep_[a], rb = rep_[b];
    if (ra == rb) continue;
    if (members_[ra].size() < members_[rb].size()) std::swap(ra, rb);

    std::vector<NodeId> parents = std::move(uses_[rb]);
    uses_[rb].clear();
    for (NodeId p : parents) {
      auto it = table_.find(signature(p));
      if (it != table_.end() && it->second == p) table_.erase(it);
    }
    for (NodeId m : members_[rb]) rep_[m] = ra;
    members_[ra].insert(members_[ra].end(), members_[rb].begin(), members_[rb].end());
    members_[rb].clear();
    members_[rb].shrink_to_fit();
    for (NodeId p : parents) {
      auto key = signature(p);
      auto it = table_.find(key);
      if (it == table_.end()) {
        table_.emplace(std::move(key), p);
      } else if (it->second != p && rep_[it->second] != rep_[p]) {
        pending_.emplace_back(it->second, p);
      }
      uses_[ra].push_back(p);
    }
  }
}

CongruencePartition::CongruencePartition(std::vector<Term> universe, std::vector<std::size_t> class_of)
    : universe_(std::move(universe)), class_of_(std::move(class_of)) {
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    index_.emplace(universe_[i], i);
    class_count_ = std::max(class_count_, class_of_[i] + 1);
  }
}

std::size_t CongruencePartition::class_index(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw DomainError("term " + to_string(t) + " is outside the universe");
  return class_of_[it->second];
}

bool CongruencePartition::same_class(const Term& a, const Term& b) const {
  return class_index(a) == class_index(b);
}

std::vector<std::vector<Term>> CongruencePartition::classes() const {
  std::vector<std::vector<Term>> out(class_count_);
  for (std::size_t i = 0; i < universe_.size(); ++i) out[class_of_[i]].push_back(universe_[i]);
  for (auto& cls : out) std::sort(cls.begin(), cls.end(), CanonicalLess{});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return CanonicalLess{}(x.front(), y.front()); });
  return out;
}

CongruencePartition congruence_close(std::span<const std::pair<Term, Term>> equalities,
                                     std::span<const Term> universe) {
  std::vector<Term> terms(universe.begin(), universe.end());
  std::sort(terms.begin(), terms.end(), CanonicalLess{});
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::unordered_map<Term, std::size_t, TermHash> index;
  for (std::size_t i = 0; i < terms.size(); ++i) index.emplace(terms[i], i);

  for (const Term& t : terms) {
    if (!t.is_ground()) throw DomainError("universe term " + to_string(t) + " is not ground");
    for (const Term& a : t.args()) {
      if (!index.count(a)) throw DomainError("universe is not subterm-closed: missing " + to_string(a));
    }
  }
  CongruenceClosure cc;
  for (const Term& t : terms) cc.add(t);
  for (const auto& [l, r] : equalities) {
    if (!index.count(l)) throw DomainError("term " + to_string(l) + " is outside the universe");
    if (!index.count(r)) throw DomainError("term " + to_string(r) + " is outside the universe");
    cc.merge(*cc.find_term(l), *cc.find_term(r));
  }

  // Number classes in order of their least member.
  std::map<CongruenceClosure::NodeId, std::size_t> numbering;
  std::vector<std::size_t> class_of(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto rep = cc.representative(*cc.find_term(terms[i]));
    auto [it, inserted] = numbering.emplace(rep, numbering.size());
    class_of[i] = it->second;
  }
  return CongruencePartition(std::move(terms), std::move(class_of));
}

}  // namespace hsk::qcheck
