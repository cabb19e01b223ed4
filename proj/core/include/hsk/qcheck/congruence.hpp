#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hsk/syntax/term.hpp"

namespace hsk::qcheck {

/// Incremental congruence closure over ground terms (unknowns are treated as
/// uninterpreted constants). Classes are kept as explicit member lists so
/// that `find` is a single array lookup; merging relabels the smaller class.
///
/// Terms added after merges never change the relation among existing nodes:
/// a new node is either a fresh singleton or joins the class of an existing
/// congruent node, whose representative is kept.
class CongruenceClosure {
 public:
  using NodeId = std::uint32_t;

  /// Adds t and all its subterms. Throws ContractError for variables.
  NodeId add(const Term& t);
  std::optional<NodeId> find_term(const Term& t) const;
  /// Node for f(c1, ..., cn) where ci are nodes; reuses a congruent node or
  /// creates an anonymous one.
  NodeId apply(const FunctionSymbol& f, std::span<const NodeId> args);

  void merge(NodeId a, NodeId b);
  void merge(const Term& a, const Term& b) { merge(add(a), add(b)); }

  NodeId representative(NodeId n) const { return rep_[n]; }
  bool equivalent(NodeId a, NodeId b) const { return rep_[a] == rep_[b]; }
  bool equivalent(const Term& a, const Term& b) { return equivalent(add(a), add(b)); }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::uint32_t symbol_of(NodeId n) const { return nodes_[n].symbol; }
  std::span<const NodeId> children_of(NodeId n) const { return nodes_[n].children; }
  /// Interned symbol table; leaf unknowns appear as `*name/0`.
  const FunctionSymbol& symbol(std::uint32_t id) const { return symbols_[id]; }
  std::size_t symbol_count() const noexcept { return symbols_.size(); }
  /// Term that created the node, if it was added by `add`.
  const std::optional<Term>& term_of(NodeId n) const { return nodes_[n].term; }

 private:
  struct Node {
    std::uint32_t symbol;
    std::vector<NodeId> children;
    std::optional<Term> term;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };

  std::uint32_t intern(const FunctionSymbol& f);
  std::vector<std::uint32_t> signature(NodeId n) const;
  NodeId make_node(std::uint32_t symbol, std::vector<NodeId> children, std::optional<Term> term);
  void process();

  std::vector<Node> nodes_;
  std::vector<NodeId> rep_;
  std::vector<std::vector<NodeId>> members_;  // by representative
  std::vector<std::vector<NodeId>> uses_;     // parents, by representative
  std::unordered_map<std::vector<std::uint32_t>, NodeId, KeyHash> table_;
  std::unordered_map<Term, NodeId, TermHash> term_index_;
  std::vector<FunctionSymbol> symbols_;
  std::unordered_map<FunctionSymbol, std::uint32_t> symbol_ids_;
  std::vector<std::pair<NodeId, NodeId>> pending_;
};

/// Partition of a subterm-closed universe into congruence classes.
class CongruencePartition {
 public:
  CongruencePartition(std::vector<Term> universe, std::vector<std::size_t> class_of);

  const std::vector<Term>& universe() const noexcept { return universe_; }
  /// Throws DomainError if either term is outside the universe.
  bool same_class(const Term& a, const Term& b) const;
  std::size_t class_index(const Term& t) const;
  std::size_t class_count() const noexcept { return class_count_; }
  /// Classes with canonically sorted members, ordered by their least member.
  std::vector<std::vector<Term>> classes() const;

 private:
  std::vector<Term> universe_;
  std::vector<std::size_t> class_of_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
  std::size_t class_count_ = 0;
};

/// Smallest congruence on `universe` containing the equalities. Throws
/// DomainError if the universe is not subterm-closed, does not contain the
/// equality sides, or holds a non-ground term.
CongruencePartition congruence_close(std::span<const std::pair<Term, Term>> equalities,
                                     std::span<const Term> universe);

}  // namespace hsk::qcheck
