#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bnreorder/error.hpp"
#include "bnreorder/node_set.hpp"

namespace bnreorder {

namespace detail {
struct DagEditor;
}

/// Node names in declaration order. Shared between a Dag and everything
/// derived from it so NodeIds stay comparable.
class NodeTable {
 public:
  explicit NodeTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(NodeId id) const;
  const std::vector<std::string>& names() const { return names_; }

  std::optional<NodeId> find(std::string_view name) const;
  /// Throws UnknownNode.
  NodeId id(std::string_view name) const;

  /// Same names in the same declaration order.
  friend bool operator==(const NodeTable& a, const NodeTable& b) { return a.names_ == b.names_; }

  /// Same names, declaration order ignored.
  bool same_name_set(const NodeTable& other) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

/// True for a non-empty token without whitespace and without '#'.
bool is_valid_node_name(std::string_view name);

using NamedArc = std::pair<std::string, std::string>;

/// Immutable directed acyclic graph. Construction validates the arc set;
/// every transformation returns a new value.
class Dag {
 public:
  /// Builds and validates a DAG from names. Errors: BadName, DuplicateNode,
  /// UnknownNode, SelfLoop, DuplicateArc, CycleDetected (as CycleError).
  static Dag create(std::vector<std::string> nodes, const std::vector<NamedArc>& arcs);

  /// Same validation over an existing node table.
  static Dag from_arcs(std::shared_ptr<const NodeTable> nodes, const std::vector<Arc>& arcs);

  const NodeTable& nodes() const { return *nodes_; }
  const std::shared_ptr<const NodeTable>& node_table() const { return nodes_; }

  std::size_t size() const { return parents_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  const std::string& name(NodeId id) const { return nodes_->name(id); }
  NodeId id(std::string_view name) const { return nodes_->id(name); }
  void check_node(NodeId id) const;

  /// Sorted by index.
  std::span<const NodeId> parents(NodeId id) const;
  std::span<const NodeId> children(NodeId id) const;
  bool has_arc(NodeId tail, NodeId head) const;

  /// Sorted by (tail index, head index).
  std::vector<Arc> arcs() const;
  std::vector<NamedArc> named_arcs() const;

  /// Nodes reachable by directed paths of length >= 1.
  NodeSet descendants(NodeId id) const;
  /// `seeds` plus every node with a directed path into `seeds`.
  NodeSet ancestral_closure(const NodeSet& seeds) const;
  bool has_path(NodeId from, NodeId to) const;
  /// A directed path from `tail` to `head` other than the arc (tail, head).
  bool has_alternate_path(NodeId tail, NodeId head) const;

  std::size_t max_in_degree() const;

  Dag without_arc(Arc arc) const;

  /// Re-indexes this DAG onto `table`, which must hold the same node names.
  /// Throws NodeSetMismatch otherwise.
  Dag rebased_on(std::shared_ptr<const NodeTable> table) const;

  /// Identical declaration order and arc set.
  friend bool operator==(const Dag& a, const Dag& b);

 private:
  friend struct detail::DagEditor;

  Dag(std::shared_ptr<const NodeTable> nodes);

  std::shared_ptr<const NodeTable> nodes_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<std::vector<NodeId>> children_;
  std::size_t arc_count_ = 0;
};

/// A total order over a Dag's nodes. Position 0 is first.
class Ordering {
 public:
  /// Throws OrderingMismatch unless `sequence` is a permutation of the table.
  Ordering(std::shared_ptr<const NodeTable> nodes, std::vector<NodeId> sequence);

  static Ordering from_names(const Dag& dag, const std::vector<std::string>& names);

  const NodeTable& nodes() const { return *nodes_; }
  const std::shared_ptr<const NodeTable>& node_table() const { return nodes_; }

  std::size_t size() const { return sequence_.size(); }
  const std::vector<NodeId>& sequence() const { return sequence_; }
  NodeId operator[](std::size_t i) const { return sequence_[i]; }
  std::size_t position(NodeId id) const { return position_.at(id.index()); }
  bool precedes(NodeId a, NodeId b) const { return position(a) < position(b); }

  /// Nodes strictly before `id`.
  NodeSet predecessors(NodeId id) const;
  std::vector<std::string> names() const;

  /// Throws OrderingMismatch when the ordering ranges over another node table.
  void require_matches(const Dag& dag) const;
  /// Every arc points from an earlier to a later node.
  bool is_consistent_with(const Dag& dag) const;

  Ordering reversed() const;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return *a.nodes_ == *b.nodes_ && a.sequence_ == b.sequence_;
  }

 private:
  std::shared_ptr<const NodeTable> nodes_;
  std::vector<NodeId> sequence_;
  std::vector<std::size_t> position_;
};

/// Kahn's algorithm; among ready nodes the lowest declaration index goes first.
Ordering topological_sort(const Dag& dag);

struct ReversalRecord {
  NodeId tail;
  NodeId head;
  /// Arcs created by parent inheritance, absent before the reversal.
  std::vector<Arc> arcs_added;
  std::vector<NodeId> tail_parents_before;
  std::vector<NodeId> head_parents_before;
};

struct Reversal {
  Dag dag;
  ReversalRecord record;
};

/// Flips (tail, head); head inherits the parents of tail and tail inherits
/// the remaining parents of head. Errors: UnknownNode, ArcAbsent,
/// AlternatePathExists.
Reversal reverse_arc(const Dag& dag, NodeId tail, NodeId head);

/// Union of arc sets over a shared node set. Inputs are rebased onto the
/// first input's declaration order. Errors: NodeSetMismatch, CycleDetected.
Dag graph_union(std::span<const Dag> dags);

}  // namespace bnreorder
