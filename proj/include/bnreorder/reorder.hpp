#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bnreorder/dag.hpp"

namespace bnreorder {

/// Mutable permutation of a Dag's nodes, position 0 leftmost. The reorder
/// methods keep every current arc pointing rightward in it.
class WorkSequence {
 public:
  WorkSequence(std::shared_ptr<const NodeTable> nodes, std::vector<NodeId> items);
  explicit WorkSequence(const Ordering& ordering);

  const NodeTable& nodes() const { return *nodes_; }
  std::size_t size() const { return items_.size(); }
  const std::vector<NodeId>& items() const { return items_; }
  NodeId operator[](std::size_t i) const { return items_[i]; }
  std::vector<std::string> names() const;

  /// Interchanges the elements at `i` and `i + 1`.
  void interchange(std::size_t i);

  bool matches(const Ordering& ordering) const { return items_ == ordering.sequence(); }
  /// Every arc of `dag` points from left to right.
  bool all_arcs_rightward(const Dag& dag) const;

  friend bool operator==(const WorkSequence& a, const WorkSequence& b) { return a.items_ == b.items_; }

 private:
  std::shared_ptr<const NodeTable> nodes_;
  std::vector<NodeId> items_;
};

/// Which barren node S_beta construction eliminates next when several
/// qualify. Only kLatestInTarget is guaranteed to end at the boundary DAG.
enum class BarrenTieBreak { kLatestInTarget, kLowestIndex };

/// Builds S_beta by eliminating barren nodes of a shrinking copy of `dag`
/// and percolating each one left-to-right through the partial sequence. It
/// stops in front of the first element that is a child of the node in the
/// original `dag` or that comes later in `alpha`.
WorkSequence build_s_beta(const Dag& dag, const Ordering& alpha,
                          BarrenTieBreak tie_break = BarrenTieBreak::kLatestInTarget);

struct Interchange {
  NodeId left;
  NodeId right;
  /// Position of `left` before the interchange.
  std::size_t position;
};

/// State after one interchange and its optional reversal.
struct StepView {
  const Interchange& interchange;
  const ReversalRecord* reversal;  // null when the pair was not adjacent in the DAG
  const WorkSequence& sequence;
  const Dag& dag;
};

struct ReorderOptions {
  /// Keep the interchange and reversal lists in the report. Counts are
  /// always kept.
  bool keep_trace = true;
  /// Verify the rightward invariant after every step; throws std::logic_error.
  bool check_invariants = false;
  BarrenTieBreak tie_break = BarrenTieBreak::kLatestInTarget;
  std::function<void(const StepView&)> on_step;
};

struct ReorderReport {
  WorkSequence initial_sequence;
  std::vector<Interchange> interchanges;
  std::vector<ReversalRecord> reversals;
  std::size_t interchange_count = 0;
  std::size_t reversal_count = 0;
  std::size_t arcs_added_total = 0;
  Dag result;
};

enum class MethodAVariant { kFull, kSimplified };

/// METHOD A. Starting from S_beta, repeatedly takes the leftmost element
/// that belongs further left and percolates it right-to-left (full), or
/// interchanges the leftmost out-of-order adjacent pair (simplified). Each
/// interchanged pair joined by an arc has that arc reversed.
ReorderReport reorder_method_a(const Dag& dag, const Ordering& alpha,
                               MethodAVariant variant = MethodAVariant::kFull,
                               const ReorderOptions& options = {});

/// METHOD B. Bubble-sort counterpart: the leftmost element that belongs
/// further right percolates left-to-right.
ReorderReport reorder_method_b(const Dag& dag, const Ordering& alpha, const ReorderOptions& options = {});

/// Runs the simplified METHOD A interchange loop from an arbitrary start
/// sequence instead of S_beta. The start must keep every arc of `dag`
/// rightward (OrderingInconsistent otherwise). Used to show what a
/// non-optimal reversal schedule produces.
ReorderReport reorder_from_sequence(const Dag& dag, const Ordering& alpha, WorkSequence start,
                                    const ReorderOptions& options = {});

}  // namespace bnreorder
