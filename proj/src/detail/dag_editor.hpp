#pragma once

#include "bnreorder/dag.hpp"

namespace bnreorder::detail {

/// In-place mutation for the reorder engine, which owns a private Dag copy
/// and guarantees the reversal precondition through its sequence invariant.
struct DagEditor {
  /// Reverses (tail, head) without checking for alternate paths.
  static ReversalRecord reverse_unchecked(Dag& dag, NodeId tail, NodeId head);
};

}  // namespace bnreorder::detail
