#pragma once

#include <optional>

#include "bnreorder/dag.hpp"

namespace bnreorder {

/// True iff `d1` entails `d2`: every independency displayed by `d2` holds
/// in `d1`, so `d2` is an I-map of `d1`. Checks the local statements of a
/// recursive basis of `d2` drawn along topological_sort(d2).
/// Errors: NodeSetMismatch.
bool entails(const Dag& d1, const Dag& d2);

/// Same check along a caller-chosen ordering consistent with `d2`'s arcs.
/// Errors: NodeSetMismatch, OrderingMismatch, OrderingInconsistent.
bool entails(const Dag& d1, const Dag& d2, const Ordering& d2_order);

struct MinimalityVerdict {
  enum class Kind { kNotImap, kImapNotMinimal, kMinimalImap };

  Kind kind;
  /// The first removable arc, in (tail index, head index) order, when
  /// kind is kImapNotMinimal.
  std::optional<Arc> removable_arc;
};

/// Classifies `candidate` as a (minimal) I-map of `reference`.
/// Errors: NodeSetMismatch, OrderingMismatch, OrderingInconsistent.
MinimalityVerdict is_minimal_imap(const Dag& candidate, const Dag& reference, const Ordering& alpha);

}  // namespace bnreorder
