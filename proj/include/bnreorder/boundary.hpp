#pragma once

#include <cstddef>
#include <vector>

#include "bnreorder/dag.hpp"

namespace bnreorder {

/// One statement I(node, boundary, predecessors \ boundary) of a recursive
/// basis.
struct BoundaryEntry {
  NodeId node;
  NodeSet predecessors;
  NodeSet boundary;
};

/// Entries listed in the order of the ordering they were drawn against.
struct RecursiveBasis {
  std::vector<BoundaryEntry> entries;
};

struct BoundaryDag {
  Dag dag;
  RecursiveBasis basis;
};

/// The unique minimal subset B of `predecessors` with
/// I(x, B, predecessors \ B) in `dag`. Each candidate y is kept iff x and y
/// are d-connected given the other candidates; uniqueness of the minimal
/// set in intersectional graphoids makes the single-deletion test exact.
/// Errors: UnknownNode, XInU.
NodeSet minimal_boundary(const Dag& dag, NodeId x, const NodeSet& predecessors);

inline constexpr std::size_t kMaxExhaustiveBoundary = 12;

/// Brute-force reference for minimal_boundary: scans subsets by increasing
/// size and returns the first one that screens x off. Throws
/// std::logic_error if two minimum-size subsets both work, and TooLarge
/// when `predecessors` has more than kMaxExhaustiveBoundary members.
NodeSet minimal_boundary_exhaustive(const Dag& dag, NodeId x, const NodeSet& predecessors);

/// Draws the recursive basis of `dag` relative to `alpha` and points an arc
/// from every member of B(x) to x. The result is the minimal I-map of `dag`
/// whose arcs are consistent with `alpha`. Errors: OrderingMismatch.
BoundaryDag boundary_dag(const Dag& dag, const Ordering& alpha);

}  // namespace bnreorder
