#pragma once

#include <span>
#include <vector>

#include "bnreorder/dag.hpp"
#include "bnreorder/reorder.hpp"

namespace bnreorder {

/// Directed chain alpha[0] -> alpha[1] -> ... over alpha's node table.
/// Errors: EmptyOrdering.
Dag chain_dag(const Ordering& alpha);

struct Fusion {
  Dag dag;
  /// One METHOD A report per input, in input order.
  std::vector<ReorderReport> summands;
};

/// Reorders every input to `alpha` with METHOD A and unions the results.
/// The union is consistent with `alpha` and is an I-map of every input.
/// Errors: EmptySet, NodeSetMismatch.
Fusion fuse_with_reports(std::span<const Dag> dags, const Ordering& alpha,
                         const ReorderOptions& options = {});

Dag fuse(std::span<const Dag> dags, const Ordering& alpha);
/// Pivots on topological_sort of the first input.
Dag fuse(std::span<const Dag> dags);

/// Fuses `dag` with chain_dag(alpha) and returns only `dag`'s rearranged
/// arcs, which equal the boundary DAG of `dag` relative to `alpha`.
/// Errors: OrderingMismatch.
Dag reorder_via_chain_fusion(const Dag& dag, const Ordering& alpha);

/// The METHOD A report of `dag`'s summand in that fusion.
ReorderReport chain_fusion_report(const Dag& dag, const Ordering& alpha, const ReorderOptions& options = {});

}  // namespace bnreorder
