#include "bnreorder/fusion.hpp"

namespace bnreorder {

Dag chain_dag(const Ordering& alpha) {
  if (alpha.size() == 0) throw Error(ErrorKind::EmptyOrdering, "cannot build a chain over no nodes");
  std::vector<Arc> arcs;
  arcs.reserve(alpha.size() - 1);
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) arcs.push_back(Arc{alpha[i], alpha[i + 1]});
  return Dag::from_arcs(alpha.node_table(), arcs);
}

Fusion fuse_with_reports(std::span<const Dag> dags, const Ordering& alpha, const ReorderOptions& options) {
  if (dags.empty()) throw Error(ErrorKind::EmptySet, "fusion needs at least one DAG");
  std::vector<ReorderReport> summands;
  std::vector<Dag> reordered;
  summands.reserve(dags.size());
  reordered.reserve(dags.size());
  for (const Dag& d : dags) {
    summands.push_back(reorder_method_a(d.rebased_on(alpha.node_table()), alpha, MethodAVariant::kFull, options));
    reordered.push_back(summands.back().result);
  }
  Dag fused = graph_union(reordered);
  return Fusion{std::move(fused), std::move(summands)};
}

Dag fuse(std::span<const Dag> dags, const Ordering& alpha) { return fuse_with_reports(dags, alpha).dag; }

Dag fuse(std::span<const Dag> dags) {
  if (dags.empty()) throw Error(ErrorKind::EmptySet, "fusion needs at least one DAG");
  return fuse(dags, topological_sort(dags.front()));
}

Dag reorder_via_chain_fusion(const Dag& dag, const Ordering& alpha) {
  return chain_fusion_report(dag, alpha).result;
}

ReorderReport chain_fusion_report(const Dag& dag, const Ordering& alpha, const ReorderOptions& options) {
  alpha.require_matches(dag);
  const Dag chain = chain_dag(alpha);
  // The chain admits exactly one topological order, alpha itself.
  const Ordering pivot = topological_sort(chain);
  const std::vector<Dag> inputs{dag, chain};
  return std::move(fuse_with_reports(inputs, pivot, options).summands.front());
}

}  // namespace bnreorder
