#include "bnreorder/entailment.hpp"

#include "bnreorder/independence.hpp"

namespace bnreorder {

bool entails(const Dag& d1, const Dag& d2) {
  const Dag rebased = d2.rebased_on(d1.node_table());
  return entails(d1, rebased, topological_sort(rebased));
}

bool entails(const Dag& d1, const Dag& d2, const Ordering& d2_order) {
  const Dag rebased = d2.rebased_on(d1.node_table());
  const Ordering order = Ordering::from_names(rebased, d2_order.names());
  if (!order.is_consistent_with(rebased)) {
    throw Error(ErrorKind::OrderingInconsistent, "ordering is not consistent with the entailed DAG");
  }
  NodeSet before(d1.size());
  for (NodeId x : order.sequence()) {
    const auto parents = rebased.parents(x);
    const NodeSet boundary(d1.size(), std::vector<NodeId>(parents.begin(), parents.end()));
    if (!d_separated(d1, x, boundary, before - boundary)) return false;
    before.insert(x);
  }
  return true;
}

MinimalityVerdict is_minimal_imap(const Dag& candidate, const Dag& reference, const Ordering& alpha) {
  const Dag cand = candidate.rebased_on(reference.node_table());
  const Ordering order = Ordering::from_names(cand, alpha.names());
  if (!order.is_consistent_with(cand)) {
    throw Error(ErrorKind::OrderingInconsistent, "candidate has an arc against the ordering");
  }
  if (!entails(reference, cand, order)) return {MinimalityVerdict::Kind::kNotImap, std::nullopt};
  for (const Arc& a : cand.arcs()) {
    if (entails(reference, cand.without_arc(a), order)) {
      return {MinimalityVerdict::Kind::kImapNotMinimal, a};
    }
  }
  return {MinimalityVerdict::Kind::kMinimalImap, std::nullopt};
}

}  // namespace bnreorder
