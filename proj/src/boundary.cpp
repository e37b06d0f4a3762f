#include "bnreorder/boundary.hpp"

#include <stdexcept>

#include "bnreorder/independence.hpp"

namespace bnreorder {

namespace {

void check_boundary_args(const Dag& dag, NodeId x, const NodeSet& predecessors) {
  dag.check_node(x);
  if (predecessors.universe() != dag.size()) {
    throw Error(ErrorKind::UnknownNode, "predecessor set refers to nodes outside the graph");
  }
  if (predecessors.contains(x)) {
    throw Error(ErrorKind::XInU, "'" + dag.name(x) + "' is among its own predecessors");
  }
}

// Calls `fn` with every subset of `items` of exactly `k` members.
template <typename F>
void for_each_subset(const std::vector<NodeId>& items, std::size_t universe, std::size_t k, F&& fn) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  const std::size_t n = items.size();
  while (true) {
    NodeSet s(universe);
    for (std::size_t i : pick) s.insert(items[i]);
    fn(s);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

NodeSet minimal_boundary(const Dag& dag, NodeId x, const NodeSet& predecessors) {
  check_boundary_args(dag, x, predecessors);
  NodeSet boundary(dag.size());
  predecessors.for_each([&](NodeId y) {
    if (!d_separated(dag, x, predecessors.without(y), NodeSet(dag.size(), {y}))) boundary.insert(y);
  });
  return boundary;
}

NodeSet minimal_boundary_exhaustive(const Dag& dag, NodeId x, const NodeSet& predecessors) {
  check_boundary_args(dag, x, predecessors);
  const std::vector<NodeId> items = predecessors.members();
  if (items.size() > kMaxExhaustiveBoundary) {
    throw Error(ErrorKind::TooLarge, "exhaustive boundary search is limited to " +
                                         std::to_string(kMaxExhaustiveBoundary) + " predecessors");
  }
  for (std::size_t k = 0; k <= items.size(); ++k) {
    std::vector<NodeSet> hits;
    for_each_subset(items, dag.size(), k, [&](const NodeSet& candidate) {
      if (d_separated(dag, x, candidate, predecessors - candidate)) hits.push_back(candidate);
    });
    if (hits.size() > 1) throw std::logic_error("minimal boundary is not unique");
    if (hits.size() == 1) return hits.front();
  }
  throw std::logic_error("no subset screens the node off, not even the full predecessor set");
}

BoundaryDag boundary_dag(const Dag& dag, const Ordering& alpha) {
  alpha.require_matches(dag);
  RecursiveBasis basis;
  basis.entries.reserve(dag.size());
  std::vector<Arc> arcs;
  NodeSet before(dag.size());
  for (NodeId x : alpha.sequence()) {
    NodeSet b = minimal_boundary(dag, x, before);
    b.for_each([&](NodeId y) { arcs.push_back(Arc{y, x}); });
    basis.entries.push_back(BoundaryEntry{x, before, std::move(b)});
    before.insert(x);
  }
  return BoundaryDag{Dag::from_arcs(dag.node_table(), arcs), std::move(basis)};
}

}  // namespace bnreorder
