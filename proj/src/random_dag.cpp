#include "bnreorder/random_dag.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace bnreorder {

namespace {

std::vector<NodeId> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = NodeId(i);
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng() % (i + 1)]);
  return perm;
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Dag random_dag(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::EmptySet, "a random DAG needs at least one node");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::BadDensity, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "v" + std::to_string(i);
  auto table = std::make_shared<const NodeTable>(std::move(names));

  const std::vector<NodeId> perm = shuffled(n, rng);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit_draw(rng) < density) arcs.push_back(Arc{perm[i], perm[j]});
    }
  }
  return Dag::from_arcs(std::move(table), arcs);
}

Ordering random_ordering(const Dag& dag, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Ordering(dag.node_table(), shuffled(dag.size(), rng));
}

}  // namespace bnreorder
