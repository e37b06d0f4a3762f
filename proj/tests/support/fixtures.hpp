#pragma once

// Shared fixtures and brute-force oracles for the test binaries. Nothing
// here calls the reachability decider or the reorder engine.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bnreorder/dag.hpp"
#include "bnreorder/independence.hpp"
#include "bnreorder/random_dag.hpp"

namespace bnreorder::testing {

using ArcNames = std::set<std::pair<std::string, std::string>>;

inline ArcNames arc_names(const Dag& dag) {
  ArcNames out;
  for (auto& a : dag.named_arcs()) out.insert(std::move(a));
  return out;
}

/// c -> b1, ..., c -> bn.
inline Dag star(std::size_t n) {
  std::vector<std::string> nodes{"c"};
  std::vector<NamedArc> arcs;
  for (std::size_t i = 1; i <= n; ++i) {
    nodes.push_back("b" + std::to_string(i));
    arcs.emplace_back("c", nodes.back());
  }
  return Dag::create(nodes, arcs);
}

/// Ordering (b1, ..., bn, c).
inline Ordering evidence_first(const Dag& star_dag) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i < star_dag.size(); ++i) names.push_back("b" + std::to_string(i));
  names.emplace_back("c");
  return Ordering::from_names(star_dag, names);
}

/// {x -> y, x -> w, z -> y}, declared z, w, y, x.
inline Dag four_node() { return Dag::create({"z", "w", "y", "x"}, {{"x", "y"}, {"x", "w"}, {"z", "y"}}); }

inline Ordering four_node_target(const Dag& d) { return Ordering::from_names(d, {"z", "w", "y", "x"}); }

/// The 5-arc minimal I-map of four_node under (z, w, y, x).
inline ArcNames four_node_minimal_imap() { return {{"z", "y"}, {"w", "y"}, {"z", "x"}, {"w", "x"}, {"y", "x"}}; }

inline NodeSet set_of(const Dag& d, std::initializer_list<const char*> names) {
  NodeSet s(d.size());
  for (const char* n : names) s.insert(d.id(n));
  return s;
}

inline IndependenceQuery query(const Dag& d, std::initializer_list<const char*> x,
                               std::initializer_list<const char*> z, std::initializer_list<const char*> y) {
  return IndependenceQuery{set_of(d, x), set_of(d, z), set_of(d, y)};
}

struct Instance {
  Dag dag;
  Ordering alpha;
  double density;
};

/// Seeded (dag, ordering) pair with |V| in [min_n, max_n] and density drawn
/// from {0.2, 0.5, 0.8}.
inline Instance random_instance(std::uint64_t seed, std::size_t min_n, std::size_t max_n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  const std::size_t n = min_n + rng() % (max_n - min_n + 1);
  constexpr double densities[] = {0.2, 0.5, 0.8};
  const double density = densities[rng() % 3];
  Dag dag = random_dag(n, density, rng());
  Ordering alpha = random_ordering(dag, rng());
  return Instance{std::move(dag), std::move(alpha), density};
}

/// Directed path search by plain BFS over the arc list.
inline bool brute_force_path(const Dag& dag, NodeId from, NodeId to, std::optional<Arc> skip = std::nullopt) {
  const auto arcs = dag.arcs();
  std::vector<bool> seen(dag.size(), false);
  std::vector<NodeId> frontier{from};
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    for (NodeId v : frontier) {
      for (const Arc& a : arcs) {
        if (a.tail != v || (skip && a == *skip)) continue;
        if (a.head == to) return true;
        if (!seen[a.head.index()]) {
          seen[a.head.index()] = true;
          next.push_back(a.head);
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

/// Every subset of `items` as a NodeSet.
inline std::vector<NodeSet> all_subsets(const std::vector<NodeId>& items, std::size_t universe) {
  std::vector<NodeSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    NodeSet s(universe);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) s.insert(items[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// True iff every (singleton x, singleton y, any Z) statement d-separated in
/// `shown` is also d-separated in `source`, decided by trail enumeration.
/// Both DAGs must share a node table.
inline bool triples_contained(const Dag& shown, const Dag& source) {
  const std::size_t n = shown.size();
  for (std::size_t xi = 0; xi < n; ++xi) {
    for (std::size_t yi = xi + 1; yi < n; ++yi) {
      std::vector<NodeId> rest;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != xi && k != yi) rest.push_back(NodeId(k));
      }
      for (const NodeSet& z : all_subsets(rest, n)) {
        const IndependenceQuery q{NodeSet(n, {NodeId(xi)}), z, NodeSet(n, {NodeId(yi)})};
        if (d_separated_trails(shown, q) && !d_separated_trails(source, q)) return false;
      }
    }
  }
  return true;
}

}  // namespace bnreorder::testing
