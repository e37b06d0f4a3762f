#pragma once

#include <cstddef>

#include "bnreorder/dag.hpp"

namespace bnreorder {

/// The statement I(X, Z, Y): X is independent of Y given Z.
struct IndependenceQuery {
  NodeSet x;
  NodeSet z;
  NodeSet y;
};

/// Throws UnknownNode, OverlappingSets or EmptySet for malformed queries.
void validate_query(const Dag& dag, const IndependenceQuery& q);

/// d-separation by reachability over (node, direction-of-entry) states.
/// Linear in |V| + |E| per query.
bool d_separated(const Dag& dag, const IndependenceQuery& q);

/// Convenience form for a singleton X. An empty `y` is trivially separated.
bool d_separated(const Dag& dag, NodeId x, const NodeSet& z, const NodeSet& y);

inline constexpr std::size_t kMaxTrailOracleNodes = 12;

/// Enumerates every simple trail between X and Y in the skeleton and checks
/// that each one is blocked by Z. Exponential; refuses graphs larger than
/// kMaxTrailOracleNodes with TooLarge.
bool d_separated_trails(const Dag& dag, const IndependenceQuery& q);

}  // namespace bnreorder
