#include "bnreorder/independence.hpp"

#include <optional>
#include <vector>

namespace bnreorder {

namespace {

void require_universe(const Dag& dag, const NodeSet& s, const char* which) {
  if (s.universe() != dag.size()) {
    throw Error(ErrorKind::UnknownNode, std::string(which) + " refers to nodes outside the graph");
  }
}

}  // namespace

void validate_query(const Dag& dag, const IndependenceQuery& q) {
  require_universe(dag, q.x, "X");
  require_universe(dag, q.z, "Z");
  require_universe(dag, q.y, "Y");
  if (q.x.empty() || q.y.empty()) throw Error(ErrorKind::EmptySet, "X and Y must be non-empty");
  if (q.x.intersects(q.y) || q.x.intersects(q.z) || q.y.intersects(q.z)) {
    throw Error(ErrorKind::OverlappingSets, "X, Z and Y must be pairwise disjoint");
  }
}

bool d_separated(const Dag& dag, const IndependenceQuery& q) {
  validate_query(dag, q);

  // A collider passes the ball on iff it is in Z or has a descendant in Z,
  // i.e. iff it lies in the ancestral closure of Z.
  const NodeSet opens_collider = dag.ancestral_closure(q.z);

  enum Direction : unsigned char { kFromChild = 0, kFromParent = 1 };
  const std::size_t n = dag.size();
  std::vector<unsigned char> visited(2 * n, 0);
  std::vector<std::pair<NodeId, Direction>> stack;
  q.x.for_each([&](NodeId x) { stack.emplace_back(x, kFromChild); });

  while (!stack.empty()) {
    auto [v, dir] = stack.back();
    stack.pop_back();
    auto& mark = visited[2 * v.index() + dir];
    if (mark) continue;
    mark = 1;

    const bool in_z = q.z.contains(v);
    if (!in_z && q.y.contains(v)) return false;

    if (dir == kFromChild) {
      if (in_z) continue;
      for (NodeId p : dag.parents(v)) stack.emplace_back(p, kFromChild);
      for (NodeId c : dag.children(v)) stack.emplace_back(c, kFromParent);
    } else {
      if (!in_z) {
        for (NodeId c : dag.children(v)) stack.emplace_back(c, kFromParent);
      }
      if (opens_collider.contains(v)) {
        for (NodeId p : dag.parents(v)) stack.emplace_back(p, kFromChild);
      }
    }
  }
  return true;
}

bool d_separated(const Dag& dag, NodeId x, const NodeSet& z, const NodeSet& y) {
  if (y.empty()) return true;
  return d_separated(dag, IndependenceQuery{NodeSet(dag.size(), {x}), z, y});
}

namespace {

class TrailSearch {
 public:
  TrailSearch(const Dag& dag, const IndependenceQuery& q) : dag_(dag), q_(q), on_trail_(dag.size()) {}

  bool any_active_trail() {
    bool found = false;
    q_.x.for_each([&](NodeId x) {
      if (!found) found = extend(x, std::nullopt, false);
    });
    return found;
  }

 private:
  // Conditions on the interior node `mid` of the sub-trail prev - mid - next.
  bool interior_active(NodeId mid, bool arrow_into_mid_from_prev, bool arrow_into_mid_from_next) const {
    const bool converging = arrow_into_mid_from_prev && arrow_into_mid_from_next;
    if (converging) {
      return q_.z.contains(mid) || dag_.descendants(mid).intersects(q_.z);
    }
    return !q_.z.contains(mid);
  }

  // `cur` is the current trail end; `prev` is absent at the trail start.
  bool extend(NodeId cur, std::optional<NodeId> prev, bool arrow_into_cur) {
    if (prev && q_.y.contains(cur)) return true;
    on_trail_.insert(cur);
    bool found = false;
    auto step = [&](NodeId next, bool arrow_into_next) {
      if (found || on_trail_.contains(next)) return;
      if (prev && !interior_active(cur, arrow_into_cur, !arrow_into_next)) return;
      found = extend(next, cur, arrow_into_next);
    };
    for (NodeId c : dag_.children(cur)) step(c, true);
    for (NodeId p : dag_.parents(cur)) step(p, false);
    on_trail_.erase(cur);
    return found;
  }

  const Dag& dag_;
  const IndependenceQuery& q_;
  NodeSet on_trail_;
};

}  // namespace

bool d_separated_trails(const Dag& dag, const IndependenceQuery& q) {
  if (dag.size() > kMaxTrailOracleNodes) {
    throw Error(ErrorKind::TooLarge, "trail enumeration is limited to " +
                                         std::to_string(kMaxTrailOracleNodes) + " nodes");
  }
  validate_query(dag, q);
  return !TrailSearch(dag, q).any_active_trail();
}

}  // namespace bnreorder
