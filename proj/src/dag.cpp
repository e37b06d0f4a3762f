#include "bnreorder/dag.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "detail/dag_editor.hpp"

namespace bnreorder {

namespace {

bool insert_sorted(std::vector<NodeId>& v, NodeId id) {
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it != v.end() && *it == id) return false;
  v.insert(it, id);
  return true;
}

bool erase_sorted(std::vector<NodeId>& v, NodeId id) {
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) return false;
  v.erase(it);
  return true;
}

bool contains_sorted(const std::vector<NodeId>& v, NodeId id) {
  return std::binary_search(v.begin(), v.end(), id);
}

// Walks parent links among nodes Kahn's algorithm could not remove. Every
// such node has a remaining parent, so the walk must revisit a node.
std::vector<std::string> find_cycle(const Dag& dag, const std::vector<std::size_t>& indegree) {
  std::size_t start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<std::size_t> seen_at(dag.size(), static_cast<std::size_t>(-1));
  std::vector<NodeId> walk;
  NodeId cur(start);
  while (seen_at[cur.index()] == static_cast<std::size_t>(-1)) {
    seen_at[cur.index()] = walk.size();
    walk.push_back(cur);
    for (NodeId p : dag.parents(cur)) {
      if (indegree[p.index()] != 0) {
        cur = p;
        break;
      }
    }
  }
  // walk[seen_at[cur]..] follows arcs backwards; reverse for forward order.
  std::vector<std::string> cycle;
  for (std::size_t i = walk.size(); i-- > seen_at[cur.index()];) cycle.push_back(dag.name(walk[i]));
  cycle.push_back(cycle.front());
  return cycle;
}

}  // namespace

bool is_valid_node_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '#' || std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

NodeTable::NodeTable(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_node_name(names_[i])) {
      throw Error(ErrorKind::BadName, "invalid node name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], NodeId(i)).second) {
      throw Error(ErrorKind::DuplicateNode, "duplicate node '" + names_[i] + "'");
    }
  }
}

const std::string& NodeTable::name(NodeId id) const {
  if (id.index() >= names_.size()) {
    throw Error(ErrorKind::UnknownNode, "node index " + std::to_string(id.index()) + " out of range");
  }
  return names_[id.index()];
}

std::optional<NodeId> NodeTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId NodeTable::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw Error(ErrorKind::UnknownNode, "unknown node '" + std::string(name) + "'");
}

bool NodeTable::same_name_set(const NodeTable& other) const {
  if (size() != other.size()) return false;
  return std::all_of(names_.begin(), names_.end(),
                     [&](const std::string& n) { return other.find(n).has_value(); });
}

Dag::Dag(std::shared_ptr<const NodeTable> nodes)
    : nodes_(std::move(nodes)), parents_(nodes_->size()), children_(nodes_->size()) {}

Dag Dag::create(std::vector<std::string> nodes, const std::vector<NamedArc>& arcs) {
  auto table = std::make_shared<const NodeTable>(std::move(nodes));
  std::vector<Arc> ids;
  ids.reserve(arcs.size());
  for (const auto& [tail, head] : arcs) ids.push_back(Arc{table->id(tail), table->id(head)});
  return from_arcs(std::move(table), ids);
}

Dag Dag::from_arcs(std::shared_ptr<const NodeTable> nodes, const std::vector<Arc>& arcs) {
  Dag dag(std::move(nodes));
  for (const Arc& a : arcs) {
    dag.check_node(a.tail);
    dag.check_node(a.head);
    if (a.tail == a.head) {
      throw Error(ErrorKind::SelfLoop, "self-loop on '" + dag.name(a.tail) + "'");
    }
    if (!insert_sorted(dag.parents_[a.head.index()], a.tail)) {
      throw Error(ErrorKind::DuplicateArc,
                  "duplicate arc " + dag.name(a.tail) + " -> " + dag.name(a.head));
    }
    insert_sorted(dag.children_[a.tail.index()], a.head);
    ++dag.arc_count_;
  }

  std::vector<std::size_t> indegree(dag.size());
  std::vector<NodeId> ready;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    indegree[i] = dag.parents_[i].size();
    if (indegree[i] == 0) ready.push_back(NodeId(i));
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    NodeId v = ready.back();
    ready.pop_back();
    ++removed;
    for (NodeId c : dag.children_[v.index()]) {
      if (--indegree[c.index()] == 0) ready.push_back(c);
    }
  }
  if (removed != dag.size()) throw CycleError(find_cycle(dag, indegree));
  return dag;
}

void Dag::check_node(NodeId id) const {
  if (id.index() >= size()) {
    throw Error(ErrorKind::UnknownNode, "node index " + std::to_string(id.index()) + " out of range");
  }
}

std::span<const NodeId> Dag::parents(NodeId id) const {
  check_node(id);
  return parents_[id.index()];
}

std::span<const NodeId> Dag::children(NodeId id) const {
  check_node(id);
  return children_[id.index()];
}

bool Dag::has_arc(NodeId tail, NodeId head) const {
  check_node(tail);
  check_node(head);
  return contains_sorted(children_[tail.index()], head);
}

std::vector<Arc> Dag::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (std::size_t t = 0; t < size(); ++t) {
    for (NodeId h : children_[t]) out.push_back(Arc{NodeId(t), h});
  }
  return out;
}

std::vector<NamedArc> Dag::named_arcs() const {
  std::vector<NamedArc> out;
  out.reserve(arc_count_);
  for (const Arc& a : arcs()) out.emplace_back(name(a.tail), name(a.head));
  return out;
}

NodeSet Dag::descendants(NodeId id) const {
  check_node(id);
  NodeSet seen(size());
  std::vector<NodeId> stack(children_[id.index()].begin(), children_[id.index()].end());
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (seen.contains(v)) continue;
    seen.insert(v);
    for (NodeId c : children_[v.index()]) {
      if (!seen.contains(c)) stack.push_back(c);
    }
  }
  return seen;
}

NodeSet Dag::ancestral_closure(const NodeSet& seeds) const {
  NodeSet seen(size());
  std::vector<NodeId> stack = seeds.members();
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (seen.contains(v)) continue;
    seen.insert(v);
    for (NodeId p : parents_[v.index()]) {
      if (!seen.contains(p)) stack.push_back(p);
    }
  }
  return seen;
}

bool Dag::has_path(NodeId from, NodeId to) const {
  check_node(to);
  return descendants(from).contains(to);
}

bool Dag::has_alternate_path(NodeId tail, NodeId head) const {
  check_node(tail);
  check_node(head);
  NodeSet seen(size());
  std::vector<NodeId> stack;
  for (NodeId c : children_[tail.index()]) {
    if (c != head) stack.push_back(c);
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (v == head) return true;
    if (seen.contains(v)) continue;
    seen.insert(v);
    for (NodeId c : children_[v.index()]) stack.push_back(c);
  }
  return false;
}

std::size_t Dag::max_in_degree() const {
  std::size_t best = 0;
  for (const auto& p : parents_) best = std::max(best, p.size());
  return best;
}

Dag Dag::without_arc(Arc arc) const {
  if (!has_arc(arc.tail, arc.head)) {
    throw Error(ErrorKind::ArcAbsent, "no arc " + name(arc.tail) + " -> " + name(arc.head));
  }
  Dag out = *this;
  erase_sorted(out.parents_[arc.head.index()], arc.tail);
  erase_sorted(out.children_[arc.tail.index()], arc.head);
  --out.arc_count_;
  return out;
}

Dag Dag::rebased_on(std::shared_ptr<const NodeTable> table) const {
  if (*table == *nodes_) {
    Dag out = *this;
    out.nodes_ = std::move(table);
    return out;
  }
  if (!nodes_->same_name_set(*table)) {
    throw Error(ErrorKind::NodeSetMismatch, "DAGs are defined over different node sets");
  }
  std::vector<Arc> mapped;
  mapped.reserve(arc_count_);
  for (const Arc& a : arcs()) mapped.push_back(Arc{table->id(name(a.tail)), table->id(name(a.head))});
  return from_arcs(std::move(table), mapped);
}

bool operator==(const Dag& a, const Dag& b) {
  return *a.nodes_ == *b.nodes_ && a.parents_ == b.parents_;
}

Ordering::Ordering(std::shared_ptr<const NodeTable> nodes, std::vector<NodeId> sequence)
    : nodes_(std::move(nodes)), sequence_(std::move(sequence)) {
  const std::size_t n = nodes_->size();
  if (sequence_.size() != n) {
    throw Error(ErrorKind::OrderingMismatch, "ordering lists " + std::to_string(sequence_.size()) +
                                                 " nodes, graph has " + std::to_string(n));
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  position_.assign(n, unset);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t idx = sequence_[i].index();
    if (idx >= n) throw Error(ErrorKind::OrderingMismatch, "ordering names an unknown node");
    if (position_[idx] != unset) {
      throw Error(ErrorKind::OrderingMismatch, "ordering repeats '" + nodes_->name(sequence_[i]) + "'");
    }
    position_[idx] = i;
  }
}

Ordering Ordering::from_names(const Dag& dag, const std::vector<std::string>& names) {
  std::vector<NodeId> seq;
  seq.reserve(names.size());
  for (const auto& n : names) {
    auto id = dag.nodes().find(n);
    if (!id) throw Error(ErrorKind::OrderingMismatch, "ordering names unknown node '" + n + "'");
    seq.push_back(*id);
  }
  return Ordering(dag.node_table(), std::move(seq));
}

NodeSet Ordering::predecessors(NodeId id) const {
  NodeSet out(size());
  for (std::size_t i = 0; i < position(id); ++i) out.insert(sequence_[i]);
  return out;
}

std::vector<std::string> Ordering::names() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (NodeId id : sequence_) out.push_back(nodes_->name(id));
  return out;
}

void Ordering::require_matches(const Dag& dag) const {
  if (nodes_ != dag.node_table() && !(*nodes_ == dag.nodes())) {
    throw Error(ErrorKind::OrderingMismatch, "ordering does not range over the graph's nodes");
  }
}

bool Ordering::is_consistent_with(const Dag& dag) const {
  require_matches(dag);
  for (const Arc& a : dag.arcs()) {
    if (!precedes(a.tail, a.head)) return false;
  }
  return true;
}

Ordering Ordering::reversed() const {
  return Ordering(nodes_, std::vector<NodeId>(sequence_.rbegin(), sequence_.rend()));
}

Ordering topological_sort(const Dag& dag) {
  std::vector<std::size_t> indegree(dag.size());
  std::set<NodeId> ready;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    indegree[i] = dag.parents(NodeId(i)).size();
    if (indegree[i] == 0) ready.insert(NodeId(i));
  }
  std::vector<NodeId> order;
  order.reserve(dag.size());
  while (!ready.empty()) {
    NodeId v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (NodeId c : dag.children(v)) {
      if (--indegree[c.index()] == 0) ready.insert(c);
    }
  }
  return Ordering(dag.node_table(), std::move(order));
}

namespace detail {

ReversalRecord DagEditor::reverse_unchecked(Dag& dag, NodeId tail, NodeId head) {
  ReversalRecord record{tail, head, {}, dag.parents_[tail.index()], dag.parents_[head.index()]};

  erase_sorted(dag.parents_[head.index()], tail);
  erase_sorted(dag.children_[tail.index()], head);
  insert_sorted(dag.parents_[tail.index()], head);
  insert_sorted(dag.children_[head.index()], tail);

  auto add = [&](NodeId p, NodeId v) {
    if (insert_sorted(dag.parents_[v.index()], p)) {
      insert_sorted(dag.children_[p.index()], v);
      ++dag.arc_count_;
      record.arcs_added.push_back(Arc{p, v});
    }
  };
  for (NodeId p : record.tail_parents_before) add(p, head);
  for (NodeId p : record.head_parents_before) {
    if (p != tail) add(p, tail);
  }
  return record;
}

}  // namespace detail

Reversal reverse_arc(const Dag& dag, NodeId tail, NodeId head) {
  if (!dag.has_arc(tail, head)) {
    throw Error(ErrorKind::ArcAbsent, "no arc " + dag.name(tail) + " -> " + dag.name(head));
  }
  if (dag.has_alternate_path(tail, head)) {
    throw Error(ErrorKind::AlternatePathExists, "reversing " + dag.name(tail) + " -> " +
                                                    dag.name(head) + " would create a cycle");
  }
  Dag out = dag;
  ReversalRecord record = detail::DagEditor::reverse_unchecked(out, tail, head);
  return Reversal{std::move(out), std::move(record)};
}

Dag graph_union(std::span<const Dag> dags) {
  if (dags.empty()) throw Error(ErrorKind::EmptySet, "graph union needs at least one DAG");
  const auto& table = dags.front().node_table();
  std::set<Arc> arcs;
  for (const Dag& d : dags) {
    for (const Arc& a : d.rebased_on(table).arcs()) arcs.insert(a);
  }
  return Dag::from_arcs(table, std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace bnreorder
