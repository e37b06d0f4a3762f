#include "bnreorder/reorder.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "detail/dag_editor.hpp"

namespace bnreorder {

WorkSequence::WorkSequence(std::shared_ptr<const NodeTable> nodes, std::vector<NodeId> items)
    : nodes_(std::move(nodes)), items_(std::move(items)) {
  // Reuses Ordering's permutation check.
  Ordering check(nodes_, items_);
}

WorkSequence::WorkSequence(const Ordering& ordering)
    : nodes_(ordering.node_table()), items_(ordering.sequence()) {}

std::vector<std::string> WorkSequence::names() const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (NodeId id : items_) out.push_back(nodes_->name(id));
  return out;
}

void WorkSequence::interchange(std::size_t i) {
  if (i + 1 >= items_.size()) throw std::out_of_range("interchange position out of range");
  std::swap(items_[i], items_[i + 1]);
}

bool WorkSequence::all_arcs_rightward(const Dag& dag) const {
  std::vector<std::size_t> pos(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) pos[items_[i].index()] = i;
  for (const Arc& a : dag.arcs()) {
    if (pos[a.tail.index()] >= pos[a.head.index()]) return false;
  }
  return true;
}

WorkSequence build_s_beta(const Dag& dag, const Ordering& alpha, BarrenTieBreak tie_break) {
  alpha.require_matches(dag);
  const std::size_t n = dag.size();

  // Children still present in the shrinking copy D'.
  std::vector<std::size_t> live_children(n);
  std::vector<bool> eliminated(n, false);
  for (std::size_t i = 0; i < n; ++i) live_children[i] = dag.children(NodeId(i)).size();

  std::vector<NodeId> s_beta;
  s_beta.reserve(n);
  for (std::size_t round = 0; round < n; ++round) {
    std::optional<NodeId> pick;
    for (std::size_t i = 0; i < n; ++i) {
      const NodeId v(i);
      if (eliminated[i] || live_children[i] != 0) continue;
      if (!pick) {
        pick = v;
      } else if (tie_break == BarrenTieBreak::kLatestInTarget && alpha.position(v) > alpha.position(*pick)) {
        pick = v;
      }
    }
    const NodeId y = *pick;  // a DAG always has a barren node

    // Percolate left-to-right; children are checked in the original dag.
    auto stop = std::find_if(s_beta.begin(), s_beta.end(), [&](NodeId z) {
      return dag.has_arc(y, z) || alpha.position(z) > alpha.position(y);
    });
    s_beta.insert(stop, y);

    eliminated[y.index()] = true;
    for (NodeId p : dag.parents(y)) --live_children[p.index()];
  }
  return WorkSequence(dag.node_table(), std::move(s_beta));
}

namespace {

class InterchangeRun {
 public:
  InterchangeRun(const Dag& dag, const Ordering& alpha, WorkSequence start, const ReorderOptions& options)
      : alpha_(alpha), options_(options), initial_(start), sequence_(std::move(start)), dag_(dag) {}

  std::size_t size() const { return sequence_.size(); }

  // True when the element at i + 1 precedes the element at i in the target.
  bool out_of_order(std::size_t i) const { return alpha_.precedes(sequence_[i + 1], sequence_[i]); }

  std::optional<std::size_t> leftmost_out_of_order(std::size_t from = 0) const {
    for (std::size_t i = from; i + 1 < size(); ++i) {
      if (out_of_order(i)) return i;
    }
    return std::nullopt;
  }

  void interchange(std::size_t i) {
    const Interchange step{sequence_[i], sequence_[i + 1], i};
    sequence_.interchange(i);
    ++interchange_count_;

    std::optional<ReversalRecord> reversal;
    if (dag_.has_arc(step.left, step.right)) {
      reversal = detail::DagEditor::reverse_unchecked(dag_, step.left, step.right);
      ++reversal_count_;
      arcs_added_ += reversal->arcs_added.size();
    }

    if (options_.check_invariants && !sequence_.all_arcs_rightward(dag_)) {
      throw std::logic_error("arc points leftward after interchanging " + dag_.name(step.left) + " and " +
                             dag_.name(step.right));
    }
    if (options_.on_step) options_.on_step(StepView{step, reversal ? &*reversal : nullptr, sequence_, dag_});
    if (options_.keep_trace) {
      interchanges_.push_back(step);
      if (reversal) reversals_.push_back(std::move(*reversal));
    }
  }

  ReorderReport finish() && {
    if (!sequence_.matches(alpha_)) throw std::logic_error("interchange loop ended before reaching the target");
    return ReorderReport{std::move(initial_), std::move(interchanges_), std::move(reversals_),
                         interchange_count_, reversal_count_, arcs_added_, std::move(dag_)};
  }

 private:
  const Ordering& alpha_;
  const ReorderOptions& options_;
  WorkSequence initial_;
  WorkSequence sequence_;
  Dag dag_;
  std::vector<Interchange> interchanges_;
  std::vector<ReversalRecord> reversals_;
  std::size_t interchange_count_ = 0;
  std::size_t reversal_count_ = 0;
  std::size_t arcs_added_ = 0;
};

void run_simplified(InterchangeRun& run) {
  std::size_t from = 0;
  while (auto i = run.leftmost_out_of_order(from)) {
    run.interchange(*i);
    // Pairs left of i - 1 were already in order and are untouched.
    from = *i == 0 ? 0 : *i - 1;
  }
}

void run_full(InterchangeRun& run) {
  std::size_t from = 0;
  while (auto i = run.leftmost_out_of_order(from)) {
    std::size_t j = *i;
    while (true) {
      run.interchange(j);
      if (j == 0 || !run.out_of_order(j - 1)) break;
      --j;
    }
    // Everything up to the percolated element's old slot is now in order.
    from = *i;
  }
}

void run_bubble(InterchangeRun& run) {
  std::size_t from = 0;
  while (auto i = run.leftmost_out_of_order(from)) {
    std::size_t j = *i;
    do {
      run.interchange(j);
      ++j;
    } while (j + 1 < run.size() && run.out_of_order(j));
    from = *i == 0 ? 0 : *i - 1;
  }
}

}  // namespace

ReorderReport reorder_method_a(const Dag& dag, const Ordering& alpha, MethodAVariant variant,
                               const ReorderOptions& options) {
  InterchangeRun run(dag, alpha, build_s_beta(dag, alpha, options.tie_break), options);
  if (variant == MethodAVariant::kFull) {
    run_full(run);
  } else {
    run_simplified(run);
  }
  return std::move(run).finish();
}

ReorderReport reorder_method_b(const Dag& dag, const Ordering& alpha, const ReorderOptions& options) {
  InterchangeRun run(dag, alpha, build_s_beta(dag, alpha, options.tie_break), options);
  run_bubble(run);
  return std::move(run).finish();
}

ReorderReport reorder_from_sequence(const Dag& dag, const Ordering& alpha, WorkSequence start,
                                    const ReorderOptions& options) {
  alpha.require_matches(dag);
  if (!(start.nodes() == dag.nodes())) {
    throw Error(ErrorKind::OrderingMismatch, "start sequence does not range over the graph's nodes");
  }
  if (!start.all_arcs_rightward(dag)) {
    throw Error(ErrorKind::OrderingInconsistent, "start sequence is not consistent with the graph's arcs");
  }
  InterchangeRun run(dag, alpha, std::move(start), options);
  run_simplified(run);
  return std::move(run).finish();
}

}  // namespace bnreorder
