#pragma once

#include <string>
#include <string_view>

#include "bnreorder/dag.hpp"

namespace bnreorder {

// DAG files are line oriented:
//
//   # comment
//   node <name>
//   arc <tail> <head>
//
// Arc endpoints must be declared by an earlier `node` line. Text after '#'
// is ignored on any line.

/// Errors are ParseError with a 1-based line: Syntax, BadName,
/// DuplicateNode, UnknownNode, SelfLoop, DuplicateArc, CycleDetected.
Dag parse_dag_file(std::string_view text);

/// Nodes in declaration order, then arcs by (tail index, head index).
std::string render_dag_file(const Dag& dag);

/// Either one node name per line or a single `order <n1> <n2> ...` line.
/// Errors: Syntax, UnknownNode, OrderingMismatch (as ParseError).
Ordering parse_ordering_file(std::string_view text, const Dag& dag);

/// Renders as a single `order` line.
std::string render_ordering_file(const Ordering& ordering);

}  // namespace bnreorder
