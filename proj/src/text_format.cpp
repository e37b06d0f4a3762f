#include "bnreorder/text_format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bnreorder {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits into non-empty lines of whitespace-separated tokens, dropping
// comments.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::size_t last_line_number(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += c == '\n' ? 1 : 0;
  if (!text.empty() && text.back() == '\n') --n;
  return n;
}

}  // namespace

Dag parse_dag_file(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> declared;
  std::vector<NamedArc> arcs;
  std::map<std::pair<std::string, std::string>, std::size_t> arc_lines;

  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "node") {
      if (t.size() != 2) throw ParseError(ErrorKind::Syntax, line.number, "expected 'node <name>'");
      if (!is_valid_node_name(t[1])) {
        throw ParseError(ErrorKind::BadName, line.number, "invalid node name '" + t[1] + "'");
      }
      if (!declared.emplace(t[1], line.number).second) {
        throw ParseError(ErrorKind::DuplicateNode, line.number, "duplicate node '" + t[1] + "'");
      }
      names.push_back(t[1]);
    } else if (t[0] == "arc") {
      if (t.size() != 3) throw ParseError(ErrorKind::Syntax, line.number, "expected 'arc <tail> <head>'");
      for (std::size_t i = 1; i <= 2; ++i) {
        if (!declared.contains(t[i])) {
          throw ParseError(ErrorKind::UnknownNode, line.number, "undeclared node '" + t[i] + "'");
        }
      }
      if (t[1] == t[2]) throw ParseError(ErrorKind::SelfLoop, line.number, "self-loop on '" + t[1] + "'");
      if (!arc_lines.emplace(std::pair{t[1], t[2]}, line.number).second) {
        throw ParseError(ErrorKind::DuplicateArc, line.number, "duplicate arc " + t[1] + " -> " + t[2]);
      }
      arcs.emplace_back(t[1], t[2]);
    } else {
      throw ParseError(ErrorKind::Syntax, line.number, "unknown directive '" + t[0] + "'");
    }
  }

  try {
    return Dag::create(std::move(names), arcs);
  } catch (const CycleError& e) {
    // Blame the latest line among the cycle's arcs.
    const auto& cycle = e.cycle();
    std::size_t line = 0;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      line = std::max(line, arc_lines.at({cycle[i], cycle[i + 1]}));
    }
    throw ParseError(ErrorKind::CycleDetected, line, e.what());
  }
}

std::string render_dag_file(const Dag& dag) {
  std::string out;
  for (const auto& name : dag.nodes().names()) out += "node " + name + "\n";
  for (const auto& [tail, head] : dag.named_arcs()) out += "arc " + tail + " " + head + "\n";
  return out;
}

Ordering parse_ordering_file(std::string_view text, const Dag& dag) {
  std::vector<std::pair<std::string, std::size_t>> names;
  bool saw_order_line = false;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "order") {
      if (saw_order_line || !names.empty()) {
        throw ParseError(ErrorKind::Syntax, line.number, "an 'order' line must be the only entry");
      }
      saw_order_line = true;
      for (std::size_t i = 1; i < t.size(); ++i) names.emplace_back(t[i], line.number);
    } else {
      if (saw_order_line) {
        throw ParseError(ErrorKind::Syntax, line.number, "an 'order' line must be the only entry");
      }
      if (t.size() != 1) throw ParseError(ErrorKind::Syntax, line.number, "expected one node name per line");
      names.emplace_back(t[0], line.number);
    }
  }

  std::vector<NodeId> seq;
  std::unordered_set<std::string> seen;
  for (const auto& [name, line] : names) {
    auto id = dag.nodes().find(name);
    if (!id) throw ParseError(ErrorKind::UnknownNode, line, "unknown node '" + name + "'");
    if (!seen.insert(name).second) {
      throw ParseError(ErrorKind::OrderingMismatch, line, "node '" + name + "' listed twice");
    }
    seq.push_back(*id);
  }
  if (seq.size() != dag.size()) {
    std::string missing;
    for (const auto& name : dag.nodes().names()) {
      if (!seen.contains(name)) missing += (missing.empty() ? "" : ", ") + name;
    }
    throw ParseError(ErrorKind::OrderingMismatch, last_line_number(text), "ordering omits " + missing);
  }
  return Ordering(dag.node_table(), std::move(seq));
}

std::string render_ordering_file(const Ordering& ordering) {
  std::string out = "order";
  for (const auto& name : ordering.names()) out += " " + name;
  return out + "\n";
}

}  // namespace bnreorder
