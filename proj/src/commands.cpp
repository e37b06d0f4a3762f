#include "bnreorder/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bnreorder/boundary.hpp"
#include "bnreorder/entailment.hpp"
#include "bnreorder/fusion.hpp"
#include "bnreorder/independence.hpp"
#include "bnreorder/random_dag.hpp"
#include "bnreorder/reorder.hpp"
#include "bnreorder/text_format.hpp"

namespace bnreorder {

namespace {

// Failure tied to a file or argument; reported on stderr with exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw InputError(path + ": cannot write file");
}

Dag load_dag(const std::string& path) {
  try {
    return parse_dag_file(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Ordering load_ordering(const std::string& path, const Dag& dag) {
  try {
    return parse_ordering_file(read_file(path), dag);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

NodeSet parse_name_list(const Dag& dag, const std::string& list, const char* flag) {
  NodeSet out(dag.size());
  std::size_t start = 0;
  while (start <= list.size() && !list.empty()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    const std::string name = list.substr(start, comma - start);
    if (!name.empty()) {
      auto id = dag.nodes().find(name);
      if (!id) throw InputError(std::string(flag) + ": unknown node '" + name + "'");
      out.insert(*id);
    }
    start = comma + 1;
  }
  return out;
}

std::string join_names(const Dag& dag, const std::vector<NodeId>& ids, const char* sep) {
  if (ids.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i != 0) out += sep;
    out += dag.name(ids[i]);
  }
  return out;
}

// Members of `set` listed in `alpha` order.
std::vector<NodeId> in_order(const NodeSet& set, const Ordering& alpha) {
  std::vector<NodeId> out;
  for (NodeId id : alpha.sequence()) {
    if (set.contains(id)) out.push_back(id);
  }
  return out;
}

std::string trace_line(const Dag& dag, const StepView& step) {
  std::string line = "swap " + dag.name(step.interchange.left) + " " + dag.name(step.interchange.right);
  if (step.reversal != nullptr) {
    line += " reverse " + dag.name(step.reversal->tail) + "->" + dag.name(step.reversal->head) + " adds:";
    if (step.reversal->arcs_added.empty()) line += " none";
    for (const Arc& a : step.reversal->arcs_added) line += " " + dag.name(a.tail) + "->" + dag.name(a.head);
  }
  return line;
}

struct Output {
  std::string path;

  // The DAG goes to --out when given, else to stdout. Summaries go wherever
  // the DAG does not, so stdout stays a clean file when piped.
  std::ostream& summary(std::ostream& out, std::ostream& err) const { return path.empty() ? err : out; }

  void emit(const std::string& text, std::ostream& out) const {
    if (path.empty()) {
      out << text;
    } else {
      write_file(path, text);
    }
  }
};

struct ReorderArgs {
  std::string dag_path;
  std::string order_path;
  std::string method = "a";
  bool trace = false;
  Output output;
};

int cmd_reorder(const ReorderArgs& args, std::ostream& out, std::ostream& err) {
  const Dag dag = load_dag(args.dag_path);
  const Ordering alpha = load_ordering(args.order_path, dag);
  std::ostream& log = args.output.summary(out, err);

  if (args.method == "oracle") {
    const Dag result = boundary_dag(dag, alpha).dag;
    args.output.emit(render_dag_file(result), out);
    log << "arcs_in=" << dag.arc_count() << " arcs_out=" << result.arc_count() << "\n";
    return kExitOk;
  }

  ReorderOptions options;
  options.keep_trace = false;
  if (args.trace) {
    options.on_step = [&](const StepView& step) { log << trace_line(dag, step) << "\n"; };
  }

  std::optional<ReorderReport> report;
  if (args.method == "a") {
    report = reorder_method_a(dag, alpha, MethodAVariant::kFull, options);
  } else if (args.method == "a-simple") {
    report = reorder_method_a(dag, alpha, MethodAVariant::kSimplified, options);
  } else if (args.method == "b") {
    report = reorder_method_b(dag, alpha, options);
  } else {
    report = chain_fusion_report(dag, alpha, options);
  }

  args.output.emit(render_dag_file(report->result), out);
  log << "interchanges=" << report->interchange_count << " reversals=" << report->reversal_count
      << " arcs_added=" << report->arcs_added_total << "\n";
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reorders belief-network DAGs into minimal I-maps of a target ordering", "bnreorder"};
  app.require_subcommand(1);

  std::string dag_path;
  auto* validate = app.add_subcommand("validate", "Check a DAG file");
  validate->add_option("dag", dag_path, "DAG file")->required();

  auto* stats = app.add_subcommand("stats", "Print node and arc counts and the maximum in-degree");
  stats->add_option("dag", dag_path, "DAG file")->required();

  auto* topo = app.add_subcommand("topo", "Print the deterministic topological order as an ordering file");
  topo->add_option("dag", dag_path, "DAG file")->required();

  ReorderArgs reorder_args;
  auto* reorder = app.add_subcommand("reorder", "Transform a DAG into its minimal I-map for an ordering");
  reorder->add_option("dag", reorder_args.dag_path, "DAG file")->required();
  reorder->add_option("ordering", reorder_args.order_path, "Ordering file")->required();
  reorder->add_option("--method", reorder_args.method, "a | a-simple | b | oracle | chain")
      ->check(CLI::IsMember({"a", "a-simple", "b", "oracle", "chain"}));
  reorder->add_flag("--trace", reorder_args.trace, "Print one line per interchange");
  reorder->add_option("--out", reorder_args.output.path, "Write the DAG here instead of stdout");

  std::string order_path;
  Output boundary_out;
  auto* boundary = app.add_subcommand("boundary", "Print the recursive basis as 'x | U(x) | B(x)'");
  boundary->add_option("dag", dag_path, "DAG file")->required();
  boundary->add_option("ordering", order_path, "Ordering file")->required();
  boundary->add_option("--out", boundary_out.path, "Also write the boundary DAG here");

  std::string x_list, z_list, y_list;
  bool use_trails = false;
  auto* dsep = app.add_subcommand("dsep", "Decide a d-separation query");
  dsep->add_option("dag", dag_path, "DAG file")->required();
  dsep->add_option("--x", x_list, "Comma-separated X")->required();
  dsep->add_option("--z", z_list, "Comma-separated Z (may be empty)");
  dsep->add_option("--y", y_list, "Comma-separated Y")->required();
  dsep->add_flag("--trails", use_trails, "Use the trail-enumeration decider (small graphs only)");

  std::string dag2_path;
  auto* entails_cmd = app.add_subcommand("entails", "Exit 0 if DAG1 entails DAG2, 3 otherwise");
  entails_cmd->add_option("dag1", dag_path, "DAG file")->required();
  entails_cmd->add_option("dag2", dag2_path, "DAG file")->required();

  std::vector<std::string> fuse_paths;
  Output fuse_out;
  auto* fuse_cmd = app.add_subcommand("fuse", "Reorder several DAGs to one ordering and union them");
  fuse_cmd->add_option("dags", fuse_paths, "DAG files")->required();
  fuse_cmd->add_option("--order", order_path, "Ordering file (default: topological order of the first DAG)");
  fuse_cmd->add_option("--out", fuse_out.path, "Write the DAG here instead of stdout");

  std::size_t nodes = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  Output random_out;
  auto* random = app.add_subcommand("random", "Generate a reproducible random DAG");
  random->add_option("--nodes", nodes, "Node count")->required()->check(CLI::PositiveNumber);
  random->add_option("--density", density, "Arc probability in [0, 1]")->required();
  random->add_option("--seed", seed, "Generator seed")->required();
  random->add_option("--out", random_out.path, "Write the DAG here instead of stdout");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("bnreorder");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const Dag dag = load_dag(dag_path);
      out << "valid nodes=" << dag.size() << " arcs=" << dag.arc_count() << "\n";
      return kExitOk;
    }
    if (stats->parsed()) {
      const Dag dag = load_dag(dag_path);
      out << "nodes=" << dag.size() << " arcs=" << dag.arc_count() << " max_in_degree=" << dag.max_in_degree()
          << "\n";
      return kExitOk;
    }
    if (topo->parsed()) {
      out << render_ordering_file(topological_sort(load_dag(dag_path)));
      return kExitOk;
    }
    if (reorder->parsed()) return cmd_reorder(reorder_args, out, err);
    if (boundary->parsed()) {
      const Dag dag = load_dag(dag_path);
      const Ordering alpha = load_ordering(order_path, dag);
      const BoundaryDag result = boundary_dag(dag, alpha);
      for (const BoundaryEntry& e : result.basis.entries) {
        out << dag.name(e.node) << " | " << join_names(dag, in_order(e.predecessors, alpha), ",") << " | "
            << join_names(dag, in_order(e.boundary, alpha), ",") << "\n";
      }
      if (!boundary_out.path.empty()) write_file(boundary_out.path, render_dag_file(result.dag));
      return kExitOk;
    }
    if (dsep->parsed()) {
      const Dag dag = load_dag(dag_path);
      const IndependenceQuery q{parse_name_list(dag, x_list, "--x"), parse_name_list(dag, z_list, "--z"),
                                parse_name_list(dag, y_list, "--y")};
      const bool separated = use_trails ? d_separated_trails(dag, q) : d_separated(dag, q);
      out << (separated ? "d-separated" : "d-connected") << "\n";
      return kExitOk;
    }
    if (entails_cmd->parsed()) {
      const bool yes = entails(load_dag(dag_path), load_dag(dag2_path));
      out << (yes ? "entails" : "does not entail") << "\n";
      return yes ? kExitOk : kExitNegative;
    }
    if (fuse_cmd->parsed()) {
      std::vector<Dag> dags;
      for (const auto& p : fuse_paths) dags.push_back(load_dag(p));
      const Ordering alpha = order_path.empty() ? topological_sort(dags.front())
                                                : load_ordering(order_path, dags.front());
      const Fusion fusion = fuse_with_reports(dags, alpha);
      std::size_t reversals = 0, added = 0;
      for (const auto& r : fusion.summands) {
        reversals += r.reversal_count;
        added += r.arcs_added_total;
      }
      fuse_out.emit(render_dag_file(fusion.dag), out);
      fuse_out.summary(out, err) << "inputs=" << dags.size() << " arcs=" << fusion.dag.arc_count()
                                 << " reversals=" << reversals << " arcs_added=" << added << "\n";
      return kExitOk;
    }
    if (random->parsed()) {
      random_out.emit(render_dag_file(random_dag(nodes, density, seed)), out);
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace bnreorder
