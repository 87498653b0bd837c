// aec: command-line front end for the acyclic edge coloring toolkit.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "aec/coloring.hpp"
#include "aec/density.hpp"
#include "aec/graph.hpp"
#include "aec/heuristic.hpp"
#include "aec/hunt.hpp"
#include "aec/io.hpp"
#include "aec/lemmas.hpp"
#include "aec/records.hpp"
#include "aec/solver.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kNegative = 1,
  kUnknown = 2,
  kUsage = 64,
  kDataError = 65,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "auto";
  bool records = false;

  std::string graph_path;
  std::string coloring_path;
  int kappa = 0;
  std::string mode = "exact";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  bool fallback = false;
  bool assume_minimal = false;
  int edge_limit = 12;
  int max_n = 0;
  std::string rule = "delta+2";
  std::string graph_class = "all";
  int jobs = 1;
  bool allow_large = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

aec::Graph load_graph(const Options& o) {
  aec::GraphFormat format = aec::GraphFormat::edge_list;
  if (o.format == "graph6") {
    format = aec::GraphFormat::graph6;
  } else if (o.format == "auto" && o.graph_path != "-") {
    format = aec::format_for_path(o.graph_path);
  }
  return aec::parse_graph(read_input(o.graph_path), format);
}

std::string describe_cycle(const aec::Graph& g, const aec::EdgeColoring& c, const std::vector<aec::EdgeId>& cycle) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& e = g.edge(cycle[i]);
    if (i > 0) out << ", ";
    out << e.u << "-" << e.v << ":" << c.color(cycle[i]);
  }
  return out.str();
}

int cmd_color(const Options& o) {
  const aec::Graph g = load_graph(o);
  aec::SolveResult result;
  if (o.mode == "exact") {
    aec::SolverConfig cfg;
    cfg.kappa = o.kappa;
    cfg.node_budget = o.budget.value_or(0);
    result = aec::decide_colorable(g, cfg);
  } else {
    if (o.records && !o.seed) throw UsageError("--mode heuristic needs --seed in record mode");
    aec::HeuristicConfig cfg;
    cfg.kappa = o.kappa;
    cfg.seed = o.seed.value_or(0);
    cfg.fallback = o.fallback ? aec::Fallback::exact : aec::Fallback::none;
    cfg.fallback_budget = o.budget.value_or(0);
    result = aec::color_with_restarts(g, cfg).result;
  }

  if (o.records) {
    std::cout << "{\"kappa\":" << o.kappa << ",\"mode\":\"" << o.mode << "\",\"status\":\""
              << aec::to_string(result.status) << "\",\"nodes\":" << result.nodes << ",\"colors\":";
    if (result.coloring) {
      std::cout << "[";
      const auto& colors = result.coloring->colors();
      for (std::size_t i = 0; i < colors.size(); ++i) std::cout << (i ? "," : "") << colors[i];
      std::cout << "]";
    } else {
      std::cout << "null";
    }
    std::cout << "}\n";
  } else if (result.coloring) {
    std::cout << aec::write_coloring(g, *result.coloring);
  } else {
    std::cerr << (result.status == aec::SolveStatus::not_colorable ? "not colorable with " : "undecided at ")
              << o.kappa << " colors\n";
  }
  switch (result.status) {
    case aec::SolveStatus::colorable: return kOk;
    case aec::SolveStatus::not_colorable: return kNegative;
    case aec::SolveStatus::budget_exhausted: return kUnknown;
  }
  return kUnknown;
}

int cmd_verify(const Options& o) {
  const aec::Graph g = load_graph(o);
  const aec::EdgeColoring c = aec::parse_coloring(g, read_input(o.coloring_path));
  if (!c.is_total()) {
    std::cout << "invalid: " << g.num_edges() - c.colored_count() << " edges uncolored\n";
    return kNegative;
  }
  const auto verdict = aec::verify_acyclic(g, c);
  if (verdict.ok) {
    std::cout << "valid acyclic " << c.kappa() << "-edge-coloring\n";
    return kOk;
  }
  if (verdict.improper) {
    std::cout << "invalid: color " << verdict.improper->color << " repeats at vertex " << verdict.improper->vertex
              << "\n";
  } else {
    std::cout << "invalid: bichromatic cycle " << describe_cycle(g, c, *verdict.cycle) << "\n";
  }
  return kNegative;
}

int cmd_index(const Options& o) {
  const aec::Graph g = load_graph(o);
  if (g.num_edges() == 0) {
    std::cout << "0\n";
    return kOk;
  }
  aec::SolverConfig cfg;
  cfg.node_budget = o.budget.value_or(0);
  const auto r = aec::acyclic_chromatic_index(g, cfg);
  if (r.index) {
    std::cout << *r.index << "\n";
    return kOk;
  }
  std::cout << r.lower << ".." << r.upper << "\n";
  return kUnknown;
}

int cmd_mad(const Options& o) {
  const aec::Graph g = load_graph(o);
  std::cout << aec::to_string(aec::max_average_degree(g)) << "\n";
  return kOk;
}

int cmd_minimal(const Options& o) {
  const aec::Graph g = load_graph(o);
  const auto report = aec::is_deletion_minimal(g, o.kappa, o.budget.value_or(0));
  std::cout << aec::to_string(report.verdict);
  if (report.blocking_edge) {
    const auto& e = g.edge(*report.blocking_edge);
    std::cout << " (G - " << e.u << "-" << e.v << " is not " << o.kappa << "-colorable)";
  } else if (report.coloring) {
    std::cout << " (G is " << o.kappa << "-colorable)";
  }
  std::cout << "\n";
  switch (report.verdict) {
    case aec::Minimality::minimal: return kOk;
    case aec::Minimality::unknown: return kUnknown;
    default: return kNegative;
  }
}

int cmd_audit(const Options& o) {
  const aec::Graph g = load_graph(o);
  aec::AuditOptions options;
  options.assume_minimal = o.assume_minimal;
  options.enumeration_edge_limit = o.edge_limit;
  const auto report = aec::lemma_audit(g, o.kappa, options);
  if (o.records) {
    std::cout << aec::lemma_report_line(report, aec::write_graph6(g)) << "\n";
  } else {
    std::cout << "kappa " << report.kappa << ", max degree " << report.max_degree
              << (report.assume_minimal ? ", assumed minimal" : ", informational") << "\n";
    for (const auto& e : report.entries) {
      std::cout << e.id << " " << e.name << ": " << aec::to_string(e.status);
      if (!e.witness.empty()) {
        std::cout << " [";
        for (std::size_t i = 0; i < e.witness.size(); ++i) std::cout << (i ? " " : "") << e.witness[i];
        std::cout << "]";
      }
      if (!e.detail.empty()) std::cout << " " << e.detail;
      std::cout << "\n";
    }
  }
  return report.all_hold() ? kOk : kNegative;
}

int cmd_discharge(const Options& o) {
  const aec::Graph g = load_graph(o);
  const auto ledger = aec::discharge_mad4(g, o.kappa);
  if (o.records) {
    std::cout << aec::ledger_line(ledger, aec::write_graph6(g), o.kappa) << "\n";
    return kOk;
  }
  const auto classes = aec::classify_vertices(g, o.kappa);
  for (const auto& t : ledger.transfers) {
    std::cout << t.rule << ": " << t.from << " -> " << t.to << " " << aec::to_string(t.amount) << "\n";
  }
  for (aec::Vertex v = 0; v < g.num_vertices(); ++v) {
    std::cout << "vertex " << v << " (" << aec::to_string(classes[v]) << "): " << aec::to_string(ledger.initial[v])
              << " -> " << aec::to_string(ledger.final_charge[v]) << "\n";
  }
  std::cout << "total " << aec::to_string(ledger.total_initial()) << " -> " << aec::to_string(ledger.total_final())
            << (ledger.all_nonnegative() ? ", all nonnegative" : ", some negative") << "\n";
  return kOk;
}

int cmd_hunt(const Options& o) {
  aec::HuntOptions options;
  options.max_n = o.max_n;
  const auto rule = aec::parse_kappa_rule(o.rule);
  const auto cls = aec::parse_graph_class(o.graph_class);
  if (!rule) throw UsageError("unknown rule " + o.rule);
  if (!cls) throw UsageError("unknown class " + o.graph_class);
  options.rule = *rule;
  options.graph_class = *cls;
  options.jobs = o.jobs;
  options.node_budget = o.budget.value_or(0);
  options.allow_large = o.allow_large;
  options.audit.enumeration_edge_limit = o.edge_limit;
  aec::HuntReport report;
  try {
    report = aec::hunt_counterexamples(options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.records) {
    for (const auto& r : report.records) std::cout << aec::hunt_record_line(r) << "\n";
    std::cout << aec::hunt_summary_line(report, options) << "\n";
  } else {
    for (const auto& r : report.records) {
      if (!r.violation && !r.unknown) continue;
      std::cout << (r.violation ? "violation " : "unknown ") << r.graph6 << " max degree " << r.max_degree;
      if (r.index.index) {
        std::cout << " index " << *r.index.index;
      } else {
        std::cout << " index " << r.index.lower << ".." << r.index.upper;
      }
      if (r.minimality) std::cout << " " << aec::to_string(*r.minimality) << " at " << r.kappa;
      std::cout << "\n";
    }
    std::cout << report.records.size() << " graphs checked\n";
    if (report.unknown > 0) std::cout << report.unknown << " unknown\n";
    std::cout << report.violations << " violations\n";
  }
  if (report.violations > 0) return kNegative;
  return report.unknown > 0 ? kUnknown : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acyclic edge coloring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Graph format")->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
  app.add_flag("--records", o.records, "Line-delimited JSON output");

  auto graph_arg = [&](CLI::App* cmd) {
    cmd->add_option("graph", o.graph_path, "Graph file, - for stdin")->required();
  };
  auto kappa_opt = [&](CLI::App* cmd) {
    cmd->add_option("--kappa,-k", o.kappa, "Number of colors")->required()->check(CLI::Range(1, aec::kMaxColors));
  };
  auto budget_opt = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "Search node budget")->check(CLI::PositiveNumber);
  };

  auto* color = app.add_subcommand("color", "Find an acyclic edge coloring");
  graph_arg(color);
  kappa_opt(color);
  color->add_option("--mode", o.mode, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
  color->add_option("--seed", o.seed, "Heuristic seed");
  color->add_flag("--fallback", o.fallback, "Heuristic falls back to the exact solver");
  budget_opt(color);

  auto* verify = app.add_subcommand("verify", "Check a coloring file");
  graph_arg(verify);
  verify->add_option("coloring", o.coloring_path, "Coloring file")->required();

  auto* index = app.add_subcommand("index", "Exact acyclic chromatic index");
  graph_arg(index);
  budget_opt(index);

  auto* mad = app.add_subcommand("mad", "Maximum average degree");
  graph_arg(mad);

  auto* minimal = app.add_subcommand("minimal", "Deletion-minimality at kappa");
  graph_arg(minimal);
  kappa_opt(minimal);
  budget_opt(minimal);

  auto* audit = app.add_subcommand("audit", "Structural lemma audit");
  graph_arg(audit);
  kappa_opt(audit);
  audit->add_flag("--assume-minimal", o.assume_minimal, "Treat the graph as certified minimal");
  audit->add_option("--edge-limit", o.edge_limit, "Largest m for enumeration-based checks")
      ->check(CLI::NonNegativeNumber);

  auto* discharge = app.add_subcommand("discharge", "Vertex discharging ledger");
  graph_arg(discharge);
  kappa_opt(discharge);

  auto* hunt = app.add_subcommand("hunt", "Search small graphs for counterexamples");
  hunt->add_option("--max-n", o.max_n, "Largest vertex count")->required()->check(CLI::PositiveNumber);
  hunt->add_option("--rule", o.rule, "delta, delta+1 or delta+2")
      ->check(CLI::IsMember({"delta", "delta+1", "delta+2"}));
  hunt->add_option("--class", o.graph_class, "Graph class")
      ->check(CLI::IsMember({"all", "mad4", "subcubic", "delta4", "3plus-indep"}));
  hunt->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  budget_opt(hunt);
  hunt->add_flag("--allow-large", o.allow_large, "Permit more than 8 vertices");
  hunt->add_option("--edge-limit", o.edge_limit, "Largest m for enumeration-based lemma checks")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto* cmd = app.get_subcommands().front();
    if (cmd == color) return cmd_color(o);
    if (cmd == verify) return cmd_verify(o);
    if (cmd == index) return cmd_index(o);
    if (cmd == mad) return cmd_mad(o);
    if (cmd == minimal) return cmd_minimal(o);
    if (cmd == audit) return cmd_audit(o);
    if (cmd == discharge) return cmd_discharge(o);
    if (cmd == hunt) return cmd_hunt(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const aec::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kDataError;
  } catch (const aec::GraphError& e) {
    std::cerr << "invalid graph: " << e.what() << "\n";
    return kDataError;
  } catch (const std::domain_error& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknown;
  }
  return kUsage;
}
