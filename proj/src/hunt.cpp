#include "aec/hunt.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "aec/enumerate.hpp"
#include "aec/io.hpp"
#include "aec/predicates.hpp"

namespace aec {

const char* to_string(KappaRule rule) {
  switch (rule) {
    case KappaRule::delta: return "delta";
    case KappaRule::delta_plus_1: return "delta+1";
    case KappaRule::delta_plus_2: return "delta+2";
  }
  return "unknown";
}

std::optional<KappaRule> parse_kappa_rule(const std::string& text) {
  for (auto r : {KappaRule::delta, KappaRule::delta_plus_1, KappaRule::delta_plus_2}) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

int kappa_for(KappaRule rule, int max_degree) {
  switch (rule) {
    case KappaRule::delta: return max_degree;
    case KappaRule::delta_plus_1: return max_degree + 1;
    case KappaRule::delta_plus_2: return max_degree + 2;
  }
  throw std::invalid_argument("unknown kappa rule");
}

const char* to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::all: return "all";
    case GraphClass::mad4: return "mad4";
    case GraphClass::subcubic: return "subcubic";
    case GraphClass::delta4: return "delta4";
    case GraphClass::three_plus_independent: return "3plus-indep";
  }
  return "unknown";
}

std::optional<GraphClass> parse_graph_class(const std::string& text) {
  for (auto c : {GraphClass::all, GraphClass::mad4, GraphClass::subcubic, GraphClass::delta4,
                 GraphClass::three_plus_independent}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

bool in_class(const Graph& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::all: return true;
    case GraphClass::mad4: return g.num_vertices() > 0 && max_average_degree(g) < 4;
    case GraphClass::subcubic: return is_subcubic_non_regular(g);
    case GraphClass::delta4: return is_delta4_non_regular(g);
    case GraphClass::three_plus_independent:
      return g.num_vertices() > 0 && g.max_degree() >= 3 && three_plus_independent(g).value;
  }
  return false;
}

HuntRecord hunt_one(const Graph& g, const HuntOptions& options) {
  HuntRecord r;
  r.graph = g;
  r.graph6 = write_graph6(g);
  r.max_degree = g.max_degree();
  r.mad = max_average_degree(g);
  r.kappa = kappa_for(options.rule, r.max_degree);
  SolverConfig cfg;
  cfg.node_budget = options.node_budget;
  r.index = acyclic_chromatic_index(g, cfg);
  if (r.index.lower > r.kappa) {
    r.violation = true;
  } else if (r.index.upper > r.kappa) {
    r.unknown = true;
  }
  if (r.violation) {
    const auto report = is_deletion_minimal(g, r.kappa, options.node_budget);
    r.minimality = report.verdict;
    if (report.verdict == Minimality::minimal) {
      AuditOptions audit = options.audit;
      audit.assume_minimal = true;
      r.audit = lemma_audit(g, r.kappa, audit);
    }
  }
  return r;
}

HuntReport hunt_counterexamples(const HuntOptions& options) {
  if (options.jobs < 1) throw std::invalid_argument("jobs must be positive");
  EnumerationOptions enumeration;
  enumeration.min_n = 2;
  enumeration.max_n = std::max(options.max_n, 2);
  enumeration.connected_only = true;
  enumeration.allow_large = options.allow_large;
  enumeration.filter = [&](const Graph& g) { return in_class(g, options.graph_class); };
  const auto graphs = options.max_n < 2 ? std::vector<Graph>{} : enumerate_graphs(enumeration);

  HuntReport report;
  report.records.resize(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) report.records[i] = hunt_one(graphs[i], options);
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < options.jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  for (const auto& r : report.records) {
    report.violations += r.violation ? 1 : 0;
    report.unknown += r.unknown ? 1 : 0;
  }
  return report;
}

}  // namespace aec
