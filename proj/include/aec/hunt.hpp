#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aec/density.hpp"
#include "aec/graph.hpp"
#include "aec/lemmas.hpp"
#include "aec/solver.hpp"

namespace aec {

enum class KappaRule { delta, delta_plus_1, delta_plus_2 };

/// "delta", "delta+1", "delta+2".
const char* to_string(KappaRule rule);
std::optional<KappaRule> parse_kappa_rule(const std::string& text);
int kappa_for(KappaRule rule, int max_degree);

enum class GraphClass { all, mad4, subcubic, delta4, three_plus_independent };

/// "all", "mad4", "subcubic", "delta4", "3plus-indep".
const char* to_string(GraphClass cls);
std::optional<GraphClass> parse_graph_class(const std::string& text);

/// mad4: mad < 4. subcubic / delta4: Delta <= 3 / 4 and not regular of that
/// degree. 3plus-indep: Delta >= 3 and no two 3+-vertices adjacent.
bool in_class(const Graph& g, GraphClass cls);

struct HuntOptions {
  int max_n = 1;
  KappaRule rule = KappaRule::delta_plus_2;
  GraphClass graph_class = GraphClass::all;
  int jobs = 1;
  std::uint64_t node_budget = 0;  // per solver call, 0 = unlimited
  bool allow_large = false;
  AuditOptions audit;
};

struct HuntRecord {
  Graph graph;
  std::string graph6;
  int max_degree = 0;
  Rational mad;
  int kappa = 0;  // the rule's bound
  IndexResult index;
  bool violation = false;
  bool unknown = false;  // index bracket straddles the bound
  /// Violators only: minimality at the bound and, when minimal, the audit.
  std::optional<Minimality> minimality;
  std::optional<LemmaReport> audit;
};

struct HuntReport {
  std::vector<HuntRecord> records;  // canonical enumeration order
  int violations = 0;
  int unknown = 0;
};

/// Enumerates connected graphs with 2..max_n vertices in the class and checks
/// chi'_a(G) <= rule(Delta) exactly. Graphs are processed on `jobs` threads;
/// the report order does not depend on it.
HuntReport hunt_counterexamples(const HuntOptions& options);

/// One hunt graph; exposed for tests and single-graph tooling.
HuntRecord hunt_one(const Graph& g, const HuntOptions& options);

}  // namespace aec
