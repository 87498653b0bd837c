#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec {

enum class EdgeOrder { static_order, degree_sum_descending };

struct SolverConfig {
  int kappa = 0;
  std::uint64_t node_budget = 0;  // 0 = unlimited
  EdgeOrder edge_order = EdgeOrder::degree_sum_descending;
  bool symmetry_breaking = true;
};

enum class SolveStatus { colorable, not_colorable, budget_exhausted };

const char* to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::budget_exhausted;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Edge processing order shared by the exact search and the greedy pass.
std::vector<EdgeId> solver_edge_order(const Graph& g, EdgeOrder order);

/// Backtracking search for an acyclic edge coloring with at most cfg.kappa
/// colors. Every assignment is checked for validity incrementally: giving
/// color a to uv closes a bichromatic cycle only if, for some b used at both u
/// and v, the (a, b) walk leaving u along b ends at v.
SolveResult decide_colorable(const Graph& g, const SolverConfig& cfg);

/// Exact index when every decision finished inside the budget; otherwise
/// `index` is empty and [lower, upper] brackets it.
struct IndexResult {
  std::optional<int> index;
  int lower = 0;
  int upper = 0;
  std::optional<EdgeColoring> coloring;  // witness at `upper`
  std::uint64_t nodes = 0;
};

/// Tries kappa = Delta, Delta + 1, ... using the template's budget and search
/// options. Requires at least one edge.
IndexResult acyclic_chromatic_index(const Graph& g, const SolverConfig& cfg_template = {});

enum class Minimality { minimal, not_minimal, not_applicable, unknown };

const char* to_string(Minimality m);

struct MinimalityReport {
  Minimality verdict = Minimality::unknown;
  /// When minimal: for each edge e, a kappa-coloring of G with only e uncolored.
  std::vector<EdgeColoring> certificate;
  /// When not minimal because G itself is kappa-colorable.
  std::optional<EdgeColoring> coloring;
  /// When not minimal because G - e is not kappa-colorable.
  std::optional<EdgeId> blocking_edge;
};

/// Deletion-minimality at kappa. Checking single-edge deletions suffices: every
/// proper subgraph lies inside some G - e, and kappa-colorability passes to
/// subgraphs.
MinimalityReport is_deletion_minimal(const Graph& g, int kappa, std::uint64_t node_budget = 0);

/// True iff no candidate color of e is valid. `c` colors G with e uncolored
/// and must be acyclic on its colored edges.
bool check_no_valid_extension(const Graph& g, EdgeId e, const EdgeColoring& c, int kappa);

/// Visits every acyclic kappa-coloring, or one representative per class of
/// colorings equal up to renaming colors. The visitor returns false to stop
/// early. Returns the number visited.
std::uint64_t for_each_acyclic_coloring(const Graph& g, int kappa,
                                        const std::function<bool(const EdgeColoring&)>& visit,
                                        bool up_to_color_permutation = false);

/// First coloring found by a search that tries colors in random order.
std::optional<EdgeColoring> sample_acyclic_coloring(const Graph& g, int kappa, std::mt19937_64& rng);

}  // namespace aec
