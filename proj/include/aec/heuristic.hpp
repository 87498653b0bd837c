#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"
#include "aec/solver.hpp"

namespace aec {

enum class Fallback { none, exact };

struct HeuristicConfig {
  int kappa = 0;
  std::uint64_t seed = 0;
  int restarts = 8;
  /// Move budget of a single local_repair call, and the number of consecutive
  /// failed repairs tolerated before a run restarts.
  int moves_per_stall = 64;
  Fallback fallback = Fallback::none;
  std::uint64_t fallback_budget = 0;
};

struct GreedyResult {
  EdgeColoring coloring;
  /// First edge left without a valid color; empty when the coloring is total.
  std::optional<EdgeId> stalled;

  bool complete() const { return !stalled.has_value(); }
};

/// One pass in solver edge order giving each edge its least valid color.
/// Stops at the first edge with no valid color.
GreedyResult greedy_color(const Graph& g, const HeuristicConfig& cfg);

struct RepairResult {
  EdgeColoring coloring;
  /// Edge uncolored by the blocker move; it must be recolored later.
  std::optional<EdgeId> displaced;
  int moves = 0;
};

/// Tries to give the stalled edge a valid color by, in order:
///  (i)   recoloring one edge adjacent to it with another valid color,
///  (ii)  swapping the colors of two edges at one of its endpoints,
///  (iii) uncoloring the far edge of the single bichromatic path that blocks a
///        candidate color (at most one uncolor per call).
/// Each attempted move costs one unit of `move_budget`. On success the
/// returned coloring is acyclic on its colored edges and colors `stalled`.
std::optional<RepairResult> local_repair(const Graph& g, const EdgeColoring& c, EdgeId stalled, int move_budget,
                                         std::mt19937_64& rng);

struct HeuristicOutcome {
  SolveResult result;
  int runs = 0;  // heuristic runs attempted
  bool used_fallback = false;
};

/// Greedy plus repair, first in solver order and then with shuffled orders,
/// one RNG stream per run derived from (seed, run index). Optionally hands the
/// instance to the exact solver when every run fails. Deterministic in
/// (graph, cfg).
HeuristicOutcome color_with_restarts(const Graph& g, const HeuristicConfig& cfg);

}  // namespace aec
