#pragma once

#include <vector>

#include "aec/graph.hpp"

namespace aec {

using Cycle = std::vector<Vertex>;  // vertices in cyclic order

/// Every simple cycle with exactly `length` vertices, each listed once,
/// starting from its smallest vertex.
std::vector<Cycle> cycles_of_length(const Graph& g, int length);

/// Edge ids along a cycle; throws GraphError when two consecutive vertices are
/// not adjacent.
std::vector<EdgeId> cycle_edges(const Graph& g, const Cycle& cycle);

/// A predicate value plus the cycles or vertex pair that decide it.
struct PredicateResult {
  bool value = false;
  std::vector<Cycle> witness;
};

/// True when some triangle shares an edge with a different cycle of length 3
/// or 4. Witness: the triangle, then the other cycle.
PredicateResult has_triangle_adjacent_short_cycle(const Graph& g);

/// True when every 5-cycle has at most three edges lying on triangles.
/// Witness on failure: the offending 5-cycle.
PredicateResult five_cycles_ok(const Graph& g);

/// True when two distinct triangles share a vertex. Witness: both triangles.
PredicateResult has_intersecting_triangles(const Graph& g);

/// True when no two vertices of degree >= 3 are adjacent. Witness on
/// failure: the adjacent pair.
PredicateResult three_plus_independent(const Graph& g);

/// Delta <= 3 and not 3-regular.
bool is_subcubic_non_regular(const Graph& g);

/// Delta <= 4 and not 4-regular.
bool is_delta4_non_regular(const Graph& g);

}  // namespace aec
