#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

constexpr int kEnumerationDefaultCap = 8;
constexpr int kCanonicalVertexLimit = 11;

/// Adjacency bits read column by column (pair (i, j), i < j, ordered by j then
/// i), most significant first, maximized over all relabelings. Two graphs on
/// the same vertex count are isomorphic iff their codes agree. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// The relabeling of `g` that attains canonical_code, with edges in column
/// order.
Graph canonical_form(const Graph& g);

struct EnumerationOptions {
  int min_n = 1;
  int max_n = 1;
  bool connected_only = true;
  /// false lists every labeled graph on 0..n-1 (feasible only for tiny n).
  bool dedup = true;
  /// Lifts the default cap of 8 vertices (up to 11 when deduplicating).
  bool allow_large = false;
  std::function<bool(const Graph&)> filter;
};

/// Graphs with min_n..max_n vertices, grouped by vertex count. With dedup, one
/// canonical representative per isomorphism class, in increasing code order.
/// Throws std::invalid_argument when the cap is exceeded.
std::vector<Graph> enumerate_graphs(const EnumerationOptions& options);

}  // namespace aec
