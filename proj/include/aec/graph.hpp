#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aec {

using Vertex = int;
using EdgeId = int;

/// Raised when a graph would violate simplicity (self-loop, duplicate edge)
/// or reference a vertex that does not exist.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph.
///
/// Vertices are the dense range 0..n-1. Edge ids follow construction order and
/// never change, so colorings and other per-edge data can be stored as flat
/// arrays indexed by EdgeId.
class Graph {
 public:
  struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  struct Incidence {
    Vertex neighbor;
    EdgeId edge;
  };

  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const;

  int degree(Vertex v) const;
  int max_degree() const;
  int min_degree() const;

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  std::vector<Vertex> neighbors(Vertex v) const;

  /// Neighborhood as a bitmask; only meaningful when n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  /// Edge sets compared as unordered pairs; ids and order are ignored.
  bool same_edge_set(const Graph& other) const;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidences_;
};

/// A graph derived from a parent graph, with id maps back to the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

Subgraph delete_edge(const Graph& g, EdgeId e);
Subgraph delete_vertex(const Graph& g, Vertex v);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Contracts uv into u's slot; edges that would become parallel are merged.
/// The edge map points each surviving edge at its first parent edge.
Subgraph contract_edge(const Graph& g, EdgeId e);

/// Appends edge uv; the new edge receives id m.
Graph add_edge(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

/// Connected with no cut vertex. std::nullopt when n < 3 (not applicable).
std::optional<bool> is_two_connected(const Graph& g);

/// Flags recomputable from the graph alone.
struct GraphClassLabel {
  bool connected = false;
  bool subcubic = false;
  bool regular = false;
  int regular_degree = -1;
};

GraphClassLabel classify_graph(const Graph& g);

namespace families {

Graph path(int num_vertices);
Graph cycle(int num_vertices);
Graph complete(int num_vertices);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph wheel(int rim);
Graph prism(int k);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace families

}  // namespace aec
