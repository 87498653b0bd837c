#include "aec/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace aec {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw GraphError("edge " + std::to_string(i) + " references a vertex outside 0.." +
                       std::to_string(n_ - 1));
    }
    if (u == v) throw GraphError("edge " + std::to_string(i) + " is a self-loop at " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw GraphError("edge " + std::to_string(i) + " duplicates " + std::to_string(u) + "-" +
                       std::to_string(v));
    }
  }

  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  incidences_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const auto [u, v] = edges_[id];
    incidences_[fill[u]++] = {v, id};
    incidences_[fill[v]++] = {u, id};
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

const Graph::Edge& Graph::edge(EdgeId e) const {
  if (e < 0 || e >= num_edges()) throw std::out_of_range("edge " + std::to_string(e) + " out of range");
  return edges_[e];
}

std::span<const Graph::Incidence> Graph::incident(Vertex v) const {
  check_vertex(v);
  return {incidences_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(offsets_[v + 1] - offsets_[v]);
}

int Graph::max_degree() const {
  if (n_ == 0) throw std::domain_error("max_degree of the empty graph");
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::domain_error("min_degree of the empty graph");
  int best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (degree(v) < degree(u)) std::swap(u, v);
  for (const auto& inc : incident(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& inc : incident(v)) out.push_back(inc.neighbor);
  return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  std::uint64_t mask = 0;
  for (const auto& inc : incident(v)) {
    if (inc.neighbor < 64) mask |= std::uint64_t{1} << inc.neighbor;
  }
  return mask;
}

bool Graph::same_edge_set(const Graph& other) const {
  if (n_ != other.n_ || num_edges() != other.num_edges()) return false;
  auto normalized = [](std::span<const Edge> es) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : es) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
  };
  return normalized(edges_) == normalized(other.edges_);
}

Subgraph delete_edge(const Graph& g, EdgeId e) {
  g.edge(e);
  Subgraph out;
  std::vector<Graph::Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (id == e) continue;
    edges.push_back(g.edge(id));
    out.edge_to_parent.push_back(id);
  }
  out.vertex_to_parent.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.vertex_to_parent[v] = v;
  out.graph = Graph(g.num_vertices(), std::move(edges));
  return out;
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
  g.degree(v);
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (x != v) keep.push_back(x);
  }
  return induced_subgraph(g, keep);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), -1);
  Subgraph out;
  for (Vertex v : vertices) {
    g.degree(v);
    if (local[v] != -1) throw GraphError("vertex " + std::to_string(v) + " listed twice");
    local[v] = static_cast<Vertex>(out.vertex_to_parent.size());
    out.vertex_to_parent.push_back(v);
  }
  std::vector<Graph::Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto [u, v] = g.edge(id);
    if (local[u] >= 0 && local[v] >= 0) {
      edges.push_back({local[u], local[v]});
      out.edge_to_parent.push_back(id);
    }
  }
  out.graph = Graph(static_cast<int>(out.vertex_to_parent.size()), std::move(edges));
  return out;
}

Subgraph contract_edge(const Graph& g, EdgeId e) {
  const auto [keep, gone] = g.edge(e);
  Subgraph out;
  std::vector<Vertex> local(g.num_vertices());
  for (Vertex v = 0, next = 0; v < g.num_vertices(); ++v) {
    if (v == gone) continue;
    local[v] = next++;
    out.vertex_to_parent.push_back(v);
  }
  local[gone] = local[keep];
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Graph::Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (id == e) continue;
    Vertex a = local[g.edge(id).u];
    Vertex b = local[g.edge(id).v];
    if (a == b) continue;
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) continue;
    edges.push_back({a, b});
    out.edge_to_parent.push_back(id);
  }
  out.graph = Graph(g.num_vertices() - 1, std::move(edges));
  return out;
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  std::vector<Graph::Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({u, v});
  return Graph(g.num_vertices(), std::move(edges));
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++count;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return count == g.num_vertices();
}

std::optional<bool> is_two_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) return std::nullopt;
  if (!is_connected(g)) return false;

  // Tarjan low-link articulation test from vertex 0.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool has_cut = false;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (const auto& inc : g.incident(v)) {
      Vertex w = inc.neighbor;
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent != -1 && low[w] >= disc[v]) has_cut = true;
    }
    if (parent == -1 && children > 1) has_cut = true;
  };
  dfs(0, -1);
  return !has_cut;
}

GraphClassLabel classify_graph(const Graph& g) {
  GraphClassLabel label;
  label.connected = is_connected(g);
  if (g.num_vertices() == 0) return label;
  const int hi = g.max_degree();
  label.subcubic = hi <= 3;
  label.regular = hi == g.min_degree();
  label.regular_degree = label.regular ? hi : -1;
  return label;
}

namespace families {

Graph path(int num_vertices) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i + 1 < num_vertices; ++i) edges.push_back({i, i + 1});
  return Graph(num_vertices, std::move(edges));
}

Graph cycle(int num_vertices) {
  if (num_vertices < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < num_vertices; ++i) edges.push_back({i, (i + 1) % num_vertices});
  return Graph(num_vertices, std::move(edges));
}

Graph complete(int num_vertices) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < num_vertices; ++i) {
    for (int j = i + 1; j < num_vertices; ++j) edges.push_back({i, j});
  }
  return Graph(num_vertices, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, std::move(edges));
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph wheel(int rim) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < rim; ++i) {
    edges.push_back({i, (i + 1) % rim});
    edges.push_back({rim, i});
  }
  return Graph(rim + 1, std::move(edges));
}

Graph prism(int k) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k});
    edges.push_back({k + i, k + (i + 1) % k});
    edges.push_back({i, k + i});
  }
  return Graph(2 * k, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Graph::Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + a.num_vertices(), e.v + a.num_vertices()});
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace families

}  // namespace aec
