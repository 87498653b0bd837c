#include "aec/predicates.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace aec {

std::vector<Cycle> cycles_of_length(const Graph& g, int length) {
  std::vector<Cycle> out;
  if (length < 3) return out;
  Cycle path;
  std::vector<bool> on_path(g.num_vertices(), false);
  std::function<void(Vertex)> extend = [&](Vertex start) {
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == length) {
      // each cycle is found twice from its minimum; keep one direction
      if (g.has_edge(tail, start) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (const auto& inc : g.incident(tail)) {
      const Vertex w = inc.neighbor;
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    path = {s};
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> cycle_edges(const Graph& g, const Cycle& cycle) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto e = g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (!e) throw GraphError("cycle uses a non-edge");
    out.push_back(*e);
  }
  return out;
}

namespace {

std::set<EdgeId> edge_set(const Graph& g, const Cycle& c) {
  auto ids = cycle_edges(g, c);
  return {ids.begin(), ids.end()};
}

bool share_edge(const std::set<EdgeId>& a, const std::set<EdgeId>& b) {
  return std::any_of(a.begin(), a.end(), [&](EdgeId e) { return b.contains(e); });
}

}  // namespace

PredicateResult has_triangle_adjacent_short_cycle(const Graph& g) {
  const auto triangles = cycles_of_length(g, 3);
  std::vector<Cycle> others = triangles;
  for (auto& c : cycles_of_length(g, 4)) others.push_back(std::move(c));
  for (const auto& t : triangles) {
    const auto te = edge_set(g, t);
    for (const auto& c : others) {
      if (c == t) continue;
      if (share_edge(te, edge_set(g, c))) return {true, {t, c}};
    }
  }
  return {false, {}};
}

PredicateResult five_cycles_ok(const Graph& g) {
  std::set<EdgeId> in_triangle;
  for (const auto& t : cycles_of_length(g, 3)) {
    for (EdgeId e : cycle_edges(g, t)) in_triangle.insert(e);
  }
  for (const auto& c : cycles_of_length(g, 5)) {
    const auto ids = cycle_edges(g, c);
    const auto count = std::count_if(ids.begin(), ids.end(), [&](EdgeId e) { return in_triangle.contains(e); });
    if (count > 3) return {false, {c}};
  }
  return {true, {}};
}

PredicateResult has_intersecting_triangles(const Graph& g) {
  const auto triangles = cycles_of_length(g, 3);
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      for (Vertex v : triangles[i]) {
        if (std::find(triangles[j].begin(), triangles[j].end(), v) != triangles[j].end()) {
          return {true, {triangles[i], triangles[j]}};
        }
      }
    }
  }
  return {false, {}};
}

PredicateResult three_plus_independent(const Graph& g) {
  for (const auto& e : g.edges()) {
    if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3) return {false, {{e.u, e.v}}};
  }
  return {true, {}};
}

bool is_subcubic_non_regular(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  return g.max_degree() <= 3 && !(g.min_degree() == 3);
}

bool is_delta4_non_regular(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  return g.max_degree() <= 4 && !(g.min_degree() == 4);
}

}  // namespace aec
