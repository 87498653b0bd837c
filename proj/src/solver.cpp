#include "aec/solver.hpp"

#include <algorithm>
#include <bit>

namespace aec {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::colorable: return "colorable";
    case SolveStatus::not_colorable: return "not-colorable";
    case SolveStatus::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

const char* to_string(Minimality m) {
  switch (m) {
    case Minimality::minimal: return "minimal";
    case Minimality::not_minimal: return "not-minimal";
    case Minimality::not_applicable: return "not-applicable";
    case Minimality::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<EdgeId> solver_edge_order(const Graph& g, EdgeOrder order) {
  std::vector<EdgeId> ids(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) ids[e] = e;
  if (order == EdgeOrder::degree_sum_descending) {
    auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
    std::stable_sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
  }
  return ids;
}

namespace {

// Mutable search state over bitmask color sets. `at[v * stride + c]` is the
// neighbor reached from v along color c, or -1.
class Search {
 public:
  Search(const Graph& g, int kappa, std::vector<EdgeId> order)
      : g_(g),
        kappa_(kappa),
        stride_(kappa + 1),
        order_(std::move(order)),
        full_(ColorSet::range(kappa).bits()),
        used_(g.num_vertices(), 0),
        at_(static_cast<std::size_t>(g.num_vertices()) * stride_, -1),
        colors_(g.num_edges(), kUncolored) {}

  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool exhausted = false;
  bool symmetry = true;
  std::mt19937_64* rng = nullptr;
  std::function<bool(const EdgeColoring&)> visit;  // enumeration mode when set

  bool run() { return dfs(0, 0); }
  EdgeColoring coloring() const { return EdgeColoring(kappa_, colors_); }

 private:
  bool valid(Vertex u, Vertex v, Color alpha) const {
    std::uint64_t common = used_[u] & used_[v];
    while (common != 0) {
      const Color beta = std::countr_zero(common);
      common &= common - 1;
      Vertex x = u;
      Color col = beta;
      for (;;) {
        const Vertex y = at_[x * stride_ + col];
        if (y < 0) break;
        if (y == v) return false;
        x = y;
        col = col == beta ? alpha : beta;
      }
    }
    return true;
  }

  void set(EdgeId e, Color c) {
    const auto [u, v] = g_.edge(e);
    colors_[e] = c;
    used_[u] |= std::uint64_t{1} << c;
    used_[v] |= std::uint64_t{1} << c;
    at_[u * stride_ + c] = v;
    at_[v * stride_ + c] = u;
  }

  void unset(EdgeId e) {
    const auto [u, v] = g_.edge(e);
    const Color c = colors_[e];
    colors_[e] = kUncolored;
    used_[u] &= ~(std::uint64_t{1} << c);
    used_[v] &= ~(std::uint64_t{1} << c);
    at_[u * stride_ + c] = -1;
    at_[v * stride_ + c] = -1;
  }

  // Every uncolored edge next to e must still have a candidate color.
  bool forward_ok(EdgeId e) const {
    for (Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
      for (const auto& inc : g_.incident(x)) {
        if (colors_[inc.edge] != kUncolored) continue;
        const auto& f = g_.edge(inc.edge);
        if ((full_ & ~(used_[f.u] | used_[f.v])) == 0) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t depth, int max_used) {
    if (depth == order_.size()) {
      if (visit) return !visit(coloring());
      return true;
    }
    const EdgeId e = order_[depth];
    const auto [u, v] = g_.edge(e);
    std::uint64_t cand = full_ & ~(used_[u] | used_[v]);
    if (symmetry) cand &= ColorSet::range(std::min(kappa_, max_used + 1)).bits();

    std::vector<Color> tries;
    for (std::uint64_t b = cand; b != 0; b &= b - 1) tries.push_back(std::countr_zero(b));
    if (rng) std::shuffle(tries.begin(), tries.end(), *rng);

    for (Color alpha : tries) {
      ++nodes;
      if (budget != 0 && nodes > budget) {
        exhausted = true;
        return false;
      }
      if (!valid(u, v, alpha)) continue;
      set(e, alpha);
      if (forward_ok(e) && dfs(depth + 1, std::max(max_used, alpha))) return true;
      unset(e);
      if (exhausted) return false;
    }
    return false;
  }

  const Graph& g_;
  int kappa_;
  int stride_;
  std::vector<EdgeId> order_;
  std::uint64_t full_;
  std::vector<std::uint64_t> used_;
  std::vector<Vertex> at_;
  std::vector<Color> colors_;
};

void check_kappa(int kappa) {
  if (kappa < 1 || kappa > kMaxColors) {
    throw std::invalid_argument("kappa must lie in 1.." + std::to_string(kMaxColors));
  }
}

}  // namespace

SolveResult decide_colorable(const Graph& g, const SolverConfig& cfg) {
  check_kappa(cfg.kappa);
  SolveResult result;
  if (g.num_vertices() > 0 && g.max_degree() > cfg.kappa) {
    result.status = SolveStatus::not_colorable;
    return result;
  }
  Search search(g, cfg.kappa, solver_edge_order(g, cfg.edge_order));
  search.budget = cfg.node_budget;
  search.symmetry = cfg.symmetry_breaking;
  const bool found = search.run();
  result.nodes = search.nodes;
  if (found) {
    result.status = SolveStatus::colorable;
    result.coloring = search.coloring();
  } else {
    result.status = search.exhausted ? SolveStatus::budget_exhausted : SolveStatus::not_colorable;
  }
  return result;
}

IndexResult acyclic_chromatic_index(const Graph& g, const SolverConfig& cfg_template) {
  if (g.num_edges() == 0) throw std::invalid_argument("acyclic chromatic index needs at least one edge");
  IndexResult out;
  out.lower = g.max_degree();
  bool exact = true;
  for (int kappa = out.lower; kappa <= std::min(g.num_edges(), kMaxColors); ++kappa) {
    SolverConfig cfg = cfg_template;
    cfg.kappa = kappa;
    SolveResult r = decide_colorable(g, cfg);
    out.nodes += r.nodes;
    if (r.status == SolveStatus::colorable) {
      out.upper = kappa;
      out.coloring = std::move(r.coloring);
      if (exact) out.index = kappa;
      return out;
    }
    if (r.status == SolveStatus::not_colorable && exact) {
      out.lower = kappa + 1;
    } else {
      exact = false;
    }
  }
  // m distinct colors always work; reached only when every smaller kappa ran out of budget.
  out.upper = std::min(g.num_edges(), kMaxColors);
  if (exact) out.index = out.upper;
  return out;
}

MinimalityReport is_deletion_minimal(const Graph& g, int kappa, std::uint64_t node_budget) {
  check_kappa(kappa);
  MinimalityReport report;
  if (g.num_vertices() == 0 || g.max_degree() > kappa) {
    report.verdict = Minimality::not_applicable;
    return report;
  }
  SolverConfig cfg;
  cfg.kappa = kappa;
  cfg.node_budget = node_budget;
  SolveResult whole = decide_colorable(g, cfg);
  if (whole.status == SolveStatus::colorable) {
    report.verdict = Minimality::not_minimal;
    report.coloring = std::move(whole.coloring);
    return report;
  }
  bool unknown = whole.status == SolveStatus::budget_exhausted;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Subgraph sub = delete_edge(g, e);
    SolveResult r = decide_colorable(sub.graph, cfg);
    if (r.status == SolveStatus::not_colorable) {
      report.verdict = Minimality::not_minimal;
      report.blocking_edge = e;
      report.certificate.clear();
      return report;
    }
    if (r.status == SolveStatus::budget_exhausted) {
      unknown = true;
      continue;
    }
    EdgeColoring lifted(kappa, g.num_edges());
    for (EdgeId f = 0; f < sub.graph.num_edges(); ++f) lifted.assign(sub.edge_to_parent[f], r.coloring->color(f));
    report.certificate.push_back(std::move(lifted));
  }
  if (unknown) {
    report.certificate.clear();
    report.verdict = Minimality::unknown;
    return report;
  }
  report.verdict = Minimality::minimal;
  return report;
}

bool check_no_valid_extension(const Graph& g, EdgeId e, const EdgeColoring& c, int kappa) {
  if (c.kappa() != kappa) throw std::invalid_argument("coloring uses a different kappa");
  if (!acyclic_so_far(g, c).ok) throw std::invalid_argument("coloring of G - e is not acyclic");
  return valid_colors(g, c, e).empty();
}

std::uint64_t for_each_acyclic_coloring(const Graph& g, int kappa,
                                        const std::function<bool(const EdgeColoring&)>& visit,
                                        bool up_to_color_permutation) {
  check_kappa(kappa);
  std::uint64_t count = 0;
  Search search(g, kappa, solver_edge_order(g, EdgeOrder::static_order));
  search.symmetry = up_to_color_permutation;
  search.visit = [&](const EdgeColoring& c) {
    ++count;
    return visit(c);
  };
  search.run();
  return count;
}

std::optional<EdgeColoring> sample_acyclic_coloring(const Graph& g, int kappa, std::mt19937_64& rng) {
  check_kappa(kappa);
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  Search search(g, kappa, std::move(order));
  search.symmetry = false;
  search.rng = &rng;
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

}  // namespace aec
