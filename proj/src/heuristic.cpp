#include "aec/heuristic.hpp"

#include <algorithm>
#include <deque>

namespace aec {

namespace {

std::mt19937_64 run_stream(std::uint64_t seed, int run) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(run)};
  return std::mt19937_64(seq);
}

template <typename T>
std::vector<T> shuffled(std::vector<T> items, std::mt19937_64& rng) {
  std::shuffle(items.begin(), items.end(), rng);
  return items;
}

std::vector<EdgeId> colored_neighbors(const Graph& g, const EdgeColoring& c, EdgeId e) {
  std::vector<EdgeId> out;
  for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
    for (const auto& inc : g.incident(x)) {
      if (inc.edge != e && c.is_colored(inc.edge)) out.push_back(inc.edge);
    }
  }
  return out;
}

void check_config(const HeuristicConfig& cfg) {
  if (cfg.kappa < 1 || cfg.kappa > kMaxColors) {
    throw std::invalid_argument("kappa must lie in 1.." + std::to_string(kMaxColors));
  }
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (cfg.moves_per_stall < 0) throw std::invalid_argument("moves_per_stall must be non-negative");
}

// One greedy-plus-repair run. Returns a total coloring or nothing.
std::optional<EdgeColoring> run_once(const Graph& g, const HeuristicConfig& cfg, const std::vector<EdgeId>& order,
                                     std::mt19937_64& rng) {
  EdgeColoring c(cfg.kappa, g.num_edges());
  std::deque<EdgeId> queue(order.begin(), order.end());
  const long step_cap = 20L * g.num_edges() + 100;
  long steps = 0;
  int consecutive_failures = 0;

  while (!queue.empty()) {
    const EdgeId e = queue.front();
    queue.pop_front();
    if (c.is_colored(e)) continue;
    const ColorSet valid = detail::valid_colors_unchecked(g, c, e);
    if (!valid.empty()) {
      c.assign(e, valid.min());
      continue;
    }
    if (++steps > step_cap) return std::nullopt;
    if (auto repaired = local_repair(g, c, e, cfg.moves_per_stall, rng)) {
      c = std::move(repaired->coloring);
      if (repaired->displaced) queue.push_back(*repaired->displaced);
      consecutive_failures = 0;
      continue;
    }
    if (++consecutive_failures > cfg.moves_per_stall) return std::nullopt;
    // Kick: free one neighboring edge so the next attempt sees a different state.
    auto around = colored_neighbors(g, c, e);
    if (around.empty()) return std::nullopt;
    const EdgeId f = around[std::uniform_int_distribution<std::size_t>(0, around.size() - 1)(rng)];
    c.clear(f);
    queue.push_front(e);
    queue.push_back(f);
  }
  return c;
}

}  // namespace

GreedyResult greedy_color(const Graph& g, const HeuristicConfig& cfg) {
  check_config(cfg);
  GreedyResult out{EdgeColoring(cfg.kappa, g.num_edges()), std::nullopt};
  for (EdgeId e : solver_edge_order(g, EdgeOrder::degree_sum_descending)) {
    const ColorSet valid = detail::valid_colors_unchecked(g, out.coloring, e);
    if (valid.empty()) {
      out.stalled = e;
      break;
    }
    out.coloring.assign(e, valid.min());
  }
  return out;
}

std::optional<RepairResult> local_repair(const Graph& g, const EdgeColoring& c, EdgeId stalled, int move_budget,
                                         std::mt19937_64& rng) {
  if (c.is_colored(stalled)) throw std::invalid_argument("local_repair needs an uncolored edge");
  int moves = 0;
  auto spend = [&] { return moves++ < move_budget; };
  auto success = [&](EdgeColoring t, Color col, std::optional<EdgeId> displaced) {
    t.assign(stalled, col);
    return std::optional<RepairResult>(RepairResult{std::move(t), displaced, moves});
  };
  const auto [u, v] = g.edge(stalled);
  const auto adjacent = shuffled(colored_neighbors(g, c, stalled), rng);

  // (i) recolor one adjacent edge
  for (EdgeId f : adjacent) {
    EdgeColoring t = c;
    const Color old = t.color(f);
    t.clear(f);
    ColorSet alternatives = detail::valid_colors_unchecked(g, t, f);
    alternatives.erase(old);
    for (Color d : shuffled(alternatives.to_vector(), rng)) {
      if (!spend()) return std::nullopt;
      t.assign(f, d);
      const ColorSet ok = detail::valid_colors_unchecked(g, t, stalled);
      if (!ok.empty()) return success(std::move(t), ok.min(), std::nullopt);
      t.clear(f);
    }
  }

  // (ii) swap two colors at one endpoint
  for (Vertex x : {u, v}) {
    std::vector<EdgeId> at;
    for (const auto& inc : g.incident(x)) {
      if (inc.edge != stalled && c.is_colored(inc.edge)) at.push_back(inc.edge);
    }
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        if (!spend()) return std::nullopt;
        EdgeColoring t = swap_colors(c, at[i], at[j]);
        if (!acyclic_so_far(g, t).ok) continue;
        const ColorSet ok = detail::valid_colors_unchecked(g, t, stalled);
        if (!ok.empty()) return success(std::move(t), ok.min(), std::nullopt);
      }
    }
  }

  // (iii) uncolor a single blocker
  const ColorSet used_u = used_colors(g, c, u);
  const ColorSet used_v = used_colors(g, c, v);
  const ColorSet candidates = ColorSet::range(c.kappa()) - (used_u | used_v);
  for (Color alpha : shuffled(candidates.to_vector(), rng)) {
    std::optional<EdgeId> far;
    int blockers = 0;
    for (Color beta : (used_u & used_v).to_vector()) {
      PathQuery q = maximal_dichromatic_path(g, c, u, alpha, beta);
      if (q.closed || q.vertices.size() < 2) continue;
      const bool joins = (q.vertices.front() == u && q.vertices.back() == v) ||
                         (q.vertices.front() == v && q.vertices.back() == u);
      if (!joins) continue;
      ++blockers;
      far = q.vertices.back() == v ? q.edges.back() : q.edges.front();
    }
    if (blockers != 1) continue;
    if (!spend()) return std::nullopt;
    EdgeColoring t = c;
    t.clear(*far);
    if (detail::valid_colors_unchecked(g, t, stalled).contains(alpha)) return success(std::move(t), alpha, far);
  }
  for (EdgeId f : adjacent) {
    const Color gamma = c.color(f);
    if (used_u.contains(gamma) && used_v.contains(gamma)) continue;
    if (!spend()) return std::nullopt;
    EdgeColoring t = c;
    t.clear(f);
    if (detail::valid_colors_unchecked(g, t, stalled).contains(gamma)) return success(std::move(t), gamma, f);
  }
  return std::nullopt;
}

HeuristicOutcome color_with_restarts(const Graph& g, const HeuristicConfig& cfg) {
  check_config(cfg);
  HeuristicOutcome out;
  if (g.num_vertices() > 0 && g.max_degree() > cfg.kappa) {
    out.result.status = SolveStatus::not_colorable;
    return out;
  }
  const auto base_order = solver_edge_order(g, EdgeOrder::degree_sum_descending);
  for (int run = 0; run < cfg.restarts; ++run) {
    auto rng = run_stream(cfg.seed, run);
    auto order = base_order;
    if (run > 0) std::shuffle(order.begin(), order.end(), rng);
    ++out.runs;
    if (auto c = run_once(g, cfg, order, rng)) {
      if (!verify_acyclic(g, *c).ok) throw std::logic_error("heuristic produced a coloring that is not acyclic");
      out.result.status = SolveStatus::colorable;
      out.result.coloring = std::move(c);
      return out;
    }
  }
  if (cfg.fallback == Fallback::exact) {
    out.used_fallback = true;
    SolverConfig exact;
    exact.kappa = cfg.kappa;
    exact.node_budget = cfg.fallback_budget;
    out.result = decide_colorable(g, exact);
    if (out.result.coloring && !verify_acyclic(g, *out.result.coloring).ok) {
      throw std::logic_error("exact solver produced a coloring that is not acyclic");
    }
    return out;
  }
  out.result.status = SolveStatus::budget_exhausted;
  return out;
}

}  // namespace aec
