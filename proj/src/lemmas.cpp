#include "aec/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "aec/predicates.hpp"
#include "aec/solver.hpp"

namespace aec {

const char* to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::holds: return "holds";
    case LemmaStatus::violated: return "violated";
    case LemmaStatus::vacuous: return "vacuous";
    case LemmaStatus::not_applicable: return "not-applicable";
    case LemmaStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool LemmaReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const LemmaEntry& e) { return e.holds(); });
}

const LemmaEntry& LemmaReport::at(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("no lemma entry " + id);
}

namespace {

// Accumulates one report entry. Starts vacuous (or not applicable when the
// gate is closed); the first failure wins the witness.
class Check {
 public:
  Check(std::string id, std::string name, bool gate) {
    entry_.id = std::move(id);
    entry_.name = std::move(name);
    entry_.status = gate ? LemmaStatus::vacuous : LemmaStatus::not_applicable;
  }

  bool open() const { return entry_.status != LemmaStatus::not_applicable; }

  void expect(bool ok, std::vector<Vertex> witness, const std::string& detail) {
    if (entry_.status == LemmaStatus::vacuous) entry_.status = LemmaStatus::holds;
    if (ok || entry_.status == LemmaStatus::violated) return;
    entry_.status = LemmaStatus::violated;
    entry_.witness = std::move(witness);
    entry_.detail = detail;
  }

  void skip(const std::string& detail) {
    if (entry_.status == LemmaStatus::vacuous || entry_.status == LemmaStatus::holds) {
      entry_.status = LemmaStatus::skipped;
      entry_.detail = detail;
    }
  }

  // Configurations existed but none passed their own gate.
  void close_if_untouched() {
    if (entry_.status == LemmaStatus::vacuous) entry_.status = LemmaStatus::not_applicable;
  }

  LemmaEntry done() { return std::move(entry_); }

 private:
  LemmaEntry entry_;
};

int count_neighbors(const Graph& g, Vertex v, const std::function<bool(Vertex)>& pred) {
  int count = 0;
  for (const auto& inc : g.incident(v)) count += pred(inc.neighbor) ? 1 : 0;
  return count;
}

int count_degree_at_least(const Graph& g, Vertex v, int bound) {
  return count_neighbors(g, v, [&](Vertex x) { return g.degree(x) >= bound; });
}

int count_degree_exactly(const Graph& g, Vertex v, int d) {
  return count_neighbors(g, v, [&](Vertex x) { return g.degree(x) == d; });
}

std::string str(int x) { return std::to_string(x); }

LemmaEntry check_two_connected(const Graph& g) {
  Check c("L1", "kappa=2", g.num_vertices() >= 3);
  if (!c.open()) return c.done();
  const bool ok = is_two_connected(g).value_or(true);
  std::vector<Vertex> witness;
  std::string detail;
  if (!ok) {
    if (!is_connected(g)) {
      detail = "graph is disconnected";
    } else {
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!is_connected(delete_vertex(g, v).graph)) {
          witness = {v};
          detail = "cut vertex " + str(v);
          break;
        }
      }
    }
  }
  c.expect(ok, witness, detail);
  return c.done();
}

LemmaEntry check_degree_sum(const Graph& g, int kappa) {
  Check c("L2", "DegreeSum", true);
  for (Vertex w0 = 0; w0 < g.num_vertices(); ++w0) {
    int sum = 0;
    for (const auto& inc : g.incident(w0)) sum += g.degree(inc.neighbor);
    c.expect(sum >= kappa + g.degree(w0), {w0},
             "neighbor degree sum " + str(sum) + " < kappa + deg = " + str(kappa + g.degree(w0)));
  }
  return c.done();
}

struct TwoVertexPair {
  Vertex v0, v, w;  // N(v0) = {v, w}, checked from v's side
};

std::vector<TwoVertexPair> two_vertex_pairs(const Graph& g) {
  std::vector<TwoVertexPair> out;
  for (Vertex v0 = 0; v0 < g.num_vertices(); ++v0) {
    if (g.degree(v0) != 2) continue;
    const auto nb = g.neighbors(v0);
    out.push_back({v0, nb[0], nb[1]});
    out.push_back({v0, nb[1], nb[0]});
  }
  return out;
}

void check_two_plus_edge(const Graph& g, int kappa, std::vector<LemmaEntry>& out) {
  const int delta = g.max_degree();
  const auto pairs = two_vertex_pairs(g);

  // The kappa = deg(v) case reduces to DegreeSum, so the core claim and (A)
  // are evaluated for kappa >= deg(v) + 1.
  Check core("L3", "2+edge", true);
  Check a("L3A", "2+edge(A)", true);
  Check b("L3B", "2+edge(B)", kappa >= delta + 2);
  for (const auto& [v0, v, w] : pairs) {
    const int dv = g.degree(v);
    const int dw = g.degree(w);
    if (kappa >= dv + 1) {
      const int heavy = count_degree_at_least(g, v, kappa - dv + 2);
      core.expect(heavy >= kappa - dw + 1, {v0, v, w},
                  str(v) + " has " + str(heavy) + " neighbors of degree >= " + str(kappa - dv + 2) + ", needs " +
                      str(kappa - dw + 1));
      if (g.has_edge(w, v)) {
        a.expect(heavy >= kappa - dw + 2 && dv >= kappa - dw + 3, {v0, v, w},
                 "triangle case: " + str(heavy) + " heavy neighbors (needs " + str(kappa - dw + 2) + "), deg(v) = " +
                     str(dv) + " (needs " + str(kappa - dw + 3) + ")");
      }
    }
    if (b.open() && count_degree_at_least(g, v, kappa - delta + 2) == kappa - delta + 1) {
      const int twos = count_degree_exactly(g, v, 2);
      b.expect(twos <= dv + delta - kappa - 3 && dv >= kappa - delta + 4, {v0, v},
               str(v) + " has " + str(twos) + " 2-neighbors (max " + str(dv + delta - kappa - 3) + "), degree " + str(dv) +
                   " (needs " + str(kappa - delta + 4) + ")");
    }
  }
  if (!pairs.empty()) {
    core.close_if_untouched();
    a.close_if_untouched();
  }
  out.push_back(core.done());
  out.push_back(a.done());
  out.push_back(b.done());
}

LemmaEntry check_two_vertex_neighbors(const Graph& g, std::string id, std::string name, bool gate, int bound) {
  Check c(std::move(id), std::move(name), gate);
  if (!c.open()) return c.done();
  for (Vertex v0 = 0; v0 < g.num_vertices(); ++v0) {
    if (g.degree(v0) != 2) continue;
    for (const auto& inc : g.incident(v0)) {
      c.expect(g.degree(inc.neighbor) >= bound, {v0, inc.neighbor},
               "neighbor " + str(inc.neighbor) + " of 2-vertex " + str(v0) + " has degree " +
                   str(g.degree(inc.neighbor)) + " < " + str(bound));
    }
  }
  return c.done();
}

void check_good_three_vertex(const Graph& g, int kappa, const AuditOptions& opt, std::vector<LemmaEntry>& out) {
  const int delta = g.max_degree();
  const bool gate = kappa >= delta + 2;
  Check a("L6a", "Good-3-vertex(a)", gate);
  Check b("L6b", "Good-3-vertex(b)", gate);
  Check c("L6c", "Good-3-vertex(c)", gate);
  Check d("L6d", "Good-3-vertex(d)", gate);
  Check e("L6e", "Good-3-vertex(e)", gate);
  Check f("L6f", "Good-3-vertex(f)", gate);
  if (gate) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) != 3) continue;
      for (Vertex w : g.neighbors(v)) {
        if (g.degree(w) != kappa - delta + 2) continue;
        std::vector<Vertex> rest;
        for (Vertex x : g.neighbors(v)) {
          if (x != w) rest.push_back(x);
        }
        const std::vector<Vertex> witness{v, w};

        // (b)-(f) name the two other neighbors v1, v2; consider the labelings
        // that satisfy (b), or both when none does.
        auto satisfies_b = [&](Vertex v1, Vertex v2) {
          return g.degree(v1) == delta && delta >= g.degree(v2) && g.degree(v2) >= kappa - delta + 3;
        };
        std::vector<std::pair<Vertex, Vertex>> labelings;
        for (auto [v1, v2] : {std::pair{rest[0], rest[1]}, std::pair{rest[1], rest[0]}}) {
          if (satisfies_b(v1, v2)) labelings.emplace_back(v1, v2);
        }
        b.expect(!labelings.empty(), witness,
                 "degrees of the other neighbors: " + str(g.degree(rest[0])) + ", " + str(g.degree(rest[1])));
        if (labelings.empty()) labelings = {{rest[0], rest[1]}, {rest[1], rest[0]}};

        bool in_triangle = false;
        for (Vertex x : g.neighbors(w)) in_triangle = in_triangle || (x != v && g.has_edge(x, v));
        const int low_neighbors = count_neighbors(g, w, [&](Vertex x) { return g.degree(x) <= 3; });
        c.expect(!in_triangle && low_neighbors == 1, witness,
                 in_triangle ? "edge wv lies on a triangle"
                             : str(w) + " has " + str(low_neighbors) + " neighbors of degree <= 3");

        auto any_labeling = [&](const std::function<bool(Vertex, Vertex)>& pred) {
          return std::any_of(labelings.begin(), labelings.end(), [&](auto p) { return pred(p.first, p.second); });
        };
        d.expect(any_labeling([&](Vertex v1, Vertex v2) {
                   return count_degree_at_least(g, v1, kappa - delta + 2) >= kappa - g.degree(v2) + 1;
                 }),
                 witness, "v1 lacks neighbors of degree >= " + str(kappa - delta + 2));
        e.expect(any_labeling([&](Vertex, Vertex v2) {
                   return count_degree_at_least(g, v2, kappa - g.degree(v2) + 2) >= kappa - delta;
                 }),
                 witness, "v2 lacks heavy neighbors");
        f.expect(any_labeling([&](Vertex, Vertex v2) { return count_degree_at_least(g, v2, 4) >= kappa - delta + 1; }),
                 witness, "v2 has fewer than " + str(kappa - delta + 1) + " neighbors of degree >= 4");

        if (g.num_edges() > opt.enumeration_edge_limit) {
          a.skip("m = " + str(g.num_edges()) + " exceeds enumeration limit " + str(opt.enumeration_edge_limit));
          continue;
        }
        const EdgeId wv = *g.find_edge(w, v);
        Subgraph sub = delete_edge(g, wv);
        bool ok = true;
        int bad_shared = 0;
        std::uint64_t visited = 0;
        bool truncated = false;
        // |U(w) ∩ U(v)| is unchanged by renaming colors.
        for_each_acyclic_coloring(
            sub.graph, kappa,
            [&](const EdgeColoring& col) {
              if (++visited > opt.enumeration_visit_limit) {
                truncated = true;
                return false;
              }
              const int shared = (used_colors(sub.graph, col, w) & used_colors(sub.graph, col, v)).size();
              if (shared != 1) {
                ok = false;
                bad_shared = shared;
                return false;
              }
              return true;
            },
            true);
        if (truncated && ok) {
          a.skip("more than " + std::to_string(opt.enumeration_visit_limit) + " colorings of G - wv");
          continue;
        }
        a.expect(ok, witness, "a coloring of G - wv shares " + str(bad_shared) + " colors at w and v");
      }
    }
  }
  for (Check* chk : {&a, &b, &c, &d, &e, &f}) out.push_back(chk->done());
}

LemmaEntry check_three_vertex_neighbors(const Graph& g, int kappa) {
  const int delta = g.max_degree();
  Check c("L7", "3+vertex", kappa >= delta + 2);
  if (!c.open()) return c.done();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) continue;
    for (Vertex x : g.neighbors(v)) {
      c.expect(g.degree(x) >= kappa - delta + 2, {v, x},
               "neighbor " + str(x) + " of 3-vertex " + str(v) + " has degree " + str(g.degree(x)));
    }
  }
  return c.done();
}

LemmaEntry check_n3n(const Graph& g, int kappa) {
  const int delta = g.max_degree();
  Check c("L8", "N_3_N", kappa >= delta + 2);
  if (!c.open()) return c.done();
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (g.degree(w) != kappa - delta + 3) continue;
    const int threes = count_degree_exactly(g, w, 3);
    c.expect(threes <= kappa - delta + 1, {w}, str(w) + " has " + str(threes) + " neighbors of degree 3");
  }
  return c.done();
}

LemmaEntry check_l9(const Graph& g, int kappa) {
  const int delta = g.max_degree();
  Check c("L9", "L9", kappa >= delta + 2);
  if (!c.open()) return c.done();
  for (Vertex w0 = 0; w0 < g.num_vertices(); ++w0) {
    if (g.degree(w0) != 3) continue;
    const auto nb = g.neighbors(w0);
    for (int k = 0; k < 3; ++k) {
      const Vertex w = nb[k];
      const Vertex w1 = nb[(k + 1) % 3];
      const Vertex w2 = nb[(k + 2) % 3];
      if (g.degree(w) != kappa - delta + 3 || !g.has_edge(w, w1) || !g.has_edge(w, w2)) continue;
      const int low = count_neighbors(g, w, [&](Vertex x) { return g.degree(x) < delta - 1; });
      const bool w0_low = g.degree(w0) < delta - 1;
      c.expect(g.degree(w1) == delta && g.degree(w2) == delta && low == 1 && w0_low, {w0, w, w1, w2},
               "deg(w1) = " + str(g.degree(w1)) + ", deg(w2) = " + str(g.degree(w2)) + ", " + str(low) +
                   " neighbors of w below degree " + str(delta - 1));
    }
  }
  return c.done();
}

LemmaEntry check_no44t(const Graph& g, int kappa) {
  const int delta = g.max_degree();
  Check c("L10", "NO44t", kappa >= delta + 3);
  if (!c.open()) return c.done();
  for (const auto& t : cycles_of_length(g, 3)) {
    for (int k = 0; k < 3; ++k) {
      const Vertex w = t[k];
      if (g.degree(t[(k + 1) % 3]) != 4 || g.degree(t[(k + 2) % 3]) != 4) continue;
      const int tau = g.degree(w);
      const int threes = count_degree_exactly(g, w, 3);
      c.expect(threes <= tau - 3, {t[0], t[1], t[2]},
               str(w) + " (degree " + str(tau) + ") has " + str(threes) + " neighbors of degree 3");
    }
  }
  return c.done();
}

LemmaEntry check_no444(const Graph& g, int kappa) {
  const int delta = g.max_degree();
  Check c("L11", "NO444", kappa >= delta + 2 && delta >= 5);
  if (!c.open()) return c.done();
  for (const auto& t : cycles_of_length(g, 3)) {
    const bool all_four = std::all_of(t.begin(), t.end(), [&](Vertex x) { return g.degree(x) == 4; });
    c.expect(!all_four, t, "(4,4,4)-triangle");
  }
  return c.done();
}

void check_fact2(const Graph& g, int kappa, const AuditOptions& opt, std::vector<LemmaEntry>& out) {
  Check main("F2", "Fact2", true);
  Check uv("F2-W(uv)", "Fact2 with W(uv)", true);
  Check vu("F2-W(vu)", "Fact2 with W(vu)", true);
  if (g.num_edges() > opt.enumeration_edge_limit) {
    const std::string why = "m = " + str(g.num_edges()) + " exceeds limit " + str(opt.enumeration_edge_limit);
    for (Check* chk : {&main, &uv, &vu}) {
      chk->skip(why);
      out.push_back(chk->done());
    }
    return;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    Subgraph sub = delete_edge(g, e);
    SolverConfig cfg;
    cfg.kappa = kappa;
    SolveResult r = decide_colorable(sub.graph, cfg);
    if (r.status != SolveStatus::colorable) {
      main.expect(false, {u, v}, "G - uv has no acyclic " + str(kappa) + "-coloring");
      continue;
    }
    EdgeColoring lifted(kappa, g.num_edges());
    for (EdgeId f = 0; f < sub.graph.num_edges(); ++f) lifted.assign(sub.edge_to_parent[f], r.coloring->color(f));
    const Fact2Check f2 = audit_fact2(g, kappa, e, lifted);
    main.expect(f2.holds(), {u, v},
                f2.no_valid_extension ? "s = 0 but deg(u) + deg(v) != kappa + 2" : "a candidate color is valid for uv");
    uv.expect(f2.reading_uv_holds(), {u, v}, str(static_cast<int>(f2.lhs_uv)) + " < " + str(static_cast<int>(f2.rhs)));
    vu.expect(f2.reading_vu_holds(), {u, v}, str(static_cast<int>(f2.lhs_vu)) + " < " + str(static_cast<int>(f2.rhs)));
  }
  out.push_back(main.done());
  out.push_back(uv.done());
  out.push_back(vu.done());
}

}  // namespace

Fact2Check audit_fact2(const Graph& g, int kappa, EdgeId uv, const EdgeColoring& without_uv) {
  Fact2Check out;
  out.edge = uv;
  out.no_valid_extension = check_no_valid_extension(g, uv, without_uv, kappa);
  const auto [u, v] = g.edge(uv);
  const ColorSet at_u = used_colors(g, without_uv, u);
  const ColorSet at_v = used_colors(g, without_uv, v);
  const ColorSet shared = at_u & at_v;
  out.shared = shared.size();
  out.rhs = kappa + 2LL * out.shared + 2;
  if (out.shared == 0) out.degree_sum_matches = g.degree(u) + g.degree(v) == kappa + 2;

  // With uv uncolored, W(uv) is the set of neighbors of u joined by a color
  // that also appears at v.
  auto lhs = [&](Vertex a, ColorSet other) {
    long long sum = g.degree(u) + g.degree(v);
    for (const auto& inc : g.incident(a)) {
      if (without_uv.is_colored(inc.edge) && other.contains(without_uv.color(inc.edge))) {
        sum += g.degree(inc.neighbor);
      }
    }
    return sum;
  };
  out.lhs_uv = lhs(u, at_v);
  out.lhs_vu = lhs(v, at_u);
  return out;
}

LemmaReport lemma_audit(const Graph& g, int kappa, const AuditOptions& options) {
  if (g.num_vertices() == 0) throw std::invalid_argument("lemma_audit needs a nonempty graph");
  LemmaReport report;
  report.kappa = kappa;
  report.max_degree = g.max_degree();
  report.assume_minimal = options.assume_minimal;
  const int delta = report.max_degree;
  auto& out = report.entries;

  out.push_back(check_two_connected(g));
  out.push_back(check_degree_sum(g, kappa));
  check_two_plus_edge(g, kappa, out);
  out.push_back(check_two_vertex_neighbors(g, "L4", "2++edge", kappa >= delta + 2, kappa - delta + 4));
  out.push_back(check_two_vertex_neighbors(g, "L5", "24edge", kappa >= delta + 1, 4));
  check_good_three_vertex(g, kappa, options, out);
  out.push_back(check_three_vertex_neighbors(g, kappa));
  out.push_back(check_n3n(g, kappa));
  out.push_back(check_l9(g, kappa));
  out.push_back(check_no44t(g, kappa));
  out.push_back(check_no444(g, kappa));
  if (options.assume_minimal) check_fact2(g, kappa, options, out);
  return report;
}

}  // namespace aec
