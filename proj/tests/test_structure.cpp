#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "aec/density.hpp"
#include "aec/enumerate.hpp"
#include "aec/lemmas.hpp"
#include "aec/predicates.hpp"
#include "aec/solver.hpp"
#include "oracles.hpp"

using namespace aec;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

Rational oracle_mad(const Graph& g) {
  const auto [num, den] = oracle::mad(g);
  return Rational(num, den);
}

std::vector<Graph> random_graphs(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_graph(1 + static_cast<int>(rng() % max_n), 0.5, rng));
  return out;
}

bool applicable_hold(const LemmaReport& r) {
  for (const auto& e : r.entries) {
    if (e.applicable() && !e.holds()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("mad examples") {
  CHECK(max_average_degree(families::complete(4)) == Rational(3));
  CHECK(max_average_degree(families::cycle(6)) == Rational(2));
  const Graph k4_pendant = add_edge(families::disjoint_union(families::complete(4), Graph(1, {})), 0, 4);
  CHECK(max_average_degree(k4_pendant) == Rational(3));
  CHECK(max_average_degree(k4_pendant) == oracle_mad(k4_pendant));
  CHECK(to_string(max_average_degree(families::complete(4))) == "3/1");
  CHECK(to_string(max_average_degree(families::path(3))) == "4/3");
  CHECK_THROWS_AS(max_average_degree(Graph(0, {})), std::domain_error);
  CHECK_THROWS_AS(max_average_degree(families::cycle(21)), std::domain_error);
  CHECK(max_average_degree(families::cycle(20)) == Rational(2));
}

TEST_CASE("mad properties") {
  for (const auto& g : random_graphs(150, 12, 21)) {
    const Rational mad = max_average_degree(g);
    CHECK(mad == oracle_mad(g));
    CHECK(mad >= Rational(2 * g.num_edges(), g.num_vertices()));
    const auto dense = densest_vertex_set(g);
    const Subgraph h = induced_subgraph(g, dense);
    CHECK(Rational(2 * h.graph.num_edges(), h.graph.num_vertices()) == mad);
    for (EdgeId e = 0; e < g.num_edges(); ++e) CHECK(max_average_degree(delete_edge(g, e).graph) <= mad);
    if (g.num_vertices() > 1) CHECK(max_average_degree(delete_vertex(g, 0).graph) <= mad);
  }
}

TEST_CASE("vertex classes") {
  // 3-regular graph at kappa 5: no 4-vertices, so every 3-vertex is normal
  for (auto c : classify_vertices(families::complete_bipartite(3, 3), 5)) CHECK(c == VertexClass::normal_three);

  // 3-vertex 0 adjacent to the 4-vertex 1 (Delta 4, kappa 6)
  const Graph g(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}});
  const auto classes = classify_vertices(g, 6);
  CHECK(classes[0] == VertexClass::special_three);
  CHECK(classes[1] == VertexClass::four);
  CHECK(classes[2] == VertexClass::two);
  CHECK(classes[4] == VertexClass::low);

  const Graph path = families::path(3);
  CHECK(classify_vertices(path, 4)[1] == VertexClass::two);
  CHECK(classify_vertices(families::star(6), 8)[0] == VertexClass::six_plus);
  CHECK(classify_vertices(families::star(5), 7)[0] == VertexClass::five);
}

TEST_CASE("discharging worked values") {
  // 2-vertex between two 6-vertices
  {
    std::vector<Graph::Edge> edges{{0, 1}, {0, 2}};
    int next = 3;
    for (Vertex hub : {1, 2}) {
      for (int i = 0; i < 5; ++i) edges.push_back({hub, next++});
    }
    const Graph g(next, edges);
    const auto ledger = discharge_mad4(g, g.max_degree() + 2);
    CHECK(ledger.initial[0] == Rational(-2));
    CHECK(ledger.final_charge[0] == Rational(0));
  }
  // normal 3-vertex with three 5-neighbors at kappa = Delta + 2 = 7
  {
    std::vector<Graph::Edge> edges{{0, 1}, {0, 2}, {0, 3}};
    int next = 4;
    for (Vertex hub : {1, 2, 3}) {
      for (int i = 0; i < 4; ++i) edges.push_back({hub, next++});
    }
    const Graph g(next, edges);
    const auto classes = classify_vertices(g, 7);
    REQUIRE(classes[0] == VertexClass::normal_three);
    const auto ledger = discharge_mad4(g, 7);
    CHECK(ledger.final_charge[0] == Rational(0));
  }
  // special 3-vertex: one (kappa - Delta + 2)-neighbor and two 5-neighbors
  {
    // Delta = 5, kappa = 6, special degree 3
    std::vector<Graph::Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
    int next = 6;
    for (Vertex hub : {2, 3}) {
      for (int i = 0; i < 4; ++i) edges.push_back({hub, next++});
    }
    const Graph g(next, edges);
    const auto classes = classify_vertices(g, 6);
    REQUIRE(classes[0] == VertexClass::special_three);
    const auto ledger = discharge_mad4(g, 6);
    CHECK(ledger.final_charge[0] == Rational(0));
  }
  // 4-vertex: no rule touches it
  {
    const Graph k5 = families::complete(5);
    const auto ledger = discharge_mad4(k5, 6);
    for (const auto& c : ledger.final_charge) CHECK(c == Rational(0));
    CHECK(ledger.transfers.empty());
  }
}

TEST_CASE("charge conservation") {
  for (const auto& g : random_graphs(200, 12, 33)) {
    if (g.num_vertices() == 0) continue;
    for (int extra = 0; extra <= 3; ++extra) {
      const auto ledger = discharge_mad4(g, g.max_degree() + extra);
      for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(ledger.initial[v] == Rational(g.degree(v) - 4));
      CHECK(ledger.total_final() == ledger.total_initial());
      CHECK(ledger.total_final() == Rational(2 * g.num_edges() - 4 * g.num_vertices()));
      for (const auto& t : ledger.transfers) CHECK(t.amount > 0);
    }
  }
}

TEST_CASE("class predicate examples") {
  const Graph k4 = families::complete(4);
  CHECK(has_intersecting_triangles(k4).value);
  CHECK(has_triangle_adjacent_short_cycle(k4).value);
  const Graph c5 = families::cycle(5);
  CHECK_FALSE(has_intersecting_triangles(c5).value);
  CHECK_FALSE(has_triangle_adjacent_short_cycle(c5).value);
  CHECK(five_cycles_ok(c5).value);
  CHECK(three_plus_independent(families::star(4)).value);
  CHECK_FALSE(three_plus_independent(k4).value);
  CHECK(has_intersecting_triangles(bowtie()).value);
  CHECK_FALSE(has_triangle_adjacent_short_cycle(bowtie()).value);

  CHECK(is_subcubic_non_regular(families::path(4)));
  CHECK_FALSE(is_subcubic_non_regular(k4));
  CHECK_FALSE(is_subcubic_non_regular(families::star(4)));
  CHECK(is_delta4_non_regular(families::star(4)));
  CHECK_FALSE(is_delta4_non_regular(families::complete(5)));
  CHECK(is_delta4_non_regular(k4));

  // wheel W5: every rim edge lies on a triangle and the rim is a 5-cycle
  CHECK_FALSE(five_cycles_ok(families::wheel(5)).value);
}

TEST_CASE("cycle enumeration matches the oracle and witnesses re-verify") {
  for (const auto& g : random_graphs(120, 8, 45)) {
    std::map<std::size_t, int> by_length;
    for (const auto& c : oracle::all_cycles(g)) ++by_length[c.size()];
    for (int len = 3; len <= 6; ++len) {
      const auto cycles = cycles_of_length(g, len);
      CHECK(static_cast<int>(cycles.size()) == by_length[len]);
      for (const auto& c : cycles) {
        CHECK(static_cast<int>(c.size()) == len);
        CHECK(std::set<Vertex>(c.begin(), c.end()).size() == c.size());
        CHECK_NOTHROW(cycle_edges(g, c));
      }
    }
    for (const auto& r : {has_triangle_adjacent_short_cycle(g), has_intersecting_triangles(g)}) {
      if (!r.value) continue;
      REQUIRE(r.witness.size() == 2);
      for (const auto& c : r.witness) CHECK_NOTHROW(cycle_edges(g, c));
      CHECK(r.witness[0].size() == 3);
    }
    const auto five = five_cycles_ok(g);
    if (!five.value) {
      REQUIRE(five.witness.size() == 1);
      CHECK(five.witness[0].size() == 5);
      CHECK_NOTHROW(cycle_edges(g, five.witness[0]));
    }
    const auto indep = three_plus_independent(g);
    if (!indep.value) {
      const auto& pair = indep.witness.at(0);
      CHECK(g.has_edge(pair[0], pair[1]));
      CHECK(g.degree(pair[0]) >= 3);
      CHECK(g.degree(pair[1]) >= 3);
    }
  }
}

TEST_CASE("lemma audit on certified minimal graphs") {
  SUBCASE("C4 at kappa 2") {
    const auto r = lemma_audit(families::cycle(4), 2, {.assume_minimal = true});
    CHECK(r.at("L1").status == LemmaStatus::holds);
    CHECK(r.at("L2").status == LemmaStatus::holds);
    for (const auto& e : r.entries) {
      if (e.id != "L1" && e.id != "L2" && e.id.rfind("F2", 0) != 0) CHECK_MESSAGE(!e.applicable(), e.id);
    }
    CHECK(r.all_hold());
  }
  SUBCASE("K4 at kappa 4") {
    const auto r = lemma_audit(families::complete(4), 4, {.assume_minimal = true});
    CHECK(r.at("L1").status == LemmaStatus::holds);
    CHECK(r.at("L2").status == LemmaStatus::holds);
    CHECK(r.at("L5").status == LemmaStatus::vacuous);
    for (const char* id : {"L4", "L6a", "L6b", "L7", "L8", "L9", "L10", "L11"}) CHECK_FALSE(r.at(id).applicable());
    CHECK(r.all_hold());
  }
  SUBCASE("K3,3 at kappa 4") {
    const auto r = lemma_audit(families::complete_bipartite(3, 3), 4, {.assume_minimal = true});
    CHECK(r.at("L1").status == LemmaStatus::holds);
    CHECK(r.at("L2").status == LemmaStatus::holds);
    CHECK(r.all_hold());
  }
  SUBCASE("cycles at kappa 2") {
    for (int n = 3; n <= 8; ++n) {
      const Graph c = families::cycle(n);
      if (is_deletion_minimal(c, 2).verdict != Minimality::minimal) continue;
      CHECK(applicable_hold(lemma_audit(c, 2, {.assume_minimal = true})));
    }
  }
}

TEST_CASE("every violation carries a witness") {
  for (const auto& g : random_graphs(80, 8, 57)) {
    if (g.num_vertices() == 0) continue;
    for (int extra = 0; extra <= 3; ++extra) {
      const auto r = lemma_audit(g, g.max_degree() + extra);
      for (const auto& e : r.entries) {
        if (e.status == LemmaStatus::violated) {
          CHECK_FALSE(e.detail.empty());
          if (e.id != "L1") CHECK_FALSE(e.witness.empty());
        }
        if (!e.applicable()) CHECK(e.holds());
      }
    }
  }
}

TEST_CASE("lemma checks detect violations on non-minimal graphs") {
  // DegreeSum fails at a leaf of P3
  const auto p3 = lemma_audit(families::path(3), 3);
  CHECK(p3.at("L2").status == LemmaStatus::violated);
  CHECK(p3.at("L1").status == LemmaStatus::violated);

  // 2-vertex next to a 3-vertex at kappa = Delta + 1
  const Graph g(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  const auto r = lemma_audit(g, g.max_degree() + 1);
  CHECK(r.at("L5").status == LemmaStatus::violated);
  CHECK(r.at("L4").status == LemmaStatus::not_applicable);

  // (4,4,4)-triangle with Delta 5 at kappa 7
  std::vector<Graph::Edge> edges{{0, 1}, {1, 2}, {2, 0}};
  int next = 3;
  for (Vertex v : {0, 1, 2}) {
    for (int i = 0; i < 2; ++i) edges.push_back({v, next++});
  }
  for (int i = 0; i < 5; ++i) edges.push_back({next, next + 1 + i});
  const Graph tri(next + 6, edges);
  REQUIRE(tri.max_degree() == 5);
  const auto t = lemma_audit(tri, 7);
  CHECK(t.at("L11").status == LemmaStatus::violated);
  CHECK(lemma_audit(tri, 6).at("L11").status == LemmaStatus::not_applicable);
}

TEST_CASE("Good-3-vertex (a) matches exhaustive enumeration") {
  // v = 0 is a 3-vertex with neighbors w = 1 (degree 4), 2, 3; Delta 4, kappa 6
  const Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}});
  const int kappa = 6;
  const Subgraph minus = delete_edge(g, 0);
  const auto cycles = oracle::all_cycles(minus.graph);
  bool always_one = true;
  std::vector<int> colors(minus.graph.num_edges(), 1);
  while (true) {
    if (oracle::acyclic(minus.graph, colors, cycles)) {
      std::set<int> at_w, at_v;
      for (EdgeId e = 0; e < minus.graph.num_edges(); ++e) {
        const auto& ed = minus.graph.edge(e);
        if (ed.u == 1 || ed.v == 1) at_w.insert(colors[e]);
        if (ed.u == 0 || ed.v == 0) at_v.insert(colors[e]);
      }
      int shared = 0;
      for (int c : at_w) shared += at_v.count(c);
      always_one = always_one && shared == 1;
    }
    std::size_t i = 0;
    while (i < colors.size() && colors[i] == kappa) colors[i++] = 1;
    if (i == colors.size()) break;
    ++colors[i];
  }
  const auto r = lemma_audit(g, kappa);
  CHECK(r.at("L6a").status == (always_one ? LemmaStatus::holds : LemmaStatus::violated));
  CHECK_FALSE(always_one);

  AuditOptions tight;
  tight.enumeration_edge_limit = 3;
  CHECK(lemma_audit(g, kappa, tight).at("L6a").status == LemmaStatus::skipped);
}

TEST_CASE("Fact 2 readings") {
  const Graph k4 = families::complete(4);
  const auto report = is_deletion_minimal(k4, 4);
  REQUIRE(report.verdict == Minimality::minimal);
  for (EdgeId e = 0; e < 6; ++e) {
    const auto check = audit_fact2(k4, 4, e, report.certificate[e]);
    CHECK(check.no_valid_extension);
    CHECK(check.holds());
    CHECK(check.rhs == 4 + 2 * check.shared + 2);
    CHECK(check.reading_uv_holds());
    CHECK(check.reading_vu_holds());
  }
}

TEST_CASE("NMAD4 scheme: lemma-clean mad<4 graphs cannot end nonnegative") {
  EnumerationOptions opt;
  opt.min_n = 2;
  opt.max_n = 7;
  opt.filter = [](const Graph& g) { return max_average_degree(g) < 4; };
  AuditOptions audit;
  audit.assume_minimal = false;
  for (const auto& g : enumerate_graphs(opt)) {
    const int kappa = g.max_degree() + 2;
    const bool lemmas = applicable_hold(lemma_audit(g, kappa, audit));
    const bool nonnegative = discharge_mad4(g, kappa).all_nonnegative();
    CHECK_FALSE((lemmas && nonnegative));
  }
}
