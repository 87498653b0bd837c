#include <doctest.h>

#include <random>

#include "aec/coloring.hpp"
#include "aec/io.hpp"
#include "aec/solver.hpp"
#include "oracles.hpp"

using namespace aec;

namespace {

EdgeColoring colored(int kappa, std::vector<Color> colors) { return EdgeColoring(kappa, std::move(colors)); }

// C4 with edges 0-1, 1-2, 2-3, 3-0
Graph c4() { return families::cycle(4); }

// Random proper partial coloring: edges in random order get a random color
// not yet used at either endpoint, or stay uncolored.
EdgeColoring random_proper_partial(const Graph& g, int kappa, double fill, std::mt19937_64& rng) {
  EdgeColoring c(kappa, g.num_edges());
  std::bernoulli_distribution keep(fill);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!keep(rng)) continue;
    const auto [u, v] = g.edge(e);
    const auto options = (ColorSet::range(kappa) - used_colors(g, c, u) - used_colors(g, c, v)).to_vector();
    if (options.empty()) continue;
    c.assign(e, options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  return c;
}

}  // namespace

TEST_CASE("color sets") {
  CHECK(ColorSet::range(3) == ColorSet::of({1, 2, 3}));
  CHECK(ColorSet::range(63).size() == 63);
  CHECK(to_string(ColorSet::of({2, 1})) == "{1,2}");
  CHECK(ColorSet::of({4, 5}).min() == 4);
  CHECK(ColorSet().min() == 0);
}

TEST_CASE("edge coloring type") {
  CHECK_THROWS(EdgeColoring(0, 3));
  CHECK_THROWS(EdgeColoring(64, 3));
  EdgeColoring c(3, 2);
  CHECK_THROWS(c.assign(0, 4));
  CHECK_THROWS(c.assign(0, 0));
  c.assign(0, 3);
  CHECK(c.colored_count() == 1);
  CHECK_FALSE(c.is_total());
  c.clear(0);
  CHECK_FALSE(c.is_colored(0));
}

TEST_CASE("used and free colors") {
  const Graph star = families::star(3);
  const Vertex center = 0;
  CHECK(used_colors(star, colored(3, {1, 2, 3}), center) == ColorSet::of({1, 2, 3}));
  CHECK(used_colors(star, EdgeColoring(3, 3), 0).empty());
  const Graph p3 = families::path(3);
  CHECK(used_colors(p3, colored(2, {1, 2}), 1) == ColorSet::of({1, 2}));

  CHECK(free_colors(star, colored(5, {1, 2, 3}), center) == ColorSet::of({4, 5}));
  CHECK(free_colors(star, EdgeColoring(3, 3), center) == ColorSet::of({1, 2, 3}));
  CHECK(free_colors(star, colored(3, {1, 2, 3}), center).empty());
}

TEST_CASE("upsilon and W") {
  // P3 u - v - w with uv = 1, vw = 2
  const Graph p3 = families::path(3);
  const auto c = colored(3, {1, 2});
  CHECK(upsilon(p3, c, 0, 1) == ColorSet::of({2}));
  CHECK(upsilon(p3, c, 1, 0).empty());
  CHECK_THROWS(upsilon(p3, EdgeColoring(3, 2), 0, 1));
  CHECK_THROWS(upsilon(p3, c, 0, 2));

  const Graph star = families::star(3);
  CHECK(w_set(star, colored(3, {1, 2, 3}), 0, 1).empty());

  const Graph triangle = families::cycle(3);  // 0-1, 1-2, 2-0 as u, v, w
  CHECK(w_set(triangle, colored(3, {1, 2, 3}), 0, 1).empty());

  // a - u - v - b as 0 - 1 - 2 - 3
  const Graph p4 = families::path(4);
  CHECK(w_set(p4, colored(3, {2, 1, 2}), 1, 2) == std::vector<Vertex>{0});
}

TEST_CASE("upsilon and W agree on random partial colorings") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    const EdgeColoring c = random_proper_partial(g, 5, 0.8, rng);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!c.is_colored(e)) continue;
      for (auto [u, v] : {std::pair{g.edge(e).u, g.edge(e).v}, std::pair{g.edge(e).v, g.edge(e).u}}) {
        const ColorSet ups = upsilon(g, c, u, v);
        CHECK(ups == used_colors(g, c, v) - ColorSet::of({c.color(e)}));
        const auto w = w_set(g, c, u, v);
        for (const auto& inc : g.incident(u)) {
          const bool in_w = std::find(w.begin(), w.end(), inc.neighbor) != w.end();
          CHECK(in_w == (c.is_colored(inc.edge) && ups.contains(c.color(inc.edge))));
        }
      }
    }
  }
}

TEST_CASE("maximal dichromatic path examples") {
  const Graph p4 = families::path(4);
  const auto path = maximal_dichromatic_path(p4, colored(2, {1, 2, 1}), 0, 1, 2);
  CHECK_FALSE(path.closed);
  CHECK(path.edges.size() == 3);
  // listed from the end reached along the origin's alpha-edge
  CHECK(path.vertices == std::vector<Vertex>{3, 2, 1, 0});

  const auto cycle = maximal_dichromatic_path(c4(), colored(2, {1, 2, 1, 2}), 2, 1, 2);
  CHECK(cycle.closed);
  CHECK(cycle.edges.size() == 4);
  CHECK(cycle.vertices.front() == 2);

  const auto lone = maximal_dichromatic_path(p4, colored(4, {3, 4, 3}), 1, 1, 2);
  CHECK(lone.vertices == std::vector<Vertex>{1});
  CHECK(lone.edges.empty());

  const Graph star = families::star(2);
  CHECK_THROWS_AS(maximal_dichromatic_path(star, colored(2, {1, 1}), 0, 1, 2), ImproperColoringError);
  CHECK_THROWS_AS(maximal_dichromatic_path(p4, colored(2, {1, 2, 1}), 0, 1, 1), std::invalid_argument);
}

TEST_CASE("Fact 1: the two-colored component is unique and queries are stable") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const Graph g = oracle::random_graph(7, 0.45, rng);
    const int kappa = 4;
    const EdgeColoring c = random_proper_partial(g, kappa, 0.9, rng);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const Color a = 1 + static_cast<int>(rng() % kappa);
      Color b = 1 + static_cast<int>(rng() % kappa);
      if (a == b) b = a % kappa + 1;
      const auto q = maximal_dichromatic_path(g, c, v, a, b);
      CHECK(q == maximal_dichromatic_path(g, c, v, a, b));
      // alternation
      for (std::size_t i = 0; i + 1 < q.edges.size(); ++i) CHECK(c.color(q.edges[i]) != c.color(q.edges[i + 1]));
      // every vertex of the component reports the same edge set
      std::vector<EdgeId> sorted = q.edges;
      std::sort(sorted.begin(), sorted.end());
      for (Vertex w : q.vertices) {
        auto other = maximal_dichromatic_path(g, c, w, a, b).edges;
        std::sort(other.begin(), other.end());
        CHECK(other == sorted);
      }
      // open ends miss one of the two colors
      if (!q.closed && !q.edges.empty()) {
        for (Vertex end : {q.vertices.front(), q.vertices.back()}) {
          const ColorSet at = used_colors(g, c, end);
          CHECK_FALSE((at.contains(a) && at.contains(b)));
        }
      }
    }
  }
}

TEST_CASE("critical and alternating paths") {
  const Graph p3 = families::path(3);  // u - a - v
  CHECK_FALSE(exists_critical_path(p3, colored(2, {1, 2}), 1, 2, 0, 2));
  CHECK(exists_alternating_path(p3, colored(2, {1, 2}), 1, 2, 0, 2));
  const Graph p4 = families::path(4);  // u - a - b - v
  CHECK(exists_critical_path(p4, colored(2, {1, 2, 1}), 1, 2, 0, 3));
  CHECK_FALSE(exists_alternating_path(p4, colored(2, {1, 2, 1}), 1, 2, 0, 3));
  CHECK_FALSE(exists_critical_path(p4, colored(4, {3, 4, 3}), 1, 2, 0, 3));
  CHECK_THROWS_AS(exists_alternating_path(p3, colored(2, {1, 2}), 1, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("critical and alternating paths are exclusive on acyclic colorings") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 150; ++round) {
    const Graph g = oracle::random_graph(7, 0.4, rng);
    if (g.num_edges() == 0) continue;
    const auto c = sample_acyclic_coloring(g, g.max_degree() + 2, rng);
    REQUIRE(c.has_value());
    for (int a = 1; a <= c->kappa(); ++a) {
      for (int b = 1; b <= c->kappa(); ++b) {
        if (a == b) continue;
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
          for (Vertex v = 0; v < g.num_vertices(); ++v) {
            CHECK_FALSE((exists_critical_path(g, *c, a, b, u, v) && exists_alternating_path(g, *c, a, b, u, v)));
          }
        }
      }
    }
  }
}

TEST_CASE("candidate colors") {
  // e = 0-1 in a graph where 0 has colors {1,2} and 1 has {3}
  const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  CHECK(candidate_colors(g, colored(5, {0, 1, 2, 3}), 0) == ColorSet::of({4, 5}));
  CHECK(candidate_colors(families::path(2), EdgeColoring(4, 1), 0) == ColorSet::range(4));
  CHECK_THROWS(candidate_colors(g, colored(5, {1, 2, 3, 4}), 0));

  // K4 with edge 0 uncolored and the others distinct
  const Graph k4 = families::complete(4);
  const auto c = colored(5, {0, 1, 2, 3, 4, 5});
  const auto [u, v] = k4.edge(0);
  ColorSet adjacent;
  for (EdgeId e = 1; e < 6; ++e) {
    const auto& f = k4.edge(e);
    if (f.u == u || f.v == u || f.u == v || f.v == v) adjacent.insert(c.color(e));
  }
  CHECK(candidate_colors(k4, c, 0) == ColorSet::range(5) - adjacent);
}

TEST_CASE("valid colors") {
  // C4 colored 1,2,1 with the closing edge 3-0 open; 2 closes a cycle
  const auto c = colored(3, {1, 2, 1, 0});
  CHECK(valid_colors(c4(), c, 3) == ColorSet::of({3}));
  CHECK(candidate_colors(c4(), c, 3) == ColorSet::of({2, 3}));

  const Graph tree(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto partial = random_proper_partial(tree, 4, 0.7, rng);
    for (EdgeId e = 0; e < tree.num_edges(); ++e) {
      if (!partial.is_colored(e)) CHECK(valid_colors(tree, partial, e) == candidate_colors(tree, partial, e));
    }
  }

  CHECK_THROWS(valid_colors(c4(), colored(2, {1, 2, 1, 2}), 0));
}

TEST_CASE("valid colors on K4 with one open edge match brute-force completion") {
  const Graph k4 = families::complete(4);
  const auto cycles = oracle::all_cycles(k4);
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 40) {
    auto full = sample_acyclic_coloring(k4, 5, rng);
    REQUIRE(full.has_value());
    const EdgeId open = static_cast<EdgeId>(rng() % 6);
    EdgeColoring partial = *full;
    partial.clear(open);
    ColorSet expected;
    for (Color a = 1; a <= 5; ++a) {
      auto colors = partial.colors();
      colors[open] = a;
      if (oracle::acyclic(k4, colors, cycles)) expected.insert(a);
    }
    CHECK(valid_colors(k4, partial, open) == expected);
    CHECK_FALSE(expected.empty());
    ++checked;
  }
}

TEST_CASE("valid colors are candidates and stay acyclic") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 300; ++round) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    const int kappa = 5;
    EdgeColoring c(kappa, g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const ColorSet valid = valid_colors(g, c, e);
      const ColorSet cand = candidate_colors(g, c, e);
      CHECK((valid - cand).empty());
      if (valid.empty()) continue;
      const auto options = valid.to_vector();
      c.assign(e, options[rng() % options.size()]);
      CHECK(acyclic_so_far(g, c).ok);
    }
  }
}

TEST_CASE("verify_acyclic examples") {
  const auto bad = verify_acyclic(c4(), colored(2, {1, 2, 1, 2}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.cycle.has_value());
  CHECK(bad.cycle->size() == 4);
  CHECK(verify_acyclic(c4(), colored(3, {1, 2, 1, 3})).ok);
  CHECK_THROWS_AS(verify_acyclic(c4(), colored(3, {1, 2, 1, 0})), std::invalid_argument);

  const auto improper = verify_acyclic(c4(), colored(3, {1, 1, 2, 3}));
  CHECK_FALSE(improper.ok);
  REQUIRE(improper.improper.has_value());
  CHECK(improper.improper->vertex == 1);
  CHECK(improper.improper->color == 1);

  SolverConfig cfg;
  cfg.kappa = 5;
  const auto k4 = decide_colorable(families::complete(4), cfg);
  REQUIRE(k4.coloring.has_value());
  CHECK(verify_acyclic(families::complete(4), *k4.coloring).ok);
  CHECK(oracle::acyclic(families::complete(4), k4.coloring->colors()));
}

TEST_CASE("verify_acyclic agrees with the cycle oracle") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 400; ++round) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 6), 0.55, rng);
    if (g.num_edges() == 0) continue;
    const int kappa = 2 + static_cast<int>(rng() % 4);
    const auto colors = oracle::random_colors(g.num_edges(), kappa, rng);
    const auto verdict = verify_acyclic(g, EdgeColoring(kappa, colors));
    CHECK(verdict.ok == oracle::acyclic(g, colors));
    if (verdict.cycle) {
      std::set<Color> seen;
      for (EdgeId e : *verdict.cycle) seen.insert(colors[e]);
      CHECK(seen.size() == 2);
    }
  }
}

TEST_CASE("swap colors") {
  const Graph p3 = families::path(3);
  const auto c = colored(2, {1, 2});
  const auto swapped = swap_colors(c, 0, 1);
  CHECK(swapped.colors() == std::vector<Color>{2, 1});
  CHECK(is_proper(p3, swapped));
  CHECK(swap_colors(swapped, 0, 1) == c);

  // C4 colored 1,2,1,3: swapping the 3-edge (3-0) with the 1-edge 0-1
  const auto c4c = colored(3, {1, 2, 1, 3});
  const auto broken = swap_colors(c4c, 3, 0);
  CHECK_FALSE(is_proper(c4(), broken));
  REQUIRE(find_improper(c4(), broken).has_value());
  CHECK_THROWS(swap_colors(colored(3, {1, 0}), 0, 1));
}

TEST_CASE("coloring file round trip and errors") {
  const Graph g = c4();
  const auto c = colored(3, {1, 2, 1, 0});
  const std::string text = write_coloring(g, c);
  CHECK(text == "k 3\n0 1 1\n1 2 2\n2 3 1\n3 0 0\n");
  CHECK(parse_coloring(g, text) == c);
  CHECK(parse_coloring(g, "k 3\n3 0 2\n1 0 1\n").colors() == std::vector<Color>{1, 0, 0, 2});

  auto kind_of = [&](std::string_view t) {
    try {
      parse_coloring(g, t);
    } catch (const ParseError& e) {
      return std::optional<ParseErrorKind>(e.kind());
    }
    return std::optional<ParseErrorKind>();
  };
  CHECK(kind_of("k 3\n0 2 1\n") == ParseErrorKind::unknown_edge);
  CHECK(kind_of("k 3\n0 1 1\n1 0 2\n") == ParseErrorKind::duplicate_edge);
  CHECK(kind_of("k 3\n0 1 4\n") == ParseErrorKind::color_out_of_range);
  CHECK(kind_of("0 1 1\n") == ParseErrorKind::malformed);
  CHECK(kind_of("") == ParseErrorKind::truncated);
}
