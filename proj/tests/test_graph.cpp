#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "copgame/generators.hpp"
#include "copgame/graph.hpp"
#include "copgame/graph_io.hpp"
#include "copgame/rational.hpp"
#include "copgame/rng.hpp"
#include "oracles/catalog.hpp"
#include "oracles/cycles.hpp"

using namespace copgame;

namespace {

void check_simple_symmetric(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    for (Vertex w : nb) {
      CHECK(w != v);
      CHECK(g.has_edge(w, v));
    }
    degree_sum += nb.size();
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

bool regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graph construction rejects non-simple input") {
  const std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph(2, loop), std::invalid_argument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), std::invalid_argument);
  const std::vector<Edge> range{{0, 2}};
  CHECK_THROWS_AS(Graph(2, range), std::invalid_argument);
  const Graph g(3, std::vector<Edge>{{2, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("distances_from") {
  const auto c6 = distances_from(cycle_graph(6), 0);
  CHECK(c6 == std::vector<std::uint32_t>{0, 1, 2, 3, 2, 1});
  CHECK(distances_from(path_graph(1), 0) == std::vector<std::uint32_t>{0});
  const Graph pet = petersen_graph();
  for (Vertex s = 0; s < 10; ++s) {
    auto d = distances_from(pet, s);
    CHECK(std::count(d.begin(), d.end(), 0u) == 1);
    CHECK(std::count(d.begin(), d.end(), 1u) == 3);
    CHECK(std::count(d.begin(), d.end(), 2u) == 6);
  }
  const Graph two(3, std::vector<Edge>{{0, 1}});
  CHECK(distances_from(two, 0)[2] == kUnreachable);
  CHECK_THROWS_AS(distances_from(two, 3), std::out_of_range);
}

TEST_CASE("distances satisfy the triangle inequality on sampled triples") {
  Rng rng(11);
  for (const Graph& g : {petersen_graph(), grid_graph(4, 5), gen_gnp(40, 0.1, 3), random_planar_triangulation(20, 2)}) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> d;
    for (Vertex v = 0; v < n; ++v) d.push_back(distances_from(g, v));
    for (int i = 0; i < 500; ++i) {
      const auto a = rng.below(n), b = rng.below(n), c = rng.below(n);
      CHECK(d[a][b] == d[b][a]);
      if (d[a][b] != kUnreachable && d[b][c] != kUnreachable) CHECK(d[a][c] <= d[a][b] + d[b][c]);
    }
  }
}

TEST_CASE("girth agrees with cycle enumeration") {
  CHECK(girth(cycle_graph(5)) == 5u);
  CHECK_FALSE(girth(random_tree(30, 4)).has_value());
  CHECK(girth(petersen_graph()) == 5u);
  CHECK(oracle::girth_by_cycles(petersen_graph()) == 5u);
  CHECK(girth(heawood_graph()) == 6u);
  CHECK(oracle::girth_by_cycles(heawood_graph()) == 6u);
  CHECK(girth(dodecahedron_graph()) == oracle::girth_by_cycles(dodecahedron_graph()));
  CHECK(girth(complete_graph(4)) == 3u);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) CHECK(girth(g) == oracle::girth_by_cycles(g));
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = gen_gnp(14, 0.2, s);
    CHECK(girth(g) == oracle::girth_by_cycles(g));
  }
}

TEST_CASE("metrics") {
  const auto pm = metrics(petersen_graph());
  CHECK(pm.min_degree == 3);
  CHECK(pm.max_degree == 3);
  CHECK(pm.girth == 5u);
  CHECK(pm.alpha == Rational(15, 10));
  CHECK(pm.alpha.num() == 3);
  CHECK(pm.alpha.den() == 2);
  CHECK(pm.connected);
  const auto k4 = metrics(complete_graph(4));
  CHECK(k4.min_degree == 3);
  CHECK(k4.girth == 3u);
  CHECK(k4.alpha == Rational(6, 4));
  const auto empty = metrics(Graph(5, std::vector<Edge>{}));
  CHECK_FALSE(empty.girth.has_value());
  CHECK(empty.min_degree == 0);
  CHECK_FALSE(empty.connected);
  CHECK(empty.component_count == 5);
  CHECK_THROWS(metrics(Graph(0, std::vector<Edge>{})));
}

TEST_CASE("check_isometric_path") {
  const Graph c6 = cycle_graph(6);
  const std::vector<Vertex> p4{0, 1, 2, 3};
  const std::vector<Vertex> p5{0, 1, 2, 3, 4};
  CHECK(check_isometric_path(c6, p4));
  CHECK_FALSE(check_isometric_path(c6, p5));
  const std::vector<Vertex> gap{0, 2};
  CHECK_THROWS_AS(check_isometric_path(c6, gap), std::invalid_argument);
  const std::vector<Vertex> repeat{0, 1, 0};
  CHECK_THROWS_AS(check_isometric_path(c6, repeat), std::invalid_argument);
  const std::vector<Vertex> none;
  CHECK_THROWS_AS(check_isometric_path(c6, none), std::invalid_argument);

  // Every monotone staircase in the 3x3 grid from corner to corner.
  const Graph grid = grid_graph(3, 3);
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) != 2) continue;
    std::vector<Vertex> path{0};
    int r = 0, c = 0;
    for (int step = 0; step < 4; ++step) {
      (mask >> step & 1) ? ++r : ++c;
      path.push_back(static_cast<Vertex>(r * 3 + c));
    }
    CHECK(check_isometric_path(grid, path));
  }
}

TEST_CASE("isometric implies endpoint distance equals length") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = gen_gnp(12, 0.3, s);
    Rng rng(s);
    for (int t = 0; t < 100; ++t) {
      std::vector<Vertex> walk{static_cast<Vertex>(rng.below(12))};
      for (int step = 0; step < 5; ++step) {
        const auto nb = g.neighbors(walk.back());
        if (nb.empty()) break;
        const Vertex w = nb[rng.below(nb.size())];
        if (std::find(walk.begin(), walk.end(), w) != walk.end()) break;
        walk.push_back(w);
      }
      if (check_isometric_path(g, walk)) {
        CHECK(distances_from(g, walk.front())[walk.back()] == walk.size() - 1);
      }
    }
  }
}

TEST_CASE("named generators") {
  const Graph c5 = gen_named("cycle", {5});
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(regular(c5, 2));
  const Graph pet = gen_named("petersen", {});
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(regular(pet, 3));
  const Graph g33 = gen_named("grid", {3, 3});
  CHECK(g33.vertex_count() == 9);
  CHECK(g33.edge_count() == 12);
  CHECK(graph_from_spec("grid:3x4") == grid_graph(3, 4));
  CHECK(graph_from_spec("grid:3:4") == grid_graph(3, 4));
  CHECK(graph_from_spec("complete:5").edge_count() == 10);
  CHECK(regular(hypercube_graph(4), 4));
  CHECK(hypercube_graph(4).edge_count() == 32);
  const Graph dodeca = dodecahedron_graph();
  CHECK(dodeca.vertex_count() == 20);
  CHECK(regular(dodeca, 3));
  CHECK(girth(dodeca) == 5u);
  CHECK_THROWS_AS(gen_named("nonsense", {}), std::invalid_argument);
  CHECK_THROWS_AS(gen_named("cycle", {2}), std::invalid_argument);
  CHECK_THROWS_AS(gen_named("cycle", {}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("cycle:abc"), std::invalid_argument);
  for (const Graph& g : {c5, pet, g33, dodeca, heawood_graph(), hypercube_graph(3), complete_graph(6)}) {
    check_simple_symmetric(g);
  }
}

TEST_CASE("random trees and triangulations") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph t = random_tree(25, s);
    CHECK(t.edge_count() == 24);
    CHECK(is_connected(t));
    check_simple_symmetric(t);
    const std::size_t n = 4 + s % 11;
    const Graph tri = random_planar_triangulation(n, s);
    CHECK(tri.vertex_count() == n);
    CHECK(tri.edge_count() == 3 * n - 6);
    CHECK(is_connected(tri));
    CHECK(metrics(tri).min_degree >= 3);
    check_simple_symmetric(tri);
  }
  CHECK(random_tree(25, 7) == random_tree(25, 7));
}

TEST_CASE("projective plane incidence graphs") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Graph g = gen_projective_incidence(q);
    const std::size_t points = q * q + q + 1;
    CHECK(g.vertex_count() == 2 * points);
    CHECK(regular(g, q + 1));
    CHECK(girth(g) == 6u);
    check_simple_symmetric(g);
    // Bipartite between points [0, N) and lines [N, 2N).
    for (const auto& [u, v] : g.edges()) CHECK((u < points) != (v < points));
  }
  CHECK(oracle::girth_by_cycles(gen_projective_incidence(3)) == 6u);
  CHECK(gen_projective_incidence(2).edge_count() == 21);
  CHECK(gen_projective_incidence(3).vertex_count() == 26);
  CHECK_THROWS_WITH_AS(gen_projective_incidence(4), doctest::Contains("prime-power"), std::invalid_argument);
  CHECK_THROWS_AS(gen_projective_incidence(6), std::invalid_argument);
  const auto plane = projective_plane(2);
  CHECK(plane.labels.size() == 14);
}

TEST_CASE("gen_gnp") {
  CHECK(gen_gnp(10, 0.0, 1).edge_count() == 0);
  CHECK(gen_gnp(10, 1.0, 1) == complete_graph(10));
  CHECK(gen_gnp(50, 0.2, 9) == gen_gnp(50, 0.2, 9));
  CHECK(gen_gnp(50, 0.2, 9).edges() != gen_gnp(50, 0.2, 10).edges());
  CHECK_THROWS_AS(gen_gnp(10, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_gnp(10, 1.5, 1), std::invalid_argument);

  const double n = 1000;
  const double p = 2.5 * std::log(n) / n;
  const double pairs = n * (n - 1) / 2;
  const double mean = pairs * p;
  const double sd = std::sqrt(pairs * p * (1 - p));
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const double e = static_cast<double>(gen_gnp(1000, p, seed).edge_count());
    CHECK(std::abs(e - mean) <= 4 * sd);
  }
}

TEST_CASE("edge-list reading") {
  std::istringstream in("3\n0 1\n1 2\n");
  CHECK(read_graph(in) == path_graph(3));

  std::istringstream comments("# header\n\n4  # order\n2 3\n# between\n0 1\n");
  const Graph g = read_graph(comments);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});

  auto error_line = [](const std::string& text) -> std::size_t {
    std::istringstream s(text);
    try {
      read_graph(s);
    } catch (const GraphParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("2\n0 0\n") == 2);
  CHECK(error_line("3\n0 1\n1 0\n") == 3);
  CHECK(error_line("3\n0 1\n\n0 5\n") == 4);
  CHECK(error_line("3\n0 x\n") == 2);
  CHECK(error_line("abc\n") == 1);
  CHECK(error_line("3\n0 1 2\n") == 2);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_graph(empty), GraphParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.edges"), std::runtime_error);
}

TEST_CASE("edge-list round trip is exact") {
  for (const Graph& g : {petersen_graph(), grid_graph(3, 4), gen_gnp(30, 0.2, 5), random_tree(12, 1),
                         gen_projective_incidence(3), Graph(3, std::vector<Edge>{})}) {
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    const Graph back = read_graph(in);
    CHECK(back == g);
    std::ostringstream again;
    write_graph(again, back);
    CHECK(again.str() == out.str());
  }
  std::ostringstream labelled;
  const auto plane = projective_plane(2);
  write_graph(labelled, plane.graph, plane.labels);
  std::istringstream in(labelled.str());
  CHECK(read_graph(in) == plane.graph);
}

TEST_CASE("graph catalog sizes") {
  // Unlabelled graphs and connected graphs on n vertices.
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  const std::size_t conn[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(oracle::all_graphs(n).size() == all[n - 1]);
    CHECK(oracle::connected_graphs(n).size() == conn[n - 1]);
  }
  CHECK(oracle::connected_graphs_up_to(6).size() == 143);
}

TEST_CASE("rng is deterministic and splittable") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng s1 = Rng(42).split(1), s2 = Rng(42).split(2);
  CHECK(s1.next_u64() != s2.next_u64());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.below(7) < 7);
  }
  CHECK(Rng::kAlgorithm == "mt19937_64+splitmix64-seed/v1");
}

TEST_CASE("components and induced subgraphs") {
  const Graph g(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(induced_subgraph(g, comps[0]) == complete_graph(3));
  CHECK(induced_subgraph(g, comps[1]) == complete_graph(3));
  const auto ids = component_ids(g);
  CHECK(ids[0] == ids[2]);
  CHECK(ids[0] != ids[3]);
}
