#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "brute.hpp"
#include "trifree/constructions.hpp"
#include "trifree/graph.hpp"

using namespace trifree;

TEST_SUITE("graph") {

TEST_CASE("construction merges duplicates and rejects bad endpoints") {
  const Graph g(4, {{0, 1}, {1, 0}, {2, 3}, {0, 1}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});

  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(-1, {}), GraphError);
}

TEST_CASE("rows span several words past 64 vertices") {
  const Graph g(130, {{0, 129}, {64, 65}, {63, 64}});
  CHECK(g.words_per_row() == 3);
  CHECK(g.adjacent(129, 0));
  CHECK(g.degree(64) == 2);
  CHECK(g.neighbors(64) == std::vector<int>{63, 65});
  CHECK(g.common_neighbors(63, 65) == 1);
}

TEST_CASE("triangle count matches the cubic brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = brute::random_graph(n, 0.15 + 0.7 * (trial % 5) / 4.0, rng);
    const auto expected = brute::triangles(g);
    CHECK(triangle_count(g) == expected);
    const auto t = find_triangle(g);
    CHECK(t.has_value() == (expected > 0));
    if (t) {
      const auto [u, v, w] = *t;
      CHECK(u < v);
      CHECK(v < w);
      CHECK(g.adjacent(u, v));
      CHECK(g.adjacent(v, w));
      CHECK(g.adjacent(u, w));
    }
  }
}

TEST_CASE("complete graph triangles") {
  for (int n = 3; n <= 70; n += 7) {
    const Graph k = Graph::generate(n, [](int, int) { return true; });
    CHECK(triangle_count(k) == static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 6);
  }
}

TEST_CASE("bipartiteness agrees with exhaustive 2-colouring") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = brute::random_graph(n, 0.25, rng);
    CHECK(is_bipartite(g) == brute::bipartite(g));
  }
  CHECK(is_bipartite(constructions::cycle(6)));
  CHECK_FALSE(is_bipartite(constructions::cycle(7)));
  CHECK(is_bipartite(Graph(0, {})));
}

TEST_CASE("degree statistics") {
  const auto s = degree_stats(constructions::petersen());
  CHECK(s.is_regular);
  CHECK(s.degree == 3);
  const auto p = degree_stats(Graph(3, {{0, 1}}));
  CHECK_FALSE(p.is_regular);
  CHECK_FALSE(p.degree.has_value());
  CHECK(p.min_degree == 0);
  CHECK(p.max_degree == 1);
  CHECK_THROWS_AS(degree_stats(Graph(0, {})), GraphError);
}

TEST_CASE("blow-up structure") {
  const Graph c5 = constructions::cycle(5);
  const std::vector<int> sizes{1, 2, 3, 1, 2};
  const Graph b = blow_up(c5, sizes);
  CHECK(b.order() == 9);
  // edges: sum over cycle edges of size products
  std::int64_t expected = 0;
  for (auto [u, v] : c5.edges()) expected += sizes[u] * sizes[v];
  CHECK(b.size() == expected);
  CHECK(is_triangle_free(b));
  // class blocks are contiguous: vertices 1,2 are copies of vertex 1
  CHECK(b.neighbors(1) == b.neighbors(2));
  CHECK_FALSE(b.adjacent(1, 2));

  const Graph t3 = blow_up(constructions::petersen(), 3);
  CHECK(t3.order() == 30);
  CHECK(t3.size() == 15 * 9);
  CHECK(degree_stats(t3).degree == 9);

  CHECK_THROWS_AS(blow_up(c5, std::vector<int>{1, 1, 1}), GraphError);
  CHECK_THROWS_AS(blow_up(c5, std::vector<int>{1, 1, 0, 1, 1}), GraphError);
  CHECK_THROWS_AS(blow_up(c5, 0), GraphError);
}

TEST_CASE("relabel applies the permutation") {
  const Graph g(4, {{0, 1}, {1, 2}});
  const std::vector<int> perm{3, 2, 1, 0};
  const Graph h = relabel(g, perm);
  CHECK(h.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(relabel(g, std::vector<int>{0, 0, 1, 2}), GraphError);
  CHECK_THROWS_AS(relabel(g, std::vector<int>{0, 1, 2}), GraphError);
}

TEST_CASE("edge list round trip and comments") {
  const Graph p = constructions::petersen();
  std::ostringstream out;
  write_edge_list(out, p);
  CHECK(parse_edge_list(out.str()) == p);

  const Graph g = parse_edge_list("# triangle\n3 3\n\n0 1\n# middle\n1 2\n2 0\n");
  CHECK(g.size() == 3);
  CHECK(triangle_count(g) == 1);

  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ParseError);
}

}  // TEST_SUITE
