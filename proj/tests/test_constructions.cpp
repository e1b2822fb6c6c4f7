#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "trifree/constructions.hpp"
#include "trifree/spectral.hpp"
#include "trifree/srg.hpp"

using namespace trifree;
using namespace trifree::constructions;

namespace {

Graph induced(const Graph& g, const std::vector<int>& keep) {
  return Graph::generate(static_cast<int>(keep.size()), [&](int u, int v) { return g.adjacent(keep[u], keep[v]); });
}

Graph load_fixture(const std::string& name) {
  std::ifstream in(std::string(TRIFREE_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  return read_edge_list(in);
}

int meet(const Block& x, const Block& y) {
  int c = 0;
  for (int p : x) c += std::count(y.begin(), y.end(), p) > 0;
  return c;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("cycles and Kneser graphs") {
  CHECK(cycle(5).size() == 5);
  CHECK_THROWS_AS(cycle(2), GraphError);
  const Graph o4 = kneser(7, 3);
  CHECK(o4.order() == 35);
  CHECK(degree_stats(o4).degree == 4);
  CHECK(is_triangle_free(o4));
  CHECK(kneser(5, 2) == petersen());
  CHECK_THROWS_AS(kneser(3, 2), GraphError);
  CHECK_THROWS_AS(kneser(31, 1), GraphError);
}

TEST_CASE("small named graphs") {
  const Graph c = clebsch();
  CHECK(c.order() == 16);
  CHECK(degree_stats(c).degree == 5);
  CHECK(is_triangle_free(c));
  const Graph hs = hoffman_singleton();
  CHECK(hs.order() == 50);
  CHECK(hs.size() == 175);
  CHECK(is_triangle_free(hs));
}

TEST_CASE("hyperovals of PG(2,4)") {
  const auto ovals = hyperoval_class();
  CHECK(ovals.size() == 56);
  for (const auto& o : ovals) {
    CHECK(std::is_sorted(o.begin(), o.end()));
    CHECK(o.back() <= 20);
  }
  for (std::size_t i = 0; i < ovals.size(); ++i)
    for (std::size_t j = i + 1; j < ovals.size(); ++j) CHECK(meet(ovals[i], ovals[j]) % 2 == 0);
}

TEST_CASE("S(3,6,22) design properties") {
  const auto s = steiner_s3_6_22();
  REQUIRE(s.blocks.size() == 77);
  CHECK(std::is_sorted(s.blocks.begin(), s.blocks.end()));
  std::map<std::array<int, 3>, int> cover;
  for (const auto& b : s.blocks)
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) ++cover[{b[i], b[j], b[k]}];
  CHECK(cover.size() == 1540);  // C(22, 3)
  for (const auto& [t, c] : cover) CHECK(c == 1);
  const auto through_infinity = std::count_if(s.blocks.begin(), s.blocks.end(), [](const Block& b) { return b.back() == 21; });
  CHECK(through_infinity == 21);
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < s.blocks.size(); ++j) {
      const int m = meet(s.blocks[i], s.blocks[j]);
      CHECK((m == 0 || m == 2));
    }
}

TEST_CASE("Higman-Sims agrees with the Golay-code fixture") {
  const Graph built = higman_sims();
  const Graph fixture = load_fixture("higman_sims.edges");
  CHECK(*srg::srg_recognize(built).params == srg::SrgParams{100, 22, 0, 6});
  CHECK(*srg::srg_recognize(fixture).params == srg::SrgParams{100, 22, 0, 6});
  const auto a = spectral::cluster_eigenvalues(spectral::spectrum(built).values);
  const auto b = spectral::cluster_eigenvalues(spectral::spectrum(fixture).values);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].value == doctest::Approx(b[i].value));
    CHECK(a[i].multiplicity == b[i].multiplicity);
  }
  // same layout: base point, 22 points, 77 blocks
  for (const Graph* g : {&built, &fixture}) {
    const auto nbrs = g->neighbors(0);
    CHECK(nbrs.front() == 1);
    CHECK(nbrs.back() == 22);
  }
}

TEST_CASE("M22 and Gewirtz sit inside Higman-Sims") {
  const Graph hs = higman_sims();
  std::vector<int> blocks;
  for (int v = 23; v < 100; ++v) blocks.push_back(v);
  CHECK(induced(hs, blocks) == m22_graph());

  // vertices adjacent to neither end of the edge 0-1
  std::vector<int> far;
  for (int v = 2; v < 100; ++v)
    if (!hs.adjacent(0, v) && !hs.adjacent(1, v)) far.push_back(v);
  REQUIRE(far.size() == 56);
  CHECK(*srg::srg_recognize(induced(hs, far)).params == srg::SrgParams{56, 10, 0, 2});
  CHECK(*srg::srg_recognize(gewirtz()).params == srg::SrgParams{56, 10, 0, 2});
}

TEST_CASE("random triangle-free process") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 5 + static_cast<int>(seed * 3);
    const Graph g = random_triangle_free(n, seed, RandomModel::process);
    CHECK(is_triangle_free(g));
    // maximal: every non-edge closes a triangle
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) CHECK(g.common_neighbors(u, v) > 0);
    CHECK(random_triangle_free(n, seed, RandomModel::process) == g);
  }
  CHECK(random_triangle_free(40, 1, RandomModel::process) != random_triangle_free(40, 2, RandomModel::process));
  CHECK_THROWS_AS(random_triangle_free(0, 1, RandomModel::process), GraphError);
}

TEST_CASE("random bipartite model") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_triangle_free(30, seed, RandomModel::bipartite);
    CHECK(is_bipartite(g));
    CHECK(random_triangle_free(30, seed, RandomModel::bipartite) == g);
  }
}

TEST_CASE("registry") {
  std::vector<std::string> names;
  for (const auto& e : named_graphs()) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"c5", "petersen", "clebsch", "hoffman-singleton", "gewirtz", "m22",
                                          "higman-sims"});
  CHECK(named_graph("petersen") == petersen());
  CHECK_THROWS_AS(named_graph("k4"), std::out_of_range);
}

}  // TEST_SUITE
