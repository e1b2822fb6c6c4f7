#include "trifree/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "mutable_graph.hpp"

namespace trifree::constructions {

Graph cycle(int n) {
  if (n < 3) throw GraphError(fmt::format("cycle needs at least 3 vertices, got {}", n));
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph kneser(int m, int t) {
  if (t < 1 || m < 2 * t) throw GraphError(fmt::format("kneser({}, {}) needs m >= 2t >= 2", m, t));
  if (m > 30) throw GraphError("kneser graphs are limited to m <= 30");
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
    if (std::popcount(mask) == t) subsets.push_back(mask);
  // Lexicographic order of the sorted element lists.
  auto elements = [m](std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1U) out.push_back(i);
    return out;
  };
  std::sort(subsets.begin(), subsets.end(),
            [&](std::uint32_t x, std::uint32_t y) { return elements(x) < elements(y); });
  return Graph::generate(static_cast<int>(subsets.size()),
                         [&](int u, int v) { return (subsets[u] & subsets[v]) == 0; });
}

Graph petersen() { return kneser(5, 2); }

Graph clebsch() {
  return Graph::generate(16, [](int u, int v) {
    const int w = std::popcount(static_cast<unsigned>(u ^ v));
    return w == 1 || w == 4;
  });
}

Graph hoffman_singleton() {
  // Pentagon P_h vertex j is 5h + j, pentagram Q_i vertex j is 25 + 5i + j.
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.emplace_back(5 * h + j, 5 * h + (j + 1) % 5);
      edges.emplace_back(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
      for (int i = 0; i < 5; ++i) edges.emplace_back(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    }
  }
  return Graph(50, edges);
}

Graph m22_graph() {
  const auto blocks = steiner_s3_6_22().blocks;
  return Graph::generate(static_cast<int>(blocks.size()), [&](int u, int v) {
    return std::none_of(blocks[u].begin(), blocks[u].end(), [&](int p) {
      return std::find(blocks[v].begin(), blocks[v].end(), p) != blocks[v].end();
    });
  });
}

Graph gewirtz() {
  const auto ovals = hyperoval_class();
  return Graph::generate(static_cast<int>(ovals.size()), [&](int u, int v) {
    return std::none_of(ovals[u].begin(), ovals[u].end(), [&](int p) {
      return std::find(ovals[v].begin(), ovals[v].end(), p) != ovals[v].end();
    });
  });
}

Graph higman_sims() {
  const auto s = steiner_s3_6_22();
  const int nb = static_cast<int>(s.blocks.size());
  std::vector<Edge> edges;
  for (int p = 0; p < s.points; ++p) edges.emplace_back(0, 1 + p);
  for (int i = 0; i < nb; ++i) {
    for (int p : s.blocks[i]) edges.emplace_back(1 + p, 1 + s.points + i);
    for (int j = i + 1; j < nb; ++j) {
      const bool disjoint = std::none_of(s.blocks[i].begin(), s.blocks[i].end(), [&](int p) {
        return std::find(s.blocks[j].begin(), s.blocks[j].end(), p) != s.blocks[j].end();
      });
      if (disjoint) edges.emplace_back(1 + s.points + i, 1 + s.points + j);
    }
  }
  return Graph(1 + s.points + nb, edges);
}

Graph random_triangle_free(int n, std::uint64_t seed, RandomModel model) {
  if (n < 1) throw GraphError("random triangle-free graph needs n >= 1");
  std::mt19937_64 rng(seed);
  detail::MutableGraph g(n);

  if (model == RandomModel::bipartite) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> left(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n / 2; ++i) left[order[i]] = 1;
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (left[u] != left[v] && coin(rng)) g.add(u, v);
    return g.freeze();
  }

  std::vector<Edge> allowed;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) allowed.emplace_back(u, v);
  while (!allowed.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
    const auto [u, v] = allowed[pick(rng)];
    g.add(u, v);
    std::erase_if(allowed, [&](const Edge& e) { return !g.can_add(e.first, e.second); });
  }
  return g.freeze();
}

const std::vector<NamedGraph>& named_graphs() {
  static const std::vector<NamedGraph> registry = {
      {"c5", "pentagon, SRG(5,2,0,1)", [] { return cycle(5); }},
      {"petersen", "Petersen graph = kneser(5,2), SRG(10,3,0,1)", &petersen},
      {"clebsch", "folded 5-cube, SRG(16,5,0,2)", &clebsch},
      {"hoffman-singleton", "pentagons and pentagrams, SRG(50,7,0,1)", &hoffman_singleton},
      {"gewirtz", "disjointness on 56 hyperovals of PG(2,4), SRG(56,10,0,2)", &gewirtz},
      {"m22", "disjointness on the 77 blocks of S(3,6,22), SRG(77,16,0,4)", &m22_graph},
      {"higman-sims", "point/block graph of S(3,6,22) plus one vertex, SRG(100,22,0,6)", &higman_sims},
  };
  return registry;
}

Graph named_graph(std::string_view name) {
  for (const auto& entry : named_graphs())
    if (entry.name == name) return entry.build();
  throw std::out_of_range(fmt::format("unknown named graph \"{}\"", name));
}

}  // namespace trifree::constructions
