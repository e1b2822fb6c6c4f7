#include "trifree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <fmt/format.h>

namespace trifree {

namespace {

constexpr std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw GraphError(fmt::format("negative vertex count {}", n));
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError(fmt::format("edge ({}, {}) has an endpoint outside [0, {})", u, v, n));
    if (u == v) throw GraphError(fmt::format("self-loop at vertex {}", u));
    if (!adjacent(u, v)) link(u, v);
  }
}

void Graph::link(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
  ++edges_;
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::common_neighbors(int u, int v) const noexcept {
  auto ru = row(u), rv = row(v);
  int c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += std::popcount(ru[i] & rv[i]);
  return c;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (std::size_t i = 0; i < words_; ++i)
    for (auto w = r[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::int64_t triangle_count(const Graph& g) {
  // For each edge u < v count common neighbours w > v, so every triangle is
  // seen exactly once at its two smallest vertices.
  std::int64_t count = 0;
  const std::size_t words = g.words_per_row();
  for (int u = 0; u < g.order(); ++u) {
    auto ru = g.row(u);
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      auto rv = g.row(v);
      const std::size_t first = static_cast<std::size_t>(v + 1) >> 6;
      for (std::size_t i = first; i < words; ++i) {
        std::uint64_t common = ru[i] & rv[i];
        if (i == first) common &= ~std::uint64_t{0} << ((v + 1) & 63);
        count += std::popcount(common);
      }
    }
  }
  return count;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  const std::size_t words = g.words_per_row();
  for (int u = 0; u < g.order(); ++u) {
    auto ru = g.row(u);
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      auto rv = g.row(v);
      for (std::size_t i = 0; i < words; ++i) {
        if (auto common = ru[i] & rv[i]; common != 0) {
          std::array<int, 3> t{u, v, static_cast<int>(i * 64 + std::countr_zero(common))};
          std::sort(t.begin(), t.end());
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> queue;
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) throw GraphError("degree statistics of the empty graph are undefined");
  DegreeStats s;
  s.min_degree = g.order();
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
  }
  s.is_regular = s.min_degree == s.max_degree;
  if (s.is_regular) s.degree = s.max_degree;
  return s;
}

Graph blow_up(const Graph& g, std::span<const int> sizes) {
  if (sizes.size() != static_cast<std::size_t>(g.order()))
    throw GraphError(fmt::format("blow-up needs {} class sizes, got {}", g.order(), sizes.size()));
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] < 1) throw GraphError(fmt::format("blow-up class size {} for vertex {}", sizes[v], v));
    offset[v + 1] = offset[v] + sizes[v];
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    for (int i = offset[u]; i < offset[u + 1]; ++i)
      for (int j = offset[v]; j < offset[v + 1]; ++j) edges.emplace_back(i, j);
  return Graph(offset.back(), edges);
}

Graph blow_up(const Graph& g, int t) {
  std::vector<int> sizes(static_cast<std::size_t>(g.order()), t);
  return blow_up(g, sizes);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order()))
    throw GraphError("relabelling permutation has the wrong length");
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen[p]) throw GraphError("relabelling map is not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace trifree
