#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trifree/errors.hpp"

namespace trifree {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as bit-set adjacency rows.
/// Immutable once constructed.
class Graph {
public:
  Graph() = default;

  /// Duplicate pairs are merged; (u, v) and (v, u) are the same edge.
  /// Throws GraphError on an out-of-range endpoint or a self-loop.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds the graph whose edges are the pairs u < v with adjacent(u, v) true.
  template <class Pred>
  static Graph generate(int n, Pred&& adjacent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adjacent(u, v)) g.link(u, v);
    return g;
  }

  int order() const noexcept { return n_; }
  std::int64_t size() const noexcept { return edges_; }

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool adjacent(int u, int v) const noexcept {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  int degree(int v) const noexcept;
  int common_neighbors(int u, int v) const noexcept;
  std::vector<int> neighbors(int v) const;

  /// All edges as pairs (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

private:
  explicit Graph(int n);
  void link(int u, int v);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::int64_t edges_ = 0;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = false;
  std::optional<int> degree;  // set iff is_regular
};

std::int64_t triangle_count(const Graph& g);

/// Some triangle (u < v < w), if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g); }

bool is_bipartite(const Graph& g);

/// Throws GraphError for n = 0.
DegreeStats degree_stats(const Graph& g);

/// Replaces vertex v by an independent set of sizes[v] vertices; classes of
/// adjacent vertices are joined completely. Class of v occupies a contiguous
/// index block in vertex order.
Graph blow_up(const Graph& g, std::span<const int> sizes);
Graph blow_up(const Graph& g, int t);

/// Vertex v of g becomes perm[v] in the result.
Graph relabel(const Graph& g, std::span<const int> perm);

// graph6 I/O. Sizes up to 258047 (1- and 4-byte size headers).
inline constexpr int kGraph6MaxOrder = 258047;
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Edge-list text: "n m" then m lines "u v"; lines starting with '#' and blank
// lines are ignored.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace trifree
