#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree::detail {

// Editable bit-set adjacency used by the random generators and the search.
class MutableGraph {
public:
  explicit MutableGraph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), bits_(n * words_, 0) {}

  int order() const { return n_; }
  std::int64_t size() const { return edges_; }

  bool adjacent(int u, int v) const { return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U; }

  bool shares_neighbour(int u, int v) const {
    for (std::size_t i = 0; i < words_; ++i)
      if (bits_[u * words_ + i] & bits_[v * words_ + i]) return true;
    return false;
  }

  // Adding u-v keeps the graph simple and triangle-free.
  bool can_add(int u, int v) const { return u != v && !adjacent(u, v) && !shares_neighbour(u, v); }

  void add(int u, int v) {
    flip(u, v);
    ++edges_;
  }
  void remove(int u, int v) {
    flip(u, v);
    --edges_;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  Graph freeze() const {
    auto e = edges();
    return Graph(n_, e);
  }

private:
  void flip(int u, int v) {
    bits_[u * words_ + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
    bits_[v * words_ + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
  }

  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::int64_t edges_ = 0;
};

}  // namespace trifree::detail
