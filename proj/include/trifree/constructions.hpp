#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree::constructions {

using Block = std::array<int, 6>;

/// S(3,6,22): 22 points, 77 six-point blocks, every 3-set of points in
/// exactly one block. Points 0..20 are PG(2,4), point 21 is the extension point.
struct SteinerSystem {
  int points = 22;
  std::vector<Block> blocks;  // each sorted, block list sorted
};

Graph cycle(int n);
/// Vertices are the t-subsets of {0..m-1} in lexicographic order; edges join disjoint subsets.
Graph kneser(int m, int t);
Graph petersen();
Graph clebsch();
Graph hoffman_singleton();

/// Validates itself; std::logic_error on an internal inconsistency.
SteinerSystem steiner_s3_6_22();
/// The 56 hyperovals of PG(2,4) used for the non-line blocks, as point sets.
std::vector<Block> hyperoval_class();

Graph m22_graph();
Graph gewirtz();
/// Vertex 0 is the extra vertex, 1..22 the points, 23..99 the blocks.
Graph higman_sims();

enum class RandomModel { process, bipartite };

/// process: add uniformly random non-edges that close no triangle until
/// maximal. bipartite: random balanced bipartition, each cross pair kept with
/// probability 1/2. Deterministic for a given (n, seed, model).
Graph random_triangle_free(int n, std::uint64_t seed, RandomModel model);

struct NamedGraph {
  std::string name;
  std::string description;
  Graph (*build)();
};

/// c5, petersen, clebsch, hoffman-singleton, gewirtz, m22, higman-sims.
const std::vector<NamedGraph>& named_graphs();
/// Throws std::out_of_range for an unknown name.
Graph named_graph(std::string_view name);

}  // namespace trifree::constructions
