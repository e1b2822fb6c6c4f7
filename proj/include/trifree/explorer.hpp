#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trifree/bounds.hpp"
#include "trifree/graph.hpp"

namespace trifree::explorer {

struct Violation {
  std::string graph6;
  double lhs = 0;  // lemma: mu_1; theorem: mu_1 + mu_n
  double rhs = 0;  // lemma: -n mu_n / (mu_1 - mu_n); theorem: (3 - 2 sqrt 2) n
};

struct ScanReport {
  int n = 0;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t triangle_free_count = 0;
  std::vector<Violation> lemma_violations;
  std::vector<Violation> theorem_violations;
  double max_ratio = 0;
  std::string argmax_graph;  // graph6
  double runtime_seconds = 0;

  bool clean() const { return lemma_violations.empty() && theorem_violations.empty(); }
};

inline constexpr int kMaxScanOrder = 8;
inline constexpr int kDefaultScanOrderCap = 7;

struct ScanOptions {
  int workers = 1;
  /// n = 8 has 2^28 masks; it runs only when explicitly allowed.
  bool allow_n8 = false;
  double tol = bounds::kVerdictTol;
};

/// Every labelled graph on n vertices, enumerated as upper-triangle masks in
/// graph6 pair order with triangle pruning; every triangle-free graph is
/// checked against both bounds. Throws PreconditionError for n outside
/// [1, 7] (or [1, 8] with allow_n8). The result does not depend on workers.
ScanReport scan_all(int n, const ScanOptions& options = {});

/// Worker count from TRIFREE_WORKERS, else hardware concurrency.
int default_workers();

struct SearchOptions {
  /// Non-improving steps before a random restart.
  int restart_after = 200;
  double tol = bounds::kVerdictTol;
};

/// Seeded hill climbing on (mu_1 + mu_n) / n over triangle-free graphs.
/// Moves add a non-triangle-closing edge or delete an edge; every visited
/// graph is checked against both bounds. Throws PreconditionError for n < 5.
ScanReport random_search(int n, std::int64_t iterations, std::uint64_t seed,
                         const SearchOptions& options = {});

}  // namespace trifree::explorer
