#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "trifree/graph.hpp"
#include "trifree/spectral.hpp"

namespace trifree::bounds {

/// Absolute tolerance for every verdict derived from eigenvalues.
inline constexpr double kVerdictTol = 1e-9;

/// 3 - 2*sqrt(2), the upper envelope for (mu_1 + mu_n) / n.
inline const double kTheoremConstant = 3.0 - 2.0 * std::sqrt(2.0);

inline constexpr std::int64_t kDefaultIndependenceBudget = 100'000'000;

struct BoundReport {
  int n = 0;
  double mu1 = 0;
  double mun = 0;
  double lemma_lhs = 0;  // mu_1
  double lemma_rhs = 0;  // -n mu_n / (mu_1 - mu_n)
  bool lemma_holds = true;
  double theorem_margin = 0;  // (3 - 2 sqrt 2) n - (mu_1 + mu_n)
  double ratio = 0;           // (mu_1 + mu_n) / n
  bool degenerate = false;    // edgeless input, both lemma sides reported as 0
  double tol = kVerdictTol;   // verdict tolerance used for lemma_holds / theorem_holds

  bool theorem_holds() const { return theorem_margin >= -tol; }
};

/// Evaluates mu_1 <= -n mu_n / (mu_1 - mu_n) on a triangle-free graph.
/// Throws PreconditionError naming a triangle if one exists.
BoundReport lemma_bound(const Graph& g);
BoundReport lemma_bound(const Graph& g, const spectral::Spectrum& s);

/// Evaluates mu_1 + mu_n <= (3 - 2 sqrt 2) n; same report and precondition.
BoundReport theorem1_check(const Graph& g);
BoundReport theorem1_check(const Graph& g, const spectral::Spectrum& s);

/// Report fields from a spectrum alone, no precondition checks.
BoundReport evaluate_bounds(int n, const spectral::Spectrum& s, double tol = kVerdictTol);

/// -n mu_n / (d - mu_n) for a d-regular graph with d >= 1.
double hoffman_delsarte(const Graph& g);
double hoffman_delsarte(const Graph& g, const spectral::Spectrum& s);

struct IndependenceResult {
  int size = 0;
  bool exact = false;  // false: search budget ran out, size is a lower bound
  std::int64_t expansions = 0;
  std::vector<int> witness;  // an independent set of the reported size
};

/// Branch and bound over bit-sets: branches on a max-degree candidate,
/// prunes with a greedy clique-cover bound.
IndependenceResult independence_number(const Graph& g,
                                       std::int64_t budget = kDefaultIndependenceBudget);

/// f(alpha) = (alpha - 2 alpha^2) / (1 - alpha) on [0, 1). Throws std::domain_error outside.
double f_alpha(double alpha);

struct FMax {
  double argmax = 0;  // closed form 1 - 1/sqrt 2
  double value = 0;   // closed form 3 - 2 sqrt 2
  double search_argmax = 0;  // golden-section search on [0, 1 - 1e-9]
  double search_value = 0;
};

FMax f_max();

}  // namespace trifree::bounds
