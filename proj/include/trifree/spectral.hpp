#pragma once

#include <span>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree::spectral {

struct SolverOptions {
  /// Reported tolerance is tol_scale * max(1, n).
  double tol_scale = 1e-10;
  /// QL iterations allowed per eigenvalue before giving up.
  int max_sweeps = 50;
  /// Largest accepted matrix order.
  int max_order = 4096;
};

/// Adjacency eigenvalues mu_1 >= ... >= mu_n and the absolute tolerance they
/// are guaranteed to.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;

  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

/// Power sums of the spectrum against their combinatorial targets
/// (0, 2e, 6 * #triangles).
struct TraceReport {
  double sum1 = 0, sum2 = 0, sum3 = 0;
  double target1 = 0, target2 = 0, target3 = 0;
  double residual1 = 0, residual2 = 0, residual3 = 0;
};

struct EigenCluster {
  double value = 0;
  int multiplicity = 0;
};

/// Eigenvalues of the dense symmetric n x n row-major `matrix`, descending.
/// Householder tridiagonalisation followed by implicit-shift QL.
/// Throws SolverError when some eigenvalue needs more than max_sweeps iterations.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n,
                                          const SolverOptions& options = {});

std::vector<double> adjacency_matrix(const Graph& g);

/// Throws PreconditionError for n = 0 or n > options.max_order.
Spectrum spectrum(const Graph& g, const SolverOptions& options = {});

TraceReport trace_identity_report(const Graph& g, const Spectrum& s);

/// Smallest eigenvalue of the signless Laplacian D + A.
double signless_laplacian_min(const Graph& g, const SolverOptions& options = {});

/// Groups a descending sequence into runs whose consecutive members differ by
/// less than rel_tol * max(1, |value|). Cluster value is the run mean.
std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> values, double rel_tol = 1e-6);

}  // namespace trifree::spectral
