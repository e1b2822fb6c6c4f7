#include "trifree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "trifree/errors.hpp"

namespace trifree::spectral {

namespace {

// Reduces the symmetric matrix a (row-major, n x n, lower triangle used) to
// tridiagonal form: diagonal in d, sub-diagonal in e[1..n-1].
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on the tridiagonal (d, e); eigenvalues are left in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, int n, int max_sweeps) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_sweeps)
        throw SolverError(fmt::format("QL iteration did not converge for eigenvalue {} after {} sweeps",
                                      l, max_sweeps),
                          l);
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i;
      bool underflow = false;
      for (i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        e[i + 1] = r = std::hypot(f, g);
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

void check_order(int n, const SolverOptions& options) {
  if (n < 1) throw PreconditionError("spectrum of the empty graph is undefined");
  if (n > options.max_order)
    throw PreconditionError(fmt::format("matrix order {} exceeds the dense solver cap {}", n, options.max_order));
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n, const SolverOptions& options) {
  if (n == 0) return {};
  if (matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw PreconditionError("matrix storage does not match its order");
  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
  tridiagonalize(matrix, n, d, e);
  tridiagonal_ql(d, e, n, options.max_sweeps);
  std::stable_sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<double> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> a(n * n, 0.0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + v] = 1.0;
    a[static_cast<std::size_t>(v) * n + u] = 1.0;
  }
  return a;
}

Spectrum spectrum(const Graph& g, const SolverOptions& options) {
  check_order(g.order(), options);
  Spectrum s;
  s.values = symmetric_eigenvalues(adjacency_matrix(g), g.order(), options);
  s.tol = options.tol_scale * std::max(1, g.order());
  return s;
}

TraceReport trace_identity_report(const Graph& g, const Spectrum& s) {
  TraceReport r;
  for (double mu : s.values) {
    r.sum1 += mu;
    r.sum2 += mu * mu;
    r.sum3 += mu * mu * mu;
  }
  r.target2 = 2.0 * static_cast<double>(g.size());
  r.target3 = 6.0 * static_cast<double>(triangle_count(g));
  r.residual1 = std::abs(r.sum1 - r.target1);
  r.residual2 = std::abs(r.sum2 - r.target2);
  r.residual3 = std::abs(r.sum3 - r.target3);
  return r;
}

double signless_laplacian_min(const Graph& g, const SolverOptions& options) {
  check_order(g.order(), options);
  auto q = adjacency_matrix(g);
  const auto n = static_cast<std::size_t>(g.order());
  for (std::size_t v = 0; v < n; ++v) q[v * n + v] = g.degree(static_cast<int>(v));
  return symmetric_eigenvalues(std::move(q), g.order(), options).back();
}

std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> values, double rel_tol) {
  std::vector<EigenCluster> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!out.empty() && std::abs(values[i - 1] - v) < rel_tol * std::max(1.0, std::abs(v))) {
      ++out.back().multiplicity;
      sum += v;
      out.back().value = sum / out.back().multiplicity;
    } else {
      out.push_back({v, 1});
      sum = v;
    }
  }
  return out;
}

}  // namespace trifree::spectral
