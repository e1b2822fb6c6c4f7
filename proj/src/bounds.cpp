#include "trifree/bounds.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <fmt/format.h>

namespace trifree::bounds {

namespace {

void require_triangle_free(const Graph& g) {
  if (auto t = find_triangle(g))
    throw PreconditionError(
        fmt::format("graph is not triangle-free: vertices {}, {}, {} form a triangle", (*t)[0], (*t)[1], (*t)[2]));
}

void require_regular(const Graph& g, int& degree) {
  auto stats = degree_stats(g);
  if (!stats.is_regular)
    throw PreconditionError(fmt::format("graph is not regular (degrees {}..{})", stats.min_degree, stats.max_degree));
  if (*stats.degree < 1) throw PreconditionError("regular graph must have degree at least 1");
  degree = *stats.degree;
}

}  // namespace

BoundReport evaluate_bounds(int n, const spectral::Spectrum& s, double tol) {
  BoundReport r;
  r.n = n;
  r.tol = tol;
  r.mu1 = s.largest();
  r.mun = s.smallest();
  r.ratio = (r.mu1 + r.mun) / n;
  r.theorem_margin = kTheoremConstant * n - (r.mu1 + r.mun);
  // Any edge gives mu_1 >= 1 and mu_n <= -1, so a gap this small means edgeless.
  if (r.mu1 - r.mun < 0.5) {
    r.degenerate = true;
    r.lemma_lhs = 0.0;
    r.lemma_rhs = 0.0;
    r.lemma_holds = true;
    return r;
  }
  r.lemma_lhs = r.mu1;
  r.lemma_rhs = -n * r.mun / (r.mu1 - r.mun);
  r.lemma_holds = r.lemma_lhs <= r.lemma_rhs + tol;
  return r;
}

BoundReport lemma_bound(const Graph& g, const spectral::Spectrum& s) {
  require_triangle_free(g);
  return evaluate_bounds(g.order(), s);
}

BoundReport lemma_bound(const Graph& g) {
  require_triangle_free(g);
  return evaluate_bounds(g.order(), spectral::spectrum(g));
}

BoundReport theorem1_check(const Graph& g, const spectral::Spectrum& s) { return lemma_bound(g, s); }

BoundReport theorem1_check(const Graph& g) { return lemma_bound(g); }

double hoffman_delsarte(const Graph& g, const spectral::Spectrum& s) {
  int d = 0;
  require_regular(g, d);
  const double mun = s.smallest();
  return -g.order() * mun / (d - mun);
}

double hoffman_delsarte(const Graph& g) {
  int d = 0;
  require_regular(g, d);
  return hoffman_delsarte(g, spectral::spectrum(g));
}

double f_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::domain_error(fmt::format("f(alpha) is defined on [0, 1), got {}", alpha));
  return (alpha - 2.0 * alpha * alpha) / (1.0 - alpha);
}

FMax f_max() {
  FMax r;
  r.argmax = 1.0 - 1.0 / std::sqrt(2.0);
  r.value = 3.0 - 2.0 * std::sqrt(2.0);

  // The maximum is flat to second order, so the search runs in 50-digit
  // arithmetic to resolve the argmax well below double precision.
  using Real = boost::multiprecision::cpp_bin_float_50;
  auto f = [](const Real& a) { return (a - 2 * a * a) / (1 - a); };
  const Real inv_phi = (sqrt(Real(5)) - 1) / 2;
  Real lo = 0, hi = Real(1) - Real("1e-9");
  Real x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  Real f1 = f(x1), f2 = f(x2);
  while (hi - lo > Real("1e-30")) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  const Real best = (lo + hi) / 2;
  r.search_argmax = static_cast<double>(best);
  r.search_value = static_cast<double>(f(best));
  return r;
}

}  // namespace trifree::bounds
