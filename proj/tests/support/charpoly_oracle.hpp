#pragma once

// Independent eigenvalue oracle for small graphs: the characteristic
// polynomial det(xI - A) by permutation expansion over the integers, Yun's
// square-free decomposition over the rationals, then root isolation by
// bisection between consecutive roots of the derivative.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Poly = std::vector<Rational>;  // coefficient of x^i at index i

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder; b must be non-zero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  for (int i = degree(a) - degree(b); i >= 0; --i) {
    const Rational c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// det(xI - A) for a 0/1 symmetric matrix, by summing over permutations.
inline Poly characteristic_polynomial(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n > 9) throw std::invalid_argument("permutation expansion limited to n <= 9");
  std::vector<std::int64_t> total(n + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // sign from the inversion count
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    std::vector<std::int64_t> term{1};
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      // entry (xI - A)[i][perm[i]] = (i == perm[i] ? x : 0) - a[i][perm[i]]
      const std::int64_t c0 = -a[i][perm[i]];
      const std::int64_t c1 = i == perm[i] ? 1 : 0;
      if (c0 == 0 && c1 == 0) {
        zero = true;
        break;
      }
      std::vector<std::int64_t> next(term.size() + 1, 0);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * c0;
        next[k + 1] += term[k] * c1;
      }
      term = std::move(next);
    }
    if (zero) continue;
    const int sign = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += sign * term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  Poly p;
  for (auto c : total) p.push_back(Rational(c));
  trim(p);
  return p;
}

struct Factor {
  Poly poly;
  int multiplicity;
};

/// Yun's algorithm: f = c * prod a_i^i with each a_i square-free.
inline std::vector<Factor> square_free_decomposition(const Poly& f) {
  std::vector<Factor> out;
  const Poly fp = derivative(f);
  if (fp.empty()) return out;
  const Poly a0 = gcd(f, fp);
  Poly b = divmod(f, a0).first;
  Poly c = divmod(fp, a0).first;
  Poly d = sub(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    const Poly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
    if (degree(a) > 0) out.push_back({a, i});
  }
  return out;
}

inline long double evaluate(const Poly& p, long double x) {
  long double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
  return acc;
}

/// Real roots of a polynomial known to have only real, simple roots.
inline std::vector<long double> simple_real_roots(const Poly& p) {
  const int d = degree(p);
  if (d <= 0) return {};
  if (d == 1) return {static_cast<long double>(-p[0] / p[1])};
  // Cauchy bound
  long double bound = 1;
  for (int i = 0; i < d; ++i)
    bound = std::max(bound, 1 + std::fabs(static_cast<long double>(p[i] / p[d])));
  std::vector<long double> cuts{-bound};
  for (auto r : simple_real_roots(monic(derivative(p)))) cuts.push_back(r);
  cuts.push_back(bound);

  std::vector<long double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    long double lo = cuts[i], hi = cuts[i + 1];
    long double flo = evaluate(p, lo), fhi = evaluate(p, hi);
    if (flo == 0) {
      roots.push_back(lo);
      continue;
    }
    if ((flo < 0) == (fhi < 0)) continue;
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
      const long double mid = (lo + hi) / 2;
      const long double fm = evaluate(p, mid);
      if (fm == 0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back((lo + hi) / 2);
  }
  // A root sitting exactly on an interior cut is found from both sides.
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(), [](long double x, long double y) { return std::fabs(x - y) < 1e-15L; }),
              roots.end());
  return roots;
}

/// All eigenvalues (with multiplicity) of a symmetric 0/1 matrix, descending.
inline std::vector<double> eigenvalues(const std::vector<std::vector<int>>& a) {
  const Poly f = characteristic_polynomial(a);
  std::vector<double> out;
  for (const auto& factor : square_free_decomposition(f))
    for (auto r : simple_real_roots(factor.poly))
      for (int k = 0; k < factor.multiplicity; ++k) out.push_back(static_cast<double>(r));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
