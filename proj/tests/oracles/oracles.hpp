// Independent reference computations used only by tests. Nothing here shares
// code with the library paths it checks.

#ifndef PARAMSORT_TESTS_ORACLES_HPP
#define PARAMSORT_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace paramsort::oracle {

// Adaptive Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-13) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, eps, 60);
}

// Student t density.
inline double t_density(double x, double nu) {
  const double c = std::exp(std::lgamma((nu + 1.0) / 2.0) - std::lgamma(nu / 2.0)) /
                   std::sqrt(nu * std::numbers::pi);
  return c * std::pow(1.0 + x * x / nu, -(nu + 1.0) / 2.0);
}

// 2 P(T > |t|) by quadrature. The substitution x = |t| + u / (1 - u) maps the
// infinite tail onto [0, 1).
inline double t_two_sided_tail(double t, double nu) {
  const double a = std::abs(t);
  auto g = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double x = a + u / (1.0 - u);
    return t_density(x, nu) / ((1.0 - u) * (1.0 - u));
  };
  return 2.0 * integrate(g, 0.0, 1.0 - 1e-12, 1e-14);
}

inline double f_density(double x, double d1, double d2) {
  if (x <= 0.0) return 0.0;
  const double log_c = std::lgamma((d1 + d2) / 2.0) - std::lgamma(d1 / 2.0) -
                       std::lgamma(d2 / 2.0) + (d1 / 2.0) * std::log(d1 / d2);
  return std::exp(log_c + (d1 / 2.0 - 1.0) * std::log(x) -
                  ((d1 + d2) / 2.0) * std::log1p(d1 * x / d2));
}

// P(F > f) by quadrature over the mapped tail.
inline double f_upper_tail(double f, double d1, double d2) {
  auto g = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double x = f + u / (1.0 - u);
    return f_density(x, d1, d2) / ((1.0 - u) * (1.0 - u));
  };
  return integrate(g, 0.0, 1.0 - 1e-12, 1e-16);
}

// I_x(a, b) by direct quadrature of the beta density (a, b >= 1 keeps the
// integrand bounded).
inline double incomplete_beta_quadrature(double a, double b, double x) {
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  auto g = [&](double u) {
    if (u <= 0.0 || u >= 1.0) {
      if (u <= 0.0 && a == 1.0) return std::exp(log_norm);
      if (u >= 1.0 && b == 1.0) return std::exp(log_norm);
      return 0.0;
    }
    return std::exp(log_norm + (a - 1.0) * std::log(u) + (b - 1.0) * std::log1p(-u));
  };
  return integrate(g, 0.0, x, 1e-14);
}

// O(n^2) pair scan.
template <class T>
std::uint64_t brute_force_inversions(std::span<const T> items) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[i] > items[j]) ++count;
    }
  }
  return count;
}

// Truncated sum_{r=0}^{terms-1} (p (1-p)^r)^2 by direct term evaluation.
inline double geometric_tie_series(double p, int terms) {
  long double sum = 0.0L;
  for (int r = terms - 1; r >= 0; --r) {  // smallest terms first
    const long double f = p * std::pow(1.0L - p, static_cast<long double>(r));
    sum += f * f;
  }
  return static_cast<double>(sum);
}

// P(a > b) for iid geometric(p) by joint-pmf enumeration over r in [0, rmax].
inline double geometric_pair_greater(double p, int rmax) {
  long double total = 0.0L;
  for (int a = 0; a <= rmax; ++a) {
    const long double fa = p * std::pow(1.0L - p, static_cast<long double>(a));
    for (int b = 0; b < a; ++b) {
      const long double fb = p * std::pow(1.0L - p, static_cast<long double>(b));
      total += fa * fb;
    }
  }
  return static_cast<double>(total);
}

// Raw normal equations (X'X) b = X'y solved by Gaussian elimination in long
// double. Only suitable for small, well-scaled problems.
inline std::vector<double> normal_equations_fit(std::span<const double> xs,
                                                std::span<const double> ys, int degree) {
  const int n = degree + 1;
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1, 0.0L));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<long double> powers(2 * n, 1.0L);
    for (int k = 1; k < 2 * n; ++k) powers[k] = powers[k - 1] * xs[i];
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] += powers[r + c];
      a[r][n] += powers[r] * ys[i];
    }
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const long double factor = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<double> b(n);
  for (int r = 0; r < n; ++r) b[r] = static_cast<double>(a[r][n] / a[r][r]);
  return b;
}

}  // namespace paramsort::oracle

#endif  // PARAMSORT_TESTS_ORACLES_HPP
