#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "oscgauss/fncat.hpp"
#include "oscgauss/oscparts.hpp"
#include "oscgauss/refquad.hpp"

namespace testsupport {

using namespace oscgauss;

inline FunctionSpec amp(const char* text) { return parse_function(text, FunctionKind::amplitude); }
inline FunctionSpec out(const char* text) { return parse_function(text, FunctionKind::outer); }

/// Reproducible stream of doubles in [a, b].
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20241015) : gen_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(gen_); }

 private:
  std::mt19937_64 gen_;
};

/// int_{-1}^{1} p(x) w(x) dx by the panel oracle.
inline long double weighted_oracle(const std::function<long double(long double)>& p,
                                   const CompositeWeight& w, double tol = 1e-15) {
  OracleOptions o;
  o.tol = tol;
  return reference_integral([&](long double x) { return p(x) * w.eval_long(x); }, w.omega(), o).value;
}

inline long double integral_oracle(const FunctionSpec& f, const CompositeWeight& w, double tol = 1e-15) {
  return weighted_oracle([&](long double x) { return f(x); }, w, tol);
}

/// T_j in extended precision by the three-term recurrence.
inline long double cheb_t(std::size_t j, long double x) {
  long double t0 = 1.0L, t1 = x;
  if (j == 0) return t0;
  for (std::size_t k = 1; k < j; ++k) {
    const long double t2 = 2.0L * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

inline std::vector<double> log_grid(double a, double b, std::size_t count) {
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) {
    g[i] = count == 1 ? a : a * std::pow(b / a, static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return g;
}

/// I_n(x) by its power series, independent of the library.
inline double bessel_i_series(int n, double x) {
  double term = std::pow(x / 2.0, n);
  for (int k = 1; k <= n; ++k) term /= k;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= (x / 2.0) * (x / 2.0) / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

/// Central difference of order `order` with step h.
inline double central_difference(const std::function<double(double)>& f, int order, double x, double h) {
  // binomial stencil on points x + (order/2 - i) h, exact to O(h^2)
  double sum = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= order; ++i) {
    const double node = x + (0.5 * order - i) * h;
    sum += ((i % 2) ? -1.0 : 1.0) * binom * f(node);
    binom = binom * (order - i) / (i + 1);
  }
  return sum / std::pow(h, order);
}

}  // namespace testsupport
