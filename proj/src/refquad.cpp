#include "oscgauss/refquad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oscgauss/errors.hpp"

namespace oscgauss {

LongRule gauss_legendre_long(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "gauss_legendre: n must be >= 1");
  const long double pi = std::numbers::pi_v<long double>;
  const long double eps = std::numeric_limits<long double>::epsilon();
  LongRule rule;
  rule.nodes.assign(n, 0.0L);
  rule.weights.assign(n, 0.0L);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // i-th largest root
    long double x = std::cos(pi * (static_cast<long double>(i) + 0.75L) /
                             (static_cast<long double>(n) + 0.5L));
    long double dp = 0.0L;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const long double kk = static_cast<long double>(k);
        const long double p2 = ((2.0L * kk - 1.0L) * x * p1 - (kk - 1.0L) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0L;
      // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
      dp = static_cast<long double>(n) * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4.0L * eps) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      fail(ErrorCode::ConvergenceFailure,
           "gauss_legendre: Newton iteration failed for n=" + std::to_string(n));
    }
    // recompute derivative at the converged root
    long double p0 = 1.0L, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const long double kk = static_cast<long double>(k);
      const long double p2 = ((2.0L * kk - 1.0L) * x * p1 - (kk - 1.0L) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0L;
    dp = static_cast<long double>(n) * (x * p1 - p0) / (x * x - 1.0L);
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0L;
  return rule;
}

QuadRule gauss_legendre(std::size_t n) {
  const LongRule lr = gauss_legendre_long(n);
  QuadRule rule;
  rule.kind = RuleKind::classical;
  rule.nodes.assign(lr.nodes.begin(), lr.nodes.end());
  rule.weights.assign(lr.weights.begin(), lr.weights.end());
  return rule;
}

PanelScheme PanelScheme::for_frequency(double omega, std::size_t points_per_panel) {
  PanelScheme s;
  s.omega = omega;
  s.points_per_panel = points_per_panel;
  auto p = static_cast<std::size_t>(std::ceil(4.0 * omega / std::numbers::pi));
  p = std::max<std::size_t>(p, 8);
  if (p % 2 == 1) ++p;
  s.panels = p;
  return s;
}

long double panel_integral(const std::function<long double(long double)>& integrand,
                           const PanelScheme& scheme) {
  const LongRule gl = gauss_legendre_long(scheme.points_per_panel);
  const auto panels = static_cast<long double>(scheme.panels);
  const long double h = 2.0L / panels;
  long double total = 0.0L;
  for (std::size_t p = 0; p < scheme.panels; ++p) {
    // panel [a, b] with a = -1 + p h
    const long double a = -1.0L + static_cast<long double>(p) * h;
    const long double mid = a + 0.5L * h;
    long double s = 0.0L;
    for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
      s += gl.weights[q] * integrand(mid + 0.5L * h * gl.nodes[q]);
    }
    total += 0.5L * h * s;
  }
  return total;
}

OracleResult reference_integral(const std::function<long double(long double)>& integrand,
                                double omega, const OracleOptions& options) {
  if (!(omega >= 0.0) || omega > options.max_omega) {
    fail(ErrorCode::InvalidArgument,
         "reference_integral: omega outside [0, " + std::to_string(options.max_omega) + "]");
  }
  PanelScheme scheme = PanelScheme::for_frequency(omega, options.points_per_panel);
  long double previous = panel_integral(integrand, scheme);
  while (scheme.panels * 2 <= options.max_panels) {
    scheme.panels *= 2;
    const long double current = panel_integral(integrand, scheme);
    const double change = static_cast<double>(std::abs(current - previous));
    if (change <= options.tol) {
      return OracleResult{current, scheme, change};
    }
    previous = current;
  }
  fail(ErrorCode::NoConvergence, "reference_integral: panel refinement did not converge");
}

}  // namespace oscgauss
