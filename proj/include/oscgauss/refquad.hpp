#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "oscgauss/quad_rule.hpp"

namespace oscgauss {

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
QuadRule gauss_legendre(std::size_t n);

/// Extended-precision variant used by the oracle.
struct LongRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};
LongRule gauss_legendre_long(std::size_t n);

struct PanelScheme {
  std::size_t panels = 8;
  std::size_t points_per_panel = 16;
  double omega = 0.0;

  /// Smallest even panel count with panel length <= pi/(2 omega), at least 8.
  static PanelScheme for_frequency(double omega, std::size_t points_per_panel = 16);
};

/// Composite Gauss-Legendre sum over uniform panels.  Panel counts are even so
/// x = 0 is always a panel edge.
long double panel_integral(const std::function<long double(long double)>& integrand,
                           const PanelScheme& scheme);

struct OracleResult {
  long double value = 0.0L;
  PanelScheme scheme;
  /// |I(P) - I(P/2)| at acceptance.
  double last_change = 0.0;
};

struct OracleOptions {
  double tol = 1e-13;
  std::size_t points_per_panel = 16;
  std::size_t max_panels = std::size_t{1} << 20;
  /// Frequency cap for the brute-force oracle.
  double max_omega = 5000.0;
};

/// Brute-force reference value: doubles the panel count until two successive
/// composite sums agree to `tol` (absolute).
OracleResult reference_integral(const std::function<long double(long double)>& integrand,
                                double omega, const OracleOptions& options = {});

}  // namespace oscgauss
