#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace oscgauss {

enum class RuleKind { classical, oscillatory };

struct RuleDiagnostics {
  /// 2-norm condition number of the Gram system (NaN when not applicable).
  double gram_cond = std::numeric_limits<double>::quiet_NaN();
  /// max_j |sum_k w_k T_j(x_k) - nu_j| over the construction range.
  double vandermonde_residual = std::numeric_limits<double>::quiet_NaN();
  /// Largest imaginary part discarded from a real node set.
  double imag_residual = 0.0;
  bool existence_ok = true;
};

template <class T>
struct BasicQuadRule {
  std::vector<T> nodes;
  std::vector<T> weights;
  double omega = 0.0;
  RuleKind kind = RuleKind::classical;
  RuleDiagnostics diagnostics;

  std::size_t size() const { return nodes.size(); }
};

using QuadRule = BasicQuadRule<double>;
using ComplexQuadRule = BasicQuadRule<std::complex<double>>;

}  // namespace oscgauss
