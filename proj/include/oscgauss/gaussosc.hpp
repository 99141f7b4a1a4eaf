#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "oscgauss/gaussw.hpp"
#include "oscgauss/moments.hpp"
#include "oscgauss/quad_rule.hpp"

namespace oscgauss {

/// Rule for I = I_O + I_S: a complex Gaussian rule for the mean-free weight
/// w - rho_0/2 plus Gauss-Legendre for (rho_0/2) int f.
struct SplitRule {
  ComplexQuadRule osc;
  double rho0 = 0.0;
  QuadRule gl;
  bool existence_ok = true;
};

/// Orthogonal polynomial w.r.t. the sign-changing shifted weight; n even.
/// Symmetric-indefinite (Bunch-Kaufman) solve of the Gram system.
OrthogonalPolynomial osc_orth_poly(const MomentTable& shifted, std::size_t n);

/// All zeros of a real-coefficient Chebyshev series, sorted by real part then
/// imaginary part.
std::vector<std::complex<double>> complex_nodes(const ChebSeries& poly);

struct ComplexWeightSolve {
  std::vector<std::complex<double>> weights;
  double residual = 0.0;
};

ComplexWeightSolve complex_weights(std::span<const std::complex<double>> nodes,
                                   const MomentTable& shifted);

struct Rule2Options {
  MomentOptions moments;
  /// Gauss-Legendre order for I_S; 0 selects 2n + 16.
  std::size_t gl_nodes = 0;
  std::size_t max_nodes = 64;
};

SplitRule build_rule2(const CompositeWeight& weight, std::size_t n,
                      const Rule2Options& options = {});

struct Rule2Result {
  double value = 0.0;
  /// |Im| of the complex rule value.
  double imag_residual = 0.0;
  SplitRule rule;
};

Rule2Result integrate_rule2(const FunctionSpec& f, const SplitRule& rule);
Rule2Result integrate_rule2(const FunctionSpec& f, const CompositeWeight& weight, std::size_t n,
                            const Rule2Options& options = {});

/// max over nodes of the distance from conj(z) to the nearest node.
double conjugate_pairing_residual(std::span<const std::complex<double>> nodes);

/// Nearest endpoint (+1 or -1) of a complex node.
int nearest_endpoint(std::complex<double> z);

struct TrajectoryRow {
  double omega = 0.0;
  std::size_t k = 0;
  double re = 0.0;
  double im = 0.0;
  int endpoint = 0;
  double scaled_distance = 0.0;
  /// Non-empty when no rule could be built at this omega (k = 0).
  std::string error;
};

/// Zeros of q_n over an omega grid, matched across consecutive omegas by
/// greedy nearest-neighbour continuation so that k labels one trajectory.
/// A failing omega yields a single row carrying the error and restarts the
/// continuation.
std::vector<TrajectoryRow> node_trajectory(const FunctionSpec& g, Parity parity, std::size_t n,
                                           std::span<const double> omega_grid,
                                           const MomentOptions& options = {});

/// Zeros of q_n at a single omega.
std::vector<std::complex<double>> rule2_nodes(const CompositeWeight& weight, std::size_t n,
                                              const MomentOptions& options = {});

struct EndpointHypothesis {
  std::size_t left = 0;
  std::size_t right = 0;
  /// max over matched nodes of the ratio of omega*|x - endpoint| between
  /// omega and 2 omega (or its inverse, whichever exceeds 1).
  double worst_ratio = 0.0;
  bool holds = false;
};

/// Checks that n/2 zeros sit near each endpoint at omega and 2 omega and the
/// scaled endpoint distances change by at most a factor 3.
EndpointHypothesis check_endpoint_hypothesis(const FunctionSpec& g, Parity parity,
                                             std::size_t n, double omega,
                                             const MomentOptions& options = {});

}  // namespace oscgauss
