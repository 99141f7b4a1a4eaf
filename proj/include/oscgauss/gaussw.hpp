#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "oscgauss/cheb.hpp"
#include "oscgauss/fncat.hpp"
#include "oscgauss/moments.hpp"
#include "oscgauss/quad_rule.hpp"

namespace oscgauss {

/// p_n = T_n + sum_{k<n} a_k T_k together with the conditioning of its
/// Gram system.
struct OrthogonalPolynomial {
  ChebSeries series;
  double gram_cond = 0.0;
  bool existence_ok = true;
};

/// Gram matrix [mu_{k,j}]_{j,k<n} of the moment table.
std::vector<double> gram_matrix(const MomentTable& table, std::size_t n);

/// 2-norm condition number of a symmetric matrix stored row-major.
double symmetric_condition(std::span<const double> matrix, std::size_t n);

/// Monic-in-T_n orthogonal polynomial for a positive weight (Cholesky solve).
OrthogonalPolynomial orth_poly(const MomentTable& table, std::size_t n);

/// Eigenvalues of the colleague matrix of a monic Chebyshev series.
std::vector<std::complex<double>> colleague_eigenvalues(const ChebSeries& poly);

/// Real zeros of p_n, ascending.  Imaginary parts above 1e-10 are an error.
std::vector<double> colleague_nodes(const ChebSeries& poly, double* max_imag = nullptr);

struct WeightSolve {
  std::vector<double> weights;
  double residual = 0.0;
};

/// Solves sum_k w_k T_j(x_k) = nu_j, j < n.
WeightSolve gauss_weights(std::span<const double> nodes, const MomentTable& table);

struct Rule1Options {
  MomentOptions moments;
  std::size_t max_nodes = 64;
};

QuadRule build_rule1(const CompositeWeight& weight, std::size_t n,
                     const Rule1Options& options = {});

/// Rule from a precomputed moment table (table.J >= 2n-1).
QuadRule build_rule1(const MomentTable& table, std::size_t n);

double apply_rule(const QuadRule& rule, const FunctionSpec& f);
std::complex<double> apply_rule(const ComplexQuadRule& rule, const FunctionSpec& f);

/// 4 K M / (rho^{2n} (1 - 1/rho)) for f analytic inside the Bernstein ellipse rho.
double error_bound_analytic(double K, double M, double rho, std::size_t n);

/// 4 K V / (pi m (2n-1)(2n-2)...(2n-m)) for f^(m) of bounded variation V.
double error_bound_sobolev(double K, double V, int m, std::size_t n);

/// max |f| on the Bernstein ellipse with parameter rho, by dense sampling of
/// the boundary (maximum modulus principle).
double bernstein_ellipse_max(const FunctionSpec& f, double rho, std::size_t samples = 4096);

/// Smallest analytic bound over a geometric grid of ellipse parameters inside
/// bernstein_limit(f) (capped at 20).  NaN when f is not analytic on [-1, 1].
double best_analytic_bound(const FunctionSpec& f, double K, std::size_t n);

}  // namespace oscgauss
