#include "oscgauss/gaussw.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oscgauss/errors.hpp"

namespace oscgauss {

namespace {

constexpr double kMaxImagForRealNode = 1e-10;

Eigen::MatrixXd to_eigen(std::span<const double> matrix, std::size_t n) {
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = matrix[i * n + j];
  }
  return a;
}

void require_moments(const MomentTable& table, std::size_t needed, const char* who) {
  if (table.nu.size() < needed + 1) {
    fail(ErrorCode::IndexOutOfRange, std::string(who) + ": moment table holds nu_0..nu_" +
                                         std::to_string(table.max_index()) + ", need nu_" +
                                         std::to_string(needed));
  }
}

}  // namespace

std::vector<double> gram_matrix(const MomentTable& table, std::size_t n) {
  std::vector<double> g(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) g[j * n + k] = gram_entry(table, k, j);
  }
  return g;
}

double symmetric_condition(std::span<const double> matrix, std::size_t n) {
  if (n == 0) return 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(matrix, n), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
  const auto ev = es.eigenvalues().cwiseAbs();
  const double lo = ev.minCoeff();
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return ev.maxCoeff() / lo;
}

OrthogonalPolynomial orth_poly(const MomentTable& table, std::size_t n) {
  if (n == 0) return {ChebSeries({1.0}), 1.0, true};
  require_moments(table, 2 * n - 1, "orth_poly");
  const std::vector<double> g = gram_matrix(table, n);
  const Eigen::MatrixXd a = to_eigen(g, n);
  Eigen::VectorXd rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs(j) = -gram_entry(table, n, j);

  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    fail(ErrorCode::NotPositiveDefinite,
         "orth_poly: Gram matrix of order " + std::to_string(n) + " is not positive definite");
  }
  const Eigen::VectorXd coef = llt.solve(rhs);
  if (!coef.allFinite()) {
    fail(ErrorCode::NotPositiveDefinite, "orth_poly: non-finite solution");
  }

  std::vector<double> c(n + 1);
  for (std::size_t k = 0; k < n; ++k) c[k] = coef(k);
  c[n] = 1.0;
  OrthogonalPolynomial out{ChebSeries(std::move(c)), symmetric_condition(g, n), true};
  return out;
}

std::vector<std::complex<double>> colleague_eigenvalues(const ChebSeries& poly) {
  const std::size_t n = poly.degree();
  const double lead = poly[n];
  if (n == 0) return {};
  if (lead == 0.0) fail(ErrorCode::InvalidArgument, "colleague matrix: zero leading coefficient");
  if (n == 1) return {std::complex<double>(-poly[0] / lead, 0.0)};

  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  c(0, 1) = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    c(i, i - 1) = 0.5;
    c(i, i + 1) = 0.5;
  }
  c(n - 1, n - 2) = 0.5;
  for (std::size_t k = 0; k < n; ++k) c(n - 1, k) -= 0.5 * poly[k] / lead;

  Eigen::EigenSolver<Eigen::MatrixXd> es(c, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    fail(ErrorCode::EigenFailure, "colleague matrix: eigenvalue iteration did not converge");
  }
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

std::vector<double> colleague_nodes(const ChebSeries& poly, double* max_imag) {
  const auto eig = colleague_eigenvalues(poly);
  std::vector<double> nodes;
  nodes.reserve(eig.size());
  double worst = 0.0;
  for (const auto& z : eig) {
    worst = std::max(worst, std::abs(z.imag()));
    nodes.push_back(z.real());
  }
  if (worst > kMaxImagForRealNode) {
    fail(ErrorCode::EigenFailure,
         "colleague_nodes: zero with imaginary part " + std::to_string(worst) +
             " where real zeros are required");
  }
  if (max_imag != nullptr) *max_imag = worst;
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

WeightSolve gauss_weights(std::span<const double> nodes, const MomentTable& table) {
  const std::size_t n = nodes.size();
  if (n == 0) return {};
  require_moments(table, n - 1, "gauss_weights");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (std::abs(nodes[i] - nodes[k]) <= 1e-14) {
        fail(ErrorCode::SingularVandermonde, "gauss_weights: coincident nodes");
      }
    }
  }
  Eigen::MatrixXd v(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    double t0 = 1.0, t1 = nodes[k];
    v(0, k) = 1.0;
    if (n > 1) v(1, k) = t1;
    for (std::size_t j = 2; j < n; ++j) {
      const double t2 = 2.0 * nodes[k] * t1 - t0;
      v(j, k) = t2;
      t0 = t1;
      t1 = t2;
    }
  }
  Eigen::VectorXd rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs(j) = table.nu[j];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(v);
  if (!lu.isInvertible()) fail(ErrorCode::SingularVandermonde, "gauss_weights: singular system");
  const Eigen::VectorXd w = lu.solve(rhs);
  if (!w.allFinite()) fail(ErrorCode::SingularVandermonde, "gauss_weights: non-finite weights");
  WeightSolve out;
  out.weights.assign(w.data(), w.data() + n);
  out.residual = (v * w - rhs).cwiseAbs().maxCoeff();
  return out;
}

QuadRule build_rule1(const MomentTable& table, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "rule 1 needs n >= 1");
  const OrthogonalPolynomial p = orth_poly(table, n);
  double imag = 0.0;
  QuadRule rule;
  rule.nodes = colleague_nodes(p.series, &imag);
  for (double x : rule.nodes) {
    if (!(x > -1.0 && x < 1.0)) {
      fail(ErrorCode::NotPositiveDefinite, "rule 1: node outside (-1, 1); weight not admissible");
    }
  }
  WeightSolve ws = gauss_weights(rule.nodes, table);
  rule.weights = std::move(ws.weights);
  rule.omega = table.omega;
  rule.kind = RuleKind::classical;
  rule.diagnostics.gram_cond = p.gram_cond;
  rule.diagnostics.vandermonde_residual = ws.residual;
  rule.diagnostics.imag_residual = imag;
  rule.diagnostics.existence_ok = true;
  return rule;
}

QuadRule build_rule1(const CompositeWeight& weight, std::size_t n, const Rule1Options& options) {
  if (n == 0 || n > options.max_nodes) {
    fail(ErrorCode::InvalidArgument,
         "rule 1: n must lie in [1, " + std::to_string(options.max_nodes) + "]");
  }
  const MomentTable table = compute_moments(weight, 2 * n - 1 + kMomentSlack, options.moments);
  return build_rule1(table, n);
}

double apply_rule(const QuadRule& rule, const FunctionSpec& f) {
  long double sum = 0.0L;
  for (std::size_t k = 0; k < rule.size(); ++k) sum += rule.weights[k] * f(rule.nodes[k]);
  return static_cast<double>(sum);
}

std::complex<double> apply_rule(const ComplexQuadRule& rule, const FunctionSpec& f) {
  if (!f.complex_ok()) {
    fail(ErrorCode::ComplexNotSupported,
         f.to_string() + " cannot be evaluated at complex quadrature nodes");
  }
  std::complex<long double> sum = 0.0L;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const std::complex<double> term = rule.weights[k] * f(rule.nodes[k]);
    sum += std::complex<long double>(term.real(), term.imag());
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

double error_bound_analytic(double K, double M, double rho, std::size_t n) {
  if (!(rho > 1.0)) fail(ErrorCode::BadEllipseParameter, "ellipse parameter must exceed 1");
  if (!(K >= 0.0) || !(M >= 0.0)) fail(ErrorCode::InvalidArgument, "K and M must be non-negative");
  return 4.0 * K * M / (std::pow(rho, 2.0 * static_cast<double>(n)) * (1.0 - 1.0 / rho));
}

double error_bound_sobolev(double K, double V, int m, std::size_t n) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "smoothness order m must be >= 1");
  if (n < static_cast<std::size_t>((m + 2) / 2)) {
    fail(ErrorCode::TooFewNodes, "error_bound_sobolev: need n >= floor((m+2)/2)");
  }
  double denom = std::numbers::pi * m;
  const double two_n = 2.0 * static_cast<double>(n);
  for (int i = 1; i <= m; ++i) denom *= two_n - i;
  return 4.0 * K * V / denom;
}

double bernstein_ellipse_max(const FunctionSpec& f, double rho, std::size_t samples) {
  if (!(rho > 1.0)) fail(ErrorCode::BadEllipseParameter, "ellipse parameter must exceed 1");
  if (!f.complex_ok()) {
    fail(ErrorCode::ComplexNotSupported, f.to_string() + " is not analytic off the real line");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
    const std::complex<double> e = std::polar(1.0, t);
    const std::complex<double> z = 0.5 * (rho * e + 1.0 / (rho * e));
    best = std::max(best, std::abs(f(z)));
  }
  return best;
}

double best_analytic_bound(const FunctionSpec& f, double K, std::size_t n) {
  const double limit = std::min(bernstein_limit(f), 20.0);
  if (!(limit > 1.0) || !f.complex_ok()) return std::numeric_limits<double>::quiet_NaN();
  constexpr int kSteps = 48;
  const double lo = std::log(1.01), hi = std::log(limit * (1.0 - 1e-3));
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSteps; ++i) {
    const double rho = std::exp(lo + (hi - lo) * i / kSteps);
    const double m = bernstein_ellipse_max(f, rho, 1024);
    if (std::isfinite(m)) best = std::min(best, error_bound_analytic(K, m, rho, n));
  }
  return best;
}

}  // namespace oscgauss
