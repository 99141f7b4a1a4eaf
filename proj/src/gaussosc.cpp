#include "oscgauss/gaussosc.hpp"

#include <lapacke.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oscgauss/errors.hpp"
#include "oscgauss/refquad.hpp"

namespace oscgauss {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_even(std::size_t n) {
  if (n == 0 || n % 2 == 1) {
    fail(ErrorCode::InvalidArgument, "rule 2 requires an even positive n, got " + std::to_string(n));
  }
}

// perm[k] = index into `next` continuing trajectory k of `prev`
std::vector<std::size_t> match_nearest(std::span<const std::complex<double>> prev,
                                       std::span<const std::complex<double>> next) {
  struct Pair {
    double d;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(prev.size() * next.size());
  for (std::size_t i = 0; i < prev.size(); ++i) {
    for (std::size_t j = 0; j < next.size(); ++j) pairs.push_back({std::abs(prev[i] - next[j]), i, j});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d < b.d; });
  std::vector<std::size_t> perm(prev.size(), next.size());
  std::vector<bool> used(next.size(), false);
  for (const auto& p : pairs) {
    if (perm[p.i] != next.size() || used[p.j]) continue;
    perm[p.i] = p.j;
    used[p.j] = true;
  }
  return perm;
}

}  // namespace

OrthogonalPolynomial osc_orth_poly(const MomentTable& shifted, std::size_t n) {
  require_even(n);
  if (shifted.nu.size() < 2 * n) {
    fail(ErrorCode::IndexOutOfRange, "osc_orth_poly: need moments through index " +
                                         std::to_string(2 * n - 1));
  }
  double scale = 0.0;
  for (double v : shifted.nu) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) {
    fail(ErrorCode::NonexistentPolynomial, "osc_orth_poly: the shifted weight vanishes");
  }

  std::vector<double> a = gram_matrix(shifted, n);
  const double cond = symmetric_condition(a, n);
  std::vector<double> rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = -gram_entry(shifted, n, j);

  const auto ln = static_cast<lapack_int>(n);
  std::vector<lapack_int> ipiv(n);
  lapack_int info = LAPACKE_dsytrf(LAPACK_ROW_MAJOR, 'U', ln, a.data(), ln, ipiv.data());
  if (info > 0 || !std::isfinite(cond) || cond > 1.0 / kEps) {
    fail(ErrorCode::NonexistentPolynomial,
         "osc_orth_poly: Gram system of order " + std::to_string(n) +
             " is singular (condition " + std::to_string(cond) + ")");
  }
  if (info < 0) fail(ErrorCode::InvalidArgument, "osc_orth_poly: dsytrf argument error");
  info = LAPACKE_dsytrs(LAPACK_ROW_MAJOR, 'U', ln, 1, a.data(), ln, ipiv.data(), rhs.data(), 1);
  if (info != 0) fail(ErrorCode::NonexistentPolynomial, "osc_orth_poly: dsytrs failed");

  std::vector<double> c(n + 1);
  for (std::size_t k = 0; k < n; ++k) c[k] = rhs[k];
  c[n] = 1.0;
  for (double v : c) {
    if (!std::isfinite(v)) fail(ErrorCode::NonexistentPolynomial, "osc_orth_poly: non-finite solution");
  }
  return {ChebSeries(std::move(c)), cond, cond <= 1.0 / (100.0 * kEps)};
}

std::vector<std::complex<double>> complex_nodes(const ChebSeries& poly) {
  auto nodes = colleague_eigenvalues(poly);
  std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return nodes;
}

ComplexWeightSolve complex_weights(std::span<const std::complex<double>> nodes,
                                   const MomentTable& shifted) {
  const std::size_t n = nodes.size();
  if (shifted.nu.size() < n) {
    fail(ErrorCode::IndexOutOfRange, "complex_weights: moment table too short");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (std::abs(nodes[i] - nodes[k]) <= 1e-14) {
        fail(ErrorCode::SingularVandermonde, "complex_weights: coincident nodes");
      }
    }
  }
  Eigen::MatrixXcd v(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> t0 = 1.0, t1 = nodes[k];
    v(0, k) = 1.0;
    if (n > 1) v(1, k) = t1;
    for (std::size_t j = 2; j < n; ++j) {
      const std::complex<double> t2 = 2.0 * nodes[k] * t1 - t0;
      v(j, k) = t2;
      t0 = t1;
      t1 = t2;
    }
  }
  Eigen::VectorXcd rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs(j) = shifted.nu[j];
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  if (!lu.isInvertible()) fail(ErrorCode::SingularVandermonde, "complex_weights: singular system");
  const Eigen::VectorXcd w = lu.solve(rhs);
  if (!w.allFinite()) fail(ErrorCode::SingularVandermonde, "complex_weights: non-finite weights");
  ComplexWeightSolve out;
  out.weights.assign(w.data(), w.data() + n);
  out.residual = (v * w - rhs).cwiseAbs().maxCoeff();
  return out;
}

SplitRule build_rule2(const CompositeWeight& weight, std::size_t n, const Rule2Options& options) {
  require_even(n);
  if (n > options.max_nodes) {
    fail(ErrorCode::InvalidArgument, "rule 2: n exceeds " + std::to_string(options.max_nodes));
  }
  const OscParts parts =
      make_osc_parts(weight.g(), weight.parity(), weight.omega(), options.moments.parts);
  const MomentTable table = compute_moments(weight, 2 * n - 1 + kMomentSlack, options.moments);
  const MomentTable shifted = shifted_moments(table, parts.rho0());

  // moments of a constant g cancel to rounding level
  double scale = 0.0;
  for (double v : shifted.nu) scale = std::max(scale, std::abs(v));
  if (scale <= 100.0 * kEps * (std::abs(table.nu[0]) + std::abs(parts.rho0()))) {
    fail(ErrorCode::NonexistentPolynomial, "rule 2: the shifted weight vanishes identically");
  }

  const OrthogonalPolynomial q = osc_orth_poly(shifted, n);
  SplitRule rule;
  rule.rho0 = parts.rho0();
  rule.osc.nodes = complex_nodes(q.series);
  ComplexWeightSolve ws = complex_weights(rule.osc.nodes, shifted);
  rule.osc.weights = std::move(ws.weights);
  rule.osc.omega = weight.omega();
  rule.osc.kind = RuleKind::oscillatory;
  rule.osc.diagnostics.gram_cond = q.gram_cond;
  rule.osc.diagnostics.vandermonde_residual = ws.residual;
  rule.osc.diagnostics.existence_ok = q.existence_ok;
  rule.existence_ok = q.existence_ok;
  rule.gl = gauss_legendre(options.gl_nodes == 0 ? 2 * n + 16 : options.gl_nodes);
  return rule;
}

Rule2Result integrate_rule2(const FunctionSpec& f, const SplitRule& rule) {
  const std::complex<double> io = apply_rule(rule.osc, f);
  const double is = 0.5 * rule.rho0 * apply_rule(rule.gl, f);
  Rule2Result out;
  out.value = io.real() + is;
  out.imag_residual = std::abs(io.imag());
  out.rule = rule;
  out.rule.osc.diagnostics.imag_residual = out.imag_residual;
  return out;
}

Rule2Result integrate_rule2(const FunctionSpec& f, const CompositeWeight& weight, std::size_t n,
                            const Rule2Options& options) {
  if (!f.complex_ok()) {
    fail(ErrorCode::ComplexNotSupported,
         f.to_string() + " cannot be evaluated at the complex nodes of rule 2");
  }
  return integrate_rule2(f, build_rule2(weight, n, options));
}

double conjugate_pairing_residual(std::span<const std::complex<double>> nodes) {
  double worst = 0.0;
  for (const auto& z : nodes) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : nodes) best = std::min(best, std::abs(std::conj(z) - y));
    worst = std::max(worst, best);
  }
  return worst;
}

int nearest_endpoint(std::complex<double> z) {
  return std::abs(z - 1.0) <= std::abs(z + 1.0) ? 1 : -1;
}

std::vector<std::complex<double>> rule2_nodes(const CompositeWeight& weight, std::size_t n,
                                              const MomentOptions& options) {
  Rule2Options ro;
  ro.moments = options;
  return build_rule2(weight, n, ro).osc.nodes;
}

std::vector<TrajectoryRow> node_trajectory(const FunctionSpec& g, Parity parity, std::size_t n,
                                           std::span<const double> omega_grid,
                                           const MomentOptions& options) {
  require_even(n);
  std::vector<TrajectoryRow> rows;
  std::vector<std::complex<double>> previous;
  for (double omega : omega_grid) {
    std::vector<std::complex<double>> nodes;
    try {
      nodes = rule2_nodes(CompositeWeight(g, parity, omega), n, options);
    } catch (const Error& e) {
      TrajectoryRow row;
      row.omega = omega;
      row.error = std::string(to_string(e.code())) + ": " + e.what();
      rows.push_back(std::move(row));
      previous.clear();
      continue;
    }
    if (!previous.empty()) {
      const auto perm = match_nearest(previous, nodes);
      std::vector<std::complex<double>> ordered(n);
      for (std::size_t k = 0; k < n; ++k) ordered[k] = nodes[perm[k]];
      nodes = std::move(ordered);
    }
    for (std::size_t k = 0; k < n; ++k) {
      TrajectoryRow row;
      row.omega = omega;
      row.k = k + 1;
      row.re = nodes[k].real();
      row.im = nodes[k].imag();
      row.endpoint = nearest_endpoint(nodes[k]);
      row.scaled_distance = omega * std::abs(nodes[k] - static_cast<double>(row.endpoint));
      rows.push_back(row);
    }
    previous = std::move(nodes);
  }
  return rows;
}

EndpointHypothesis check_endpoint_hypothesis(const FunctionSpec& g, Parity parity,
                                             std::size_t n, double omega,
                                             const MomentOptions& options) {
  require_even(n);
  // scaled offsets omega (x - e) of the nodes attached to endpoint e
  auto scaled = [&](double w, int e) {
    std::vector<std::complex<double>> zeta;
    for (const auto& z : rule2_nodes(CompositeWeight(g, parity, w), n, options)) {
      if (nearest_endpoint(z) == e) zeta.push_back(w * (z - static_cast<double>(e)));
    }
    return zeta;
  };
  EndpointHypothesis h;
  bool balanced = true;
  for (int e : {-1, 1}) {
    const auto z1 = scaled(omega, e);
    const auto z2 = scaled(2.0 * omega, e);
    (e > 0 ? h.right : h.left) = z1.size();
    balanced = balanced && z1.size() == n / 2 && z2.size() == n / 2;
    if (z1.size() != z2.size()) continue;
    const auto perm = match_nearest(z1, z2);
    for (std::size_t k = 0; k < z1.size(); ++k) {
      const double a = std::abs(z1[k]);
      const double b = std::abs(z2[perm[k]]);
      const double ratio = (a > 0.0 && b > 0.0) ? std::max(a / b, b / a)
                                                : std::numeric_limits<double>::infinity();
      h.worst_ratio = std::max(h.worst_ratio, ratio);
    }
  }
  h.holds = balanced && h.worst_ratio <= 3.0;
  return h;
}

}  // namespace oscgauss
