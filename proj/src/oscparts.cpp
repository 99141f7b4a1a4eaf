#include "oscgauss/oscparts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oscgauss/cheb.hpp"
#include "oscgauss/errors.hpp"

namespace oscgauss {

namespace {

constexpr std::size_t kMaxSeriesTerms = 4000;
constexpr std::size_t kMaxRhoOrder = 2048;

bool is_even_function(const FunctionSpec& g) {
  using Id = FunctionSpec::Id;
  switch (g.id()) {
    case Id::one:
    case Id::x2:
    case Id::runge:
    case Id::abs_cube:
    case Id::abs_sin:
      return true;
    case Id::cheb:
    case Id::pow:
      return static_cast<int>(g.params().begin()->second) % 2 == 0;
    default:
      return false;
  }
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// rho_m by the Taylor series of g at 0
double rho_coefficient_series(const FunctionSpec& g, std::size_t m, double tol) {
  const double ln4 = std::log(4.0);
  double sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  int small = 0;
  int growing = 0;
  for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
    const double a = g.taylor_coefficient(static_cast<int>(m + 2 * k));
    // (m+2k)! / (k! (m+k)!) / 4^k
    const double binom =
        std::exp(std::lgamma(static_cast<double>(m + 2 * k) + 1.0) -
                 std::lgamma(static_cast<double>(k) + 1.0) -
                 std::lgamma(static_cast<double>(m + k) + 1.0) - static_cast<double>(k) * ln4);
    const double term = a * binom;
    sum += term;
    if (!std::isfinite(sum)) {
      fail(ErrorCode::SeriesDivergence, "rho_series: non-finite partial sum for " + g.to_string());
    }
    const double mag = std::abs(term);
    small = (mag <= tol * std::abs(sum)) ? small + 1 : 0;
    growing = (mag > previous && mag > 0.0) ? growing + 1 : 0;
    if (growing >= 10) {
      fail(ErrorCode::SeriesDivergence, "rho_series: terms grow for " + g.to_string());
    }
    previous = mag;
    if (small >= 3) return std::ldexp(sum, 1 - static_cast<int>(m));
  }
  fail(ErrorCode::SeriesDivergence,
       "rho_series: series for " + g.to_string() + " did not converge");
}

}  // namespace

std::string_view to_string(Parity parity) {
  return parity == Parity::sin ? "sin" : "cos";
}

Parity parse_parity(std::string_view text) {
  if (text == "sin") return Parity::sin;
  if (text == "cos") return Parity::cos;
  fail(ErrorCode::InvalidArgument, "phi must be 'sin' or 'cos', got '" + std::string(text) + "'");
}

CompositeWeight::CompositeWeight(FunctionSpec g, Parity parity, double omega)
    : g_(std::move(g)), parity_(parity), omega_(omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    fail(ErrorCode::InvalidArgument, "omega must be positive and finite");
  }
}

long double CompositeWeight::phase(long double x) const {
  const long double t = static_cast<long double>(omega_) * x;
  return parity_ == Parity::sin ? std::sin(t) : std::cos(t);
}

double CompositeWeight::operator()(long double x) const {
  return g_(static_cast<double>(phase(x)));
}

long double CompositeWeight::eval_long(long double x) const { return g_(phase(x)); }

bool CompositeWeight::is_even() const {
  return parity_ == Parity::cos || is_even_function(g_);
}

std::vector<double> rho_series(const FunctionSpec& g, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "rho_series: tol must be positive");
  std::vector<double> rho;
  double scale = 0.0;
  for (std::size_t m = 0; m <= kMaxRhoOrder; ++m) {
    rho.push_back(rho_coefficient_series(g, m, tol));
    scale = std::max(scale, std::abs(rho.back()));
    if (rho.size() >= 8) {
      const double cutoff = tol * scale;
      if (std::abs(rho[m]) <= cutoff && std::abs(rho[m - 1]) <= cutoff) return rho;
    }
  }
  fail(ErrorCode::SeriesDivergence, "rho_series: coefficients of " + g.to_string() +
                                        " do not decay");
}

std::vector<double> rho_transform(const FunctionSpec& g, std::size_t order) {
  const std::size_t n = std::max<std::size_t>(order, 64);
  const ChebSeries s = cheb_transform([&g](long double x) { return static_cast<double>(g(x)); }, n);
  std::vector<double> rho(order + 1, 0.0);
  for (std::size_t m = 0; m <= order; ++m) rho[m] = s[m];
  rho[0] *= 2.0;
  return rho;
}

OscParts::OscParts(std::vector<double> rho, Parity parity, double omega, double tol)
    : rho_(std::move(rho)), parity_(parity), omega_(omega), tol_(tol) {
  if (rho_.empty()) fail(ErrorCode::InvalidArgument, "OscParts: empty rho");
  if (!(omega > 0.0)) fail(ErrorCode::InvalidArgument, "OscParts: omega must be positive");
}

std::pair<double, double> OscParts::uv(std::size_t k, double x) const {
  const long double wx = static_cast<long double>(omega_) * x;
  long double u = 0.0L, v = 0.0L;
  for (std::size_t m = 1; m < rho_.size(); ++m) {
    if (rho_[m] == 0.0) continue;
    const long double md = static_cast<long double>(m);
    const long double pu = std::pow(md, -static_cast<long double>(2 * k + 1));
    const long double pv = pu / md;
    const long double theta = md * wx;
    const long double s = std::sin(theta), c = std::cos(theta);
    if (parity_ == Parity::cos) {
      u += rho_[m] * pu * s;
      v += rho_[m] * pv * c;
    } else if (m % 2 == 0) {
      const long double a = ((m / 2) % 2 == 0) ? rho_[m] : -rho_[m];
      u += a * pu * s;
      v += a * pv * c;
    } else {
      const long double a = (((m - 1) / 2) % 2 == 0) ? rho_[m] : -rho_[m];
      u -= a * pu * c;
      v += a * pv * s;
    }
  }
  return {static_cast<double>(u), static_cast<double>(v)};
}

double OscParts::reconstruct(double x) const {
  const long double wx = static_cast<long double>(omega_) * x;
  long double sum = 0.5L * rho_[0];
  for (std::size_t m = 1; m < rho_.size(); ++m) {
    const long double theta = static_cast<long double>(m) * wx;
    if (parity_ == Parity::cos) {
      sum += rho_[m] * std::cos(theta);
    } else if (m % 2 == 0) {
      sum += (((m / 2) % 2 == 0) ? rho_[m] : -rho_[m]) * std::cos(theta);
    } else {
      sum += ((((m - 1) / 2) % 2 == 0) ? rho_[m] : -rho_[m]) * std::sin(theta);
    }
  }
  return static_cast<double>(sum);
}

OscParts make_osc_parts(const FunctionSpec& g, Parity parity, double omega,
                        const OscPartsOptions& options) {
  if (!(options.tol > 0.0)) fail(ErrorCode::InvalidArgument, "make_osc_parts: tol must be positive");
  std::vector<double> rho;
  if (options.route == RhoRoute::series) {
    rho = rho_series(g, options.tol);
  } else {
    for (std::size_t n = 64;; n *= 2) {
      if (n > kMaxRhoOrder) {
        fail(ErrorCode::DegreeOverflow, "make_osc_parts: rho coefficients of " + g.to_string() +
                                            " do not decay");
      }
      std::vector<double> full = rho_transform(g, n);
      const double cutoff = options.tol * max_abs(full);
      std::size_t last = 0;
      for (std::size_t m = 0; m <= n; ++m) {
        if (std::abs(full[m]) > cutoff) last = m;
      }
      if (last < n / 2) {
        // keep rho_0..rho_M with rho_M below the cutoff, at least 8 entries
        const std::size_t order = std::max<std::size_t>(last + 1, 7);
        full.resize(order + 1);
        rho = std::move(full);
        break;
      }
    }
  }
  return OscParts(std::move(rho), parity, omega, options.tol);
}

}  // namespace oscgauss
