#include "oscgauss/cheb.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "oscgauss/errors.hpp"

namespace oscgauss {

namespace {

// Below this size the O(m^2) direct sum is cheaper than planning.
constexpr std::size_t kDirectDctLimit = 64;

// fftw_plan_* and fftw_destroy_plan are not thread-safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// y_k = x_0 + (-1)^k x_m + 2 sum_{j=1}^{m-1} x_j cos(pi j k / m)
std::vector<double> dct1(std::span<const double> x) {
  const std::size_t npts = x.size();
  const std::size_t m = npts - 1;
  std::vector<double> y(npts);
  if (npts < kDirectDctLimit) {
    const long double pi = std::numbers::pi_v<long double>;
    for (std::size_t k = 0; k <= m; ++k) {
      long double s = x[0] + ((k % 2 == 0) ? x[m] : -x[m]);
      for (std::size_t j = 1; j < m; ++j) {
        // Reduce j*k mod 2m so the cosine argument stays in [0, 2pi).
        const std::size_t r = (j * k) % (2 * m);
        s += 2.0L * x[j] * std::cos(pi * static_cast<long double>(r) / m);
      }
      y[k] = static_cast<double>(s);
    }
    return y;
  }
  std::vector<double> in(x.begin(), x.end());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_r2r_1d(static_cast<int>(npts), in.data(), y.data(),
                            FFTW_REDFT00, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return y;
}

}  // namespace

ChebSeries::ChebSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

long double lobatto_point(std::size_t j, std::size_t m) {
  if (m == 0) return 0.0L;
  const long double pi = std::numbers::pi_v<long double>;
  const auto mm = static_cast<long double>(m);
  const auto jj = static_cast<long double>(j);
  // sin form is exactly antisymmetric about j = m/2
  return std::sin(pi * (mm - 2.0L * jj) / (2.0L * mm));
}

ChebSeries cheb_from_lobatto_samples(std::span<const double> samples) {
  if (samples.empty()) fail(ErrorCode::InvalidArgument, "no samples");
  if (samples.size() == 1) return ChebSeries({samples[0]});
  const std::size_t m = samples.size() - 1;
  std::vector<double> c = dct1(samples);
  for (auto& v : c) v /= static_cast<double>(m);
  c.front() *= 0.5;
  c.back() *= 0.5;
  return ChebSeries(std::move(c));
}

ChebSeries cheb_transform(const ChebSampler& h, std::size_t m) {
  std::vector<double> samples(m + 1);
  for (std::size_t j = 0; j <= m; ++j) samples[j] = h(lobatto_point(j, m));
  return cheb_from_lobatto_samples(samples);
}

ChebSeries adaptive_degree(const ChebSampler& h, double tol,
                           const AdaptiveOptions& options) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "adaptive_degree: tol must be positive");
  std::size_t m = std::max<std::size_t>(options.initial_degree, 2);
  for (;;) {
    if (m > options.max_degree) {
      fail(ErrorCode::DegreeOverflow,
           "adaptive_degree: degree would exceed " + std::to_string(options.max_degree));
    }
    ChebSeries s = cheb_transform(h, m);
    auto c = s.coeffs();
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    const double cutoff = tol * scale;
    if (scale == 0.0) return ChebSeries({0.0});
    if (std::abs(c[m]) < cutoff && std::abs(c[m - 1]) < cutoff) {
      std::size_t last = m;
      while (last > 0 && std::abs(c[last]) < cutoff) --last;
      return ChebSeries(std::vector<double>(c.begin(), c.begin() + last + 1));
    }
    m *= 2;
  }
}

double cheb_endpoint_derivative(std::size_t n, std::size_t k, int endpoint) {
  if (endpoint != 1 && endpoint != -1) {
    fail(ErrorCode::InvalidArgument, "endpoint must be +1 or -1");
  }
  double prod = 1.0;
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  for (std::size_t j = 0; j < k; ++j) {
    const double jd = static_cast<double>(j);
    prod *= (n2 - jd * jd) / (2.0 * jd + 1.0);
  }
  if (endpoint == -1 && (n + k) % 2 == 1) prod = -prod;
  return prod;
}

double cheb_integral(std::size_t j) {
  if (j % 2 == 1) return 0.0;
  const double jd = static_cast<double>(j);
  return 2.0 / (1.0 - jd * jd);
}

ChebSeries cheb_derivative(const ChebSeries& series) {
  auto c = series.coeffs();
  const std::size_t n = series.degree();
  if (n == 0) return ChebSeries({0.0});
  // c'_{k-1} = c'_{k+1} + 2k c_k, with c'_0 halved at the end
  std::vector<double> d(n + 2, 0.0);
  for (std::size_t k = n; k >= 1; --k) {
    d[k - 1] = d[k + 1] + 2.0 * static_cast<double>(k) * c[k];
  }
  d[0] *= 0.5;
  d.resize(n);
  return ChebSeries(std::move(d));
}

ChebSeries cheb_basis(std::size_t j) {
  std::vector<double> c(j + 1, 0.0);
  c[j] = 1.0;
  return ChebSeries(std::move(c));
}

}  // namespace oscgauss
