#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace oscgauss {

/// Finite Chebyshev series sum_k c_k T_k(x) on [-1, 1].
class ChebSeries {
 public:
  ChebSeries() : coeffs_{0.0} {}
  explicit ChebSeries(std::vector<double> coeffs);

  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Clenshaw recurrence; works for real, long double and complex arguments.
  template <class X>
  X operator()(X x) const {
    X b1{0}, b2{0};
    for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
      X b0 = X(2) * x * b1 - b2 + X(coeffs_[k]);
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + X(coeffs_[0]);
  }

 private:
  std::vector<double> coeffs_;
};

template <class X>
X cheb_eval(const ChebSeries& series, X x) {
  return series(x);
}

/// Samplers receive the Lobatto point in extended precision so that callers
/// can resolve large phases like omega*x without losing digits.
using ChebSampler = std::function<double(long double)>;

/// Chebyshev-Lobatto point cos(j*pi/m), computed in symmetric form.
long double lobatto_point(std::size_t j, std::size_t m);

/// Interpolatory coefficients of degree m from samples at the m+1 Lobatto
/// points (type-I cosine transform).
ChebSeries cheb_from_lobatto_samples(std::span<const double> samples);

ChebSeries cheb_transform(const ChebSampler& h, std::size_t m);

struct AdaptiveOptions {
  std::size_t initial_degree = 16;
  std::size_t max_degree = std::size_t{1} << 20;
};

/// Doubles the degree until the last two coefficients drop below
/// tol * max|c_k|, then trims the negligible tail.
ChebSeries adaptive_degree(const ChebSampler& h, double tol,
                           const AdaptiveOptions& options = {});

/// T_n^{(k)}(endpoint) for endpoint = +1 or -1.
double cheb_endpoint_derivative(std::size_t n, std::size_t k, int endpoint);

/// Integral of T_j over [-1, 1].
double cheb_integral(std::size_t j);

/// Coefficients of the derivative series.
ChebSeries cheb_derivative(const ChebSeries& series);

/// Unit-coefficient series for T_j.
ChebSeries cheb_basis(std::size_t j);

}  // namespace oscgauss
