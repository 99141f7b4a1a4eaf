#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace oscgauss {

enum class FunctionKind { amplitude, outer };

enum class SmoothnessClass { entire, analytic, finite };

/// Regularity metadata consumed by the error-bound formulas.
struct Smoothness {
  SmoothnessClass cls = SmoothnessClass::entire;
  /// Radius of the disc of analyticity about 0 (analytic entries).
  double radius = 0.0;
  /// For finite entries: f^(order) is of bounded variation `variation`.
  int order = 0;
  double variation = 0.0;
};

/// An entry of the closed function catalog, addressed as `name[:key=value,...]`.
///
/// Outer functions: one, x, x2, exp (kappa), ln4plus, recip4minus,
/// cube_shift, runge, sin, one_minus.
/// Amplitudes: exp, xsin, sqrt_shift, runge, abs_cube, abs_sin,
/// recip_shift, sin, cheb (j), pow (p).
/// Every entry may be used in either role; `kind` records the intended one.
class FunctionSpec {
 public:
  enum class Id {
    one, x, x2, exp, ln4plus, recip4minus, cube_shift, runge, sin, one_minus,
    xsin, sqrt_shift, abs_cube, abs_sin, recip_shift, cheb, pow,
  };

  FunctionSpec(Id id, FunctionKind kind, std::map<std::string, double> params = {});

  Id id() const { return id_; }
  std::string_view name() const;
  FunctionKind kind() const { return kind_; }
  const std::map<std::string, double>& params() const { return params_; }
  bool complex_ok() const;
  Smoothness smoothness() const;

  /// Canonical `name:key=value` form.
  std::string to_string() const;

  double operator()(double x) const;
  long double operator()(long double x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  /// Exact n-th derivative at real x.
  double derivative(int order, double x) const;

  /// f^(n)(0)/n!, available for analytic entries without factorial overflow.
  double taylor_coefficient(int n) const;

 private:
  template <class T>
  T eval(T x) const;

  Id id_;
  FunctionKind kind_;
  std::map<std::string, double> params_;
  double kappa_ = 1.0;
  int index_ = 0;
};

/// Sum of semiaxes of the largest Bernstein ellipse inside which f is
/// analytic: infinity for entire entries, 1 for entries with a kink on [-1, 1].
double bernstein_limit(const FunctionSpec& f);

FunctionSpec parse_function(std::string_view text, FunctionKind kind);

/// Names accepted by parse_function, in catalog order.
std::vector<std::string_view> catalog_names();

template <class X>
X fn_eval(const FunctionSpec& spec, X x) {
  return spec(x);
}

inline double fn_derivative(const FunctionSpec& spec, int order, double x) {
  return spec.derivative(order, x);
}

}  // namespace oscgauss
