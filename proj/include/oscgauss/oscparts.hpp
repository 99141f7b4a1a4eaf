#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "oscgauss/fncat.hpp"

namespace oscgauss {

enum class Parity { sin, cos };

std::string_view to_string(Parity parity);
Parity parse_parity(std::string_view text);

/// The oscillatory weight x -> g(phi(omega x)).
///
/// The phase omega*x is always formed in extended precision; in double the
/// rounding of omega*x alone costs ~omega ulps.
class CompositeWeight {
 public:
  CompositeWeight(FunctionSpec g, Parity parity, double omega);

  const FunctionSpec& g() const { return g_; }
  Parity parity() const { return parity_; }
  double omega() const { return omega_; }

  /// phi(omega x) in extended precision.
  long double phase(long double x) const;

  double operator()(long double x) const;
  long double eval_long(long double x) const;

  /// True when the weight is an even function of x.
  bool is_even() const;

 private:
  FunctionSpec g_;
  Parity parity_;
  double omega_;
};

/// Chebyshev-cosine coefficients of g: g(cos t) = rho_0/2 + sum rho_m cos(m t).
///
/// Series route: rho_m = 2^{1-m} sum_k g^{(m+2k)}(0) / (k! (m+k)! 4^k).
/// Keeps coefficients until two consecutive ones fall below tol * max|rho|
/// (and at least 8 are stored).
std::vector<double> rho_series(const FunctionSpec& g, double tol = 1e-16);

/// Transform route: periodic trapezoid on theta -> g(cos theta) with
/// 2 max(M, 64) points; returns rho_0..rho_M.
std::vector<double> rho_transform(const FunctionSpec& g, std::size_t order);

enum class RhoRoute { transform, series };

/// Fourier data of the mean-free oscillator (g o phi)(x) - rho_0/2.
///
/// Writing the m-th harmonic as a_m cos(m omega x + beta_m),
///   U_k(x) = sum a_m m^{-(2k+1)} sin(m omega x + beta_m)
///   V_k(x) = sum a_m m^{-(2k+2)} cos(m omega x + beta_m)
/// so that U_0' = omega [(g o phi) - rho_0/2], V_k' = -omega U_k and
/// U_{k+1}' = omega V_k.  For phi = sin this is exactly the classical form
/// with a_{2j} = (-1)^j rho_{2j}, a_{2j+1} = (-1)^j rho_{2j+1},
/// beta_odd = -pi/2; for phi = cos, a_m = rho_m and beta_m = 0.
class OscParts {
 public:
  OscParts(std::vector<double> rho, Parity parity, double omega, double tol);

  const std::vector<double>& rho() const { return rho_; }
  double rho0() const { return rho_[0]; }
  std::size_t order() const { return rho_.size() - 1; }
  Parity parity() const { return parity_; }
  double omega() const { return omega_; }
  double tol() const { return tol_; }

  /// (U_k(x), V_k(x))
  std::pair<double, double> uv(std::size_t k, double x) const;

  /// rho_0/2 + sum rho_m cos(m theta) at theta = acos(phi(omega x)).
  double reconstruct(double x) const;

 private:
  std::vector<double> rho_;
  Parity parity_;
  double omega_;
  double tol_;
};

struct OscPartsOptions {
  RhoRoute route = RhoRoute::transform;
  double tol = 1e-16;
};

/// Builds OscParts, truncating the rho tail below tol * max|rho|.
OscParts make_osc_parts(const FunctionSpec& g, Parity parity, double omega,
                        const OscPartsOptions& options = {});

inline std::pair<double, double> uv_eval(const OscParts& parts, std::size_t k, double x) {
  return parts.uv(k, x);
}

}  // namespace oscgauss
