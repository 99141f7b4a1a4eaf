#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oscgauss/cheb.hpp"
#include "oscgauss/oscparts.hpp"

namespace oscgauss {

enum class MomentRoute { asymptotic, expansion };

std::string_view to_string(MomentRoute route);

/// Modified Chebyshev moments nu_j = int T_j(x) w(x) dx, j = 0..J.
struct MomentTable {
  std::vector<double> nu;
  double omega = 0.0;
  Parity parity = Parity::sin;
  std::string g_name;
  MomentRoute route = MomentRoute::expansion;
  /// True when nu holds moments of w - rho_0/2.
  bool shifted = false;

  std::size_t max_index() const { return nu.size() - 1; }
};

/// Moments by integrating by parts against U_k, V_k at the endpoints.
MomentTable moments_asymptotic(const FunctionSpec& g, const OscParts& parts, std::size_t J);

/// Moments of a Chebyshev series: exact integrals of products T_k T_j.
MomentTable moments_expansion(const ChebSeries& weight_series, std::size_t J);

/// nu_j - (rho_0/2) int T_j
MomentTable shifted_moments(const MomentTable& table, double rho0);

/// mu_{k,j} = int T_k T_j w = (nu_{j+k} + nu_{|j-k|}) / 2
double gram_entry(const MomentTable& table, std::size_t k, std::size_t j);

struct MomentOptions {
  MomentRoute route = MomentRoute::expansion;
  /// Relative truncation of the weight's Chebyshev expansion.
  double expansion_tol = 1e-15;
  OscPartsOptions parts;
};

/// Chebyshev expansion of the composite weight, degree chosen adaptively.
ChebSeries expand_weight(const CompositeWeight& weight, double tol = 1e-15);

/// Moments of the composite weight through index J by the chosen route.
MomentTable compute_moments(const CompositeWeight& weight, std::size_t J,
                            const MomentOptions& options = {});

/// Moment slack kept beyond 2n-1 so Gram assembly never re-derives.
inline constexpr std::size_t kMomentSlack = 2;

}  // namespace oscgauss
