#pragma once

#include <cstddef>
#include <vector>

#include "oscgauss/fncat.hpp"
#include "oscgauss/oscparts.hpp"

namespace oscgauss {

/// Hermite interpolant psi of degree 2r-1 matching f^(j)(+-1), j < r.
struct HermitePoly {
  /// Monomial coefficients, lowest degree first.
  std::vector<double> coeffs;
  std::size_t multiplicity = 0;
  /// f^(j)(-1) and f^(j)(+1), j < r.
  std::vector<double> left_data;
  std::vector<double> right_data;

  std::size_t degree() const { return coeffs.size() - 1; }
  double operator()(double x) const;
};

/// Confluent divided differences on the nodes {-1 (r times), +1 (r times)}.
HermitePoly hermite_endpoint_interp(const FunctionSpec& f, std::size_t r);

/// psi^(j)(x) for j = 0..deg psi.
std::vector<double> poly_all_derivatives(const HermitePoly& p, double x);

struct FilonOptions {
  OscPartsOptions parts;
  /// Gauss-Legendre order for the mean term; 0 selects 2r + 16.
  std::size_t gl_nodes = 0;
};

/// Filon-type value: (rho_0/2) int f plus the endpoint expansion with f's
/// derivatives replaced by those of the Hermite interpolant.
double filon_quadrature(const FunctionSpec& f, const CompositeWeight& weight, std::size_t r,
                        const FilonOptions& options = {});

/// Same, reusing precomputed oscillator data.
double filon_quadrature(const FunctionSpec& f, const OscParts& parts, std::size_t r,
                        std::size_t gl_nodes = 0);

}  // namespace oscgauss
