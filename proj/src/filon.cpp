#include "oscgauss/filon.hpp"

#include <cmath>
#include <string>

#include "oscgauss/errors.hpp"
#include "oscgauss/gaussw.hpp"
#include "oscgauss/refquad.hpp"

namespace oscgauss {

double HermitePoly::operator()(double x) const {
  double s = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) s = s * x + coeffs[k];
  return s;
}

HermitePoly hermite_endpoint_interp(const FunctionSpec& f, std::size_t r) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "Hermite interpolation needs multiplicity >= 1");
  HermitePoly out;
  out.multiplicity = r;
  for (std::size_t j = 0; j < r; ++j) {
    out.left_data.push_back(f.derivative(static_cast<int>(j), -1.0));
    out.right_data.push_back(f.derivative(static_cast<int>(j), 1.0));
  }

  const std::size_t npts = 2 * r;
  std::vector<double> z(npts);
  for (std::size_t i = 0; i < npts; ++i) z[i] = i < r ? -1.0 : 1.0;

  // dd[i][j] = f[z_i, ..., z_j]
  std::vector<std::vector<double>> dd(npts, std::vector<double>(npts, 0.0));
  for (std::size_t i = 0; i < npts; ++i) dd[i][i] = i < r ? out.left_data[0] : out.right_data[0];
  for (std::size_t len = 1; len < npts; ++len) {
    for (std::size_t i = 0; i + len < npts; ++i) {
      const std::size_t j = i + len;
      if (z[i] == z[j]) {
        const auto& data = z[i] < 0.0 ? out.left_data : out.right_data;
        dd[i][j] = data[len] / std::tgamma(static_cast<double>(len) + 1.0);
      } else {
        dd[i][j] = (dd[i + 1][j] - dd[i][j - 1]) / (z[j] - z[i]);
      }
    }
  }

  // Newton form to monomial coefficients
  std::vector<double> poly{dd[0][npts - 1]};
  for (std::size_t k = npts - 1; k-- > 0;) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= z[k] * poly[i];
    }
    next[0] += dd[0][k];
    poly = std::move(next);
  }
  out.coeffs = std::move(poly);
  return out;
}

std::vector<double> poly_all_derivatives(const HermitePoly& p, double x) {
  std::vector<double> c = p.coeffs;
  std::vector<double> out;
  out.reserve(c.size());
  while (!c.empty()) {
    double s = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
    out.push_back(s);
    for (std::size_t k = 1; k < c.size(); ++k) c[k - 1] = static_cast<double>(k) * c[k];
    c.pop_back();
  }
  return out;
}

double filon_quadrature(const FunctionSpec& f, const OscParts& parts, std::size_t r,
                        std::size_t gl_nodes) {
  const HermitePoly psi = hermite_endpoint_interp(f, r);
  const std::vector<double> right = poly_all_derivatives(psi, 1.0);
  const std::vector<double> left = poly_all_derivatives(psi, -1.0);
  const double omega = parts.omega();
  const std::size_t degree = psi.degree();

  const QuadRule gl = gauss_legendre(gl_nodes == 0 ? 2 * r + 16 : gl_nodes);
  long double sum = 0.5L * parts.rho0() * apply_rule(gl, f);
  // derivative order i: even i = 2k pairs with U_k / omega^{2k+1}, odd i = 2k+1
  // with V_k / omega^{2k+2}
  for (std::size_t i = 0; i <= degree; ++i) {
    const std::size_t k = i / 2;
    const auto [u_right, v_right] = parts.uv(k, 1.0);
    const auto [u_left, v_left] = parts.uv(k, -1.0);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double scale = std::pow(omega, -static_cast<double>(i + 1));
    if (i % 2 == 0) {
      sum += sign * scale * (right[i] * u_right - left[i] * u_left);
    } else {
      sum += sign * scale * (right[i] * v_right - left[i] * v_left);
    }
  }
  return static_cast<double>(sum);
}

double filon_quadrature(const FunctionSpec& f, const CompositeWeight& weight, std::size_t r,
                        const FilonOptions& options) {
  const OscParts parts = make_osc_parts(weight.g(), weight.parity(), weight.omega(), options.parts);
  return filon_quadrature(f, parts, r, options.gl_nodes);
}

}  // namespace oscgauss
