#include "oscgauss/moments.hpp"

#include <cmath>
#include <string>

#include "oscgauss/errors.hpp"

namespace oscgauss {

std::string_view to_string(MomentRoute route) {
  return route == MomentRoute::asymptotic ? "asymptotic" : "expansion";
}

MomentTable moments_asymptotic(const FunctionSpec& g, const OscParts& parts, std::size_t J) {
  const double omega = parts.omega();
  const std::size_t kmax = J / 2;
  std::vector<std::pair<double, double>> right(kmax + 1), left(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    right[k] = parts.uv(k, 1.0);
    left[k] = parts.uv(k, -1.0);
  }

  MomentTable table;
  table.nu.resize(J + 1);
  table.omega = omega;
  table.parity = parts.parity();
  table.g_name = g.to_string();
  table.route = MomentRoute::asymptotic;

  for (std::size_t j = 0; j <= J; ++j) {
    long double sum = 0.5L * parts.rho0() * cheb_integral(j);
    const double j2 = static_cast<double>(j) * static_cast<double>(j);
    // scaled = T_j^{(i)}(1) / omega^{i+1}
    double scaled = 1.0 / omega;
    for (std::size_t i = 0; i <= j; ++i) {
      const double at_left = ((j + i) % 2 == 0) ? scaled : -scaled;
      const std::size_t k = i / 2;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      if (i % 2 == 0) {
        sum += sign * (scaled * right[k].first - at_left * left[k].first);
      } else {
        sum += sign * (scaled * right[k].second - at_left * left[k].second);
      }
      const double id = static_cast<double>(i);
      scaled *= (j2 - id * id) / ((2.0 * id + 1.0) * omega);
    }
    table.nu[j] = static_cast<double>(sum);
  }
  return table;
}

MomentTable moments_expansion(const ChebSeries& weight_series, std::size_t J) {
  MomentTable table;
  table.nu.resize(J + 1);
  table.route = MomentRoute::expansion;
  const auto c = weight_series.coeffs();
  for (std::size_t j = 0; j <= J; ++j) {
    long double sum = 0.0L;
    for (std::size_t k = j % 2; k < c.size(); k += 2) {
      const long double plus = static_cast<long double>(k + j);
      const long double minus = static_cast<long double>(k) - static_cast<long double>(j);
      sum += c[k] * (1.0L / (1.0L - plus * plus) + 1.0L / (1.0L - minus * minus));
    }
    table.nu[j] = static_cast<double>(sum);
  }
  return table;
}

MomentTable shifted_moments(const MomentTable& table, double rho0) {
  MomentTable out = table;
  for (std::size_t j = 0; j < out.nu.size(); ++j) {
    out.nu[j] = table.nu[j] - 0.5 * rho0 * cheb_integral(j);
  }
  out.shifted = true;
  return out;
}

double gram_entry(const MomentTable& table, std::size_t k, std::size_t j) {
  if (j + k > table.max_index()) {
    fail(ErrorCode::IndexOutOfRange,
         "gram_entry: index " + std::to_string(j + k) + " exceeds table size " +
             std::to_string(table.max_index()));
  }
  const std::size_t diff = j > k ? j - k : k - j;
  return 0.5 * (table.nu[j + k] + table.nu[diff]);
}

ChebSeries expand_weight(const CompositeWeight& weight, double tol) {
  return adaptive_degree([&weight](long double x) { return weight(x); }, tol);
}

MomentTable compute_moments(const CompositeWeight& weight, std::size_t J,
                            const MomentOptions& options) {
  MomentTable table;
  if (options.route == MomentRoute::asymptotic) {
    const OscParts parts =
        make_osc_parts(weight.g(), weight.parity(), weight.omega(), options.parts);
    table = moments_asymptotic(weight.g(), parts, J);
  } else {
    table = moments_expansion(expand_weight(weight, options.expansion_tol), J);
  }
  table.omega = weight.omega();
  table.parity = weight.parity();
  table.g_name = weight.g().to_string();
  return table;
}

}  // namespace oscgauss
