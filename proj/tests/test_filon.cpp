#include <doctest.h>

#include <cmath>

#include "oscgauss/errors.hpp"
#include "oscgauss/filon.hpp"
#include "oscgauss/gaussosc.hpp"
#include "support.hpp"

using namespace oscgauss;
using testsupport::amp;
using testsupport::out;

TEST_CASE("Hermite interpolation examples") {
  const HermitePoly cube = hermite_endpoint_interp(amp("pow:p=3"), 2);
  REQUIRE(cube.coeffs.size() == 4);
  CHECK(std::abs(cube.coeffs[0]) < 1e-15);
  CHECK(std::abs(cube.coeffs[1]) < 1e-15);
  CHECK(std::abs(cube.coeffs[2]) < 1e-15);
  CHECK(cube.coeffs[3] == doctest::Approx(1.0));

  const HermitePoly lin = hermite_endpoint_interp(amp("exp"), 1);
  CHECK(lin.degree() == 1);
  CHECK(lin.coeffs[0] == doctest::Approx(std::cosh(1.0)));
  CHECK(lin.coeffs[1] == doctest::Approx(std::sinh(1.0)));

  const HermitePoly s = hermite_endpoint_interp(amp("sin"), 2);
  const auto right = poly_all_derivatives(s, 1.0);
  const auto left = poly_all_derivatives(s, -1.0);
  CHECK(right[0] == doctest::Approx(std::sin(1.0)).epsilon(1e-10));
  CHECK(left[0] == doctest::Approx(-std::sin(1.0)).epsilon(1e-10));
  CHECK(right[1] == doctest::Approx(std::cos(1.0)).epsilon(1e-10));
  CHECK(left[1] == doctest::Approx(std::cos(1.0)).epsilon(1e-10));
}

TEST_CASE("interpolation conditions hold for higher multiplicity") {
  for (const char* name : {"exp", "recip_shift", "runge", "xsin", "sqrt_shift"}) {
    const FunctionSpec f = amp(name);
    for (std::size_t r = 1; r <= 4; ++r) {
      const HermitePoly p = hermite_endpoint_interp(f, r);
      CHECK(p.degree() == 2 * r - 1);
      const auto dl = poly_all_derivatives(p, -1.0);
      const auto dr = poly_all_derivatives(p, 1.0);
      for (std::size_t j = 0; j < r; ++j) {
        INFO(name, " r=", r, " j=", j);
        CHECK(dl[j] == doctest::Approx(f.derivative(int(j), -1.0)).epsilon(1e-10));
        CHECK(dr[j] == doctest::Approx(f.derivative(int(j), 1.0)).epsilon(1e-10));
      }
    }
  }
  CHECK_THROWS_AS(hermite_endpoint_interp(amp("exp"), 0), Error);
  CHECK_THROWS_AS(hermite_endpoint_interp(amp("abs_sin"), 3), Error);
}

TEST_CASE("polynomial derivatives") {
  HermitePoly p;
  p.coeffs = {0, 0, 0, 1};
  const auto d = poly_all_derivatives(p, 1.0);
  REQUIRE(d.size() == 4);
  CHECK(d[0] == 1.0);
  CHECK(d[1] == 3.0);
  CHECK(d[2] == 6.0);
  CHECK(d[3] == 6.0);
  HermitePoly c;
  c.coeffs = {2.5};
  CHECK(poly_all_derivatives(c, -1.0) == std::vector<double>{2.5});

  testsupport::Rng rng(4);
  HermitePoly q;
  q.coeffs = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  const auto dq = poly_all_derivatives(q, 1.0);
  for (int order = 1; order <= 2; ++order) {
    const double fd = testsupport::central_difference([&](double x) { return q(x); }, order, 1.0, 1e-3);
    CHECK(dq[order] == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("exact for low-degree polynomials") {
  for (Parity p : {Parity::sin, Parity::cos}) {
    for (double omega : {20.0, 90.0}) {
      const CompositeWeight w(out("exp"), p, omega);
      const double cube = static_cast<double>(testsupport::integral_oracle(amp("pow:p=3"), w));
      CHECK(std::abs(filon_quadrature(amp("pow:p=3"), w, 2) - cube) < 1e-8);
      const double lin = static_cast<double>(testsupport::integral_oracle(amp("x"), w));
      CHECK(std::abs(filon_quadrature(amp("x"), w, 1) - lin) < 1e-9);
    }
  }
}

TEST_CASE("Filon error decays like omega^-3 at r = 2") {
  const FunctionSpec f = amp("sin");
  const FunctionSpec g = out("exp");
  std::vector<double> omegas, errs;
  for (double omega : testsupport::log_grid(50.0, 800.0, 9)) {
    const CompositeWeight w(g, Parity::sin, omega);
    omegas.push_back(omega);
    errs.push_back(std::abs(filon_quadrature(f, w, 2) - static_cast<double>(testsupport::integral_oracle(f, w))));
  }
  const double slope = testsupport::loglog_slope(omegas, errs);
  CHECK(slope > -3.5);
  CHECK(slope < -2.5);
}

TEST_CASE("rule 2 beats Filon at equal budget") {
  const FunctionSpec f = amp("recip_shift");
  const FunctionSpec g = out("ln4plus");
  for (double omega : {50.0, 100.0, 200.0, 400.0}) {
    const CompositeWeight w(g, Parity::cos, omega);
    const double ref = static_cast<double>(testsupport::integral_oracle(f, w, 1e-16));
    const double ef = std::abs(filon_quadrature(f, w, 2) - ref);
    const double eg = std::abs(integrate_rule2(f, w, 4).value - ref);
    INFO("omega=", omega);
    CHECK(eg < ef);
  }
}
