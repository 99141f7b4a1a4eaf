#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oscgauss/filon.hpp"
#include "oscgauss/gaussosc.hpp"
#include "oscgauss/gaussw.hpp"
#include "oscgauss/moments.hpp"
#include "oscgauss/refquad.hpp"
#include "support.hpp"

using namespace oscgauss;
using namespace testsupport;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const char* name, const std::function<void(Verdict&)>& body) {
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail << "exception: " << e.what();
  }
  if (!v.ok) ++failures;
  std::printf("%s %s: %s\n", v.ok ? "PASS" : "FAIL", name, v.detail.str().c_str());
  std::fflush(stdout);
}

double oracle_error(double value, const FunctionSpec& f, const CompositeWeight& w) {
  return std::abs(value - static_cast<double>(integral_oracle(f, w, 1e-16)));
}

// slope of log y against x
double semilog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> ex(x.size());
  std::transform(x.begin(), x.end(), ex.begin(), [](double v) { return std::exp(v); });
  return loglog_slope(ex, y);
}

// largest value of `y` over x in [a, b]
double max_over(const std::vector<double>& x, const std::vector<double>& y, double a, double b) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= a && x[i] <= b) m = std::max(m, y[i]);
  }
  return m;
}

}  // namespace

int main() {
  criterion("1 rule-1 exactness", [](Verdict& v) {
    double worst = 0.0;
    for (const char* g : {"exp:kappa=2", "ln4plus", "recip4minus"}) {
      for (Parity p : {Parity::sin, Parity::cos}) {
        for (double omega : {50.0, 100.0, 500.0}) {
          const CompositeWeight w(out(g), p, omega);
          std::vector<double> ref(20);
          for (std::size_t j = 0; j < 20; ++j) {
            ref[j] = static_cast<double>(weighted_oracle([j](long double x) { return cheb_t(j, x); }, w));
          }
          for (std::size_t n : {2, 5, 10}) {
            const QuadRule r = build_rule1(w, n);
            for (std::size_t j = 0; j <= 2 * n - 1; ++j) {
              double q = 0.0;
              for (std::size_t k = 0; k < n; ++k) q += r.weights[k] * static_cast<double>(cheb_t(j, r.nodes[k]));
              const double rel = std::abs(q - ref[j]) / (1.0 + std::abs(ref[0]));
              worst = std::max(worst, rel);
              v.require(rel <= 1e-8, std::string(g) + " omega=" + std::to_string(omega) + " n=" +
                                         std::to_string(n) + " j=" + std::to_string(j));
            }
          }
        }
      }
    }
    v.detail << "worst scaled residual " << worst;
  });

  criterion("2 unit-weight reduction", [](Verdict& v) {
    double worst = 0.0;
    for (double omega : {1.0, 37.0, 333.0, 1000.0}) {
      for (std::size_t n = 1; n <= 20; ++n) {
        const QuadRule r = build_rule1(CompositeWeight(out("one"), Parity::sin, omega), n);
        const QuadRule gl = gauss_legendre(n);
        for (std::size_t k = 0; k < n; ++k) {
          worst = std::max({worst, std::abs(r.nodes[k] - gl.nodes[k]), std::abs(r.weights[k] - gl.weights[k])});
        }
      }
    }
    v.require(worst <= 1e-11, "deviation too large");
    v.detail << "max deviation " << worst;
  });

  criterion("3 convergence in n", [](Verdict& v) {
    const double rho = 1.0 + std::numbers::sqrt2;
    for (double omega : {50.0, 100.0, 500.0}) {
      const CompositeWeight w(out("exp:kappa=2"), Parity::sin, omega);
      const double K = compute_moments(w, 0).nu[0];
      const FunctionSpec fe = amp("exp"), fr = amp("runge"), fc = amp("abs_cube");
      const double re = static_cast<double>(integral_oracle(fe, w, 1e-16));
      const double rr = static_cast<double>(integral_oracle(fr, w, 1e-16));
      const double rc = static_cast<double>(integral_oracle(fc, w, 1e-16));
      const double ee = std::abs(apply_rule(build_rule1(w, 20), fe) - re);
      v.require(ee < 1e-12, "exp at n=20");

      std::vector<double> ns, er, nc, ec;
      bool bounds_ok = true;
      for (std::size_t n = 2; n <= 30; ++n) {
        const QuadRule r = build_rule1(w, n);
        const double a = std::abs(apply_rule(r, fr) - rr);
        if (a > 1e-13) {
          ns.push_back(static_cast<double>(n));
          er.push_back(a);
        }
        // the bounds cover truncation only; allow for rounding in the measurement
        const double floor = 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(rr));
        bounds_ok = bounds_ok && a <= best_analytic_bound(fr, K, n) + floor;
        const double c = std::abs(apply_rule(r, fc) - rc);
        if (n >= 4) {
          nc.push_back(static_cast<double>(n));
          ec.push_back(c);
          bounds_ok = bounds_ok && c <= error_bound_sobolev(K, 12.0, 3, n) + floor;
        }
      }
      // smallest q with err(n) <= err(n0) q^(n - n0) for every later n
      double ratio = 0.0;
      for (std::size_t i = 1; i < ns.size(); ++i) {
        ratio = std::max(ratio, std::pow(er[i] / er[0], 1.0 / (ns[i] - ns[0])));
      }
      const double fitted = std::exp(semilog_slope(ns, er));
      const double slope = loglog_slope(nc, ec);
      v.require(ratio >= 1.0 / (rho * rho) && ratio <= 1.0, "runge envelope ratio");
      v.require(slope <= -3.0, "abs_cube slope");
      v.require(bounds_ok, "bound below measured error");
      v.detail << "omega=" << omega << " exp@20=" << ee << " runge envelope=" << ratio << " fit=" << fitted << " (1/rho^2="
               << 1.0 / (rho * rho) << ") cube slope=" << slope << "; ";
    }
  });

  criterion("4 node-limit law", [](Verdict& v) {
    const QuadRule gl = gauss_legendre(5);
    std::vector<double> scaled;
    for (double omega : {100.0, 200.0, 400.0, 800.0}) {
      const QuadRule r = build_rule1(CompositeWeight(out("exp:kappa=2"), Parity::cos, omega), 5);
      double m = 0.0;
      for (std::size_t k = 0; k < 5; ++k) m = std::max(m, omega * std::abs(r.nodes[k] - gl.nodes[k]));
      scaled.push_back(m);
      v.detail << m << " ";
    }
    for (std::size_t i = 1; i < scaled.size(); ++i) {
      const double q = scaled[i] / scaled[i - 1];
      v.require(q >= 1.0 / 3.0 && q <= 3.0, "ratio outside [1/3, 3]");
    }
  });

  criterion("5a rule-2 order n=4", [](Verdict& v) {
    const FunctionSpec f = amp("recip_shift");
    std::vector<double> om, er;
    for (double omega : log_grid(50.0, 800.0, 16)) {
      const CompositeWeight w(out("exp"), Parity::sin, omega);
      om.push_back(omega);
      er.push_back(oracle_error(integrate_rule2(f, w, 4).value, f, w));
    }
    const double s = loglog_slope(om, er);
    v.require(std::abs(s + 5.0) <= 0.5, "slope");
    v.detail << "slope " << s;
  });

  criterion("5b rule-2 order n=8", [](Verdict& v) {
    const FunctionSpec f = amp("runge");
    std::vector<double> om, er;
    for (double omega : log_grid(20.0, 200.0, 120)) {
      const CompositeWeight w(out("ln4plus"), Parity::cos, omega);
      const double e = oracle_error(integrate_rule2(f, w, 8).value, f, w);
      if (e > 1e-11) {
        om.push_back(omega);
        er.push_back(e);
      }
    }
    v.require(om.size() >= 10, "too few points above the floor");
    const double s = loglog_slope(om, er);
    v.require(std::abs(s + 9.0) <= 1.0, "slope");
    v.detail << "slope " << s << " over " << om.size() << " points, omega in [" << om.front() << ", " << om.back()
             << "]";
  });

  criterion("6 node phenomenology", [](Verdict& v) {
    std::vector<double> grid;
    for (double omega = 20.0; omega <= 100.0; omega += 1.0) grid.push_back(omega);
    for (std::size_t n : {4, 8}) {
      const auto rows = node_trajectory(out("ln4plus"), Parity::cos, n, grid);
      v.require(rows.size() == n * grid.size(), "row count");
      std::vector<double> spread(grid.size());
      double conj = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        int left = 0, right = 0;
        std::vector<std::complex<double>> z;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& row = rows[i * n + k];
          v.require(row.error.empty(), "row error " + row.error);
          (row.endpoint < 0 ? left : right) += 1;
          z.emplace_back(row.re, row.im);
          spread[i] = std::max(spread[i], grid[i] * std::abs(z.back() - double(row.endpoint)));
        }
        v.require(left == int(n / 2) && right == int(n / 2), "endpoint split at omega=" + std::to_string(grid[i]));
        conj = std::max(conj, conjugate_pairing_residual(z));
      }
      v.require(conj < 1e-10, "conjugate residual");
      double worst = 1.0;
      for (std::size_t i = 0; 2 * grid[i] <= 100.0; ++i) {
        const double q = spread[static_cast<std::size_t>(2 * grid[i] - 20.0)] / spread[i];
        worst = std::max({worst, q, 1.0 / q});
      }
      v.require(worst <= 3.0, "scaled distance not bounded");
      v.detail << "n=" << n << " conj=" << conj << " worst doubling factor=" << worst << "; ";
    }
  });

  criterion("7 Filon comparison", [](Verdict& v) {
    struct Pairing {
      const char* f;
      const char* g;
      Parity p;
    };
    const Pairing pairs[] = {{"sin", "exp", Parity::sin},         {"sin", "recip4minus", Parity::sin},
                             {"sin", "sin", Parity::sin},         {"recip_shift", "exp", Parity::cos},
                             {"recip_shift", "one_minus", Parity::cos}, {"recip_shift", "ln4plus", Parity::cos}};
    for (const auto& pr : pairs) {
      const FunctionSpec f = amp(pr.f);
      std::vector<double> om, sf, sg;
      bool beats = true;
      for (double omega : log_grid(50.0, 800.0, 25)) {
        const CompositeWeight w(out(pr.g), pr.p, omega);
        const double ref = static_cast<double>(integral_oracle(f, w, 1e-16));
        const double ef = std::abs(filon_quadrature(f, w, 2) - ref);
        const double eg = std::abs(integrate_rule2(f, w, 4).value - ref);
        beats = beats && eg < ef;
        om.push_back(omega);
        sf.push_back(std::pow(omega, 3) * ef);
        sg.push_back(std::pow(omega, 5) * eg);
      }
      const double gf = max_over(om, sf, 400.0, 800.0) / max_over(om, sf, 50.0, 100.0);
      const double gg = max_over(om, sg, 400.0, 800.0) / max_over(om, sg, 50.0, 100.0);
      const std::string tag = std::string(pr.f) + "/" + pr.g;
      v.require(beats, tag + " rule 2 not below Filon");
      v.require(gf <= 3.0, tag + " omega^3 Filon error grows");
      v.require(gg <= 3.0, tag + " omega^5 rule-2 error grows");
      v.detail << tag << " growth " << gf << "/" << gg << "; ";
    }
  });

  criterion("8 moment routes", [](Verdict& v) {
    double route = 0.0, oracle = 0.0;
    for (const char* g : {"exp:kappa=2", "ln4plus", "recip4minus"}) {
      for (Parity p : {Parity::sin, Parity::cos}) {
        for (double omega : {50.0, 100.0, 500.0}) {
          const CompositeWeight w(out(g), p, omega);
          MomentOptions oa, oe;
          oa.route = MomentRoute::asymptotic;
          oe.route = MomentRoute::expansion;
          const MomentTable a = compute_moments(w, 39, oa), e = compute_moments(w, 39, oe);
          for (std::size_t j = 0; j <= 39; ++j) {
            const double ref = static_cast<double>(weighted_oracle([j](long double x) { return cheb_t(j, x); }, w));
            route = std::max(route, std::abs(a.nu[j] - e.nu[j]) / (1.0 + std::abs(e.nu[0])));
            oracle = std::max({oracle, std::abs(a.nu[j] - ref), std::abs(e.nu[j] - ref)});
          }
        }
      }
    }
    v.require(route <= 1e-8, "routes disagree");
    v.require(oracle <= 1e-9, "oracle disagreement");
    v.detail << "route " << route << ", oracle " << oracle;
  });

  criterion("9 rho closed forms", [](Verdict& v) {
    const double expect = 2.0 * std::log(2.0 + std::sqrt(15.0) / 2.0);
    const double t = rho_transform(out("ln4plus"), 64)[0];
    const double s = rho_series(out("ln4plus"))[0];
    v.require(std::abs(t - expect) <= 1e-12 && std::abs(s - expect) <= 1e-12, "rho_0 of ln(4 + cos)");
    double worst = 0.0;
    for (double kappa : {0.5, 1.0, 2.0, 3.0}) {
      const std::string spec = "exp:kappa=" + std::to_string(kappa);
      const auto a = rho_transform(out(spec.c_str()), 40), b = rho_series(out(spec.c_str()));
      for (std::size_t m = 0; m < 30; ++m) {
        const double ref = 2.0 * bessel_i_series(int(m), kappa);
        worst = std::max(worst, std::abs(a[m] - ref));
        if (m < b.size()) worst = std::max(worst, std::abs(b[m] - ref));
        else worst = std::max(worst, std::abs(ref));
      }
    }
    v.require(worst <= 1e-12, "Bessel mismatch");
    v.detail << "rho_0 err " << std::abs(t - expect) << ", Bessel max err " << worst;
  });

  criterion("10 differential chain", [](Verdict& v) {
    Rng rng(10);
    const double h = 1e-5;
    double worst = 0.0;
    for (const char* g : {"exp:kappa=2", "ln4plus"}) {
      for (Parity p : {Parity::sin, Parity::cos}) {
        for (double omega : {20.0, 100.0}) {
          const OscParts parts = make_osc_parts(out(g), p, omega);
          const CompositeWeight w(out(g), p, omega);
          for (int i = 0; i < 20; ++i) {
            const double x = rng.uniform(-0.99, 0.99);
            const auto d = [&](std::size_t k, bool second) {
              const auto a = parts.uv(k, x + h), b = parts.uv(k, x - h);
              return second ? (a.second - b.second) / (2 * h) : (a.first - b.first) / (2 * h);
            };
            const double scale = omega * (1.0 + std::abs(parts.rho0()));
            worst = std::max(worst, std::abs(d(0, false) - omega * (w(x) - 0.5 * parts.rho0())) / scale);
            for (std::size_t k = 0; k < 3; ++k) {
              worst = std::max(worst, std::abs(d(k, true) + omega * parts.uv(k, x).first) / scale);
              worst = std::max(worst, std::abs(d(k + 1, false) - omega * parts.uv(k, x).second) / scale);
            }
          }
        }
      }
    }
    v.require(worst <= 1e-6, "identity violated");
    v.detail << "max relative residual " << worst;
  });

  criterion("11 Gram conditioning", [](Verdict& v) {
    const auto conds = [](const char* g, Parity p) {
      const MomentTable t = compute_moments(CompositeWeight(out(g), p, 100.0), 80);
      std::vector<double> c;
      for (std::size_t n : {5, 10, 20, 40}) c.push_back(orth_poly(t, n).gram_cond);
      return c;
    };
    const auto c = conds("exp:kappa=2", Parity::cos);
    for (std::size_t i = 1; i < c.size(); ++i) v.require(c[i] <= 4.0 * c[i - 1], "growth above 4x per doubling");
    v.detail << "exp(2 cos): " << c[0] << " " << c[1] << " " << c[2] << " " << c[3];
    const auto s = conds("exp:kappa=2", Parity::sin);
    v.detail << "; exp(2 sin), not gated: " << s[0] << " " << s[1] << " " << s[2] << " " << s[3];
  });

  return failures == 0 ? 0 : 1;
}
