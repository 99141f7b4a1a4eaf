#include "oscgauss/fncat.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <type_traits>

#include "oscgauss/cheb.hpp"
#include "oscgauss/errors.hpp"

namespace oscgauss {

namespace {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

using Id = FunctionSpec::Id;

struct Entry {
  Id id;
  std::string_view name;
  std::array<std::string_view, 1> param;  // empty string: no parameter
  double default_value;
  bool required;
};

constexpr std::array kCatalog = {
    Entry{Id::one, "one", {""}, 0, false},
    Entry{Id::x, "x", {""}, 0, false},
    Entry{Id::x2, "x2", {""}, 0, false},
    Entry{Id::exp, "exp", {"kappa"}, 1.0, false},
    Entry{Id::ln4plus, "ln4plus", {""}, 0, false},
    Entry{Id::recip4minus, "recip4minus", {""}, 0, false},
    Entry{Id::cube_shift, "cube_shift", {""}, 0, false},
    Entry{Id::runge, "runge", {""}, 0, false},
    Entry{Id::sin, "sin", {""}, 0, false},
    Entry{Id::one_minus, "one_minus", {""}, 0, false},
    Entry{Id::xsin, "xsin", {""}, 0, false},
    Entry{Id::sqrt_shift, "sqrt_shift", {""}, 0, false},
    Entry{Id::abs_cube, "abs_cube", {""}, 0, false},
    Entry{Id::abs_sin, "abs_sin", {""}, 0, false},
    Entry{Id::recip_shift, "recip_shift", {""}, 0, false},
    Entry{Id::cheb, "cheb", {"j"}, 0, true},
    Entry{Id::pow, "pow", {"p"}, 0, true},
};

const Entry& entry(Id id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e;
  }
  fail(ErrorCode::UnknownFunction, "unknown catalog id");
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

int as_index(const std::string& key, double v) {
  if (!(v >= 0.0) || v != std::floor(v) || v > 10000.0) {
    fail(ErrorCode::InvalidArgument, "parameter " + key + " must be a non-negative integer");
  }
  return static_cast<int>(v);
}

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

// sin^{(n)}(x)
double sin_derivative(int n, double x) {
  switch (((n % 4) + 4) % 4) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

template <class T>
T chebyshev_t(int j, T x) {
  if (j == 0) return T(1);
  T t0(1), t1 = x;
  for (int k = 1; k < j; ++k) {
    T t2 = T(2) * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

}  // namespace

FunctionSpec::FunctionSpec(Id id, FunctionKind kind, std::map<std::string, double> params)
    : id_(id), kind_(kind), params_(std::move(params)) {
  const Entry& e = entry(id);
  for (const auto& [key, value] : params_) {
    if (key != e.param[0] || e.param[0].empty()) {
      fail(ErrorCode::InvalidArgument,
           "function " + std::string(e.name) + " has no parameter '" + key + "'");
    }
  }
  if (!e.param[0].empty()) {
    const std::string key(e.param[0]);
    auto it = params_.find(key);
    if (it == params_.end()) {
      if (e.required) {
        fail(ErrorCode::InvalidArgument,
             "function " + std::string(e.name) + " requires parameter '" + key + "'");
      }
      params_[key] = e.default_value;
      it = params_.find(key);
    }
    if (id_ == Id::exp) {
      kappa_ = it->second;
      if (!std::isfinite(kappa_)) fail(ErrorCode::InvalidArgument, "kappa must be finite");
    } else {
      index_ = as_index(key, it->second);
    }
  }
}

std::string_view FunctionSpec::name() const { return entry(id_).name; }

bool FunctionSpec::complex_ok() const {
  return id_ != Id::abs_cube && id_ != Id::abs_sin;
}

Smoothness FunctionSpec::smoothness() const {
  switch (id_) {
    case Id::ln4plus:
    case Id::recip4minus:
      return {SmoothnessClass::analytic, 4.0, 0, 0.0};
    case Id::runge:
      return {SmoothnessClass::analytic, 1.0, 0, 0.0};
    case Id::sqrt_shift:
    case Id::recip_shift:
      return {SmoothnessClass::analytic, 2.0, 0, 0.0};
    case Id::abs_cube:
      // f''' = 6 sign(x): one jump of height 12
      return {SmoothnessClass::finite, 0.0, 3, 12.0};
    case Id::abs_sin:
      // f' = cos(x) sign(x) on [-1, 1]
      return {SmoothnessClass::finite, 0.0, 1, 4.0 - 2.0 * std::cos(1.0)};
    default:
      return {SmoothnessClass::entire, 0.0, 0, 0.0};
  }
}

double bernstein_limit(const FunctionSpec& f) {
  // singularity at z: rho = |z + sqrt(z^2 - 1)| on the outer branch
  using Id = FunctionSpec::Id;
  switch (f.id()) {
    case Id::ln4plus:
    case Id::recip4minus: return 4.0 + std::sqrt(15.0);
    case Id::runge: return 1.0 + std::sqrt(2.0);
    case Id::sqrt_shift:
    case Id::recip_shift: return 2.0 + std::sqrt(3.0);
    case Id::abs_cube:
    case Id::abs_sin: return 1.0;
    default: return std::numeric_limits<double>::infinity();
  }
}

std::string FunctionSpec::to_string() const {
  std::string out(name());
  char sep = ':';
  for (const auto& [key, value] : params_) {
    out += sep;
    out += key + "=" + format_number(value);
    sep = ',';
  }
  return out;
}

template <class T>
T FunctionSpec::eval(T x) const {
  using std::abs;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  switch (id_) {
    case Id::one: return T(1);
    case Id::x: return x;
    case Id::x2: return x * x;
    case Id::exp: return exp(T(kappa_) * x);
    case Id::ln4plus: return log(x + T(4));
    case Id::recip4minus: return T(1) / (T(4) - x);
    case Id::cube_shift: return (x + T(2)) * (x + T(2)) * (x + T(2));
    case Id::runge: return T(1) / (T(1) + x * x);
    case Id::sin: return sin(x);
    case Id::one_minus: return T(1) - x;
    case Id::xsin: return x * sin(x);
    case Id::sqrt_shift: return sqrt(x + T(2));
    case Id::recip_shift: return T(1) / (x + T(2));
    case Id::cheb: return chebyshev_t(index_, x);
    case Id::pow: {
      T r(1);
      for (int i = 0; i < index_; ++i) r *= x;
      return r;
    }
    case Id::abs_cube:
    case Id::abs_sin:
      if constexpr (is_complex<T>::value) {
        fail(ErrorCode::ComplexNotSupported,
             std::string(name()) + " cannot be evaluated at complex arguments");
      } else {
        if (id_ == Id::abs_cube) return abs(x) * abs(x) * abs(x);
        return abs(sin(x));
      }
  }
  fail(ErrorCode::UnknownFunction, "unhandled catalog entry");
}

double FunctionSpec::operator()(double x) const { return eval(x); }
long double FunctionSpec::operator()(long double x) const { return eval(x); }
std::complex<double> FunctionSpec::operator()(std::complex<double> z) const { return eval(z); }

double FunctionSpec::derivative(int n, double x) const {
  if (n < 0) fail(ErrorCode::InvalidArgument, "derivative order must be non-negative");
  if (n == 0) return eval(x);
  switch (id_) {
    case Id::one: return 0.0;
    case Id::x: return n == 1 ? 1.0 : 0.0;
    case Id::x2: return n == 1 ? 2.0 * x : (n == 2 ? 2.0 : 0.0);
    case Id::exp: return std::pow(kappa_, n) * std::exp(kappa_ * x);
    case Id::ln4plus: {
      const double sign = (n % 2 == 1) ? 1.0 : -1.0;
      return sign * factorial(n - 1) / std::pow(x + 4.0, n);
    }
    case Id::recip4minus: return factorial(n) / std::pow(4.0 - x, n + 1);
    case Id::cube_shift: {
      if (n > 3) return 0.0;
      return factorial(3) / factorial(3 - n) * std::pow(x + 2.0, 3 - n);
    }
    case Id::runge: {
      // 1/(1+x^2) = Im 1/(x - i)
      const std::complex<double> z(x, -1.0);
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      return sign * factorial(n) * std::imag(std::pow(z, -(n + 1)));
    }
    case Id::sin: return sin_derivative(n, x);
    case Id::one_minus: return n == 1 ? -1.0 : 0.0;
    case Id::xsin: return x * sin_derivative(n, x) + n * sin_derivative(n - 1, x);
    case Id::sqrt_shift: {
      double c = 1.0;
      for (int i = 0; i < n; ++i) c *= 0.5 - i;
      return c * std::pow(x + 2.0, 0.5 - n);
    }
    case Id::recip_shift: {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      return sign * factorial(n) / std::pow(x + 2.0, n + 1);
    }
    case Id::cheb: {
      ChebSeries s = cheb_basis(static_cast<std::size_t>(index_));
      for (int i = 0; i < n; ++i) s = cheb_derivative(s);
      return s(x);
    }
    case Id::pow: {
      if (n > index_) return 0.0;
      return factorial(index_) / factorial(index_ - n) * std::pow(x, index_ - n);
    }
    case Id::abs_cube: {
      if (n > 3) break;
      const double s = (x > 0.0) - (x < 0.0);
      if (n == 1) return 3.0 * x * std::abs(x);
      if (n == 2) return 6.0 * std::abs(x);
      return 6.0 * s;
    }
    case Id::abs_sin: {
      if (n > 1) break;
      const double sx = std::sin(x);
      const double s = (sx > 0.0) - (sx < 0.0);
      return s * std::cos(x);
    }
  }
  fail(ErrorCode::DerivativeUnavailable,
       std::string(name()) + ": derivative of order " + std::to_string(n) +
           " exceeds its smoothness class");
}

double FunctionSpec::taylor_coefficient(int n) const {
  if (n < 0) fail(ErrorCode::InvalidArgument, "Taylor index must be non-negative");
  const double lgn1 = std::lgamma(static_cast<double>(n) + 1.0);
  switch (id_) {
    case Id::one: return n == 0 ? 1.0 : 0.0;
    case Id::x: return n == 1 ? 1.0 : 0.0;
    case Id::x2: return n == 2 ? 1.0 : 0.0;
    case Id::exp: {
      if (kappa_ == 0.0) return n == 0 ? 1.0 : 0.0;
      const double mag = std::exp(n * std::log(std::abs(kappa_)) - lgn1);
      return (kappa_ < 0.0 && n % 2 == 1) ? -mag : mag;
    }
    case Id::ln4plus: {
      if (n == 0) return std::log(4.0);
      const double mag = 1.0 / (n * std::pow(4.0, n));
      return (n % 2 == 1) ? mag : -mag;
    }
    case Id::recip4minus: return std::pow(4.0, -(n + 1));
    case Id::cube_shift: {
      if (n > 3) return 0.0;
      constexpr std::array<double, 4> c = {8.0, 12.0, 6.0, 1.0};
      return c[static_cast<std::size_t>(n)];
    }
    case Id::runge: return (n % 2 == 1) ? 0.0 : ((n / 2) % 2 == 0 ? 1.0 : -1.0);
    case Id::sin: {
      if (n % 2 == 0) return 0.0;
      const double mag = std::exp(-lgn1);
      return ((n - 1) / 2) % 2 == 0 ? mag : -mag;
    }
    case Id::one_minus: return n == 0 ? 1.0 : (n == 1 ? -1.0 : 0.0);
    case Id::xsin: {
      // x * sin(x): shift the sine coefficients by one
      if (n == 0 || (n - 1) % 2 == 0) return 0.0;
      const double mag = std::exp(-std::lgamma(static_cast<double>(n)));
      return ((n - 2) / 2) % 2 == 0 ? mag : -mag;
    }
    case Id::sqrt_shift: {
      double c = std::sqrt(2.0);
      for (int i = 0; i < n; ++i) c *= (0.5 - i) / ((i + 1) * 2.0);
      return c;
    }
    case Id::recip_shift: {
      const double mag = std::pow(2.0, -(n + 1));
      return (n % 2 == 0) ? mag : -mag;
    }
    case Id::cheb: {
      // derivative at 0 is exact; the factorial stays small for catalog indices
      if (n > index_) return 0.0;
      return derivative(n, 0.0) / factorial(n);
    }
    case Id::pow: return n == index_ ? 1.0 : 0.0;
    case Id::abs_cube:
    case Id::abs_sin:
      break;
  }
  fail(ErrorCode::DerivativeUnavailable,
       std::string(name()) + " is not analytic at 0");
}

FunctionSpec parse_function(std::string_view text, FunctionKind kind) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const Entry* found = nullptr;
  for (const auto& e : kCatalog) {
    if (e.name == name) found = &e;
  }
  if (found == nullptr) {
    fail(ErrorCode::UnknownFunction, "unknown function '" + std::string(name) + "'");
  }
  std::map<std::string, double> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        fail(ErrorCode::InvalidArgument, "malformed parameter '" + std::string(item) + "'");
      }
      const std::string key(item.substr(0, eq));
      const std::string_view value_text = item.substr(eq + 1);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(value_text.data(),
                                       value_text.data() + value_text.size(), value);
      if (ec != std::errc{} || ptr != value_text.data() + value_text.size()) {
        fail(ErrorCode::InvalidArgument, "bad numeric value in '" + std::string(item) + "'");
      }
      params[key] = value;
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return FunctionSpec(found->id, kind, std::move(params));
}

std::vector<std::string_view> catalog_names() {
  std::vector<std::string_view> names;
  for (const auto& e : kCatalog) names.push_back(e.name);
  return names;
}

}  // namespace oscgauss
