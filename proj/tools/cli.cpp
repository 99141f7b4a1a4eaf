#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <variant>

#include "oscgauss/errors.hpp"
#include "oscgauss/filon.hpp"
#include "oscgauss/fncat.hpp"
#include "oscgauss/gaussosc.hpp"
#include "oscgauss/gaussw.hpp"
#include "oscgauss/moments.hpp"
#include "oscgauss/refquad.hpp"

namespace oscgauss::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, long long, std::string, bool>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct CellText {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return csv_field(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
};

struct CellJson {
  json operator()(std::monostate) const { return nullptr; }
  json operator()(double v) const { return std::isfinite(v) ? json(v) : json(nullptr); }
  json operator()(long long v) const { return v; }
  json operator()(const std::string& v) const { return v; }
  json operator()(bool v) const { return v; }
};

class Table {
 public:
  using Row = std::vector<Cell>;

  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  Row& add_row() { return rows_.emplace_back(columns_.size()); }

  void set(Row& row, std::string_view column, Cell value) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] == column) {
        row[i] = std::move(value);
        return;
      }
    }
    throw std::logic_error("no column " + std::string(column));
  }

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const Row& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << std::visit(CellText{}, row[i]);
      os << '\n';
    }
  }

  json rows_json() const {
    json out = json::array();
    for (const Row& row : rows_) {
      json obj = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = std::visit(CellJson{}, row[i]);
      out.push_back(std::move(obj));
    }
    return out;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<Row> rows_;
};

struct Config {
  std::string command;
  std::string f;
  std::string g;
  std::string phi = "sin";
  std::string method = "rule1";
  std::string omega = "100";
  std::string n = "4";
  std::size_t r = 2;
  std::size_t J = 39;
  std::size_t gl_nodes = 0;
  std::string moments = "auto";
  std::string format = "csv";
  std::string output;
  double oracle_tol = 1e-15;
  bool shifted = false;
  bool timing = false;
};

json config_json(const Config& c) {
  json j;
  j["command"] = c.command;
  if (!c.f.empty()) j["f"] = c.f;
  if (!c.g.empty()) j["g"] = c.g;
  j["phi"] = c.phi;
  j["method"] = c.method;
  j["omega"] = c.omega;
  j["n"] = c.n;
  j["r"] = c.r;
  j["moments"] = c.moments;
  j["gl_nodes"] = c.gl_nodes;
  j["oracle_tol"] = c.oracle_tol;
  return j;
}

std::string describe(const Error& e) { return std::string(to_string(e.code())) + ": " + e.what(); }

double parse_number(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double v = kNaN;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v)) {
    fail(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

MomentOptions moment_options(const Config& c) {
  MomentOptions o;
  o.route = c.moments == "asymptotic" ? MomentRoute::asymptotic : MomentRoute::expansion;
  return o;
}

FunctionSpec amplitude(const Config& c) { return parse_function(c.f, FunctionKind::amplitude); }
FunctionSpec outer(const Config& c) { return parse_function(c.g, FunctionKind::outer); }

std::vector<double> omega_grid(const Config& c) {
  std::vector<double> grid = parse_grid(c.omega);
  for (double w : grid) {
    if (!(w > 0.0)) fail(ErrorCode::InvalidArgument, "omega must be positive");
  }
  return grid;
}

std::vector<std::size_t> n_grid(const Config& c, bool even) {
  std::vector<std::size_t> grid = parse_index_grid(c.n);
  for (std::size_t n : grid) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be at least 1");
    if (even && n % 2 == 1) {
      fail(ErrorCode::InvalidArgument, "rule 2 requires even n, got " + std::to_string(n));
    }
  }
  return grid;
}

template <class T>
T single(const std::vector<T>& grid, const char* what) {
  if (grid.size() != 1) fail(ErrorCode::InvalidArgument, std::string(what) + " must be a single value here");
  return grid.front();
}

long double oracle_value(const FunctionSpec& f, const CompositeWeight& w, double tol) {
  OracleOptions o;
  o.tol = tol;
  return reference_integral([&](long double x) { return f(x) * w.eval_long(x); }, w.omega(), o).value;
}

struct Outcome {
  double value = kNaN;
  bool has_diagnostics = false;
  RuleDiagnostics diagnostics;
  /// Total mass of the weight (rule 1 only).
  double mass = kNaN;
};

// `order` is n for the Gaussian rules and r for Filon.
Outcome evaluate(const std::string& method, const FunctionSpec& f, const CompositeWeight& w,
                 std::size_t order, const Config& c) {
  Outcome out;
  if (method == "rule1") {
    Rule1Options o;
    o.moments = moment_options(c);
    const QuadRule rule = build_rule1(w, order, o);
    out.value = apply_rule(rule, f);
    out.has_diagnostics = true;
    out.diagnostics = rule.diagnostics;
    long double mass = 0.0L;
    for (double wk : rule.weights) mass += wk;
    out.mass = static_cast<double>(mass);
  } else if (method == "rule2") {
    Rule2Options o;
    o.moments = moment_options(c);
    o.gl_nodes = c.gl_nodes;
    const Rule2Result r = integrate_rule2(f, w, order, o);
    out.value = r.value;
    out.has_diagnostics = true;
    out.diagnostics = r.rule.osc.diagnostics;
  } else if (method == "filon") {
    FilonOptions o;
    o.parts = moment_options(c).parts;
    o.gl_nodes = c.gl_nodes;
    out.value = filon_quadrature(f, w, order, o);
  } else {
    out.value = static_cast<double>(oracle_value(f, w, c.oracle_tol));
  }
  return out;
}

void put_diagnostics(const Table& t, Table::Row& row, const Outcome& o) {
  if (!o.has_diagnostics) return;
  t.set(row, "gram_cond", o.diagnostics.gram_cond);
  t.set(row, "vandermonde_residual", o.diagnostics.vandermonde_residual);
  t.set(row, "imag_residual", o.diagnostics.imag_residual);
  t.set(row, "existence_ok", o.diagnostics.existence_ok);
}

class Sink {
 public:
  Sink(const Config& c, std::ostream& out) : os_(&out) {
    if (!c.output.empty()) {
      file_.open(c.output);
      if (!file_) fail(ErrorCode::InvalidArgument, "cannot open output file " + c.output);
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void emit(const Config& c, const Table& t, std::ostream& out) {
  Sink sink(c, out);
  if (c.format == "json") {
    json j;
    j["config"] = config_json(c);
    j["rows"] = t.rows_json();
    sink.stream() << j.dump(2) << '\n';
  } else {
    t.write_csv(sink.stream());
  }
}

int cmd_integrate(const Config& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  double value = kNaN, oracle = kNaN;
  Outcome o;
  std::string error;
  int code = kOk;
  try {
    const FunctionSpec f = amplitude(c);
    const FunctionSpec g = outer(c);
    const double omega = single(omega_grid(c), "--omega");
    const std::size_t order = c.method == "filon" ? c.r : single(n_grid(c, c.method == "rule2"), "--n");
    const CompositeWeight w(g, parse_parity(c.phi), omega);
    o = evaluate(c.method, f, w, order, c);
    value = o.value;
    if (c.method != "oracle") oracle = static_cast<double>(oracle_value(f, w, c.oracle_tol));
  } catch (const Error& e) {
    error = describe(e);
    code = is_usage_error(e.code()) ? kUsage : kNumerical;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const double abs_error = std::abs(value - oracle);

  Sink sink(c, out);
  if (c.format == "json") {
    const CellJson cj;
    json j;
    j["config"] = config_json(c);
    j["value"] = cj(value);
    j["oracle"] = cj(oracle);
    j["abs_error"] = cj(abs_error);
    json d;
    d["gram_cond"] = o.has_diagnostics ? cj(o.diagnostics.gram_cond) : json(nullptr);
    d["vandermonde_residual"] = o.has_diagnostics ? cj(o.diagnostics.vandermonde_residual) : json(nullptr);
    d["imag_residual"] = o.has_diagnostics ? cj(o.diagnostics.imag_residual) : json(nullptr);
    d["existence_ok"] = o.has_diagnostics ? json(o.diagnostics.existence_ok) : json(nullptr);
    j["diagnostics"] = d;
    j["timing_ms"] = c.timing ? json(ms) : json(nullptr);
    if (!error.empty()) j["error"] = error;
    sink.stream() << j.dump(2) << '\n';
  } else {
    Table t({"method", "f", "g", "phi", "omega", "n", "value", "oracle", "abs_error", "gram_cond",
             "vandermonde_residual", "imag_residual", "existence_ok", "timing_ms", "error"});
    auto& row = t.add_row();
    t.set(row, "method", c.method);
    t.set(row, "f", c.f);
    t.set(row, "g", c.g);
    t.set(row, "phi", c.phi);
    t.set(row, "omega", c.omega);
    t.set(row, "n", c.method == "filon" ? std::to_string(c.r) : c.n);
    if (error.empty()) {
      t.set(row, "value", value);
      if (c.method != "oracle") {
        t.set(row, "oracle", oracle);
        t.set(row, "abs_error", abs_error);
      }
      put_diagnostics(t, row, o);
      if (c.timing) t.set(row, "timing_ms", ms);
    } else {
      t.set(row, "error", error);
    }
    t.write_csv(sink.stream());
  }
  return code;
}

int cmd_sweep_n(const Config& c, std::ostream& out) {
  const FunctionSpec f = amplitude(c);
  const CompositeWeight w(outer(c), parse_parity(c.phi), single(omega_grid(c), "--omega"));
  const auto ns = n_grid(c, c.method == "rule2");
  const double oracle = static_cast<double>(oracle_value(f, w, c.oracle_tol));
  const Smoothness s = f.smoothness();

  Table t({"n", "value", "oracle", "abs_error", "bound_analytic", "bound_sobolev", "gram_cond",
           "vandermonde_residual", "imag_residual", "existence_ok", "error"});
  for (std::size_t n : ns) {
    auto& row = t.add_row();
    t.set(row, "n", static_cast<long long>(n));
    t.set(row, "oracle", oracle);
    try {
      const Outcome o = evaluate(c.method, f, w, n, c);
      t.set(row, "value", o.value);
      t.set(row, "abs_error", std::abs(o.value - oracle));
      put_diagnostics(t, row, o);
      if (c.method == "rule1") {
        if (s.cls != SmoothnessClass::finite) {
          const double b = best_analytic_bound(f, o.mass, n);
          if (std::isfinite(b)) t.set(row, "bound_analytic", b);
        } else if (n >= static_cast<std::size_t>((s.order + 2) / 2)) {
          t.set(row, "bound_sobolev", error_bound_sobolev(o.mass, s.variation, s.order, n));
        }
      }
    } catch (const Error& e) {
      t.set(row, "error", describe(e));
    }
  }
  emit(c, t, out);
  return kOk;
}

int cmd_sweep_omega(const Config& c, std::ostream& out) {
  const FunctionSpec f = amplitude(c);
  const FunctionSpec g = outer(c);
  const Parity parity = parse_parity(c.phi);
  const auto omegas = omega_grid(c);
  const std::size_t order = c.method == "filon" ? c.r : single(n_grid(c, c.method == "rule2"), "--n");

  Table t({"omega", "value", "oracle", "abs_error", "scaled_error", "gram_cond", "vandermonde_residual",
           "imag_residual", "existence_ok", "hypothesis", "error"});
  for (double omega : omegas) {
    auto& row = t.add_row();
    t.set(row, "omega", omega);
    try {
      const CompositeWeight w(g, parity, omega);
      const Outcome o = evaluate(c.method, f, w, order, c);
      t.set(row, "value", o.value);
      put_diagnostics(t, row, o);
      if (c.method != "oracle") {
        const double oracle = static_cast<double>(oracle_value(f, w, c.oracle_tol));
        const double err = std::abs(o.value - oracle);
        t.set(row, "oracle", oracle);
        t.set(row, "abs_error", err);
        if (c.method == "rule2" || c.method == "filon") {
          t.set(row, "scaled_error", err * std::pow(omega, static_cast<double>(order + 1)));
        }
      }
      if (c.method == "rule2") {
        try {
          t.set(row, "hypothesis", check_endpoint_hypothesis(g, parity, order, omega, moment_options(c)).holds);
        } catch (const Error&) {
          t.set(row, "hypothesis", false);
        }
      }
    } catch (const Error& e) {
      t.set(row, "error", describe(e));
    }
  }
  emit(c, t, out);
  return kOk;
}

int cmd_compare(const Config& c, std::ostream& out) {
  const FunctionSpec f = amplitude(c);
  const FunctionSpec g = outer(c);
  const Parity parity = parse_parity(c.phi);
  const auto omegas = omega_grid(c);
  const std::size_t n = single(n_grid(c, true), "--n");

  Table t({"omega", "err_rule2", "err_filon", "scaled_rule2", "scaled_filon", "error"});
  for (double omega : omegas) {
    auto& row = t.add_row();
    t.set(row, "omega", omega);
    try {
      const CompositeWeight w(g, parity, omega);
      const double oracle = static_cast<double>(oracle_value(f, w, c.oracle_tol));
      const double e_filon = std::abs(evaluate("filon", f, w, c.r, c).value - oracle);
      t.set(row, "err_filon", e_filon);
      t.set(row, "scaled_filon", e_filon * std::pow(omega, static_cast<double>(c.r + 1)));
      const double e_rule2 = std::abs(evaluate("rule2", f, w, n, c).value - oracle);
      t.set(row, "err_rule2", e_rule2);
      t.set(row, "scaled_rule2", e_rule2 * std::pow(omega, static_cast<double>(n + 1)));
    } catch (const Error& e) {
      t.set(row, "error", describe(e));
    }
  }
  emit(c, t, out);
  return kOk;
}

int cmd_trajectory(const Config& c, std::ostream& out) {
  const FunctionSpec g = outer(c);
  const auto omegas = omega_grid(c);
  const std::size_t n = single(n_grid(c, true), "--n");
  const auto rows = node_trajectory(g, parse_parity(c.phi), n, omegas, moment_options(c));

  Table t({"omega", "k", "re", "im", "endpoint", "scaled_distance", "conj_residual", "error"});
  for (std::size_t i = 0; i < rows.size();) {
    const double omega = rows[i].omega;
    std::size_t end = i;
    std::vector<std::complex<double>> nodes;
    while (end < rows.size() && rows[end].omega == omega) {
      nodes.emplace_back(rows[end].re, rows[end].im);
      ++end;
    }
    const double conj = conjugate_pairing_residual(nodes);
    for (; i < end; ++i) {
      const TrajectoryRow& r = rows[i];
      auto& row = t.add_row();
      t.set(row, "omega", r.omega);
      if (!r.error.empty()) {
        t.set(row, "error", r.error);
        continue;
      }
      t.set(row, "k", static_cast<long long>(r.k));
      t.set(row, "re", r.re);
      t.set(row, "im", r.im);
      t.set(row, "endpoint", static_cast<long long>(r.endpoint));
      t.set(row, "scaled_distance", r.scaled_distance);
      t.set(row, "conj_residual", conj);
    }
  }
  emit(c, t, out);
  return kOk;
}

int cmd_rule(const Config& c, std::ostream& out) {
  const FunctionSpec g = outer(c);
  const Parity parity = parse_parity(c.phi);
  const auto omegas = omega_grid(c);
  const bool osc = c.method == "rule2";
  if (c.method != "rule1" && !osc) fail(ErrorCode::InvalidArgument, "rule: --method must be rule1 or rule2");
  const auto ns = n_grid(c, osc);

  Table t(osc ? std::vector<std::string>{"omega", "n", "k", "re_x", "im_x", "re_w", "im_w", "endpoint",
                                         "scaled_distance", "error"}
              : std::vector<std::string>{"omega", "n", "k", "x", "w", "x_gl", "scaled_gl_distance",
                                         "error"});
  for (double omega : omegas) {
    const CompositeWeight w(g, parity, omega);
    for (std::size_t n : ns) {
      try {
        if (osc) {
          Rule2Options o;
          o.moments = moment_options(c);
          const SplitRule rule = build_rule2(w, n, o);
          for (std::size_t k = 0; k < n; ++k) {
            const auto z = rule.osc.nodes[k];
            const int e = nearest_endpoint(z);
            auto& row = t.add_row();
            t.set(row, "omega", omega);
            t.set(row, "n", static_cast<long long>(n));
            t.set(row, "k", static_cast<long long>(k + 1));
            t.set(row, "re_x", z.real());
            t.set(row, "im_x", z.imag());
            t.set(row, "re_w", rule.osc.weights[k].real());
            t.set(row, "im_w", rule.osc.weights[k].imag());
            t.set(row, "endpoint", static_cast<long long>(e));
            t.set(row, "scaled_distance", omega * std::abs(z - static_cast<double>(e)));
          }
        } else {
          Rule1Options o;
          o.moments = moment_options(c);
          const QuadRule rule = build_rule1(w, n, o);
          const QuadRule gl = gauss_legendre(n);
          for (std::size_t k = 0; k < n; ++k) {
            auto& row = t.add_row();
            t.set(row, "omega", omega);
            t.set(row, "n", static_cast<long long>(n));
            t.set(row, "k", static_cast<long long>(k + 1));
            t.set(row, "x", rule.nodes[k]);
            t.set(row, "w", rule.weights[k]);
            t.set(row, "x_gl", gl.nodes[k]);
            t.set(row, "scaled_gl_distance", omega * std::abs(rule.nodes[k] - gl.nodes[k]));
          }
        }
      } catch (const Error& e) {
        auto& row = t.add_row();
        t.set(row, "omega", omega);
        t.set(row, "n", static_cast<long long>(n));
        t.set(row, "error", describe(e));
      }
    }
  }
  emit(c, t, out);
  return kOk;
}

int cmd_moments(const Config& c, std::ostream& out) {
  const FunctionSpec g = outer(c);
  const Parity parity = parse_parity(c.phi);
  const CompositeWeight w(g, parity, single(omega_grid(c), "--omega"));
  const MomentOptions o = moment_options(c);
  MomentTable table = compute_moments(w, c.J, o);
  if (c.shifted) table = shifted_moments(table, make_osc_parts(g, parity, w.omega(), o.parts).rho0());

  Table t({"j", "nu", "route"});
  for (std::size_t j = 0; j < table.nu.size(); ++j) {
    auto& row = t.add_row();
    t.set(row, "j", static_cast<long long>(j));
    t.set(row, "nu", table.nu[j]);
    t.set(row, "route", std::string(to_string(table.route)));
  }
  emit(c, t, out);
  return kOk;
}

int cmd_oracle(const Config& c, std::ostream& out) {
  const FunctionSpec f = amplitude(c);
  const FunctionSpec g = outer(c);
  const Parity parity = parse_parity(c.phi);
  const auto omegas = omega_grid(c);

  Table t({"omega", "value", "panels", "last_change", "error"});
  for (double omega : omegas) {
    auto& row = t.add_row();
    t.set(row, "omega", omega);
    try {
      const CompositeWeight w(g, parity, omega);
      OracleOptions o;
      o.tol = c.oracle_tol;
      const OracleResult r =
          reference_integral([&](long double x) { return f(x) * w.eval_long(x); }, omega, o);
      t.set(row, "value", static_cast<double>(r.value));
      t.set(row, "panels", static_cast<long long>(r.scheme.panels));
      t.set(row, "last_change", r.last_change);
    } catch (const Error& e) {
      t.set(row, "error", describe(e));
    }
  }
  emit(c, t, out);
  return kOk;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  if (text.empty()) fail(ErrorCode::InvalidArgument, "empty grid");
  const auto parts = split(text, ':');
  std::vector<double> grid;
  if (parts.size() == 4 && parts[0] == "log") {
    const double a = parse_number(parts[1]);
    const double b = parse_number(parts[2]);
    const double count = parse_number(parts[3]);
    if (!(a > 0.0) || !(b > 0.0) || count < 1.0 || count != std::floor(count)) {
      fail(ErrorCode::InvalidArgument, "log grid needs positive bounds and a positive count");
    }
    const auto m = static_cast<std::size_t>(count);
    for (std::size_t i = 0; i < m; ++i) {
      grid.push_back(i + 1 == m && m > 1 ? b : a * std::pow(b / a, m == 1 ? 0.0 : double(i) / double(m - 1)));
    }
  } else if (parts.size() == 3) {
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || b < a) fail(ErrorCode::InvalidArgument, "range grid needs a <= b and step > 0");
    const auto m = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < m; ++i) grid.push_back(a + static_cast<double>(i) * step);
  } else if (parts.size() == 1) {
    for (auto item : split(text, ',')) grid.push_back(parse_number(item));
  } else {
    fail(ErrorCode::InvalidArgument, "bad grid '" + std::string(text) + "'");
  }
  return grid;
}

std::vector<std::size_t> parse_index_grid(std::string_view text) {
  if (text.starts_with("log:")) fail(ErrorCode::InvalidArgument, "integer grids have no log form");
  std::vector<std::size_t> out;
  for (double v : parse_grid(text)) {
    if (v < 0.0 || v != std::floor(v)) {
      fail(ErrorCode::InvalidArgument, "not a non-negative integer: " + format_double(v));
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian quadrature for integrals of f(x) g(sin or cos(omega x)) on [-1, 1]", "oscgauss"};
  app.require_subcommand(1);
  Config c;

  const auto add_f = [&](CLI::App* s) { s->add_option("--f", c.f, "amplitude, name[:key=value,...]")->required(); };
  const auto add_g = [&](CLI::App* s) { s->add_option("--g", c.g, "outer function, name[:key=value,...]")->required(); };
  const auto add_base = [&](CLI::App* s) {
    s->add_option("--phi", c.phi, "oscillator")->check(CLI::IsMember({"sin", "cos"}))->capture_default_str();
    s->add_option("--omega", c.omega, "frequency or grid (a:b:step, log:a:b:count, list)")->capture_default_str();
    s->add_option("--moments", c.moments, "moment route")
        ->check(CLI::IsMember({"auto", "asymptotic", "expansion"}))
        ->capture_default_str();
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    s->add_option("--output", c.output, "output file (default stdout)");
    s->add_option("--gl-nodes", c.gl_nodes, "Gauss-Legendre order for the mean term (0: automatic)");
    s->add_option("--oracle-tol", c.oracle_tol, "oracle refinement tolerance")->capture_default_str();
  };
  const auto add_n = [&](CLI::App* s, const char* help) { s->add_option("--n", c.n, help)->capture_default_str(); };
  const auto add_r = [&](CLI::App* s) { s->add_option("--r", c.r, "Filon endpoint multiplicity")->capture_default_str(); };

  auto* integrate = app.add_subcommand("integrate", "one quadrature value with oracle and diagnostics");
  add_f(integrate);
  add_g(integrate);
  add_base(integrate);
  integrate->add_option("--method", c.method, "quadrature")
      ->check(CLI::IsMember({"rule1", "rule2", "filon", "oracle"}))
      ->capture_default_str();
  add_n(integrate, "number of nodes");
  add_r(integrate);
  integrate->add_flag("--timing", c.timing, "report wall time");

  auto* rule = app.add_subcommand("rule", "nodes and weights");
  add_g(rule);
  add_base(rule);
  rule->add_option("--method", c.method, "rule1 or rule2")
      ->check(CLI::IsMember({"rule1", "rule2"}))
      ->capture_default_str();
  add_n(rule, "number of nodes or grid");

  auto* moments = app.add_subcommand("moments", "modified Chebyshev moments");
  add_g(moments);
  add_base(moments);
  moments->add_option("--J", c.J, "largest index")->capture_default_str();
  moments->add_flag("--shifted", c.shifted, "moments of w - rho_0/2");

  auto* sweep_n = app.add_subcommand("sweep-n", "error against n at fixed omega");
  add_f(sweep_n);
  add_g(sweep_n);
  add_base(sweep_n);
  sweep_n->add_option("--method", c.method, "quadrature (n is r for filon)")
      ->check(CLI::IsMember({"rule1", "rule2", "filon"}))
      ->capture_default_str();
  add_n(sweep_n, "n grid");

  auto* sweep_omega = app.add_subcommand("sweep-omega", "error against omega at fixed n");
  add_f(sweep_omega);
  add_g(sweep_omega);
  add_base(sweep_omega);
  sweep_omega->add_option("--method", c.method, "quadrature")
      ->check(CLI::IsMember({"rule1", "rule2", "filon", "oracle"}))
      ->capture_default_str();
  add_n(sweep_omega, "number of nodes");
  add_r(sweep_omega);

  auto* compare = app.add_subcommand("compare", "rule 2 against Filon over omega");
  add_f(compare);
  add_g(compare);
  add_base(compare);
  add_n(compare, "rule-2 nodes");
  add_r(compare);

  auto* trajectory = app.add_subcommand("trajectory", "rule-2 nodes followed across omega");
  add_g(trajectory);
  add_base(trajectory);
  add_n(trajectory, "rule-2 nodes");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference value");
  add_f(oracle);
  add_g(oracle);
  add_base(oracle);

  std::vector<const char*> argv{"oscgauss"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (integrate->parsed()) {
      c.command = "integrate";
      return cmd_integrate(c, out);
    }
    if (rule->parsed()) {
      c.command = "rule";
      return cmd_rule(c, out);
    }
    if (moments->parsed()) {
      c.command = "moments";
      return cmd_moments(c, out);
    }
    if (sweep_n->parsed()) {
      c.command = "sweep-n";
      return cmd_sweep_n(c, out);
    }
    if (sweep_omega->parsed()) {
      c.command = "sweep-omega";
      if (sweep_omega->count("--method") == 0) c.method = "rule2";
      return cmd_sweep_omega(c, out);
    }
    if (compare->parsed()) {
      c.command = "compare";
      return cmd_compare(c, out);
    }
    if (trajectory->parsed()) {
      c.command = "trajectory";
      return cmd_trajectory(c, out);
    }
    if (oracle->parsed()) {
      c.command = "oracle";
      return cmd_oracle(c, out);
    }
  } catch (const Error& e) {
    err << "error: " << describe(e) << '\n';
    return is_usage_error(e.code()) ? kUsage : kNumerical;
  }
  return kUsage;
}

}  // namespace oscgauss::cli
