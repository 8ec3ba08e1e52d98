#include "cli_commands.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "wrightfn/series.hpp"
#include "wrightfn/special.hpp"

namespace wrightfn::cli {

namespace {

constexpr double kPi = std::numbers::pi;
// First zero of J0.
constexpr double kBesselZero = 2.404825557695773;

constexpr std::array<double, 8> kGridA = {-0.9, -0.5, -1.0 / 3.0, 0.0, 1.0 / 3.0, 0.5, 1.0, 2.0};
constexpr std::array<double, 6> kGridB = {-1.5, -0.5, 0.5, 1.0, 1.5, 3.0};
constexpr int kGridZ = 25;

double grid_z(int i) { return -3.0 + 6.0 * i / (kGridZ - 1); }

double relative_residual(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

class Group {
 public:
  Group(std::string name, double tolerance) {
    report_.name = std::move(name);
    report_.tolerance = tolerance;
  }
  void check(double residual) {
    ++report_.total;
    if (std::isnan(residual)) {
      report_.worst_residual = residual;
      return;
    }
    if (!std::isnan(report_.worst_residual)) {
      report_.worst_residual = std::max(report_.worst_residual, residual);
    }
    if (residual <= report_.tolerance) ++report_.passed;
  }
  GroupReport done() const { return report_; }

 private:
  GroupReport report_;
};

// 0F2(; b1, b2; x) by its power series.
double hyp0f2_series(double b1, double b2, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 400; ++k) {
    term *= x / ((b1 + k) * (b2 + k) * (k + 1.0));
    sum += term;
    if (k > 5 && std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Ai from the Bessel-function forms on either side of the origin.
double airy_ai(double x) {
  if (x == 0.0) return 1.0 / (std::cbrt(9.0) * std::tgamma(2.0 / 3.0));
  const double zeta = 2.0 / 3.0 * std::pow(std::abs(x), 1.5);
  if (x > 0.0) return std::sqrt(x / 3.0) * std::cyl_bessel_k(1.0 / 3.0, zeta) / kPi;
  const double j = std::cyl_bessel_j(1.0 / 3.0, zeta);
  const double y = std::cyl_neumann(1.0 / 3.0, zeta);
  const double j_minus = 0.5 * j - std::sqrt(3.0) / 2.0 * y;
  return std::sqrt(-x) / 3.0 * (j + j_minus);
}

double gaussian(double x) { return std::exp(-x * x / 4.0) / std::sqrt(kPi); }

}  // namespace

de::QuadratureConfig config_for(std::optional<double> tol) {
  de::QuadratureConfig config;
  if (tol) config.target_rel_tol = *tol;
  config.validate();
  return config;
}

std::string format_number(double x, int digits) {
  std::array<char, 64> buf{};
  const auto res = digits > 0
                       ? std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                       std::chars_format::general, digits)
                       : std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err) {
  if (options.digits < 1 || options.digits > 17) {
    err << "error: --digits must be in [1, 17]\n";
    return kUsage;
  }
  WrightValue r;
  try {
    r = wright(options.a, options.b, options.z, config_for(options.tol));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  out << "value     " << format_number(r.value, options.digits) << "\n"
      << "error     " << format_number(r.error_estimate, 3) << "\n"
      << "branch    " << to_string(r.branch) << "\n"
      << "evals     " << r.n_evals << "\n";
  if (!r.converged) {
    err << "warning: quadrature did not reach the requested tolerance\n";
    return kNotConverged;
  }
  return kOk;
}

void validate(const GridOptions& options) {
  if (options.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (!std::isfinite(options.zmin) || !std::isfinite(options.zmax) ||
      !(options.zmax > options.zmin)) {
    throw std::invalid_argument("--zmax must be greater than --zmin");
  }
  if (options.digits < 0 || options.digits > 17) {
    throw std::invalid_argument("--digits must be in [1, 17]");
  }
}

std::vector<GridRow> evaluate_grid(const GridOptions& options) {
  validate(options);
  WrightParams{options.a, options.b}.validate();
  const de::QuadratureConfig config = config_for(options.tol);

  const auto n = static_cast<std::size_t>(options.n);
  std::vector<GridRow> rows(n);
  const double span = options.zmax - options.zmin;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      GridRow& row = rows[i];
      row.z = i + 1 == n ? options.zmax
                         : options.zmin + span * static_cast<double>(i) /
                                              static_cast<double>(n - 1);
      try {
        const auto r = wright(options.a, options.b, row.z, config);
        row.value = r.value;
        row.error_estimate = r.error_estimate;
        row.converged = r.converged;
      } catch (const std::exception& e) {
        row.value = std::nan("");
        row.error_estimate = std::numeric_limits<double>::infinity();
        row.converged = false;
        row.failure = e.what();
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, static_cast<unsigned>(n));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

void write_csv(const std::vector<GridRow>& rows, int digits, std::ostream& out) {
  out << "z,value,err\n";
  for (const auto& row : rows) {
    out << format_number(row.z, digits) << ',' << format_number(row.value, digits) << ','
        << format_number(row.error_estimate, digits) << '\n';
  }
}

int cmd_grid(const GridOptions& options, std::ostream& out, std::ostream& err) {
  try {
    validate(options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::vector<GridRow> rows;
  try {
    rows = evaluate_grid(options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }

  if (options.out.empty() || options.out == "-") {
    write_csv(rows, options.digits, out);
  } else {
    std::ofstream file(options.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << options.out << " for writing\n";
      return kIo;
    }
    write_csv(rows, options.digits, file);
    file.close();
    if (!file) {
      err << "error: failed writing " << options.out << "\n";
      return kIo;
    }
  }

  int failed = 0, unconverged = 0;
  for (const auto& row : rows) {
    if (!row.failure.empty()) {
      ++failed;
      err << "error at z=" << format_number(row.z) << ": " << row.failure << "\n";
    } else if (!row.converged) {
      ++unconverged;
    }
  }
  if (unconverged > 0) err << "warning: " << unconverged << " points did not converge\n";
  if (failed > 0) return kDomain;
  return unconverged > 0 ? kNotConverged : kOk;
}

std::vector<GroupReport> run_selftest(const EvalTuning& tuning) {
  const de::QuadratureConfig config;
  auto w = [&](double a, double b, double z) { return wright(a, b, z, config, tuning); };
  // NaN where wright() refuses; such points are outside the checked domain.
  auto w_value = [&](double a, double b, double z) {
    try {
      const auto r = w(a, b, z);
      return r.converged ? r.value : std::nan("");
    } catch (const std::overflow_error&) {
      return std::nan("");
    }
  };

  std::vector<GroupReport> reports;

  Group oracle("oracle-equivalence", 1e-8);
  for (double a : kGridA) {
    for (double b : kGridB) {
      for (int i = 0; i < kGridZ; ++i) {
        const auto ref = wright_series(a, b, grid_z(i));
        if (!ref.converged) continue;
        oracle.check(relative_residual(w_value(a, b, grid_z(i)), ref.value));
      }
    }
  }
  reports.push_back(oracle.done());

  Group derivative("derivative", 1e-5);
  const double h = 1e-5;
  for (double a : kGridA) {
    if (!(a > -0.5)) continue;
    for (double b : kGridB) {
      for (int i = 0; i < kGridZ; ++i) {
        const double z = grid_z(i);
        const double fd = (w_value(a, b, z + h) - w_value(a, b, z - h)) / (2 * h);
        derivative.check(relative_residual(fd, w_value(a, a + b, z)));
      }
    }
  }
  reports.push_back(derivative.done());

  Group recurrence("recurrence", 1e-8);
  for (double a : kGridA) {
    for (double b : kGridB) {
      for (int i = 0; i < kGridZ; ++i) {
        const double z = grid_z(i);
        const double lhs = w_value(a, b - 1.0, z);
        const double rhs = (b - 1.0) * w_value(a, b, z) + a * z * w_value(a, a + b, z);
        if (std::isnan(lhs) || std::isnan(rhs)) continue;
        recurrence.check(relative_residual(lhs, rhs));
      }
    }
  }
  reports.push_back(recurrence.done());

  Group continuity("branch-continuity", 1e-6);
  {
    const double below = w(-0.5, 1.0 - 1e-9, 1.0).value;
    const double at = w(-0.5, 1.0, 1.0).value;
    const double above = w(-0.5, 1.0 + 1e-9, 1.0).value;
    continuity.check(std::abs(below - at));
    continuity.check(std::abs(above - at));
    continuity.check(std::abs(above - below));
  }
  reports.push_back(continuity.done());

  Group polynomial("polynomial", 0.0);
  for (double z : {-10.0, -1.0, 0.0, 1.0, 10.0}) {
    polynomial.check(std::abs(w(-1.0, 2.0, z).value - (1.0 + z)));
    for (int n = 1; n <= 3; ++n) polynomial.check(std::abs(w(-n, 1.0, z).value - 1.0));
  }
  reports.push_back(polynomial.done());

  Group evenness("arc-evenness", 10 * config.target_rel_tol);
  for (double a : {-0.5, 0.5, 1.0, 2.0}) {
    for (double b : {0.5, 1.5, 3.0}) {
      for (double z : {-2.0, 1.0}) {
        const double eps = std::max(stationary_point(a, z), 1.0);
        auto f = [&](double phi) { return arc_integrand(a, b, z, eps, phi); };
        const double full = de::integrate_compact(f, -kPi, kPi, config).value;
        const double half = de::integrate_compact(f, 0.0, kPi, config).value;
        evenness.check(relative_residual(2.0 * half, full));
      }
    }
  }
  reports.push_back(evenness.done());

  Group special("special-identities", 1e-8);
  for (int i = -40; i <= 40; ++i) {
    const double x = 0.1 * i;
    special.check(relative_residual(erfc_w(x), std::erfc(x)));
  }
  for (double x = -4.0; x <= 4.0; x += 0.25) {
    special.check(relative_residual(bessel_j(0.0, x), std::cyl_bessel_j(0.0, std::abs(x))));
    special.check(relative_residual(bessel_i(0.0, x), std::cyl_bessel_i(0.0, std::abs(x))));
    special.check(relative_residual(mwright(0.5, x), gaussian(x)));
    special.check(relative_residual(gaussian_derivative(1, x), -x / 2.0 * gaussian(x)));
    special.check(relative_residual(gaussian_derivative(2, x),
                                    (x * x / 4.0 - 0.5) * gaussian(x)));
  }
  for (double x = 0.5; x <= 8.0; x += 0.5) {
    special.check(relative_residual(bessel_j(0.5, x), std::sqrt(2.0 / (kPi * x)) * std::sin(x)));
    special.check(relative_residual(bessel_j(1.0, x), std::cyl_bessel_j(1.0, x)));
  }
  for (int i = 0; i <= 16; ++i) {
    const double x = -4.0 + 0.5 * i;
    special.check(relative_residual(hyp0f2_w(x), hyp0f2_series(0.5, 1.0, x / 4.0)));
  }
  for (int i = 0; i <= 12; ++i) {
    const double z = 0.25 * i;
    special.check(relative_residual(mwright(1.0 / 3.0, z),
                                    std::cbrt(9.0) * airy_ai(z / std::cbrt(3.0))));
  }
  reports.push_back(special.done());

  Group ode("mwright-ode", 1e-5);
  for (int i = 0; i <= 28; ++i) {
    const double z = 0.2 + 0.1 * i;
    const double m = mwright(0.5, z);
    const double dm = (mwright(0.5, z + h) - mwright(0.5, z - h)) / (2 * h);
    ode.check(std::abs(dm + z / 2.0 * m));
  }
  reports.push_back(ode.done());

  return reports;
}

int cmd_selftest(std::ostream& out, const EvalTuning& tuning) {
  const auto reports = run_selftest(tuning);
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.ok();
    out << (r.ok() ? "PASS  " : "FAIL  ") << r.name
        << std::string(r.name.size() < 20 ? 20 - r.name.size() : 1, ' ') << r.passed << "/"
        << r.total << "  worst " << format_number(r.worst_residual, 3) << "  tol "
        << format_number(r.tolerance, 3) << "\n";
  }
  out << (all ? "all groups passed" : "some groups failed") << "\n";
  return all ? kOk : kNotConverged;
}

std::vector<BenchRecord> run_bench(int reps) {
  if (reps < 1) throw std::invalid_argument("--reps must be at least 1");
  struct Row {
    const char* label;
    double a, b, x, z;
    std::function<double(double)> closed_form;
  };
  const double w1 = kBesselZero;
  const std::array<Row, 6> rows = {{
      {"W(-1/2,1|x) = 1+erf(x/2)", -0.5, 1.0, 2.0, 2.0,
       [](double x) { return std::erfc(-x / 2.0); }},
      {"W(-1/2,1/2|x) = exp(-x^2/4)/sqrt(pi)", -0.5, 0.5, 0.5, 0.5, gaussian},
      {"W(-1/2,-1/2|x) = G_2(x)", -0.5, -0.5, 1.5, 1.5,
       [](double x) { return (x * x / 4.0 - 0.5) * gaussian(x); }},
      {"W(-1/3,2/3|x) = 3^(2/3) Ai(-x/3^(1/3))", -1.0 / 3.0, 2.0 / 3.0, 0.5, 0.5,
       [](double x) { return std::cbrt(9.0) * airy_ai(-x / std::cbrt(3.0)); }},
      {"W(1,3/2|-x) = sin(2 sqrt x)/sqrt(pi x)", 1.0, 1.5, kPi * kPi, -kPi * kPi,
       [](double x) { return std::sin(2.0 * std::sqrt(x)) / std::sqrt(kPi * x); }},
      {"W(1,1|-x) = J0(2 sqrt x)", 1.0, 1.0, w1 * w1 / 4.0, -w1 * w1 / 4.0,
       [](double x) { return std::cyl_bessel_j(0.0, 2.0 * std::sqrt(x)); }},
  }};

  std::vector<BenchRecord> records;
  for (const auto& row : rows) {
    BenchRecord rec;
    rec.label = row.label;
    rec.x = row.x;
    rec.reference = row.closed_form(row.x);
    std::vector<double> us(static_cast<std::size_t>(reps));
    for (auto& t : us) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = wright(row.a, row.b, row.z);
      t = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
      rec.value = r.value;
      rec.converged = r.converged;
    }
    const auto mid = us.begin() + static_cast<std::ptrdiff_t>(us.size() / 2);
    std::nth_element(us.begin(), mid, us.end());
    rec.microseconds = *mid;
    records.push_back(rec);
  }
  return records;
}

int cmd_bench(int reps, std::ostream& out, std::ostream& err) {
  std::vector<BenchRecord> records;
  try {
    records = run_bench(reps);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  bool converged = true;
  out << "identity                                      x            us   value                  "
         "reference\n";
  for (const auto& r : records) {
    converged = converged && r.converged;
    std::string label = r.label;
    label.resize(std::max<std::size_t>(label.size(), 42), ' ');
    std::string x = format_number(r.x, 8);
    x.resize(std::max<std::size_t>(x.size(), 12), ' ');
    std::string us = format_number(r.microseconds, 4);
    us.resize(std::max<std::size_t>(us.size(), 7), ' ');
    std::string value = format_number(r.value, 15);
    value.resize(std::max<std::size_t>(value.size(), 22), ' ');
    out << label << "    " << x << " " << us << " " << value << " "
        << format_number(r.reference, 15) << "\n";
  }
  out << "median of " << reps << " repetitions per row\n";
  return converged ? kOk : kNotConverged;
}

}  // namespace wrightfn::cli
