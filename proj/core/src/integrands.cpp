#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wrightfn/gamma.hpp"
#include "wrightfn/wright.hpp"

namespace wrightfn {

namespace {

constexpr double kPi = std::numbers::pi;
const double kMaxLog = std::log(std::numeric_limits<double>::max());

// base^power * exp(expo), base > 0, computed in log space when the direct
// product would leave the double range.
double power_times_exp(double base, double power, double expo, const char* what) {
  if (std::isnan(expo)) {
    throw std::domain_error(std::string(what) + ": exponent is not a number");
  }
  if (expo == -std::numeric_limits<double>::infinity()) return 0.0;
  if (expo < kMaxLog) {
    const double p = std::pow(base, power);
    if (std::isfinite(p) && p > 0.0) {
      const double r = p * std::exp(expo);
      if (std::isfinite(r)) return r;
    }
  }
  const double lg = power * std::log(base) + expo;
  if (lg > kMaxLog) {
    throw std::overflow_error(std::string(what) + ": exponential factor overflows");
  }
  return std::exp(lg);
}

// sin(pi b + theta) without rounding pi b.
double sin_shifted(double b, double theta) {
  if (theta == 0.0) return sin_pi(b);
  return sin_pi(b) * std::cos(theta) + cos_pi(b) * std::sin(theta);
}

}  // namespace

double radial_integrand(double a, double b, double z, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radial_integrand requires r > 0");
  const double ca = cos_pi(a);
  const double sa = sin_pi(a);
  const double ra = std::pow(r, -a);
  const double expo = (ca == 0.0 || z == 0.0) ? -r : ca * z * ra - r;
  if (expo == -std::numeric_limits<double>::infinity()) return 0.0;
  const double theta = (sa == 0.0 || z == 0.0) ? 0.0 : sa * z * ra;
  const double trig = sin_shifted(b, theta);
  if (trig == 0.0) return 0.0;
  return power_times_exp(r, -b, expo, "radial_integrand") * trig / kPi;
}

double arc_integrand(double a, double b, double z, double eps, double phi) {
  if (!(eps > 0.0)) throw std::invalid_argument("arc_integrand requires eps > 0");
  const double ea = std::pow(eps, -a);
  const double za = z == 0.0 ? 0.0 : z * ea;
  const double expo = eps * std::cos(phi) + std::cos(a * phi) * za;
  const double theta = eps * std::sin(phi) - za * std::sin(a * phi) + (1.0 - b) * phi;
  return power_times_exp(eps, 1.0 - b, expo, "arc_integrand") * std::cos(theta) /
         (2.0 * kPi);
}

double substituted_integrand(double a, double b, double z, double u) {
  if (!(a > 0.0)) throw std::invalid_argument("substituted_integrand requires a > 0");
  if (!(u > 0.0)) throw std::invalid_argument("substituted_integrand requires u > 0");
  const double ca = cos_pi(a);
  const double sa = sin_pi(a);
  const double zu = z / u;
  const double expo = (ca == 0.0 ? 0.0 : ca * zu) - std::pow(u, 1.0 / a);
  if (expo == -std::numeric_limits<double>::infinity()) return 0.0;
  const double trig = sin_shifted(b, sa == 0.0 ? 0.0 : sa * zu);
  if (trig == 0.0) return 0.0;
  return power_times_exp(u, (1.0 - b) / a - 1.0, expo, "substituted_integrand") * trig /
         (kPi * a);
}

}  // namespace wrightfn
