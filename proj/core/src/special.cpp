#include "wrightfn/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wrightfn/wright.hpp"

namespace wrightfn {

namespace {

void require_fraction(double a, const char* fn) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument(std::string(fn) + " requires 0 < a < 1");
  }
}

// (x/2)^nu, for x < 0 and non-integer nu read as (x/2)^ceil(nu) (|x|/2)^(nu - ceil(nu)),
// so |x| only enters through the fractional root.
double bessel_prefactor(double nu, double x) {
  if (x >= 0.0 || nu == std::nearbyint(nu)) return std::pow(0.5 * x, nu);
  const double p = std::pow(0.5 * std::abs(x), nu);
  return std::fmod(std::ceil(nu), 2.0) == 0.0 ? p : -p;
}

}  // namespace

double mwright(double a, double z, const de::QuadratureConfig& config) {
  require_fraction(a, "mwright");
  return wright(-a, 1.0 - a, -z, config).value;
}

double mwright_integral(double a, double x, const de::QuadratureConfig& config) {
  require_fraction(a, "mwright_integral");
  return wright(-a, 1.0, x, config).value;
}

double gaussian_derivative(int n, double x, const de::QuadratureConfig& config) {
  if (n < 0) throw std::invalid_argument("gaussian_derivative requires n >= 0");
  return wright(-0.5, 0.5 * (1.0 - n), x, config).value;
}

double bessel_j(double nu, double x, const de::QuadratureConfig& config) {
  return bessel_prefactor(nu, x) * wright(1.0, nu + 1.0, -0.25 * x * x, config).value;
}

double bessel_i(double nu, double x, const de::QuadratureConfig& config) {
  return bessel_prefactor(nu, x) * wright(1.0, nu + 1.0, 0.25 * x * x, config).value;
}

double erfc_w(double x, const de::QuadratureConfig& config) {
  return wright(-0.5, 1.0, -2.0 * x, config).value;
}

double hyp0f2_w(double x, const de::QuadratureConfig& config) {
  return wright(2.0, 1.0, x, config).value;
}

}  // namespace wrightfn
