#include "wrightfn/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace wrightfn {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation N=13, g=6.024680040776729583740234375, in rational
// form sum(num[k] z^k) / sum(den[k] z^k). Max relative error ~1e-16 in
// double precision.
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};
constexpr std::array<double, 13> kLanczosDen = {
    0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
    2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0,
};

double lanczos_sum(double z) {
  double num = kLanczosNum.back();
  double den = kLanczosDen.back();
  for (int i = static_cast<int>(kLanczosNum.size()) - 2; i >= 0; --i) {
    num = num * z + kLanczosNum[i];
    den = den * z + kLanczosDen[i];
  }
  return num / den;
}

// 1/(n-1)! for n = 1..171; beyond that 1/Gamma underflows to 0 anyway.
constexpr int kMaxFactorialArg = 171;

const std::array<double, kMaxFactorialArg + 1>& inverse_factorials() {
  static const auto table = [] {
    std::array<double, kMaxFactorialArg + 1> t{};
    double fact = 1.0;
    t[0] = 1.0;
    for (int n = 1; n <= kMaxFactorialArg; ++n) {
      fact *= n;
      t[n] = 1.0 / fact;
    }
    return t;
  }();
  return table;
}

double rgamma_positive(double x) {
  if (x > 180.0) return 0.0;
  const double zgh = x + kLanczosG - 0.5;
  // zgh^(x - 1/2) is split in two halves to stay finite up to x ~ 180.
  const double half_power = std::pow(zgh, 0.5 * (x - 0.5));
  return (std::exp(zgh) / half_power) / (half_power * lanczos_sum(x));
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  const double s = std::abs(r);
  double v;
  if (s <= 0.25) {
    v = std::sin(kPi * s);
  } else if (s < 0.75) {
    v = std::cos(kPi * (s - 0.5));
  } else {
    v = std::sin(kPi * (1.0 - s));
  }
  return r < 0 ? -v : v;
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double s = std::abs(std::remainder(x, 2.0));
  if (s <= 0.25) return std::cos(kPi * s);
  if (s < 0.75) return -std::sin(kPi * (s - 0.5));
  return -std::cos(kPi * (1.0 - s));
}

double reciprocal_gamma(double x) {
  if (std::isnan(x)) return x;
  if (x == std::nearbyint(x)) {
    if (x <= 0.0) return 0.0;
    if (x <= kMaxFactorialArg) return inverse_factorials()[static_cast<int>(x) - 1];
    return 0.0;
  }
  if (x >= 0.5) return rgamma_positive(x);
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  const double rg = rgamma_positive(1.0 - x);
  return sin_pi(x) / (kPi * rg);
}

}  // namespace wrightfn
