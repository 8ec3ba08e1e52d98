#include "wrightfn/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wrightfn/gamma.hpp"

namespace wrightfn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// First k past which |t_{k+1} / t_k| ~ |z| (|a| k)^-a / k stays below 1/2, so
// that two small consecutive terms really mark the tail and not a dip
// before the terms grow (or a run of poles of 1/Gamma).
int decreasing_from(double a, double b, double z, int max_terms) {
  const double az = std::abs(z);
  int k = 1;
  for (; k < max_terms; ++k) {
    const double kk = static_cast<double>(k);
    const double growth = a == 0.0 ? 1.0 : std::pow(std::abs(a) * kk, -a);
    if (az * growth / kk <= 0.5 && (a <= 0.0 || a * kk + b > 1.0)) break;
  }
  return k + 2;
}

}  // namespace

SeriesResult wright_series(double a, double b, double z, int max_terms, double tol) {
  SeriesOptions options;
  options.max_terms = max_terms;
  options.tol = tol;
  return wright_series(a, b, z, options);
}

SeriesResult wright_series(double a, double b, double z, const SeriesOptions& options) {
  if (!(a > -1.0)) throw std::invalid_argument("wright_series requires a > -1");
  if (options.max_terms < 1) throw std::invalid_argument("wright_series requires max_terms >= 1");
  if (!(options.tol > 0.0)) throw std::invalid_argument("wright_series requires tol > 0");

  SeriesResult out;
  const int k_tail = decreasing_from(a, b, z, options.max_terms);

  // Neumaier summation
  double sum = 0.0;
  double comp = 0.0;
  double power = 1.0;  // z^k / k!
  int small = 0;
  bool finished = false;

  for (int k = 0; k < options.max_terms; ++k) {
    if (k > 0) power *= z / k;
    const double rg = reciprocal_gamma(a * k + b);
    const double term = rg == 0.0 ? 0.0 : power * rg;
    if (!std::isfinite(term)) break;

    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;

    out.terms_used = k + 1;
    out.tail_bound = std::abs(term);
    out.max_term = std::max(out.max_term, std::abs(term));

    const double partial = std::abs(sum + comp);
    if (std::abs(term) <= options.tol * partial) {
      ++small;
    } else {
      small = 0;
    }
    if (small >= 2 && k >= k_tail) {
      finished = true;
      break;
    }
    if (z == 0.0) {
      finished = true;
      break;
    }
  }

  out.value = sum + comp;
  const double rounding = 16.0 * kEps * out.max_term;
  out.converged =
      finished && rounding <= options.cancellation_limit * std::max(1.0, std::abs(out.value));
  return out;
}

}  // namespace wrightfn
