// Reference summation of the Wright series
//
//   W(a, b | z) = sum_{k>=0} z^k / (k! Gamma(a k + b)).
//
// Meant as an oracle for moderate |z|: terms are accumulated in ascending k
// with compensated summation and the result is refused (converged = false)
// whenever cancellation between large terms could have eaten the requested
// accuracy. Never use it for large |z|.

#ifndef WRIGHTFN_SERIES_HPP_
#define WRIGHTFN_SERIES_HPP_

namespace wrightfn {

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  // |last included term|
  double tail_bound = 0.0;
  // Largest |term| seen; bounds the rounding error of the sum.
  double max_term = 0.0;
  bool converged = false;
};

struct SeriesOptions {
  int max_terms = 4000;
  // Stop once two consecutive terms fall below tol * |partial sum|.
  double tol = 1e-17;
  // Refuse when 16 eps * max_term exceeds this times max(1, |sum|).
  double cancellation_limit = 1e-11;
};

// Throws std::invalid_argument for a <= -1 or max_terms < 1.
SeriesResult wright_series(double a, double b, double z, const SeriesOptions& options = {});

SeriesResult wright_series(double a, double b, double z, int max_terms, double tol);

}  // namespace wrightfn

#endif  // WRIGHTFN_SERIES_HPP_
