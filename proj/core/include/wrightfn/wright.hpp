// Wright function
//
//   W(a, b | z) = sum_{k>=0} z^k / (k! Gamma(a k + b)),   a > -1,
//
// for real a, b, z, evaluated from its Hankel-contour representation
//
//   W(a, b | z) = 1/(2 pi i) \int_Ha exp(xi + z xi^-a) xi^-b d xi.
//
// The contour is deformed into a circular arc of radius eps around the
// origin plus the two banks of the negative real axis beyond eps, which
// reduces W to real integrals:
//
//   I_r(eps) = 1/pi \int_eps^inf r^-b exp(cos(pi a) z r^-a - r)
//                               sin(sin(pi a) z r^-a + pi b) dr
//   P(eps)   = eps^(1-b)/(2 pi) \int_-pi^pi exp(eps cos phi + cos(a phi) z eps^-a)
//                  cos(eps sin phi - z sin(a phi) eps^-a + (1-b) phi) d phi
//   I_u(eps^a) is I_r(eps) after the substitution u = r^a (a > 0).
//
// Which combination is used depends on the signs of a and b - 1:
//
//   a < 0, b < 1     I_r(0)
//   a < 0, b = 1     I_r(0) + 1
//   a < 0, b > 1     I_r(eps) + P(eps)
//   a = 0            exp(z) / Gamma(b)
//   a > 0            I_u(eps^a) + P(eps)
//
// with eps = max(|a z|^(1/(a+1)), 1), the modulus of the stationary point of
// the kernel phase. For a = -n, b = m (positive integers) the contour closes
// and W(-n, m | z) is a polynomial in z.

#ifndef WRIGHTFN_WRIGHT_HPP_
#define WRIGHTFN_WRIGHT_HPP_

#include <string>
#include <vector>

#include "wrightfn/dequad.hpp"

namespace wrightfn {

// Parameter pair (a, b). Admissible when a > -1, or when a is a negative
// integer and b a positive integer.
struct WrightParams {
  double a = 0.0;
  double b = 1.0;

  // Throws std::invalid_argument naming the violated condition.
  void validate() const;
};

enum class BranchKind {
  ResiduePolynomial,
  NegA_bBelow1,
  NegA_bEqual1,
  NegA_bAbove1,
  ZeroA,
  PosA,
};

struct Branch {
  BranchKind kind = BranchKind::ZeroA;
  // Only meaningful for ResiduePolynomial: a = -n, b = m.
  int n = 0;
  int m = 0;

  friend bool operator==(const Branch&, const Branch&) = default;
};

// "NegA_bEqual1", "ResiduePolynomial(1,2)", ...
std::string to_string(const Branch& branch);

struct WrightValue {
  double value = 0.0;
  // Sum of the component quadrature error estimates.
  double error_estimate = 0.0;
  Branch branch;
  int n_evals = 0;
  bool converged = true;
  // Arc radius actually used (0 when no arc integral was needed).
  double epsilon = 0.0;
};

// Branch selection. b is snapped to 1 and a to 0 or a negative integer when
// within 4 ulps. Throws std::invalid_argument for inadmissible (a, b).
Branch classify(double a, double b, double z);

// Integrands of I_r, P and I_u. They throw std::overflow_error when the
// exponential factor leaves the double range.
double radial_integrand(double a, double b, double z, double r);
double arc_integrand(double a, double b, double z, double eps, double phi);
double substituted_integrand(double a, double b, double z, double u);

// Coefficients, in ascending powers of z, of W(-n, m | z). The list has m
// entries (degree m-1 is reached only for n = 1).
std::vector<double> residue_polynomial(int n, int m);

// Hoelder exponent function of the kernel, h(xi) = -a z / xi^a + xi - b.
// Diagnostic only.
double holder_exponent(double a, double b, double z, double xi);

// |a z|^(1/(a+1)); 0 when a or z vanishes. Throws for a = -1.
double stationary_point(double a, double z);

// Evaluation hooks used by the self-test harness to inject faults. Leave at
// the defaults for normal use.
struct EvalTuning {
  // Scales the arc radius used in P(eps) without touching the radial cutoff.
  double arc_radius_scale = 1.0;
};

WrightValue wright(double a, double b, double z, const de::QuadratureConfig& config = {});
WrightValue wright(double a, double b, double z, const de::QuadratureConfig& config,
                   const EvalTuning& tuning);

}  // namespace wrightfn

#endif  // WRIGHTFN_WRIGHT_HPP_
