// Special functions expressed through the Wright function.
//
//   M_a(z)                 = W(-a, 1-a | -z)                 (M-Wright / Mainardi)
//   int_-inf^x M_a(-u) du  = W(-a, 1 | x)
//   G_n(x) = (d/dx)^n exp(-x^2/4)/sqrt(pi) = W(-1/2, (1-n)/2 | x)
//   (x/2)^-nu J_nu(x)      = W(1, nu+1 | -x^2/4)
//   (x/2)^-nu I_nu(x)      = W(1, nu+1 |  x^2/4)
//   erfc(x)                = W(-1/2, 1 | -2x)
//   0F2(; 1/2, 1; x/4)     = W(2, 1 | x)
//
// Every function forwards the quadrature configuration to wright() and
// propagates its exceptions.

#ifndef WRIGHTFN_SPECIAL_HPP_
#define WRIGHTFN_SPECIAL_HPP_

#include "wrightfn/dequad.hpp"

namespace wrightfn {

// 0 < a < 1.
double mwright(double a, double z, const de::QuadratureConfig& config = {});

// 0 < a < 1.
double mwright_integral(double a, double x, const de::QuadratureConfig& config = {});

// n >= 0.
double gaussian_derivative(int n, double x, const de::QuadratureConfig& config = {});

// For x < 0 and non-integer nu the prefactor (x/2)^nu is taken as
// (x/2)^ceil(nu) (|x|/2)^(nu - ceil(nu)), which keeps the result real and puts
// |x| only under the root: J_{1/2}(x) = sqrt(2/(pi |x|)) sin x for all x != 0.
double bessel_j(double nu, double x, const de::QuadratureConfig& config = {});
double bessel_i(double nu, double x, const de::QuadratureConfig& config = {});

double erfc_w(double x, const de::QuadratureConfig& config = {});

double hyp0f2_w(double x, const de::QuadratureConfig& config = {});

}  // namespace wrightfn

#endif  // WRIGHTFN_SPECIAL_HPP_
