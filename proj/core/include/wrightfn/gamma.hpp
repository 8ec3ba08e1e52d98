#ifndef WRIGHTFN_GAMMA_HPP_
#define WRIGHTFN_GAMMA_HPP_

namespace wrightfn {

// sin(pi x) and cos(pi x) with exact zeros at the integers and half
// integers respectively.
double sin_pi(double x);
double cos_pi(double x);

// 1/Gamma(x). Entire: returns exactly 0 at x = 0, -1, -2, ...
// Lanczos (N=13, g~6.0247) for x >= 1/2, reflection below.
double reciprocal_gamma(double x);

}  // namespace wrightfn

#endif  // WRIGHTFN_GAMMA_HPP_
