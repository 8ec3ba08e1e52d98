// Double-exponential (Takahasi-Mori) quadrature on [c, inf) and on compact
// intervals.
//
// The integral is mapped onto the whole real line by x = phi(t) and the
// trapezoidal rule with step h is applied to f(phi(t)) phi'(t):
//
//   semi-infinite:  phi(t) = exp((pi/2) sinh t)     -> (0, inf)
//   compact:        phi(t) = tanh((pi/2) sinh t)    -> (-1, 1)
//
// The step is halved level by level starting from QuadratureConfig::base_step.
// Level L+1 only evaluates the odd multiples of the new step, so every
// function value from the coarser levels is reused. The difference between
// two consecutive level sums serves as the error estimate.

#ifndef WRIGHTFN_DEQUAD_HPP_
#define WRIGHTFN_DEQUAD_HPP_

#include <functional>
#include <string_view>
#include <vector>

namespace wrightfn::de {

enum class TransformKind { SemiInfinite, Compact };

std::string_view to_string(TransformKind kind);

struct QuadratureConfig {
  double base_step = 1.0;
  int max_level = 10;
  double target_rel_tol = 1e-12;
  // A tail node is dropped once |w_k f(x_k)| < trunc_threshold * sum |w f|
  // for three consecutive nodes on the same side.
  double trunc_threshold = 1e-18;
  // Levels below this one are never accepted, even if two consecutive
  // coarse sums happen to agree.
  int min_level = 2;

  // Throws std::invalid_argument on a non-positive step, max_level < 1 or a
  // non-positive tolerance.
  void validate() const;
};

struct NodeTable {
  int level = 0;
  TransformKind kind = TransformKind::SemiInfinite;
  double step = 0.0;
  // Ordered by increasing t = k * step, k running symmetrically around 0.
  std::vector<double> abscissas;
  std::vector<double> weights;
};

// Nodes phi(k h) and weights phi'(k h) for h = base_step / 2^level. The range
// of k stops where the weights underflow or the abscissa saturates the
// interval endpoint in double precision.
NodeTable generate_nodes(TransformKind kind, int level, const QuadratureConfig& config);

struct QuadratureResult {
  double value = 0.0;
  // Absolute. max(|S_L - S_{L-1}|, rounding floor of the final sum).
  double error_estimate = 0.0;
  int n_evals = 0;
  bool converged = false;
  // Trapezoidal sums S_0, S_1, ... for every level that was computed.
  std::vector<double> level_sums;
};

using Integrand = std::function<double(double)>;
// Receives the abscissa and its distance to the nearer endpoint of the
// interval; the distance stays accurate where x itself has rounded onto
// the endpoint.
using EndpointIntegrand = std::function<double(double x, double dist)>;

// Integral of f over [lower, inf), evaluated as the integral of f(lower + x)
// over (0, inf). A non-finite f value throws std::domain_error.
QuadratureResult integrate_semiinfinite(const Integrand& f, double lower,
                                        const QuadratureConfig& config = {});

// Integral of f over [a, b]; the endpoints are never sampled.
QuadratureResult integrate_compact(const Integrand& f, double a, double b,
                                   const QuadratureConfig& config = {});

// As integrate_compact, but keeps sampling nodes whose abscissa rounds onto
// an endpoint, handing f the exact endpoint distance instead.
QuadratureResult integrate_compact(const EndpointIntegrand& f, double a, double b,
                                   const QuadratureConfig& config = {});

}  // namespace wrightfn::de

#endif  // WRIGHTFN_DEQUAD_HPP_
