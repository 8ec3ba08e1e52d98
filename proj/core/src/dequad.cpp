#include "wrightfn/dequad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wrightfn::de {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Both transforms saturate double precision well before |t| = 7.
constexpr double kMaxT = 8.0;

struct Node {
  double x = 0.0;     // point handed to the integrand
  double dist = 0.0;  // distance to the nearer endpoint
  double weight = 0.0;
  bool valid = false;
};

// exp-sinh node shifted by `lower`.
Node semi_node(double t, double lower) {
  Node n;
  const double s = kHalfPi * std::sinh(t);
  const double x = std::exp(s);
  const double w = kHalfPi * std::cosh(t) * x;
  n.valid = x > 0.0 && std::isfinite(x) && w > 0.0 && std::isfinite(w);
  n.x = lower + x;
  n.dist = x;
  n.weight = w;
  return n;
}

// tanh-sinh node on [a, b]. The complement 1 - |tanh u| is formed directly
// from exp(-2|u|) so that nodes crowding an endpoint keep their distance.
Node compact_node(double t, double a, double b) {
  Node n;
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);
  const double u = kHalfPi * std::sinh(t);
  const double q = std::exp(-2.0 * std::abs(u));
  const double comp = 2.0 * q / (1.0 + q);
  const double w = kHalfPi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
  n.valid = comp > 0.0 && w > 0.0 && std::isfinite(w);
  n.dist = half * comp;
  n.weight = w;
  if (comp < 0.5) {
    n.x = t > 0 ? b - n.dist : a + n.dist;
  } else {
    n.x = center + half * std::tanh(u);
  }
  return n;
}

class Accumulator {
 public:
  void add(double term) {
    // Neumaier summation
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
    abs_sum_ += std::abs(term);
  }
  double sum() const { return sum_ + comp_; }
  double abs_sum() const { return abs_sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_sum_ = 0.0;
};

// Trapezoidal engine shared by both transforms. `make_node(t)` returns the
// node at parameter t, `eval(node)` the integrand value at that node.
template <class MakeNode, class Eval>
QuadratureResult run_levels(const MakeNode& make_node, const Eval& eval, double scale,
                            const QuadratureConfig& config) {
  config.validate();
  const int min_level = std::min(config.min_level, config.max_level);

  QuadratureResult result;
  Accumulator acc;
  double previous = 0.0;

  for (int level = 0; level <= config.max_level; ++level) {
    const double h = std::ldexp(config.base_step, -level);
    const int k_stride = level == 0 ? 1 : 2;

    if (level == 0) {
      const Node n = make_node(0.0);
      if (n.valid) {
        const double fx = eval(n);
        ++result.n_evals;
        acc.add(n.weight * fx);
      }
    }

    for (const int side : {1, -1}) {
      int small = 0;
      for (int k = 1;; k += k_stride) {
        const double t = side * k * h;
        if (std::abs(t) > kMaxT) break;
        const Node n = make_node(t);
        if (!n.valid) break;
        const double term = n.weight * eval(n);
        ++result.n_evals;
        acc.add(term);
        if (std::abs(term) < config.trunc_threshold * acc.abs_sum()) {
          if (++small >= 3) break;
        } else {
          small = 0;
        }
      }
    }

    const double current = scale * h * acc.sum();
    result.level_sums.push_back(current);
    result.value = current;
    if (level == 0) {
      previous = current;
      result.error_estimate = std::numeric_limits<double>::infinity();
      continue;
    }

    const double diff = std::abs(current - previous);
    const double floor = 4.0 * kEps * std::abs(scale) * h * acc.abs_sum();
    const double bound = config.target_rel_tol * std::max(std::abs(current), 1.0);
    result.error_estimate = std::max(diff, floor);
    previous = current;
    if (level >= min_level && (diff <= bound || diff <= floor)) {
      break;
    }
  }

  result.converged = result.error_estimate <=
                     config.target_rel_tol * std::max(std::abs(result.value), 1.0);
  return result;
}

double checked(double fx, double x) {
  if (!std::isfinite(fx)) {
    std::ostringstream msg;
    msg << "integrand is not finite at x = " << x;
    throw std::domain_error(msg.str());
  }
  return fx;
}

}  // namespace

std::string_view to_string(TransformKind kind) {
  return kind == TransformKind::SemiInfinite ? "SemiInfinite" : "Compact";
}

void QuadratureConfig::validate() const {
  if (!(base_step > 0.0) || !std::isfinite(base_step)) {
    throw std::invalid_argument("quadrature base_step must be positive");
  }
  if (max_level < 1) {
    throw std::invalid_argument("quadrature max_level must be at least 1");
  }
  if (!(target_rel_tol > 0.0)) {
    throw std::invalid_argument("quadrature target_rel_tol must be positive");
  }
  if (!(trunc_threshold >= 0.0)) {
    throw std::invalid_argument("quadrature trunc_threshold must be nonnegative");
  }
}

NodeTable generate_nodes(TransformKind kind, int level, const QuadratureConfig& config) {
  config.validate();
  if (level < 0 || level > config.max_level) {
    throw std::invalid_argument("node level outside [0, max_level]");
  }
  NodeTable table;
  table.level = level;
  table.kind = kind;
  table.step = std::ldexp(config.base_step, -level);

  auto node_at = [&](double t) -> std::pair<bool, std::pair<double, double>> {
    if (kind == TransformKind::SemiInfinite) {
      const Node n = semi_node(t, 0.0);
      return {n.valid, {n.x, n.weight}};
    }
    const double u = kHalfPi * std::sinh(t);
    const double x = std::tanh(u);
    const Node n = compact_node(t, -1.0, 1.0);
    return {n.valid && std::abs(x) < 1.0, {x, n.weight}};
  };

  std::vector<std::pair<double, double>> negative;
  std::vector<std::pair<double, double>> positive;
  for (int k = 1; k * table.step <= kMaxT; ++k) {
    auto [ok, node] = node_at(-k * table.step);
    if (!ok) break;
    negative.push_back(node);
  }
  for (int k = 1; k * table.step <= kMaxT; ++k) {
    auto [ok, node] = node_at(k * table.step);
    if (!ok) break;
    positive.push_back(node);
  }

  const std::size_t count = negative.size() + 1 + positive.size();
  table.abscissas.reserve(count);
  table.weights.reserve(count);
  for (auto it = negative.rbegin(); it != negative.rend(); ++it) {
    table.abscissas.push_back(it->first);
    table.weights.push_back(it->second);
  }
  const auto center = node_at(0.0).second;
  table.abscissas.push_back(center.first);
  table.weights.push_back(center.second);
  for (const auto& node : positive) {
    table.abscissas.push_back(node.first);
    table.weights.push_back(node.second);
  }
  return table;
}

QuadratureResult integrate_semiinfinite(const Integrand& f, double lower,
                                        const QuadratureConfig& config) {
  if (!std::isfinite(lower)) {
    throw std::invalid_argument("semi-infinite lower bound must be finite");
  }
  return run_levels([lower](double t) { return semi_node(t, lower); },
                    [&f](const Node& n) { return checked(f(n.x), n.x); }, 1.0, config);
}

QuadratureResult integrate_compact(const Integrand& f, double a, double b,
                                   const QuadratureConfig& config) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("compact interval requires finite a < b");
  }
  auto make = [a, b](double t) {
    Node n = compact_node(t, a, b);
    n.valid = n.valid && n.x > a && n.x < b;
    return n;
  };
  return run_levels(make, [&f](const Node& n) { return checked(f(n.x), n.x); },
                    0.5 * (b - a), config);
}

QuadratureResult integrate_compact(const EndpointIntegrand& f, double a, double b,
                                   const QuadratureConfig& config) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("compact interval requires finite a < b");
  }
  return run_levels([a, b](double t) { return compact_node(t, a, b); },
                    [&f](const Node& n) { return checked(f(n.x, n.dist), n.x); },
                    0.5 * (b - a), config);
}

}  // namespace wrightfn::de
