#include "wrightfn/wright.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wrightfn/gamma.hpp"

namespace wrightfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// The direct I_r(0) route integrates r^(-s) near the origin with s = b for
// b < 1 and s = 1 + a for b = 1. Past s = 0.9 the DE nodes cannot resolve the
// mass piling up at r -> 0 (at s = 1 - 1e-9 nearly all of it lies below
// r = 1e-300), so those cases go around the unit arc instead; the contour
// representation is exact for any radius.
constexpr double kMaxDirectSingularity = 0.9;

bool near(double x, double target) {
  return std::abs(x - target) <= 4.0 * kEps * std::max(1.0, std::abs(target));
}

struct Snapped {
  double a;
  double b;
};

Snapped snap(const Branch& branch, double a, double b) {
  switch (branch.kind) {
    case BranchKind::ZeroA:
      return {0.0, b};
    case BranchKind::NegA_bEqual1:
      return {a, 1.0};
    case BranchKind::ResiduePolynomial:
      return {-static_cast<double>(branch.n), static_cast<double>(branch.m)};
    default:
      return {a, b};
  }
}

class Assembly {
 public:
  void add(const de::QuadratureResult& r, double factor = 1.0) {
    out_.value += factor * r.value;
    out_.error_estimate += std::abs(factor) * r.error_estimate;
    out_.n_evals += r.n_evals;
    out_.converged = out_.converged && r.converged;
  }
  void add_exact(double v) { out_.value += v; }
  WrightValue& result() { return out_; }

 private:
  WrightValue out_;
};

de::QuadratureResult radial_part(double a, double b, double z, double eps,
                                 const de::QuadratureConfig& config) {
  return de::integrate_semiinfinite([=](double r) { return radial_integrand(a, b, z, r); },
                                    eps, config);
}

de::QuadratureResult substituted_part(double a, double b, double z, double lower,
                                      const de::QuadratureConfig& config) {
  return de::integrate_semiinfinite(
      [=](double u) { return substituted_integrand(a, b, z, u); }, lower, config);
}

// P(eps); the integrand is even in phi, so only [0, pi] is sampled.
de::QuadratureResult arc_part(double a, double b, double z, double eps,
                              const de::QuadratureConfig& config) {
  return de::integrate_compact([=](double phi) { return arc_integrand(a, b, z, eps, phi); },
                               0.0, kPi, config);
}

double horner(const std::vector<double>& coeffs, double z) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

void WrightParams::validate() const { classify(a, b, 0.0); }

std::string to_string(const Branch& branch) {
  switch (branch.kind) {
    case BranchKind::ResiduePolynomial: {
      std::ostringstream s;
      s << "ResiduePolynomial(" << branch.n << "," << branch.m << ")";
      return s.str();
    }
    case BranchKind::NegA_bBelow1:
      return "NegA_bBelow1";
    case BranchKind::NegA_bEqual1:
      return "NegA_bEqual1";
    case BranchKind::NegA_bAbove1:
      return "NegA_bAbove1";
    case BranchKind::ZeroA:
      return "ZeroA";
    case BranchKind::PosA:
      return "PosA";
  }
  return "?";
}

Branch classify(double a, double b, [[maybe_unused]] double z) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("a and b must be finite");
  }
  const double ra = std::nearbyint(a);
  if (ra <= -1.0 && near(a, ra)) {
    const double rb = std::nearbyint(b);
    if (rb < 1.0 || !near(b, rb)) {
      throw std::invalid_argument("b must be a positive integer for negative integer a");
    }
    if (ra < std::numeric_limits<int>::min() || rb > std::numeric_limits<int>::max()) {
      throw std::invalid_argument("integer parameters out of range");
    }
    return {BranchKind::ResiduePolynomial, static_cast<int>(-ra), static_cast<int>(rb)};
  }
  if (a <= -1.0) {
    throw std::invalid_argument("a must be greater than -1 unless it is a negative integer");
  }
  if (near(a, 0.0)) return {BranchKind::ZeroA};
  if (a > 0.0) return {BranchKind::PosA};
  if (near(b, 1.0)) return {BranchKind::NegA_bEqual1};
  return {b < 1.0 ? BranchKind::NegA_bBelow1 : BranchKind::NegA_bAbove1};
}

double holder_exponent(double a, double b, double z, double xi) {
  if (xi == 0.0) throw std::invalid_argument("holder_exponent requires xi != 0");
  const double h = -a * z / std::pow(xi, a) + xi - b;
  if (std::isnan(h)) throw std::domain_error("holder_exponent: xi^a is not real");
  return h;
}

double stationary_point(double a, double z) {
  if (a == -1.0) throw std::invalid_argument("stationary_point requires a != -1");
  if (a == 0.0 || z == 0.0) return 0.0;
  return std::pow(std::abs(a * z), 1.0 / (a + 1.0));
}

WrightValue wright(double a, double b, double z, const de::QuadratureConfig& config) {
  return wright(a, b, z, config, EvalTuning{});
}

WrightValue wright(double a, double b, double z, const de::QuadratureConfig& config,
                   const EvalTuning& tuning) {
  if (!std::isfinite(z)) throw std::domain_error("z must be finite");
  const Branch branch = classify(a, b, z);
  const auto [sa, sb] = snap(branch, a, b);

  Assembly parts;
  WrightValue& out = parts.result();
  out.branch = branch;

  if (branch.kind == BranchKind::ResiduePolynomial) {
    out.value = horner(residue_polynomial(branch.n, branch.m), z);
    return out;
  }
  if (z == 0.0) {
    out.value = reciprocal_gamma(sb);
    return out;
  }

  // I_r(eps) + P(eps) (a < 0) or I_u(eps^a) + P(eps) (a > 0).
  auto contour = [&](double eps) {
    out.epsilon = eps;
    if (sa > 0.0) {
      parts.add(substituted_part(sa, sb, z, std::pow(eps, sa), config));
    } else {
      parts.add(radial_part(sa, sb, z, eps, config));
    }
    parts.add(arc_part(sa, sb, z, eps * tuning.arc_radius_scale, config), 2.0);
  };

  switch (branch.kind) {
    case BranchKind::ZeroA: {
      out.value = std::exp(z) * reciprocal_gamma(sb);
      if (!std::isfinite(out.value)) {
        throw std::overflow_error("exp(z)/Gamma(b) overflows");
      }
      break;
    }
    case BranchKind::NegA_bBelow1:
      if (sb <= kMaxDirectSingularity) {
        parts.add(radial_part(sa, sb, z, 0.0, config));
      } else {
        contour(1.0);
      }
      break;
    case BranchKind::NegA_bEqual1:
      if (1.0 + sa <= kMaxDirectSingularity) {
        parts.add(radial_part(sa, sb, z, 0.0, config));
        parts.add_exact(1.0);
      } else {
        contour(1.0);
      }
      break;
    case BranchKind::NegA_bAbove1:
      // For z > 0 the equation xi^(a+1) = a z has no root on the principal
      // sheet when -1 < a < 0; the stationary radius then only inflates the
      // arc integrand (exp(eps + z eps^-a)), so the floor radius is used.
      contour(z > 0.0 ? 1.0 : std::max(stationary_point(sa, z), 1.0));
      break;
    case BranchKind::PosA:
      contour(std::max(stationary_point(sa, z), 1.0));
      break;
    case BranchKind::ResiduePolynomial:
      break;
  }
  return out;
}

}  // namespace wrightfn
