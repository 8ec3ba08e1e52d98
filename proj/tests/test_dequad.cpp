#include "wrightfn/dequad.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"

namespace de = wrightfn::de;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(GenerateNodes, CenterNodes) {
  de::QuadratureConfig cfg;
  const auto semi = de::generate_nodes(de::TransformKind::SemiInfinite, 0, cfg);
  const auto it = std::find(semi.abscissas.begin(), semi.abscissas.end(), 1.0);
  ASSERT_NE(it, semi.abscissas.end());
  EXPECT_DOUBLE_EQ(semi.weights[it - semi.abscissas.begin()], kPi / 2);

  const auto compact = de::generate_nodes(de::TransformKind::Compact, 0, cfg);
  const auto cmid = compact.abscissas.size() / 2;
  EXPECT_EQ(compact.abscissas[cmid], 0.0);
  EXPECT_DOUBLE_EQ(compact.weights[cmid], kPi / 2);
}

TEST(GenerateNodes, TableInvariants) {
  de::QuadratureConfig cfg;
  for (auto kind : {de::TransformKind::SemiInfinite, de::TransformKind::Compact}) {
    for (int level = 0; level <= 4; ++level) {
      const auto t = de::generate_nodes(kind, level, cfg);
      ASSERT_EQ(t.abscissas.size(), t.weights.size());
      if (kind == de::TransformKind::Compact) ASSERT_EQ(t.abscissas.size() % 2, 1u);
      EXPECT_DOUBLE_EQ(t.step, std::ldexp(1.0, -level));
      for (std::size_t i = 0; i < t.abscissas.size(); ++i) {
        EXPECT_GT(t.weights[i], 0.0);
        if (kind == de::TransformKind::Compact) {
          EXPECT_GT(t.abscissas[i], -1.0);
          EXPECT_LT(t.abscissas[i], 1.0);
        } else {
          EXPECT_GT(t.abscissas[i], 0.0);
          EXPECT_TRUE(std::isfinite(t.abscissas[i]));
        }
        if (i > 0) EXPECT_GE(t.abscissas[i], t.abscissas[i - 1]);
      }
    }
  }
}

TEST(GenerateNodes, CompactIsSymmetric) {
  de::QuadratureConfig cfg;
  for (int level = 0; level <= 3; ++level) {
    const auto t = de::generate_nodes(de::TransformKind::Compact, level, cfg);
    const std::size_t n = t.abscissas.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(t.abscissas[i], -t.abscissas[n - 1 - i]);
      EXPECT_EQ(t.weights[i], t.weights[n - 1 - i]);
    }
  }
}

TEST(GenerateNodes, LevelsAreNested) {
  de::QuadratureConfig cfg;
  for (auto kind : {de::TransformKind::SemiInfinite, de::TransformKind::Compact}) {
    for (int level = 0; level < 5; ++level) {
      const auto coarse = de::generate_nodes(kind, level, cfg);
      const auto fine = de::generate_nodes(kind, level + 1, cfg);
      for (std::size_t i = 0; i < coarse.abscissas.size(); ++i) {
        const auto it = std::find(fine.abscissas.begin(), fine.abscissas.end(),
                                  coarse.abscissas[i]);
        ASSERT_NE(it, fine.abscissas.end()) << "level " << level << " node " << i;
        EXPECT_EQ(fine.weights[it - fine.abscissas.begin()], coarse.weights[i]);
      }
    }
  }
}

TEST(GenerateNodes, RejectsBadArguments) {
  de::QuadratureConfig cfg;
  EXPECT_THROW(de::generate_nodes(de::TransformKind::Compact, cfg.max_level + 1, cfg),
               std::invalid_argument);
  EXPECT_THROW(de::generate_nodes(de::TransformKind::Compact, -1, cfg), std::invalid_argument);
  cfg.base_step = 0.0;
  EXPECT_THROW(de::generate_nodes(de::TransformKind::SemiInfinite, 0, cfg),
               std::invalid_argument);
  cfg.base_step = -1.0;
  EXPECT_THROW(de::generate_nodes(de::TransformKind::SemiInfinite, 0, cfg),
               std::invalid_argument);
}

TEST(IntegrateSemiInfinite, Exponential) {
  const auto r = de::integrate_semiinfinite([](double x) { return std::exp(-x); }, 0.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_GE(r.n_evals, 1);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_LE(r.error_estimate, 1e-12 * std::max(std::abs(r.value), 1.0));
}

TEST(IntegrateSemiInfinite, ShiftedLowerBound) {
  const auto r = de::integrate_semiinfinite([](double x) { return std::exp(-x); }, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 0.367879441171442, 1e-12);
}

TEST(IntegrateSemiInfinite, GammaTwo) {
  const auto r = de::integrate_semiinfinite([](double x) { return x * std::exp(-x); }, 0.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(IntegrateSemiInfinite, IntegrableOriginSingularity) {
  // Gamma(0.2) = int x^-0.8 e^-x dx
  const auto r =
      de::integrate_semiinfinite([](double x) { return std::pow(x, -0.8) * std::exp(-x); }, 0.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, std::tgamma(0.2), 1e-12 * std::tgamma(0.2));
}

TEST(IntegrateSemiInfinite, NonFiniteIntegrandIsAnError) {
  EXPECT_THROW(de::integrate_semiinfinite(
                   [](double x) { return x > 2.0 ? std::nan("") : std::exp(-x); }, 0.0),
               std::domain_error);
}

TEST(IntegrateSemiInfinite, ReportsNonConvergence) {
  de::QuadratureConfig cfg;
  cfg.max_level = 1;
  cfg.min_level = 1;
  const auto r = de::integrate_semiinfinite(
      [](double x) { return std::cos(3.0 * x) / (1.0 + x * x); }, 0.0, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.level_sums.size(), 2u);
  EXPECT_GT(r.error_estimate, 0.0);
}

TEST(IntegrateCompact, Constant) {
  const auto r = de::integrate_compact([](double) { return 1.0; }, -kPi, kPi);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2 * kPi, 1e-12 * 2 * kPi);
}

TEST(IntegrateCompact, CosineOverFullPeriod) {
  const auto r = de::integrate_compact([](double x) { return std::cos(x); }, -kPi, kPi);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(IntegrateCompact, EndpointSingularity) {
  // Midpoint refinement first: the midpoint sums drift toward pi with the
  // sqrt(h) error expected from the endpoint singularity.
  double previous_gap = 1.0;
  for (long panels : {1000L, 16000L, 256000L}) {
    oracle::Kahan acc;
    const double h = 2.0 / static_cast<double>(panels);
    for (long i = 0; i < panels; ++i) {
      const double x = -1.0 + (static_cast<double>(i) + 0.5) * h;
      acc.add(h / std::sqrt((1.0 - x) * (1.0 + x)));
    }
    const double gap = std::abs(acc.sum() - kPi);
    EXPECT_LT(gap, previous_gap / 3.0);
    previous_gap = gap;
  }
  EXPECT_LT(previous_gap, 1e-2);

  // Plain abscissas stop where x rounds onto +-1, losing ~sqrt(2 eps).
  const auto plain = de::integrate_compact(
      [](double x) { return 1.0 / std::sqrt((1.0 - x) * (1.0 + x)); }, -1.0, 1.0);
  EXPECT_NEAR(plain.value, kPi, 1e-7);

  // With the endpoint distance the integrand never sees the rounding.
  const auto exact = de::integrate_compact(
      [](double, double d) { return 1.0 / std::sqrt(d * (2.0 - d)); }, -1.0, 1.0);
  EXPECT_TRUE(exact.converged);
  EXPECT_NEAR(exact.value, kPi, 1e-12);
}

TEST(IntegrateCompact, RejectsEmptyInterval) {
  EXPECT_THROW(de::integrate_compact([](double) { return 1.0; }, 1.0, 1.0),
               std::invalid_argument);
  EXPECT_THROW(de::integrate_compact([](double) { return 1.0; }, 2.0, 1.0),
               std::invalid_argument);
}

TEST(Properties, ConvergenceOrderForExponential) {
  de::QuadratureConfig cfg;
  cfg.target_rel_tol = 1e-300;  // force every level to be computed
  cfg.max_level = 6;
  const auto r = de::integrate_semiinfinite([](double x) { return std::exp(-x); }, 0.0, cfg);
  const double floor = 100 * std::numeric_limits<double>::epsilon();
  double previous = std::abs(r.level_sums.at(0) - 1.0);
  for (std::size_t level = 1; level < r.level_sums.size(); ++level) {
    const double err = std::abs(r.level_sums[level] - 1.0);
    if (previous <= floor) break;
    EXPECT_TRUE(err <= floor || err * 10.0 < previous)
        << "level " << level << " error " << err << " previous " << previous;
    previous = err;
  }
  EXPECT_LE(previous, floor);
}

TEST(Properties, CubicsAreIntegratedExactly) {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
    const auto r = de::integrate_compact(
        [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; }, -1.0, 1.0);
    const double exact = 2.0 * c0 + 2.0 * c2 / 3.0;
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, exact, 1e-12 * std::max(std::abs(exact), 1.0));
  }
}

TEST(Properties, Linearity) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  auto f = [](double x) { return std::exp(-x) * std::cos(x); };
  auto g = [](double x) { return x * x * std::exp(-2.0 * x); };
  const de::QuadratureConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = coef(rng), beta = coef(rng);
    const auto combined = de::integrate_semiinfinite(
        [&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, cfg);
    const auto rf = de::integrate_semiinfinite(f, 0.0, cfg);
    const auto rg = de::integrate_semiinfinite(g, 0.0, cfg);
    const double expected = alpha * rf.value + beta * rg.value;
    EXPECT_NEAR(combined.value, expected,
                10 * cfg.target_rel_tol * std::max(1.0, std::abs(expected)));
  }
}

TEST(Properties, ConvergedMeansWithinTolerance) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> rate(0.1, 5.0);
  de::QuadratureConfig cfg;
  cfg.target_rel_tol = 1e-10;
  for (int trial = 0; trial < 30; ++trial) {
    const double lambda = rate(rng);
    const auto r = de::integrate_semiinfinite(
        [&](double x) { return std::exp(-lambda * x) / (1.0 + x); }, 0.0, cfg);
    if (r.converged) {
      EXPECT_LE(r.error_estimate, cfg.target_rel_tol * std::max(std::abs(r.value), 1.0));
    }
    EXPECT_GE(r.n_evals, 1);
  }
}

}  // namespace
