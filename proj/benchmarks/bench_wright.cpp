#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "wrightfn/dequad.hpp"
#include "wrightfn/wright.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBesselZero = 2.404825557695773;

void BM_Wright(benchmark::State& state, double a, double b, double z) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrightfn::wright(a, b, z).value);
  }
}

BENCHMARK_CAPTURE(BM_Wright, erf_shift, -0.5, 1.0, 2.0);
BENCHMARK_CAPTURE(BM_Wright, gaussian, -0.5, 0.5, 0.5);
BENCHMARK_CAPTURE(BM_Wright, gaussian_second_derivative, -0.5, -0.5, 1.5);
BENCHMARK_CAPTURE(BM_Wright, airy, -1.0 / 3.0, 2.0 / 3.0, 0.5);
BENCHMARK_CAPTURE(BM_Wright, sine, 1.0, 1.5, -kPi * kPi);
BENCHMARK_CAPTURE(BM_Wright, bessel_j0_zero, 1.0, 1.0, -kBesselZero * kBesselZero / 4.0);

void BM_Wright_LargeArgument(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrightfn::wright(0.5, 1.5, z).value);
  }
}
BENCHMARK(BM_Wright_LargeArgument)->Arg(1)->Arg(10)->Arg(100)->Arg(-100);

void BM_SemiInfinite(benchmark::State& state) {
  wrightfn::de::QuadratureConfig config;
  config.target_rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    const auto r = wrightfn::de::integrate_semiinfinite(
        [](double x) { return std::exp(-x) * std::cos(x); }, 0.0, config);
    benchmark::DoNotOptimize(r.value);
    state.counters["evals"] = r.n_evals;
  }
}
BENCHMARK(BM_SemiInfinite)->Arg(6)->Arg(10)->Arg(12);

void BM_Compact(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = wrightfn::de::integrate_compact(
        [](double phi) { return std::exp(std::cos(phi)) * std::cos(2.0 * phi); }, 0.0, kPi);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_Compact);

void BM_GenerateNodes(benchmark::State& state) {
  const wrightfn::de::QuadratureConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrightfn::de::generate_nodes(
        wrightfn::de::TransformKind::SemiInfinite, static_cast<int>(state.range(0)), config));
  }
}
BENCHMARK(BM_GenerateNodes)->DenseRange(0, 6, 2);

}  // namespace
BENCHMARK_MAIN();
