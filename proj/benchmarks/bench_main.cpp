#include <benchmark/benchmark.h>

#include <vector>

#include "sincstab/bounds.hpp"
#include "sincstab/framekit.hpp"
#include "sincstab/reconstruct.hpp"
#include "sincstab/specfun.hpp"

namespace {

void BM_RiemannZeta(benchmark::State& state) {
  double s = 1.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sincstab::riemann_zeta(s));
    s = s < 40.0 ? s + 0.37 : 1.2;
  }
}
BENCHMARK(BM_RiemannZeta);

void BM_LambertWm1(benchmark::State& state) {
  double x = -0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sincstab::lambert_wm1(x).value);
    x = x < -1e-6 ? x * 0.9 : -0.3;
  }
}
BENCHMARK(BM_LambertWm1);

void BM_TableLambda(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sincstab::table_lambda(0.44366, 1.0).lambda_value);
}
BENCHMARK(BM_TableLambda);

void BM_CriticalA(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sincstab::critical_A(1.0));
}
BENCHMARK(BM_CriticalA)->Unit(benchmark::kMillisecond);

void BM_PerturbationNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = sincstab::power_law_grid(0.2, 1.0, n);
  const auto window = sincstab::window_with_radius(grid, 2 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sincstab::perturbation_norm(grid, window).perturbation_norm);
  }
}
BENCHMARK(BM_PerturbationNorm)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_RieszBounds(benchmark::State& state) {
  const auto grid = sincstab::ingham_grid(static_cast<int>(state.range(0)));
  const auto window = sincstab::default_window(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sincstab::riesz_bounds_estimate(grid, window).min_eigenvalue);
  }
}
BENCHMARK(BM_RieszBounds)->Arg(64)->Arg(256)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_SolveCoefficients(benchmark::State& state) {
  const auto grid = sincstab::power_law_grid(0.2, 1.0, static_cast<int>(state.range(0)), true);
  const auto samples = sincstab::sample_signal(sincstab::BandlimitedSignal::translate(0.3), grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sincstab::solve_coefficients(samples, grid).residual_norm);
  }
}
BENCHMARK(BM_SolveCoefficients)->Arg(50)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
