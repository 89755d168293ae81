#include <benchmark/benchmark.h>

#include "catphase/detection.hpp"
#include "catphase/negativity.hpp"
#include "catphase/optimize.hpp"
#include "catphase/photon_statistics.hpp"
#include "catphase/probe.hpp"
#include "catphase/wigner.hpp"

namespace {

using namespace catphase;

void BM_WignerEval(benchmark::State& state) {
  const WignerCoeffs c = wigner_coeffs(2.0, 0.56, 0.975, 0.68);
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_eval(c, x, 0.4));
    x += 1e-6;
  }
}
BENCHMARK(BM_WignerEval);

void BM_ClosedFormDistribution(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        closed_form_distribution(2.0, 0.56, 0.975, 0.67, n_max));
  }
  state.SetComplexityN(n_max);
}
BENCHMARK(BM_ClosedFormDistribution)->Arg(8)->Arg(16)->Arg(23)->Complexity();

void BM_CombinatorialDistribution(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto spec = ProbeSpec::displaced(2.0, 0.56, 1.0, 0.975, 0.68);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pn_combinatorial(spec, dim, 1e-6));
  }
  state.SetComplexityN(dim);
}
BENCHMARK(BM_CombinatorialDistribution)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_QuadratureDistribution(benchmark::State& state) {
  const WignerCoeffs c = wigner_coeffs(1.5, 0.5, 0.9, 0.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pn_quadrature_all(c, 12));
  }
}
BENCHMARK(BM_QuadratureDistribution);

void BM_NegativityNumeric(benchmark::State& state) {
  const WignerCoeffs c = wigner_coeffs(2.0, 0.5, 0.95, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(negativity_numeric(c));
  }
}
BENCHMARK(BM_NegativityNumeric);

void BM_TotalError(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_error(2.0, 0.975, 0.68, 0.56, 128));
  }
}
BENCHMARK(BM_TotalError);

void BM_OptimizePoint(benchmark::State& state) {
  OptimizeOptions opts;
  opts.delta0_hi = 1.2;
  opts.coarse_delta0 = 13;
  opts.coarse_r = 10;
  opts.refine_starts = 2;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_point(2.0, 0.975, opts));
  }
}
BENCHMARK(BM_OptimizePoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
