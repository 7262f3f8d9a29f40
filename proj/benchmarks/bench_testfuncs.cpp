#include <benchmark/benchmark.h>

#include "holospec/testfuncs.hpp"
#include "holospec/trace_formula.hpp"

namespace {

using namespace holospec;

void bm_psi_eval(benchmark::State& state) {
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_eval(x));
    x += 1e-4;
    if (x > 1.0) x = -1.0;
  }
}
BENCHMARK(bm_psi_eval);

void bm_psi_cdf(benchmark::State& state) {
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_cdf(x));
    x += 1e-4;
    if (x > 1.0) x = -1.0;
  }
}
BENCHMARK(bm_psi_cdf);

void bm_plateau_eval(benchmark::State& state) {
  const CutoffDescriptor g = make_g_y_eta(2.0, 0.4);
  double x = -2.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff_eval(g, x));
    x += 1e-4;
    if (x > 2.5) x = -2.5;
  }
}
BENCHMARK(bm_plateau_eval);

void bm_fourier_plateau(benchmark::State& state) {
  const CutoffDescriptor g = make_g_y_eta(2.0, 0.4);
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff_fourier(g, Complex(xi, 0.2)));
    xi += 0.01;
    if (xi > 3.0) xi = 0.1;
  }
}
BENCHMARK(bm_fourier_plateau);

void bm_fourier_tilted(benchmark::State& state) {
  const CutoffDescriptor g = make_g_lambda(2.0, 0.4, 0.5);
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff_fourier(g, Complex(xi, 0.0)));
    xi += 0.01;
    if (xi > 3.0) xi = 0.1;
  }
}
BENCHMARK(bm_fourier_tilted);

void bm_orbital_transform(benchmark::State& state) {
  const CutoffDescriptor g = make_g_y_eta(2.0, 0.4);
  const Complex nu(0.0, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(abel_transform(g, TrigKind::Cos, 2, nu, 2));
  }
}
BENCHMARK(bm_orbital_transform);

}  // namespace

BENCHMARK_MAIN();
