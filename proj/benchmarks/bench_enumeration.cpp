#include <benchmark/benchmark.h>

#include "holospec/algebra.hpp"
#include "holospec/enumeration.hpp"

namespace {

using namespace holospec;

GroupPresentation sanov_pair() {
  GroupPresentation p;
  p.generators.push_back(
      canonicalize(Mat2{Complex(1.0), Complex(2.0), Complex(0.0),
                        Complex(1.0)},
                   kDefaultTol, "a"));
  p.generators.push_back(
      canonicalize(Mat2{Complex(1.0), Complex(0.0), Complex(2.0),
                        Complex(1.0)},
                   kDefaultTol, "b"));
  p.name = "sanov";
  return p;
}

void bm_ball_enumerate(benchmark::State& state) {
  const GroupPresentation p = sanov_pair();
  const int radius = int(state.range(0));
  for (auto _ : state) {
    BallStats stats;
    benchmark::DoNotOptimize(
        ball_enumerate(p, radius, kDefaultTol, 10'000'000, &stats));
  }
}
BENCHMARK(bm_ball_enumerate)->Arg(4)->Arg(6)->Arg(8);

void bm_build_spectrum(benchmark::State& state) {
  const GroupPresentation p = sanov_pair();
  const auto ball = ball_enumerate(p, int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_spectrum(ball, 12.0));
  }
}
BENCHMARK(bm_build_spectrum)->Arg(4)->Arg(6);

void bm_canonicalize(benchmark::State& state) {
  const Mat2 m{Complex(3.1, 0.2), Complex(1.0, -0.4), Complex(2.0, 0.1),
               Complex(1.0, 0.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(m));
  }
}
BENCHMARK(bm_canonicalize);

}  // namespace

BENCHMARK_MAIN();
