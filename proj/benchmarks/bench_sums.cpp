#include <benchmark/benchmark.h>

#include <cmath>

#include "holospec/spectrum.hpp"
#include "holospec/sums.hpp"
#include "holospec/testfuncs.hpp"

namespace {

using namespace holospec;

SpectrumTable synthetic_table(int n) {
  // golden-angle holonomies over an arithmetic length ladder
  const double step = 2.0 * M_PI * (1.0 - 1.0 / 1.6180339887498949);
  SpectrumTable t;
  t.classes.reserve(n);
  for (int i = 0; i < n; ++i) {
    GeodesicClass c;
    c.length = 0.5 + 0.004 * double(i);
    double th = std::fmod(double(i + 1) * step, 2.0 * M_PI);
    if (th > M_PI) th -= 2.0 * M_PI;
    c.holonomy = th;
    c.multiplicity = 1;
    c.primitive = true;
    c.root_length = c.length;
    c.power_index = 1;
    t.classes.push_back(c);
  }
  t.systole = t.classes.front().length;
  t.horizon = t.classes.back().length + 0.25;
  t.complete = true;
  return t;
}

void bm_weighted_sum_sharp(benchmark::State& state) {
  const SpectrumTable t = synthetic_table(int(state.range(0)));
  SumSpec spec;
  spec.weight_mode = WeightMode::TraceWeight;
  spec.class_filter = ClassFilter::All;
  spec.length_window = sharp_window(0.0, t.horizon);
  spec.holonomy_mode = HolonomyMode::ExpIN;
  spec.n = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_sum(t, spec, int(state.range(1))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_weighted_sum_sharp)
    ->Args({10000, 1})
    ->Args({10000, 4})
    ->Args({200000, 1})
    ->Args({200000, 4});

void bm_weighted_sum_smooth(benchmark::State& state) {
  const SpectrumTable t = synthetic_table(int(state.range(0)));
  SumSpec spec;
  spec.weight_mode = WeightMode::ExpWeight;
  spec.class_filter = ClassFilter::PrimitiveOnly;
  spec.length_window = smooth_window(make_g_y_eta(t.horizon * 0.6, 0.5));
  spec.holonomy_mode = HolonomyMode::CosN;
  spec.n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_sum(t, spec, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_weighted_sum_smooth)->Arg(10000)->Arg(200000);

void bm_ambient_count(benchmark::State& state) {
  const SpectrumTable t = synthetic_table(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ambient_count(t, 1.0, t.horizon - 1.0, -1.0, 2.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_ambient_count)->Arg(10000)->Arg(200000);

}  // namespace

BENCHMARK_MAIN();
