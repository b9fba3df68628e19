#include <benchmark/benchmark.h>

#include "taitmap/catalog.hpp"
#include "taitmap/laurent.hpp"
#include "taitmap/reduction.hpp"
#include "taitmap/su3.hpp"
#include "taitmap/tait.hpp"

using namespace taitmap;

namespace {

// Even prisms are bipartite, so all three evaluators apply.
void BM_CountTait(benchmark::State& state) {
  const auto g = catalog::prism(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_tait(g));
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_CountTait)->DenseRange(4, 16, 4);

void BM_CountTaitDodecahedron(benchmark::State& state) {
  const auto g = catalog::dodecahedron();
  for (auto _ : state) benchmark::DoNotOptimize(count_tait(g));
}
BENCHMARK(BM_CountTaitDodecahedron);

void BM_Euler(benchmark::State& state) {
  const auto g = catalog::prism(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(euler_characteristic(g));
}
BENCHMARK(BM_Euler)->DenseRange(4, 16, 4);

void BM_P3(benchmark::State& state) {
  const auto g = catalog::prism(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p3(g));
}
BENCHMARK(BM_P3)->DenseRange(4, 16, 4);

void BM_EulerRandomBipartite(benchmark::State& state) {
  const auto g = catalog::random_planar_cubic(7, static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(euler_characteristic(g));
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_EulerRandomBipartite)->Arg(24)->Arg(36)->Arg(48);

void BM_Lemma5(benchmark::State& state) {
  su3::Rng rng(1);
  for (auto _ : state) {
    const su3::UnitaryMatrix3 frame = su3::random_su3(rng);
    const auto r = su3::check_lemma5(su3::reflection_from_line(frame.col(0)), su3::reflection_from_line(frame.col(1)));
    benchmark::DoNotOptimize(r.max_deviation);
  }
}
BENCHMARK(BM_Lemma5);

void BM_SampleDecoration(benchmark::State& state) {
  const auto g = state.range(0) == 0 ? catalog::cube() : catalog::dodecahedron();
  su3::SampleOptions options;
  options.max_retries = 100000;
  for (auto _ : state) {
    ++options.seed;
    benchmark::DoNotOptimize(su3::sample_admissible_decoration(g, options).attempts);
  }
  state.SetLabel(state.range(0) == 0 ? "cube" : "dodecahedron");
}
BENCHMARK(BM_SampleDecoration)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
