#include <benchmark/benchmark.h>

#include <bqf/bqf.hpp>

namespace {

void BM_OrbitExplore(benchmark::State& state) {
    auto alpha = bqf::make_element(1, 2, 5);
    auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bqf::orbit_explore(alpha, depth));
}
BENCHMARK(BM_OrbitExplore)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_SameOrbitFormCheck(benchmark::State& state) {
    auto alpha = bqf::make_element(1, 2, 5);
    auto beta = bqf::make_element(3, 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(bqf::same_orbit_form_check(alpha, beta, 8));
}
BENCHMARK(BM_SameOrbitFormCheck)->Unit(benchmark::kMicrosecond);

}  // namespace
