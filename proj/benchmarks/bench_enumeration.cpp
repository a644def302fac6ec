#include <benchmark/benchmark.h>

#include <bqf/bqf.hpp>

namespace {

void BM_EnumerateReduced(benchmark::State& state) {
    bqf::DiscriminantQuery q(-state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bqf::enumerate_reduced(q));
}
BENCHMARK(BM_EnumerateReduced)->Arg(23)->Arg(4004)->Arg(400004);

void BM_ClassNumber(benchmark::State& state) {
    for (auto _ : state) {
        std::size_t total = 0;
        for (long d = 3; d <= state.range(0); ++d)
            if (d % 4 == 0 || d % 4 == 3) total += bqf::class_number(bqf::DiscriminantQuery(-d));
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ClassNumber)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
