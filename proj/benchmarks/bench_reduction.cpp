#include <benchmark/benchmark.h>

#include <bqf/bqf.hpp>

#include <random>
#include <vector>

namespace {

std::vector<bqf::QuadraticForm> random_forms(long bound, std::size_t count) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> pos(1, bound), any(-bound, bound);
    std::vector<bqf::QuadraticForm> forms;
    while (forms.size() < count) {
        bqf::QuadraticForm f{pos(rng), any(rng), pos(rng)};
        if (bqf::is_positive_definite(f)) forms.push_back(f);
    }
    return forms;
}

void BM_Reduce(benchmark::State& state) {
    auto forms = random_forms(state.range(0), 1024);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(bqf::reduce(forms[i++ % forms.size()]));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(100)->Range(100, 100000000);

void BM_EquivalentExtended(benchmark::State& state) {
    auto forms = random_forms(1000, 1024);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& f = forms[i++ % forms.size()];
        benchmark::DoNotOptimize(bqf::equivalent(f, bqf::mirror(f), bqf::EquivalenceMode::extended));
    }
}
BENCHMARK(BM_EquivalentExtended);

void BM_ElementToWord(benchmark::State& state) {
    // Consecutive Fibonacci numbers: the longest descent for their size.
    bqf::GroupElement g(bqf::Int("1134903170"), bqf::Int("701408733"), bqf::Int("701408733"), bqf::Int("433494437"));
    for (auto _ : state) benchmark::DoNotOptimize(bqf::element_to_word(g));
}
BENCHMARK(BM_ElementToWord);

}  // namespace
