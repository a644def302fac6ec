#include <benchmark/benchmark.h>

#include <bqf/bqf.hpp>

namespace {

void BM_Legendre(benchmark::State& state) {
    bqf::OddPrime p(state.range(0));
    long lambda = 2;
    for (auto _ : state) benchmark::DoNotOptimize(bqf::legendre(lambda++, p));
}
BENCHMARK(BM_Legendre)->Arg(37)->Arg(9973)->Arg(2147483647);

void BM_LegendreLargePrime(benchmark::State& state) {
    bqf::OddPrime p(bqf::Int("170141183460469231731687303715884105727"));
    long lambda = 2;
    for (auto _ : state) benchmark::DoNotOptimize(bqf::legendre(lambda++, p));
}
BENCHMARK(BM_LegendreLargePrime);

void BM_IsPrime(benchmark::State& state) {
    bqf::Int n("18446744073709551557");
    for (auto _ : state) benchmark::DoNotOptimize(bqf::is_prime(n));
}
BENCHMARK(BM_IsPrime);

}  // namespace
