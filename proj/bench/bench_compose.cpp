// Serial reference vs OpenMP kernels for the four matrix compositions.

#include "fuzzy/algebra.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

fuzzy::Matrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    fuzzy::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

template <fuzzy::Matrix (*Kernel)(const fuzzy::Matrix&, const fuzzy::Matrix&)>
void run(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const fuzzy::Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
    state.SetComplexityN(state.range(0));
}

}  // namespace

#define FUZZY_BENCH(name)                                                            \
    BENCHMARK(run<fuzzy::serial::name>)->Name("serial/" #name)->RangeMultiplier(2)->Range(32, 256);     \
    BENCHMARK(run<fuzzy::parallel::name>)->Name("parallel/" #name)->RangeMultiplier(2)->Range(32, 256);

FUZZY_BENCH(compose_max_min)
FUZZY_BENCH(compose_min_max)
FUZZY_BENCH(compose_max_product)
FUZZY_BENCH(multiply)

BENCHMARK_MAIN();
