#include <benchmark/benchmark.h>

#include <random>

#include "sbpbox/eigen.hpp"
#include "sbpbox/well.hpp"

namespace {

sbpbox::RealMatrix random_symmetric(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    sbpbox::RealMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            a(i, j) = u(rng);
            a(j, i) = a(i, j);
        }
    return a;
}

void BM_JacobiRandom(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const sbpbox::RealMatrix a = random_symmetric(n, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbpbox::symmetric_eigensolve(a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiRandom)->Arg(32)->Arg(64)->Arg(128)->Complexity();

void BM_SolveWell(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const sbpbox::Grid grid(0.0, 1.0, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbpbox::solve_well(grid, sbpbox::PotentialSpec{}));
    }
}
BENCHMARK(BM_SolveWell)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
