#include <benchmark/benchmark.h>

#include "sbpbox/momentum.hpp"
#include "sbpbox/observables.hpp"

namespace {

void BM_ApplyDerivative(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const sbpbox::SbpOperator op = sbpbox::build_sbp21(sbpbox::Grid(0.0, 1.0, n));
    sbpbox::ComplexVector psi(n, sbpbox::Complex(0.5, -0.25));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbpbox::apply_derivative(op, psi));
    }
}
BENCHMARK(BM_ApplyDerivative)->Arg(256)->Arg(1024)->Arg(4096);

void BM_AnalyticEigenvector(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const sbpbox::Grid grid(0.0, 1.0, n);
    const int l = static_cast<int>(n) / 2 - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbpbox::analytic_eigenvector(grid, l));
    }
}
BENCHMARK(BM_AnalyticEigenvector)->Arg(64)->Arg(256)->Arg(1024);

void BM_Moment(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const sbpbox::Grid grid(0.0, 1.0, n);
    const sbpbox::MomentumOperator op = sbpbox::make_momentum(grid);
    const sbpbox::MomentumEigenpair pair =
        sbpbox::analytic_eigenvector(grid, static_cast<int>(n) / 2 - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbpbox::moment(op, pair.vector, 4));
    }
}
BENCHMARK(BM_Moment)->Arg(256)->Arg(1024);

} // namespace
