#include <benchmark/benchmark.h>

#include <cmath>

#include "nlgs/linearized.hpp"
#include "nlgs/multiplier.hpp"
#include "nlgs/spectral.hpp"

using namespace nlgs;

static Profile sech_on(int n) {
    return sample(GridSpec(20.0 * M_PI, n), [](double t) { return 1.0 / std::cosh(t); },
                  Parity::even);
}

static void BuildLinearized(benchmark::State& state) {
    const Profile h = sech_on(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        DenseOperator op = build_linearized(ilw_multiplier(), 2.0 / M_PI, 2.0, h, 1.0);
        benchmark::DoNotOptimize(op.matrix.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildLinearized)->RangeMultiplier(2)->Range(128, 1024)->Complexity()->Unit(benchmark::kMillisecond);

static void DenseEigensolve(benchmark::State& state) {
    const Profile h = sech_on(static_cast<int>(state.range(0)));
    const DenseOperator op = build_linearized(ilw_multiplier(), 2.0 / M_PI, 2.0, h, 1.0);
    for (auto _ : state) {
        SpectralReport rep = eigensolve(op, 0.0);
        benchmark::DoNotOptimize(rep.eigenvalues.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(DenseEigensolve)->RangeMultiplier(2)->Range(128, 1024)->Complexity()->Unit(benchmark::kMillisecond);

static void EvenSubspaceGap(benchmark::State& state) {
    const Profile h = sech_on(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        double gap = even_subspace_gap(ilw_multiplier(), 2.0 / M_PI, 2.0, h, 1.0);
        benchmark::DoNotOptimize(gap);
    }
}
BENCHMARK(EvenSubspaceGap)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
