#include <benchmark/benchmark.h>

#include <cmath>

#include "nlgs/multiplier.hpp"
#include "nlgs/solver.hpp"
#include "nlgs/spectral.hpp"

using namespace nlgs;

static void PetviashviliIlw(benchmark::State& state) {
    const GridSpec g(20.0 * M_PI, static_cast<int>(state.range(0)));
    const Profile init = sample(g, [](double t) { return std::exp(-t * t); });
    for (auto _ : state) {
        SolveResult r = petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, init);
        benchmark::DoNotOptimize(r.residual_sup);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PetviashviliIlw)->RangeMultiplier(2)->Range(256, 2048)->Complexity()->Unit(benchmark::kMillisecond);

static void ResidualEvaluation(benchmark::State& state) {
    const GridSpec g(20.0 * M_PI, static_cast<int>(state.range(0)));
    const Profile h = sample(g, [](double t) { return 1.0 / std::cosh(t); }, Parity::even);
    for (auto _ : state) {
        double r = residual_sup_norm(ilw_multiplier(), 2.0 / M_PI, 1.0, h);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(ResidualEvaluation)->RangeMultiplier(2)->Range(256, 8192);

BENCHMARK_MAIN();
