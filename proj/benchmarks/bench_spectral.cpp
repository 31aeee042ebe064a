#include <benchmark/benchmark.h>

#include <cmath>

#include "nlgs/multiplier.hpp"
#include "nlgs/spectral.hpp"

using namespace nlgs;

static Profile sech_on(int n) {
    return sample(GridSpec(20.0 * M_PI, n), [](double t) { return 1.0 / std::cosh(t); },
                  Parity::even);
}

static void ApplyMultiplier(benchmark::State& state) {
    const Profile h = sech_on(static_cast<int>(state.range(0)));
    const FourierMultiplier m = ilw_multiplier();
    for (auto _ : state) {
        Profile out = apply_multiplier(m, h);
        benchmark::DoNotOptimize(out.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ApplyMultiplier)->RangeMultiplier(2)->Range(256, 8192)->Complexity();

static void QuadraticForm(benchmark::State& state) {
    const Profile h = sech_on(static_cast<int>(state.range(0)));
    const FourierMultiplier m = ilw_multiplier();
    for (auto _ : state) {
        double v = quadratic_form(m, h);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(QuadraticForm)->RangeMultiplier(2)->Range(256, 8192);

static void NonlinearPowerDealiased(benchmark::State& state) {
    const Profile h = sech_on(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Profile out = nonlinear_power(h, 1.0);
        benchmark::DoNotOptimize(out.values.data());
    }
}
BENCHMARK(NonlinearPowerDealiased)->RangeMultiplier(2)->Range(256, 8192);

BENCHMARK_MAIN();
