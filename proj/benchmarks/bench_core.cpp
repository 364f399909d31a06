#include <benchmark/benchmark.h>

#include "mpns/fft.hpp"
#include "mpns/generators.hpp"
#include "mpns/norms.hpp"
#include "mpns/operators.hpp"
#include "mpns/solver.hpp"

using namespace mpns;

static void BM_TransformRoundTrip(benchmark::State& state) {
    const Grid g(static_cast<int>(state.range(0)));
    const ScalarField f =
        to_real(random_band_limited_scalar(g, 1, 2.0, dealias_limit(g.n, 2.0 / 3.0)));
    for (auto _ : state) {
        ScalarField back = to_real(to_spectral(f));
        benchmark::DoNotOptimize(back);
    }
    state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_TransformRoundTrip)->Arg(32)->Arg(64);

static void BM_Advection(benchmark::State& state) {
    const Grid g(static_cast<int>(state.range(0)));
    const int limit = dealias_limit(g.n, 2.0 / 3.0);
    const VectorField u = random_vector_field(g, 2, 2.0, limit, true, 1.0);
    for (auto _ : state) {
        VectorField adv = nonlinear_advection(u, u, limit);
        benchmark::DoNotOptimize(adv);
    }
}
BENCHMARK(BM_Advection)->Arg(32)->Arg(64);

static void BM_SolverStep(benchmark::State& state) {
    SolverConfig cfg;
    cfg.grid = Grid(static_cast<int>(state.range(0)));
    cfg.dt = 1e-3;
    GeneratorSpec tg;
    const State s0 = generate_initial(tg, cfg.grid, 0);
    for (auto _ : state) {
        State s1 = step(s0, cfg, cfg.dt);
        benchmark::DoNotOptimize(s1);
    }
}
BENCHMARK(BM_SolverStep)->Arg(32)->Arg(64);

static void BM_MorreyNorm(benchmark::State& state) {
    const Grid g(static_cast<int>(state.range(0)));
    const ScalarField f =
        to_real(random_band_limited_scalar(g, 3, 2.0, dealias_limit(g.n, 2.0 / 3.0)));
    for (auto _ : state) {
        const double v = morrey_norm(f, 2.0, 6.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_MorreyNorm)->Arg(16)->Arg(32);

static void BM_BesovNorm(benchmark::State& state) {
    const Grid g(static_cast<int>(state.range(0)));
    const ScalarField f = random_band_limited_scalar(g, 4, 2.0, dealias_limit(g.n, 2.0 / 3.0));
    for (auto _ : state) {
        const double v = besov_b21r_norm(f, 0.5);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_BesovNorm)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
