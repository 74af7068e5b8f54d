#include <benchmark/benchmark.h>

#include "apriori/besov.hpp"
#include "apriori/estimates.hpp"
#include "apriori/norms.hpp"
#include "apriori/ops.hpp"
#include "apriori/random_fields.hpp"
#include "apriori/solver.hpp"

using namespace apriori;

static void BM_FftRoundtrip(benchmark::State& state) {
    Grid grid(2, static_cast<int>(state.range(0)));
    SpectralField f = random_band_limited(grid, grid.n() / 6, 2.0, 7);
    for (auto _ : state) {
        auto samples = f.to_real(0);
        auto g = SpectralField::from_real_scalar(grid, samples);
        benchmark::DoNotOptimize(g.coef(0).data());
    }
}
BENCHMARK(BM_FftRoundtrip)->Arg(128)->Arg(256);

static void BM_QgRhs(benchmark::State& state) {
    Grid grid(2, static_cast<int>(state.range(0)));
    SpectralField theta = random_band_limited(grid, grid.n() / 6, 2.0, 7);
    theta.make_zero_mean();
    for (auto _ : state) {
        SpectralField r = rhs_qg(theta, 0.0, 2.0);
        benchmark::DoNotOptimize(r.coef(0).data());
    }
}
BENCHMARK(BM_QgRhs)->Arg(128)->Arg(256);

static void BM_BesovNorm(benchmark::State& state) {
    Grid grid(2, static_cast<int>(state.range(0)));
    BesovPartition partition = BesovPartition::for_grid(grid);
    SpectralField theta = random_band_limited(grid, grid.n() / 6, 2.0, 7);
    theta.make_zero_mean();
    for (auto _ : state) benchmark::DoNotOptimize(besov_b0inf1(theta, partition));
}
BENCHMARK(BM_BesovNorm)->Arg(128)->Arg(256);

static void BM_SobolevNorm(benchmark::State& state) {
    Grid grid(2, static_cast<int>(state.range(0)));
    SpectralField theta = random_band_limited(grid, grid.n() / 6, 2.0, 7);
    for (auto _ : state) benchmark::DoNotOptimize(homogeneous_sobolev(theta, 3, 2.0));
}
BENCHMARK(BM_SobolevNorm)->Arg(128)->Arg(256);

static void BM_CheckMain(benchmark::State& state) {
    NormSeries series;
    series.columns = {"t", "l2", "dkl_3_2", "grad_linf"};
    for (int i = 0; i <= 4096; ++i)
        series.append({i / 4096.0, 1.0, 2.0 + 0.1 * std::sin(i * 0.01), 1.0});
    EstimateParams params;
    params.theorem = Theorem::T11i;
    params.k = 3;
    params.C0 = 1.0;
    params.gamma = 2.0;
    for (auto _ : state) {
        MarginSeries m = check_main(series, params);
        benchmark::DoNotOptimize(m.min_margin);
    }
}
BENCHMARK(BM_CheckMain);

BENCHMARK_MAIN();
