#include "netgof/estimators.hpp"
#include "netgof/gof.hpp"
#include "netgof/linalg.hpp"
#include "netgof/models.hpp"

#include <benchmark/benchmark.h>

namespace {

netgof::AdjacencyMatrix planted_graph(int n, std::uint64_t seed) {
    netgof::SeededStream stream(seed, 0);
    netgof::PresetParams params;
    params.rho = 0.05;
    params.k = 3;
    const auto model = netgof::make_preset(netgof::Preset::SbmPlanted, n, params, stream);
    return netgof::sample_adjacency(netgof::build_probability_matrix(model), stream);
}

void BM_TraceCubed(benchmark::State& state) {
    const auto a = planted_graph(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(netgof::trace_cubed(a.dense()));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceCubed)->RangeMultiplier(2)->Range(100, 800)->Complexity(benchmark::oNCubed);

void BM_SymEigs(benchmark::State& state) {
    const auto a = planted_graph(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(netgof::sym_eigs(a.dense(), 3));
}
BENCHMARK(BM_SymEigs)->Arg(200)->Arg(400);

void BM_FitSbm(benchmark::State& state) {
    const auto a = planted_graph(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        netgof::SeededStream stream(7, 0);
        benchmark::DoNotOptimize(netgof::fit_sbm(a, 3, stream));
    }
}
BENCHMARK(BM_FitSbm)->Arg(200)->Arg(400);

void BM_FitBeta(benchmark::State& state) {
    const auto a = planted_graph(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(netgof::fit_beta(a));
}
BENCHMARK(BM_FitBeta)->Arg(400);

void BM_GofTestEr(benchmark::State& state) {
    const auto a = planted_graph(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        netgof::SeededStream stream(7, 0);
        benchmark::DoNotOptimize(netgof::gof_test(a, netgof::candidate::ErdosRenyi{}, 0.05, stream));
    }
}
BENCHMARK(BM_GofTestEr)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
