#include <benchmark/benchmark.h>

#include "netforge/constructions.hpp"
#include "netforge/optimum.hpp"

using namespace netforge;

static void BM_AllPairsDistances(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    UndirectedGraph g = induced_graph(star_profile(n, 0));
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_AllPairsDistances)->Arg(5)->Arg(10)->Arg(16);

static void BM_BestResponse(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CostVector costs(std::vector<double>(n, 1.5));
    StrategyProfile p = star_profile(n, 0);
    for (auto _ : state) benchmark::DoNotOptimize(best_response(p, costs, 1));
}
BENCHMARK(BM_BestResponse)->Arg(5)->Arg(8)->Arg(10);

static void BM_ExactNashCheck(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CostVector costs(std::vector<double>(n, 2.0));
    StrategyProfile p = star_profile(n, 0);
    for (auto _ : state) benchmark::DoNotOptimize(is_nash(p, costs, NashMode::kExact));
}
BENCHMARK(BM_ExactNashCheck)->Arg(4)->Arg(5)->Arg(8);

static void BM_EnumerateNash(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int workers = static_cast<int>(state.range(1));
    std::vector<double> alphas;
    for (int i = 0; i < n; ++i) alphas.push_back(0.5 + 0.5 * i);
    CostVector costs(alphas);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_nash(costs, 5, workers));
}
BENCHMARK(BM_EnumerateNash)->Args({4, 1})->Args({5, 1})->Args({5, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_SocialOptimum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<double> alphas;
    for (int i = 0; i < n; ++i) alphas.push_back(0.5 + 0.5 * i);
    CostVector costs(alphas);
    for (auto _ : state) benchmark::DoNotOptimize(social_optimum(costs));
}
BENCHMARK(BM_SocialOptimum)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
