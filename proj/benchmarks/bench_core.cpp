#include <benchmark/benchmark.h>

#include "zfx/decompose.hpp"
#include "zfx/enumerate.hpp"
#include "zfx/extremal.hpp"
#include "zfx/forcing.hpp"

using namespace zfx;

static void BM_Closure(benchmark::State& state) {
    const Graph g = make_path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(closure_mask(g, bit(0) | bit(1)));
}
BENCHMARK(BM_Closure)->Arg(8)->Arg(32)->Arg(64);

static void BM_Profile(benchmark::State& state) {
    const Graph g = make_path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zf_profile(g));
}
BENCHMARK(BM_Profile)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

static void BM_DecomposeCyclePendants(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> attach;
    for (int v = 0; v < n; ++v) attach.push_back(v);
    const Graph g = attach_pendants(make_cycle(n), attach);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_DecomposeCyclePendants)->Arg(5)->Arg(8)->Arg(11)->Unit(benchmark::kMicrosecond);

static void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n, false).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
