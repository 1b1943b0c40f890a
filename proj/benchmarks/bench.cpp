#include "k3z3/codes.hpp"
#include "k3z3/niemeier.hpp"
#include "k3z3/orbifold.hpp"

#include <benchmark/benchmark.h>

using namespace k3z3;

static void BM_ShortVectorsPDual(benchmark::State& state) {
    Lattice pd = orbifold::build_P_dual();
    for (auto _ : state) {
        auto sv = short_vectors(pd, Rat(2));
        benchmark::DoNotOptimize(sv.size());
    }
}
BENCHMARK(BM_ShortVectorsPDual)->Unit(benchmark::kMillisecond);

static void BM_NiemeierRootCensus(benchmark::State& state) {
    Lattice n = niemeier::build_N();
    for (auto _ : state) {
        auto sv = short_vectors(n, Rat(2));
        benchmark::DoNotOptimize(sv.size());
    }
}
BENCHMARK(BM_NiemeierRootCensus)->Unit(benchmark::kMillisecond);

static void BM_C24Census(benchmark::State& state) {
    for (auto _ : state) {
        auto c = codes::build_C24();
        auto census = c.weight_census();
        benchmark::DoNotOptimize(census[8]);
    }
}
BENCHMARK(BM_C24Census)->Unit(benchmark::kMillisecond);

static void BM_MOGMembership(benchmark::State& state) {
    auto c = codes::build_C24();
    std::uint32_t w = 0;
    for (auto _ : state) {
        w = (w * 2654435761u + 12345u) & 0xFFFFFF;
        benchmark::DoNotOptimize(codes::mog_membership(w));
    }
}
BENCHMARK(BM_MOGMembership);

BENCHMARK_MAIN();
