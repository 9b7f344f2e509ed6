// Microbenchmarks for the exact counting kernels. The incidence counter is
// the production path (O(|A|^3 |B|^2) machine-integer kernel); the brute
// counter is the O(N^3) oracle it is checked against.

#include <benchmark/benchmark.h>

#include "trigrid/energy.hpp"
#include "trigrid/generators.hpp"
#include "trigrid/grid.hpp"

using namespace trigrid;

namespace {

Grid squares_grid(std::size_t m) {
    GeneratorSpec sq;
    sq.kind = GeneratorKind::Squares;
    return Grid(gen_set(sq, m, 1), gen_set(sq, m, 1), Scalar(2));
}

void BM_IncidenceCount(benchmark::State& state) {
    const Grid grid = squares_grid(static_cast<std::size_t>(state.range(0)));
    CountOptions opts;
    opts.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_unit_triangles_incidence(grid, opts));
    }
}
BENCHMARK(BM_IncidenceCount)
    ->Args({8, 1})
    ->Args({16, 1})
    ->Args({24, 1})
    ->Args({32, 1})
    ->Args({32, 8})
    ->Unit(benchmark::kMillisecond);

void BM_BruteForceCount(benchmark::State& state) {
    const Grid grid = squares_grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_unit_triangles_bruteforce(grid));
    }
}
BENCHMARK(BM_BruteForceCount)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ClassifyTriangles(benchmark::State& state) {
    const Grid grid = squares_grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_triangles(grid, 4));
    }
}
BENCHMARK(BM_ClassifyTriangles)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_RichPoints(benchmark::State& state) {
    GeneratorSpec conv;
    conv.kind = GeneratorKind::RandomConvex;
    const GroundSet x = gen_set(conv, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rich_points(x, 4).count);
    }
}
BENCHMARK(BM_RichPoints)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EnergyTuple(benchmark::State& state) {
    GeneratorSpec uni;
    uni.kind = GeneratorKind::UniformRandom;
    const GroundSet a = gen_set(uni, static_cast<std::size_t>(state.range(0)), 5);
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy_k_tuple(a, k).value);
    }
}
BENCHMARK(BM_EnergyTuple)->Args({8, 3})->Args({10, 3})->Args({10, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
