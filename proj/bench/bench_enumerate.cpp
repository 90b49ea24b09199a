#include "planram/enumerate.hpp"
#include "planram/ramsey.hpp"

#include <benchmark/benchmark.h>

using namespace planram;

namespace {

EnumerationTask make_task(EnumerationMode mode, int n, int min_degree = 0)
{
    EnumerationTask t;
    t.n = n;
    t.mode = mode;
    t.min_degree = min_degree;
    t.collect = false;
    return t;
}

void c4free_serial(benchmark::State& state)
{
    const EnumerationTask t = make_task(EnumerationMode::c4free_planar, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_c4free_planar_serial(t).count);
}

void c4free_parallel(benchmark::State& state)
{
    EnumerationTask t = make_task(EnumerationMode::c4free_planar, static_cast<int>(state.range(0)));
    t.workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_c4free_planar(t).count);
}

void triangulations_serial(benchmark::State& state)
{
    const EnumerationTask t = make_task(EnumerationMode::triangulation, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_triangulations_serial(t).count);
}

void triangulations_parallel(benchmark::State& state)
{
    EnumerationTask t = make_task(EnumerationMode::triangulation, static_cast<int>(state.range(0)));
    t.workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_triangulations(t).count);
}

void mindeg5_triangulations(benchmark::State& state)
{
    EnumerationTask t = make_task(EnumerationMode::triangulation, static_cast<int>(state.range(0)), 5);
    t.workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_triangulations(t).count);
}

void pr_upper_w7(benchmark::State& state)
{
    VerifyOptions o;
    o.workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_pr_upper(7, 11, o).verdict);
}

} // namespace

BENCHMARK(c4free_serial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(c4free_parallel)->Args({9, 1})->Args({9, 2})->Args({10, 1})->Args({10, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(triangulations_serial)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(triangulations_parallel)->Args({10, 1})->Args({10, 2})->Args({11, 1})->Args({11, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(mindeg5_triangulations)->Args({16, 1})->Args({16, 2})->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(pr_upper_w7)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
