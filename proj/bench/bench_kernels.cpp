// Compares the OpenMP kernels against their serial references. Run with
// --benchmark_time_unit=ms; thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "sfcpart/metrics.hpp"
#include "sfcpart/partition.hpp"

using namespace sfcpart;

namespace {

GridSpec cube_grid(int n) { return GridSpec(n, n, n, 0, 1, 0, 1, 0, 1); }

void BM_KeyCellsSerial(benchmark::State& state) {
    const GridSpec grid = cube_grid(int(state.range(0)));
    const DomainMap map = build_domain_map(grid);
    for (auto _ : state) {
        auto keys = key_cells_serial(grid, map, Method::hilbert, kDefaultLevel);
        benchmark::DoNotOptimize(keys.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.num_cells());
}

void BM_KeyCellsParallel(benchmark::State& state) {
    const GridSpec grid = cube_grid(int(state.range(0)));
    const DomainMap map = build_domain_map(grid);
    for (auto _ : state) {
        auto keys = key_cells(grid, map, Method::hilbert, kDefaultLevel);
        benchmark::DoNotOptimize(keys.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.num_cells());
}

void BM_QualitySerial(benchmark::State& state) {
    const GridSpec grid = cube_grid(int(state.range(0)));
    const DualGraph graph(grid);
    const Partition part = partition_grid(grid, Method::hilbert, 64);
    for (auto _ : state) {
        auto report = compute_quality_serial(part, graph);
        benchmark::DoNotOptimize(report.c_max);
    }
    state.SetItemsProcessed(state.iterations() * grid.num_cells());
}

void BM_QualityParallel(benchmark::State& state) {
    const GridSpec grid = cube_grid(int(state.range(0)));
    const DualGraph graph(grid);
    const Partition part = partition_grid(grid, Method::hilbert, 64);
    for (auto _ : state) {
        auto report = compute_quality(part, graph);
        benchmark::DoNotOptimize(report.c_max);
    }
    state.SetItemsProcessed(state.iterations() * grid.num_cells());
}

void BM_PartitionGrid(benchmark::State& state) {
    const GridSpec grid = cube_grid(int(state.range(0)));
    for (auto _ : state) {
        auto part = partition_grid(grid, Method::hilbert, 64);
        benchmark::DoNotOptimize(part.assignment.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.num_cells());
}

BENCHMARK(BM_KeyCellsSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KeyCellsParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QualitySerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QualityParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartitionGrid)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
