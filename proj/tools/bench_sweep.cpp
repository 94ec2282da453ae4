#include <benchmark/benchmark.h>

#include "cassini/sweep.hpp"

namespace {

using namespace cassini;

std::vector<SweepCell> grid(int n) { return make_cells({2, n, 2, n, 0, 2}); }

void BM_sweep_serial(benchmark::State& state) {
    const auto cells = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rows = sweep_serial(cells, Init::tilde);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cells.size()));
}

void BM_sweep_parallel(benchmark::State& state) {
    const auto cells = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rows = sweep_parallel(cells, Init::tilde);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cells.size()));
}

}  // namespace

BENCHMARK(BM_sweep_serial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
