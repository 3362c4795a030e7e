#include "orthopara/constants.hpp"
#include "orthopara/dynamics.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace orthopara;

const BeatModel demo = BeatModel::with_omega(amplitudes_from_weights(0.5), 2.0, 10.0, 2 * constants::pi * 1e3);

void BM_AveragedRate(benchmark::State& state)
{
    double T = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(averaged_rate(demo, T));
        T += 1e-9;
    }
}
BENCHMARK(BM_AveragedRate);

void BM_BeatGrid(benchmark::State& state)
{
    std::vector<double> grid(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = 1e-5 * static_cast<double>(i);
    const auto workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(beat_signal(demo, grid, workers));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BeatGrid)->Args({2001, 1})->Args({1 << 20, 1})->Args({1 << 20, 4});

}  // namespace

BENCHMARK_MAIN();
