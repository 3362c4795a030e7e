#include "orthopara/counting.hpp"
#include "orthopara/discrimination.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace orthopara;

const CountModel desk{amplitudes_from_weights(0.5), 2.0, 10.0, 1.0};

void BM_PoissonPmf(benchmark::State& state)
{
    const auto n_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(poisson_pmf(6.0, 1.0, n_max));
}
BENCHMARK(BM_PoissonPmf)->Arg(50)->Arg(500);

void BM_Decompose(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_superposition_pmf(desk));
}
BENCHMARK(BM_Decompose);

void BM_MixtureLiteral(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(mixture_pmf(desk, MixtureVariant::WeightedConvolution));
}
BENCHMARK(BM_MixtureLiteral);

void BM_Sample(benchmark::State& state)
{
    const auto windows = static_cast<std::size_t>(state.range(0));
    const auto workers = static_cast<unsigned>(state.range(1));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_counts(desk, windows, Hypothesis::Mixture, seed++, workers));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Args({10000, 1})->Args({1000000, 1})->Args({1000000, 4});

void BM_Discriminate(benchmark::State& state)
{
    const auto sample = sample_counts(desk, 10000, Hypothesis::Superposition, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(discriminate(sample, desk));
}
BENCHMARK(BM_Discriminate);

}  // namespace

BENCHMARK_MAIN();
