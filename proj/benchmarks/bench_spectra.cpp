#include "orthopara/spectra.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

namespace {

std::string bundled_table()
{
    std::ifstream in(std::string(ORTHOPARA_DATA_DIR) + "/helium_levels.txt");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// A synthetic table with interleaved ortho and para levels.
std::string synthetic_table(int rows)
{
    std::ostringstream text;
    for (int i = 0; i < rows; ++i)
        text << "1s" << (i % 40 + 2) << "f | " << (i % 2 ? "3F*" : "1F*") << " | 3 | " << 20.0 + 1e-7 * i << " eV\n";
    return text.str();
}

void BM_ParseBundled(benchmark::State& state)
{
    const auto text = bundled_table();
    for (auto _ : state)
        benchmark::DoNotOptimize(orthopara::parse_level_table(std::string_view(text)));
}
BENCHMARK(BM_ParseBundled);

void BM_FindDegenerate(benchmark::State& state)
{
    const auto levels = orthopara::parse_level_table(std::string_view(synthetic_table(static_cast<int>(state.range(0)))));
    for (auto _ : state)
        benchmark::DoNotOptimize(orthopara::find_degenerate_pairs(levels, 1e-6));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindDegenerate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

}  // namespace

BENCHMARK_MAIN();
