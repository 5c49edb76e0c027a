#include "roadcarbon/config.hpp"
#include "roadcarbon/corpus.hpp"
#include "roadcarbon/lca.hpp"

#include <benchmark/benchmark.h>

using namespace roadcarbon;

namespace {

lca::FactorDatabase demo_db()
{
    using quantities::Unit;
    return lca::FactorDatabase::from_rows({
        {"aggregate", "GWP", Unit::cubic_metre, 450.0},
        {"excavation", "GWP", Unit::cubic_metre, 8.0},
        {"imported_fill", "GWP", Unit::cubic_metre, 220.0},
        {"haulage", "GWP", Unit::tonne, 25.0},
        {"concrete", "GWP", Unit::cubic_metre, 300.0},
        {"riprap", "GWP", Unit::tonne, 80.0},
    });
}

void bm_generate_project(benchmark::State& state)
{
    corpus::GeneratorConfig config;
    config.project_count = 1U << 20;
    std::size_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(corpus::generate_project(config, index));
        index = (index + 1) % config.project_count;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(bm_generate_project);

void bm_full_pipeline(benchmark::State& state)
{
    corpus::GeneratorConfig config;
    config.project_count = 1U << 20;
    RunConfig run;
    const auto db = demo_db();
    std::size_t index = 0;
    for (auto _ : state) {
        auto record = corpus::generate_project(config, index);
        benchmark::DoNotOptimize(corpus::run_pipeline(std::move(record), run, db));
        index = (index + 1) % config.project_count;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(bm_full_pipeline);

} // namespace
