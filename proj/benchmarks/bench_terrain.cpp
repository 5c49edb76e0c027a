#include "roadcarbon/corpus.hpp"
#include "roadcarbon/terrain.hpp"

#include <benchmark/benchmark.h>

using namespace roadcarbon;

namespace {

terrain::TerrainSurface make_surface(std::size_t nx, std::size_t ny)
{
    corpus::ProceduralTerrainSpec spec;
    spec.seed = 99;
    spec.nx = nx;
    spec.ny = ny;
    spec.cell_size_m = 10.0;
    spec.base_grade = 0.01;
    spec.hill_amplitude_m = 10.0;
    spec.hill_wavelength_m = 320.0;
    spec.roughness_amplitude_m = 0.8;
    spec.roughness_wavelength_m = 60.0;
    return corpus::synthesize_terrain(spec);
}

void bm_flow_paths(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto surface = make_surface(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(terrain::flow_paths(surface));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n * n));
}
BENCHMARK(bm_flow_paths)->Arg(64)->Arg(128)->Arg(256);

void bm_cross_sections(benchmark::State& state)
{
    const auto surface = make_surface(320, 9);
    terrain::Alignment road;
    road.width = 4.0;
    for (double x = 30.0; x <= 3000.0; x += 50.0) {
        road.vertices.push_back({x, 40.0});
        road.design_grade.push_back(surface.elevation_at({x, 40.0}) + 0.25);
    }
    for (auto _ : state) {
        const auto samples = terrain::sample_alignment(road, 10.0);
        std::vector<terrain::CrossSection> sections;
        sections.reserve(samples.size());
        for (const auto& sample : samples) {
            sections.push_back(terrain::cross_section(surface, road, sample.station, 2.0));
        }
        benchmark::DoNotOptimize(terrain::cut_fill_volumes(sections));
    }
}
BENCHMARK(bm_cross_sections);

void bm_cap_grades(benchmark::State& state)
{
    const auto surface = make_surface(320, 9);
    terrain::Alignment road;
    road.width = 4.0;
    for (double x = 30.0; x <= 3000.0; x += 50.0) {
        road.vertices.push_back({x, 40.0});
        road.design_grade.push_back(surface.elevation_at({x, 40.0}) + 0.25);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(terrain::cap_grades(road, 0.08));
    }
}
BENCHMARK(bm_cap_grades);

} // namespace
