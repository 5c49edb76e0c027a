#pragma once

#include "roadcarbon/analysis.hpp"
#include "roadcarbon/hydrology.hpp"
#include "roadcarbon/lca.hpp"
#include "roadcarbon/pavement.hpp"
#include "roadcarbon/quantities.hpp"
#include "roadcarbon/stats.hpp"
#include "roadcarbon/terrain.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace roadcarbon {
struct RunConfig;
}

namespace roadcarbon::corpus {

/// Parameters of a reproducible synthetic surface: a tilted plane plus
/// long-wavelength hills plus short-wavelength roughness, both from seeded
/// value noise.
struct ProceduralTerrainSpec {
    std::uint64_t seed = 0;
    std::size_t nx = 64;
    std::size_t ny = 9;
    double cell_size_m = 10.0;
    double origin_x = 0.0;
    double origin_y = 0.0;
    double base_grade = 0.0;
    double hill_amplitude_m = 0.0;
    double hill_wavelength_m = 400.0;
    double roughness_amplitude_m = 0.5;
    double roughness_wavelength_m = 60.0;
};

terrain::TerrainSurface synthesize_terrain(const ProceduralTerrainSpec& spec);

/// Either a procedural spec (regenerated on demand) or a grid CSV path.
struct TerrainRef {
    std::optional<ProceduralTerrainSpec> procedural;
    std::optional<std::string> grid_file;

    void validate() const;
};

terrain::TerrainSurface build_surface(const TerrainRef& ref,
                                      const std::filesystem::path& base_dir);

struct CatchmentSpec {
    hydrology::Catchment catchment;
    double ditch_length_m = 0.0;
    double ditch_slope = 0.01;
};

struct GradeStats {
    double max_grade_before = 0.0;
    double max_grade_after = 0.0;
    double slope_reduction = 0.0;
    double mean_abs_grade = 0.0;
};

struct DerivedOutputs {
    pavement::PavementSection section;
    double cut_m3 = 0.0;
    double fill_m3 = 0.0;
    GradeStats grades;
    quantities::BillOfQuantities boq;
    lca::ImpactResult impact;
};

/// One road project: design inputs, plus derived outputs once the pipeline
/// ran (or a failure annotation when a stage refused it).
struct ProjectRecord {
    std::string project_id;
    TerrainRef terrain;
    terrain::Alignment alignment;
    pavement::SoilProfile soil;
    pavement::ClimateSeasons seasons = pavement::ClimateSeasons::defaults();
    pavement::TrafficDemand traffic;
    hydrology::FloodClass flood_class = hydrology::FloodClass::low;
    std::vector<double> crossing_stations;
    std::vector<CatchmentSpec> catchments;
    quantities::DitchLining lining = quantities::DitchLining::none;

    std::optional<DerivedOutputs> derived;
    std::optional<std::string> failure;

    bool completed() const { return derived.has_value(); }
};

struct SoilClassSpec {
    double weight = 0.0;
    double cbr_min = 1.0;
    double cbr_max = 10.0;
};

struct GeneratorConfig {
    std::uint64_t seed = 42;
    std::size_t project_count = 200;

    /// Adjacent indices share a site and differ only in width, so the two
    /// width groups see identical site distributions.
    bool paired_widths = true;
    double narrow_width_m = 3.5;
    double wide_width_m = 4.0;
    double wide_width_probability = 0.5; // used when paired_widths is false

    double length_min_m = 800.0;
    double length_max_m = 3000.0;
    double vertex_spacing_m = 50.0;
    double meander_amplitude_m = 12.0;
    double meander_wavelength_m = 500.0;

    double roughness_min_m = 0.2;
    double roughness_max_m = 1.2;
    double roughness_wavelength_m = 60.0;
    double hill_amplitude_max_m = 18.0;
    double hill_wavelength_m = 320.0;
    double base_grade_max = 0.03;
    double embankment_offset_m = 0.25;

    double traffic_min_esal = 2000.0;
    double traffic_max_esal = 60000.0;
    int design_life_min = 25;
    int design_life_max = 40;

    std::array<double, 3> flood_probabilities = {0.40, 0.35, 0.25}; // low/medium/high

    std::map<pavement::UscsClass, SoilClassSpec> soils = default_soil_table();

    double rainfall_min_mmh = 20.0;
    double rainfall_max_mmh = 80.0;
    std::uint32_t crossing_accumulation_min = 40;
    std::size_t max_crossings = 3;

    // Shared site-severity latent couples length, roughness and traffic, the
    // by-construction source of the geometry correlations.
    double severity_length_weight = 0.7;
    double severity_roughness_weight = 0.6;
    double severity_traffic_weight = 0.5;

    static std::map<pavement::UscsClass, SoilClassSpec> default_soil_table();
    void validate() const;
};

/// Deterministic in (seed, index): same pair, byte-identical record.
ProjectRecord generate_project(const GeneratorConfig& config, std::size_t index);

struct DesignBundle {
    terrain::Alignment final_alignment;
    pavement::PavementSection section;
    GradeStats grades;
    double cut_m3 = 0.0;
    double fill_m3 = 0.0;
    std::vector<hydrology::Ditch> ditches;
    std::vector<double> ditch_lengths_m;
    quantities::BillOfQuantities boq;
};

/// Grade capping, flood adjustment, pavement design, earthworks and drainage
/// sizing, assembled into a bill of quantities. Throws on infeasible input.
DesignBundle design_project(const ProjectRecord& record, const RunConfig& config);

/// Full pipeline including impact assessment. Stage errors are attached as a
/// failure annotation instead of thrown, so batch runs continue.
ProjectRecord run_pipeline(ProjectRecord record, const RunConfig& config,
                           const lca::FactorDatabase& factors);

std::string to_json_string(const ProjectRecord& record);
ProjectRecord record_from_json_string(const std::string& text,
                                      const std::string& source_name = "<string>");
ProjectRecord load_project(const std::filesystem::path& path);

/// One JSON document per project plus a manifest.json index.
void save_corpus(std::span<const ProjectRecord> records, const std::filesystem::path& dir);
std::vector<ProjectRecord> load_corpus(const std::filesystem::path& dir);

/// Results CSV: the fixed reporting columns first (project_id, length_m,
/// width_m, area_m2, embodied_tco2e, per_km_tco2e), then the analysis
/// columns. Failed records are skipped.
void write_results_csv(std::span<const ProjectRecord> records, std::ostream& out);
stats::Dataset dataset_from_results_csv(const std::filesystem::path& path);
stats::Dataset corpus_dataset(std::span<const ProjectRecord> records);

stats::CorpusReport corpus_analysis(std::span<const ProjectRecord> records,
                                    const stats::AnalysisPlan& plan);

} // namespace roadcarbon::corpus
