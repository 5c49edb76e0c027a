#pragma once

#include "roadcarbon/analysis.hpp"
#include "roadcarbon/corpus.hpp"
#include "roadcarbon/hydrology.hpp"
#include "roadcarbon/lca.hpp"
#include "roadcarbon/pavement.hpp"
#include "roadcarbon/quantities.hpp"

#include <filesystem>

namespace roadcarbon {

/// Engine-wide configuration: file locations, design constants, damage-model
/// parameters, hydrology and earthworks defaults, LCA references/weights, the
/// analysis plan, and the corpus generator. Loadable from one JSON file;
/// every key is optional and falls back to the documented default.
struct RunConfig {
    std::filesystem::path base_dir = "."; // config file directory; relative paths resolve here
    std::filesystem::path factors_path;
    std::filesystem::path output_dir = "out";

    pavement::DesignConstants constants;
    pavement::PowerLawDamageParams damage;
    pavement::ClimateSeasons seasons = pavement::ClimateSeasons::defaults();

    hydrology::FreeboardTable freeboards;
    double crossing_window_m = 10.0;
    hydrology::DitchTemplate ditch_template;
    double manning_n = 0.025;

    quantities::EarthworksConfig earthworks;

    double max_grade = 0.10;
    double section_spacing_m = 10.0;
    double offset_step_m = 0.5;

    lca::CategoryTotals references = {{"GWP", 1.0e6}};
    lca::CategoryTotals weights = {{"GWP", 1.0}};

    stats::AnalysisPlan plan;
    corpus::GeneratorConfig generator;

    static RunConfig from_file(const std::filesystem::path& path);

    /// Resolve a possibly relative path against the config file's directory.
    std::filesystem::path resolve(const std::filesystem::path& p) const;

    void validate() const;
};

/// Analysis plan from a standalone JSON file (the --plan override).
stats::AnalysisPlan plan_from_file(const std::filesystem::path& path);

} // namespace roadcarbon
