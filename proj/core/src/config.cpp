#include "roadcarbon/config.hpp"

#include "roadcarbon/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>

namespace roadcarbon {

using nlohmann::json;

namespace {

template <typename T>
void get_if(const json& j, const char* key, T& target)
{
    if (j.contains(key)) {
        j.at(key).get_to(target);
    }
}

stats::AnalysisPlan plan_from_json(const json& j, stats::AnalysisPlan plan)
{
    get_if(j, "vif_threshold", plan.vif_threshold);
    get_if(j, "linearity_margin", plan.linearity_margin);
    get_if(j, "alpha", plan.alpha);
    get_if(j, "geometry_columns", plan.geometry_columns);
    get_if(j, "linearity_predictors", plan.linearity_predictors);
    get_if(j, "slope_grouping_column", plan.slope_grouping_column);
    return plan;
}

pavement::SeasonState season_from_json(const json& j, pavement::SeasonState state)
{
    get_if(j, "duration_fraction", state.duration_fraction);
    get_if(j, "cbr_multiplier", state.cbr_multiplier);
    return state;
}

corpus::GeneratorConfig generator_from_json(const json& j, corpus::GeneratorConfig gen)
{
    get_if(j, "seed", gen.seed);
    get_if(j, "project_count", gen.project_count);
    get_if(j, "paired_widths", gen.paired_widths);
    get_if(j, "narrow_width_m", gen.narrow_width_m);
    get_if(j, "wide_width_m", gen.wide_width_m);
    get_if(j, "wide_width_probability", gen.wide_width_probability);
    get_if(j, "length_min_m", gen.length_min_m);
    get_if(j, "length_max_m", gen.length_max_m);
    get_if(j, "vertex_spacing_m", gen.vertex_spacing_m);
    get_if(j, "meander_amplitude_m", gen.meander_amplitude_m);
    get_if(j, "meander_wavelength_m", gen.meander_wavelength_m);
    get_if(j, "roughness_min_m", gen.roughness_min_m);
    get_if(j, "roughness_max_m", gen.roughness_max_m);
    get_if(j, "roughness_wavelength_m", gen.roughness_wavelength_m);
    get_if(j, "hill_amplitude_max_m", gen.hill_amplitude_max_m);
    get_if(j, "hill_wavelength_m", gen.hill_wavelength_m);
    get_if(j, "base_grade_max", gen.base_grade_max);
    get_if(j, "embankment_offset_m", gen.embankment_offset_m);
    get_if(j, "traffic_min_esal", gen.traffic_min_esal);
    get_if(j, "traffic_max_esal", gen.traffic_max_esal);
    get_if(j, "design_life_min", gen.design_life_min);
    get_if(j, "design_life_max", gen.design_life_max);
    get_if(j, "flood_probabilities", gen.flood_probabilities);
    get_if(j, "rainfall_min_mmh", gen.rainfall_min_mmh);
    get_if(j, "rainfall_max_mmh", gen.rainfall_max_mmh);
    get_if(j, "crossing_accumulation_min", gen.crossing_accumulation_min);
    get_if(j, "max_crossings", gen.max_crossings);
    get_if(j, "severity_length_weight", gen.severity_length_weight);
    get_if(j, "severity_roughness_weight", gen.severity_roughness_weight);
    get_if(j, "severity_traffic_weight", gen.severity_traffic_weight);
    if (j.contains("soils")) {
        std::map<pavement::UscsClass, corpus::SoilClassSpec> soils;
        for (const auto& [name, spec] : j.at("soils").items()) {
            corpus::SoilClassSpec s;
            get_if(spec, "weight", s.weight);
            get_if(spec, "cbr_min", s.cbr_min);
            get_if(spec, "cbr_max", s.cbr_max);
            soils[pavement::uscs_from_string(name)] = s;
        }
        gen.soils = std::move(soils);
    }
    return gen;
}

RunConfig config_from_json(const json& j, RunConfig config)
{
    if (j.contains("paths")) {
        const auto& paths = j.at("paths");
        if (paths.contains("factors")) {
            config.factors_path = paths.at("factors").get<std::string>();
        }
        if (paths.contains("output_dir")) {
            config.output_dir = paths.at("output_dir").get<std::string>();
        }
    }
    if (j.contains("pavement")) {
        const auto& p = j.at("pavement");
        if (p.contains("constants")) {
            const auto& c = p.at("constants");
            get_if(c, "serviceability_loss", config.constants.serviceability_loss);
            get_if(c, "allowable_rut_depth_mm", config.constants.allowable_rut_depth_mm);
            get_if(c, "aggregate_loss_mm", config.constants.aggregate_loss_mm);
            get_if(c, "target_base_modulus_psi", config.constants.target_base_modulus_psi);
            get_if(c, "thickness_min_mm", config.constants.thickness_min_mm);
            get_if(c, "thickness_max_mm", config.constants.thickness_max_mm);
            get_if(c, "thickness_step_mm", config.constants.thickness_step_mm);
        }
        if (p.contains("damage_model")) {
            const auto& d = p.at("damage_model");
            get_if(d, "w0", config.damage.w0);
            get_if(d, "reference_modulus_mpa", config.damage.reference_modulus_mpa);
            get_if(d, "reference_thickness_mm", config.damage.reference_thickness_mm);
            get_if(d, "modulus_exponent", config.damage.modulus_exponent);
            get_if(d, "thickness_exponent", config.damage.thickness_exponent);
        }
        if (p.contains("seasons")) {
            const auto& s = p.at("seasons");
            if (s.contains("frozen")) {
                config.seasons.frozen = season_from_json(s.at("frozen"), config.seasons.frozen);
            }
            if (s.contains("saturated")) {
                config.seasons.saturated =
                    season_from_json(s.at("saturated"), config.seasons.saturated);
            }
            if (s.contains("wet")) {
                config.seasons.wet = season_from_json(s.at("wet"), config.seasons.wet);
            }
            if (s.contains("dry")) {
                config.seasons.dry = season_from_json(s.at("dry"), config.seasons.dry);
            }
        }
    }
    if (j.contains("hydrology")) {
        const auto& h = j.at("hydrology");
        if (h.contains("freeboards")) {
            const auto& f = h.at("freeboards");
            get_if(f, "low_m", config.freeboards.low_m);
            get_if(f, "medium_m", config.freeboards.medium_m);
            get_if(f, "high_m", config.freeboards.high_m);
        }
        get_if(h, "crossing_window_m", config.crossing_window_m);
        if (h.contains("ditch")) {
            const auto& d = h.at("ditch");
            get_if(d, "bottom_width_m", config.ditch_template.bottom_width_m);
            get_if(d, "side_slope", config.ditch_template.side_slope);
            get_if(d, "max_depth_m", config.ditch_template.max_depth_m);
        }
        get_if(h, "manning_n", config.manning_n);
    }
    if (j.contains("earthworks")) {
        const auto& e = j.at("earthworks");
        get_if(e, "reuse_ratio", config.earthworks.reuse_ratio);
        get_if(e, "aggregate_density_tpm3", config.earthworks.aggregate_density_tpm3);
        get_if(e, "fill_density_tpm3", config.earthworks.fill_density_tpm3);
        get_if(e, "concrete_density_tpm3", config.earthworks.concrete_density_tpm3);
        get_if(e, "lining_thickness_m", config.earthworks.lining_thickness_m);
        get_if(e, "riprap_areal_density_tpm2", config.earthworks.riprap_areal_density_tpm2);
    }
    if (j.contains("terrain")) {
        const auto& t = j.at("terrain");
        get_if(t, "max_grade", config.max_grade);
        get_if(t, "section_spacing_m", config.section_spacing_m);
        get_if(t, "offset_step_m", config.offset_step_m);
    }
    if (j.contains("lca")) {
        const auto& l = j.at("lca");
        if (l.contains("references")) {
            config.references = l.at("references").get<lca::CategoryTotals>();
        }
        if (l.contains("weights")) {
            config.weights = l.at("weights").get<lca::CategoryTotals>();
        }
    }
    if (j.contains("analysis")) {
        config.plan = plan_from_json(j.at("analysis"), config.plan);
    }
    if (j.contains("generator")) {
        config.generator = generator_from_json(j.at("generator"), config.generator);
    }
    if (j.contains("seed")) {
        config.generator.seed = j.at("seed").get<std::uint64_t>();
    }
    return config;
}

} // namespace

RunConfig RunConfig::from_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open config file: {}", path.string()));
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(fmt::format("{}: {}", path.string(), e.what()));
    }
    RunConfig config;
    config.base_dir = path.has_parent_path() ? path.parent_path() : ".";
    try {
        config = config_from_json(j, std::move(config));
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("{}: bad config: {}", path.string(), e.what()));
    }
    config.validate();
    return config;
}

std::filesystem::path RunConfig::resolve(const std::filesystem::path& p) const
{
    if (p.empty() || p.is_absolute()) {
        return p;
    }
    return base_dir / p;
}

void RunConfig::validate() const
{
    constants.validate();
    seasons.validate();
    freeboards.validate();
    earthworks.validate();
    generator.validate();
    if (!(max_grade > 0.0) || !(max_grade < 1.0)) {
        throw ConfigError(fmt::format("max grade must be in (0, 1), got {}", max_grade));
    }
    if (!(section_spacing_m > 0.0) || !(offset_step_m > 0.0)) {
        throw ConfigError("section spacing and offset step must be positive");
    }
    if (!(manning_n > 0.0)) {
        throw ConfigError(fmt::format("Manning n must be positive, got {}", manning_n));
    }
    if (!(crossing_window_m >= 0.0)) {
        throw ConfigError("crossing window must be >= 0");
    }
    for (const auto& [category, value] : references) {
        if (!(value > 0.0)) {
            throw ConfigError(fmt::format("normalisation reference for '{}' must be positive",
                                          category));
        }
    }
    for (const auto& [category, value] : weights) {
        if (!(value >= 0.0)) {
            throw ConfigError(fmt::format("weight for '{}' must be >= 0", category));
        }
    }
    if (!factors_path.empty()) {
        const auto resolved = resolve(factors_path);
        if (!std::filesystem::exists(resolved)) {
            throw ConfigError(fmt::format("factor table does not exist: {}", resolved.string()));
        }
    }
}

stats::AnalysisPlan plan_from_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open plan file: {}", path.string()));
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(fmt::format("{}: {}", path.string(), e.what()));
    }
    try {
        return plan_from_json(j, stats::AnalysisPlan{});
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("{}: bad plan: {}", path.string(), e.what()));
    }
}

} // namespace roadcarbon
