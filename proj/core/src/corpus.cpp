#include "roadcarbon/corpus.hpp"

#include "roadcarbon/config.hpp"
#include "roadcarbon/csv.hpp"
#include "roadcarbon/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace roadcarbon::corpus {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Seeded value noise
// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b)
{
    return splitmix64(a ^ (b + 0x9E3779B97F4A7C15ull));
}

double unit_from_hash(std::uint64_t h)
{
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double lattice_value(std::uint64_t seed, std::int64_t ix, std::int64_t iy)
{
    const std::uint64_t cell = splitmix64(static_cast<std::uint64_t>(ix) * 0x9E3779B97F4A7C15ull +
                                          static_cast<std::uint64_t>(iy) * 0xC2B2AE3D27D4EB4Full);
    return 2.0 * unit_from_hash(hash_combine(seed, cell)) - 1.0;
}

double smoothstep(double t)
{
    return t * t * (3.0 - 2.0 * t);
}

// Smooth value noise in [-1, 1]; x and y are in lattice units.
double value_noise(std::uint64_t seed, double x, double y)
{
    const double fx = std::floor(x);
    const double fy = std::floor(y);
    const auto ix = static_cast<std::int64_t>(fx);
    const auto iy = static_cast<std::int64_t>(fy);
    const double tx = smoothstep(x - fx);
    const double ty = smoothstep(y - fy);
    const double v00 = lattice_value(seed, ix, iy);
    const double v10 = lattice_value(seed, ix + 1, iy);
    const double v01 = lattice_value(seed, ix, iy + 1);
    const double v11 = lattice_value(seed, ix + 1, iy + 1);
    const double bottom = v00 + (v10 - v00) * tx;
    const double top = v01 + (v11 - v01) * tx;
    return bottom + (top - bottom) * ty;
}

constexpr std::uint64_t kHillSalt = 0x48494C4Cull;
constexpr std::uint64_t kRoughSalt = 0x524F5547ull;
constexpr std::uint64_t kMeanderSalt = 0x4D454E44ull;

double lerp(double a, double b, double t)
{
    return a + (b - a) * t;
}

} // namespace

terrain::TerrainSurface synthesize_terrain(const ProceduralTerrainSpec& spec)
{
    std::vector<double> elevations;
    elevations.reserve(spec.nx * spec.ny);
    for (std::size_t iy = 0; iy < spec.ny; ++iy) {
        for (std::size_t ix = 0; ix < spec.nx; ++ix) {
            const double x = spec.origin_x + static_cast<double>(ix) * spec.cell_size_m;
            const double y = spec.origin_y + static_cast<double>(iy) * spec.cell_size_m;
            double z = spec.base_grade * (x - spec.origin_x);
            if (spec.hill_amplitude_m > 0.0) {
                z += spec.hill_amplitude_m * value_noise(spec.seed ^ kHillSalt,
                                                         x / spec.hill_wavelength_m,
                                                         y / spec.hill_wavelength_m);
            }
            if (spec.roughness_amplitude_m > 0.0) {
                z += spec.roughness_amplitude_m * value_noise(spec.seed ^ kRoughSalt,
                                                              x / spec.roughness_wavelength_m,
                                                              y / spec.roughness_wavelength_m);
            }
            elevations.push_back(z);
        }
    }
    return terrain::TerrainSurface({spec.origin_x, spec.origin_y}, spec.cell_size_m, spec.nx,
                                   spec.ny, std::move(elevations));
}

void TerrainRef::validate() const
{
    if (procedural.has_value() == grid_file.has_value()) {
        throw SchemaError("terrain reference needs exactly one of 'procedural' or 'grid_file'");
    }
}

terrain::TerrainSurface build_surface(const TerrainRef& ref, const std::filesystem::path& base_dir)
{
    ref.validate();
    if (ref.procedural) {
        return synthesize_terrain(*ref.procedural);
    }
    std::filesystem::path path(*ref.grid_file);
    if (path.is_relative()) {
        path = base_dir / path;
    }
    return terrain::TerrainSurface::from_csv(path);
}

// ---------------------------------------------------------------------------
// Generator
// ---------------------------------------------------------------------------

std::map<pavement::UscsClass, SoilClassSpec> GeneratorConfig::default_soil_table()
{
    using pavement::UscsClass;
    // Weights are an artifact choice; CBR ranges follow common geotechnical
    // guidance per group (well-graded gravels strong, organic soils weak).
    return {
        {UscsClass::GW, {0.05, 30.0, 80.0}}, {UscsClass::GP, {0.05, 25.0, 60.0}},
        {UscsClass::GM, {0.06, 20.0, 55.0}}, {UscsClass::GC, {0.06, 15.0, 40.0}},
        {UscsClass::SW, {0.07, 15.0, 40.0}}, {UscsClass::SP, {0.08, 10.0, 30.0}},
        {UscsClass::SM, {0.10, 10.0, 35.0}}, {UscsClass::SC, {0.09, 5.0, 20.0}},
        {UscsClass::ML, {0.09, 4.0, 15.0}},  {UscsClass::CL, {0.12, 3.0, 12.0}},
        {UscsClass::OL, {0.04, 2.0, 8.0}},   {UscsClass::MH, {0.05, 3.0, 8.0}},
        {UscsClass::CH, {0.08, 2.0, 6.0}},   {UscsClass::OH, {0.04, 1.0, 5.0}},
        {UscsClass::PT, {0.02, 1.0, 3.0}},
    };
}

void GeneratorConfig::validate() const
{
    if (!(narrow_width_m > 0.0) || !(wide_width_m > 0.0)) {
        throw ConfigError("generator widths must be positive");
    }
    if (!(wide_width_probability >= 0.0) || !(wide_width_probability <= 1.0)) {
        throw ConfigError("wide width probability must be in [0, 1]");
    }
    if (!(length_min_m > 0.0) || !(length_max_m >= length_min_m)) {
        throw ConfigError(fmt::format("bad length range [{}, {}]", length_min_m, length_max_m));
    }
    if (!(roughness_min_m >= 0.0) || !(roughness_max_m >= roughness_min_m)) {
        throw ConfigError(fmt::format("bad roughness range [{}, {}]", roughness_min_m,
                                      roughness_max_m));
    }
    if (!(traffic_min_esal >= 0.0) || !(traffic_max_esal >= traffic_min_esal)) {
        throw ConfigError(fmt::format("bad traffic range [{}, {}]", traffic_min_esal,
                                      traffic_max_esal));
    }
    if (design_life_min < 1 || design_life_max < design_life_min) {
        throw ConfigError(fmt::format("bad design life range [{}, {}]", design_life_min,
                                      design_life_max));
    }
    const double flood_sum = flood_probabilities[0] + flood_probabilities[1] +
                             flood_probabilities[2];
    if (std::abs(flood_sum - 1.0) > 1e-9) {
        throw ConfigError(fmt::format("flood probabilities must sum to 1, got {}", flood_sum));
    }
    if (soils.empty()) {
        throw ConfigError("generator needs at least one soil class");
    }
    double soil_sum = 0.0;
    for (const auto& [cls, spec] : soils) {
        if (!(spec.weight >= 0.0)) {
            throw ConfigError("soil weights must be >= 0");
        }
        if (!(spec.cbr_min > 0.0) || !(spec.cbr_max >= spec.cbr_min) || !(spec.cbr_max <= 100.0)) {
            throw ConfigError(fmt::format("bad CBR range [{}, {}] for {}", spec.cbr_min,
                                          spec.cbr_max, pavement::to_string(cls)));
        }
        soil_sum += spec.weight;
    }
    if (std::abs(soil_sum - 1.0) > 1e-9) {
        throw ConfigError(fmt::format("soil class weights must sum to 1, got {}", soil_sum));
    }
}

namespace {

struct SiteRng {
    std::mt19937_64 engine;

    explicit SiteRng(std::uint64_t seed) : engine(seed) {}

    double uniform() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lerp(lo, hi, uniform()); }
};

double mix_with_severity(double severity, double u, double weight)
{
    return std::clamp(weight * severity + (1.0 - weight) * u, 0.0, 1.0);
}

double runoff_coefficient_for(pavement::UscsClass cls)
{
    switch (pavement::to_string(cls)[0]) {
    case 'G': return 0.35;
    case 'S': return 0.45;
    case 'M': return 0.55;
    case 'C': return 0.65;
    default: return 0.60; // organic soils and peat
    }
}

} // namespace

ProjectRecord generate_project(const GeneratorConfig& config, std::size_t index)
{
    config.validate();
    if (index >= config.project_count) {
        throw DomainError(fmt::format("project index {} out of range (count {})", index,
                                      config.project_count));
    }

    const std::size_t site = config.paired_widths ? index / 2 : index;
    SiteRng rng(hash_combine(config.seed, site));

    // Draw order is part of the determinism contract; do not reorder.
    const double severity = rng.uniform();
    const double u_length = rng.uniform();
    const double u_rough = rng.uniform();
    const double u_hill = rng.uniform();
    const double u_grade = rng.uniform();
    const double u_soil = rng.uniform();
    const double u_cbr = rng.uniform();
    const double u_traffic = rng.uniform();
    const double u_life = rng.uniform();
    const double u_rain = rng.uniform();
    const double u_lining = rng.uniform();
    const double u_width = rng.uniform();
    // Flood class is keyed per project, not per site: width pairs would
    // otherwise enter the flood groups as duplicated sites.
    const double u_flood =
        unit_from_hash(hash_combine(hash_combine(config.seed, 0xF100Dull), index));

    ProjectRecord record;
    record.project_id = fmt::format("p{:04}", index);

    if (config.paired_widths) {
        record.alignment.width = index % 2 == 0 ? config.narrow_width_m : config.wide_width_m;
    } else {
        record.alignment.width = u_width < config.wide_width_probability ? config.wide_width_m
                                                                         : config.narrow_width_m;
    }

    const double length = lerp(config.length_min_m, config.length_max_m,
                               mix_with_severity(severity, u_length, config.severity_length_weight));
    const double roughness =
        lerp(config.roughness_min_m, config.roughness_max_m,
             mix_with_severity(severity, u_rough, config.severity_roughness_weight));
    const double hill_amplitude = config.hill_amplitude_max_m * u_hill;
    const double base_grade = config.base_grade_max * (2.0 * u_grade - 1.0);

    // Terrain spec sized around the alignment with a margin on every side.
    const double margin = 30.0;
    ProceduralTerrainSpec spec;
    spec.seed = hash_combine(hash_combine(config.seed, site), 0x5445525241494Eull);
    spec.cell_size_m = 10.0;
    spec.nx = static_cast<std::size_t>(std::ceil((length + 2.0 * margin) / spec.cell_size_m)) + 1;
    spec.ny = static_cast<std::size_t>(
                  std::ceil(2.0 * (config.meander_amplitude_m + 25.0) / spec.cell_size_m)) +
              1;
    spec.base_grade = base_grade;
    spec.hill_amplitude_m = hill_amplitude;
    spec.hill_wavelength_m = config.hill_wavelength_m;
    spec.roughness_amplitude_m = roughness;
    spec.roughness_wavelength_m = config.roughness_wavelength_m;
    record.terrain.procedural = spec;

    const auto surface = synthesize_terrain(spec);
    const double mid_y = spec.origin_y + static_cast<double>(spec.ny - 1) * spec.cell_size_m / 2.0;

    const auto vertex_count =
        std::max<std::size_t>(2, static_cast<std::size_t>(std::round(length /
                                                                     config.vertex_spacing_m)) +
                                     1);
    record.alignment.vertices.reserve(vertex_count);
    record.alignment.design_grade.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(vertex_count - 1);
        const double x = spec.origin_x + margin + t * length;
        const double y = mid_y + config.meander_amplitude_m *
                                     value_noise(spec.seed ^ kMeanderSalt,
                                                 x / config.meander_wavelength_m, 0.5);
        record.alignment.vertices.push_back({x, y});
        record.alignment.design_grade.push_back(surface.elevation_at({x, y}) +
                                                config.embankment_offset_m);
    }

    const SoilClassSpec* soil_spec = nullptr;
    {
        double cumulative = 0.0;
        for (const auto cls : pavement::kAllUscsClasses) {
            const auto it = config.soils.find(cls);
            if (it == config.soils.end()) {
                continue;
            }
            cumulative += it->second.weight;
            if (u_soil <= cumulative || cls == pavement::kAllUscsClasses.back()) {
                record.soil.uscs_class = cls;
                soil_spec = &it->second;
                break;
            }
        }
        if (soil_spec == nullptr) { // weights summing to 1 guarantee a pick; belt and braces
            record.soil.uscs_class = pavement::UscsClass::SM;
            soil_spec = &config.soils.begin()->second;
        }
    }
    record.soil.cbr_base = lerp(soil_spec->cbr_min, soil_spec->cbr_max, u_cbr);

    record.traffic.annual_esal =
        std::exp(lerp(std::log(std::max(1.0, config.traffic_min_esal)),
                      std::log(std::max(1.0, config.traffic_max_esal)),
                      mix_with_severity(severity, u_traffic, config.severity_traffic_weight)));
    const int life_span = config.design_life_max - config.design_life_min + 1;
    record.traffic.design_life_years =
        config.design_life_min +
        std::min(life_span - 1, static_cast<int>(u_life * static_cast<double>(life_span)));

    if (u_flood < config.flood_probabilities[0]) {
        record.flood_class = hydrology::FloodClass::low;
    } else if (u_flood < config.flood_probabilities[0] + config.flood_probabilities[1]) {
        record.flood_class = hydrology::FloodClass::medium;
    } else {
        record.flood_class = hydrology::FloodClass::high;
    }

    const double rainfall = lerp(config.rainfall_min_mmh, config.rainfall_max_mmh, u_rain);
    const double runoff = runoff_coefficient_for(record.soil.uscs_class);
    const double ditch_slope = std::max(0.008, std::abs(base_grade));

    if (u_lining < 0.5) {
        record.lining = quantities::DitchLining::concrete;
    } else if (u_lining < 0.8) {
        record.lining = quantities::DitchLining::riprap;
    } else {
        record.lining = quantities::DitchLining::none;
    }

    // Low-water crossings where concentrated flow meets the alignment.
    const auto field = terrain::flow_paths(surface);
    const double total_length = terrain::alignment_length(record.alignment);
    std::vector<std::pair<double, std::uint32_t>> candidates; // (station, accumulation)
    for (double station = 0.0; station <= total_length; station += spec.cell_size_m) {
        const auto sample = terrain::station_at(record.alignment, station);
        const auto ix = static_cast<std::size_t>(
            std::clamp(std::round((sample.point.x - spec.origin_x) / spec.cell_size_m), 0.0,
                       static_cast<double>(spec.nx - 1)));
        const auto iy = static_cast<std::size_t>(
            std::clamp(std::round((sample.point.y - spec.origin_y) / spec.cell_size_m), 0.0,
                       static_cast<double>(spec.ny - 1)));
        const auto acc = field.accumulation(ix, iy);
        if (acc >= config.crossing_accumulation_min) {
            candidates.emplace_back(station, acc);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::pair<double, std::uint32_t>> kept;
    for (const auto& candidate : candidates) {
        if (kept.size() >= config.max_crossings) {
            break;
        }
        const bool close = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
            return std::abs(k.first - candidate.first) < 100.0;
        });
        if (!close) {
            kept.push_back(candidate);
        }
    }
    std::sort(kept.begin(), kept.end());

    // Roadside strip drainage always exists; crossings add their catchments.
    {
        CatchmentSpec roadside;
        roadside.catchment.area_ha = total_length * 20.0 / 1.0e4;
        roadside.catchment.runoff_coefficient = runoff;
        roadside.catchment.rainfall_intensity_mmh = rainfall;
        roadside.ditch_length_m = total_length;
        roadside.ditch_slope = ditch_slope;
        record.catchments.push_back(roadside);
    }
    for (const auto& [station, acc] : kept) {
        record.crossing_stations.push_back(station);
        CatchmentSpec crossing;
        crossing.catchment.area_ha =
            static_cast<double>(acc) * spec.cell_size_m * spec.cell_size_m / 1.0e4;
        crossing.catchment.runoff_coefficient = runoff;
        crossing.catchment.rainfall_intensity_mmh = rainfall;
        crossing.ditch_length_m = 50.0;
        crossing.ditch_slope = ditch_slope;
        record.catchments.push_back(crossing);
    }

    return record;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

DesignBundle design_project(const ProjectRecord& record, const RunConfig& config)
{
    record.alignment.validate();
    record.soil.validate();
    record.seasons.validate();
    record.traffic.validate();

    const auto surface = build_surface(record.terrain, config.base_dir);

    const auto cap = terrain::cap_grades(record.alignment, config.max_grade);
    if (!cap.feasible) {
        throw DomainError(fmt::format("grade cap {} infeasible: endpoint elevations alone force "
                                      "a steeper grade (max before capping {})",
                                      config.max_grade, cap.max_abs_grade_before));
    }

    DesignBundle bundle;
    bundle.grades.max_grade_before = cap.max_abs_grade_before;
    bundle.grades.max_grade_after = cap.max_abs_grade_after;
    bundle.grades.slope_reduction =
        std::max(0.0, cap.max_abs_grade_before - cap.max_abs_grade_after);

    const auto profile = terrain::grade_profile(cap.alignment);
    const auto stations = terrain::vertex_stations(cap.alignment);
    double weighted = 0.0;
    for (std::size_t i = 0; i < profile.grades.size(); ++i) {
        weighted += std::abs(profile.grades[i]) * (stations[i + 1] - stations[i]);
    }
    bundle.grades.mean_abs_grade = weighted / stations.back();

    const auto risk = hydrology::FloodRisk::from_class(record.flood_class, config.freeboards);
    bundle.final_alignment = hydrology::flood_adjust_grade(cap.alignment, risk,
                                                           record.crossing_stations,
                                                           config.crossing_window_m);

    const pavement::PowerLawDamageModel model(config.damage);
    bundle.section = pavement::design_thickness(record.soil, record.seasons, record.traffic,
                                                config.constants, model);

    const auto samples = terrain::sample_alignment(bundle.final_alignment,
                                                   config.section_spacing_m);
    std::vector<terrain::CrossSection> sections;
    sections.reserve(samples.size());
    for (const auto& sample : samples) {
        sections.push_back(terrain::cross_section(surface, bundle.final_alignment, sample.station,
                                                  bundle.final_alignment.width / 2.0,
                                                  config.offset_step_m));
    }
    const auto volumes = terrain::cut_fill_volumes(sections);
    bundle.cut_m3 = volumes.cut_m3;
    bundle.fill_m3 = volumes.fill_m3;

    for (const auto& spec : record.catchments) {
        const double q = hydrology::peak_discharge(spec.catchment);
        bundle.ditches.push_back(hydrology::size_ditch(q, spec.ditch_slope, config.manning_n,
                                                       config.ditch_template));
        bundle.ditch_lengths_m.push_back(spec.ditch_length_m);
    }

    std::vector<std::vector<quantities::BoqItem>> parts;
    parts.push_back({quantities::aggregate_volume(bundle.final_alignment, bundle.section)});
    parts.push_back(quantities::earthworks_quantities(bundle.cut_m3, bundle.fill_m3,
                                                      config.earthworks));
    parts.push_back(quantities::drainage_quantities(bundle.ditches, record.lining,
                                                    bundle.ditch_lengths_m, config.earthworks));
    bundle.boq = quantities::assemble_boq(parts, bundle.final_alignment);
    return bundle;
}

ProjectRecord run_pipeline(ProjectRecord record, const RunConfig& config,
                           const lca::FactorDatabase& factors)
{
    record.derived.reset();
    record.failure.reset();
    try {
        auto bundle = design_project(record, config);
        DerivedOutputs outputs;
        outputs.section = bundle.section;
        outputs.cut_m3 = bundle.cut_m3;
        outputs.fill_m3 = bundle.fill_m3;
        outputs.grades = bundle.grades;
        outputs.impact = lca::assess_project(bundle.boq, factors, config.references,
                                             config.weights);
        outputs.boq = std::move(bundle.boq);
        record.derived = std::move(outputs);
    } catch (const std::exception& e) {
        record.failure = e.what();
    }
    return record;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

json spec_to_json(const ProceduralTerrainSpec& spec)
{
    return json{{"seed", spec.seed},
                {"nx", spec.nx},
                {"ny", spec.ny},
                {"cell_size_m", spec.cell_size_m},
                {"origin_x", spec.origin_x},
                {"origin_y", spec.origin_y},
                {"base_grade", spec.base_grade},
                {"hill_amplitude_m", spec.hill_amplitude_m},
                {"hill_wavelength_m", spec.hill_wavelength_m},
                {"roughness_amplitude_m", spec.roughness_amplitude_m},
                {"roughness_wavelength_m", spec.roughness_wavelength_m}};
}

ProceduralTerrainSpec spec_from_json(const json& j)
{
    ProceduralTerrainSpec spec;
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.nx = j.at("nx").get<std::size_t>();
    spec.ny = j.at("ny").get<std::size_t>();
    spec.cell_size_m = j.at("cell_size_m").get<double>();
    spec.origin_x = j.at("origin_x").get<double>();
    spec.origin_y = j.at("origin_y").get<double>();
    spec.base_grade = j.at("base_grade").get<double>();
    spec.hill_amplitude_m = j.at("hill_amplitude_m").get<double>();
    spec.hill_wavelength_m = j.at("hill_wavelength_m").get<double>();
    spec.roughness_amplitude_m = j.at("roughness_amplitude_m").get<double>();
    spec.roughness_wavelength_m = j.at("roughness_wavelength_m").get<double>();
    return spec;
}

json seasons_to_json(const pavement::ClimateSeasons& seasons)
{
    const auto state = [](const pavement::SeasonState& s) {
        return json{{"duration_fraction", s.duration_fraction},
                    {"cbr_multiplier", s.cbr_multiplier}};
    };
    return json{{"frozen", state(seasons.frozen)},
                {"saturated", state(seasons.saturated)},
                {"wet", state(seasons.wet)},
                {"dry", state(seasons.dry)}};
}

pavement::ClimateSeasons seasons_from_json(const json& j)
{
    const auto state = [](const json& s) {
        return pavement::SeasonState{s.at("duration_fraction").get<double>(),
                                     s.at("cbr_multiplier").get<double>()};
    };
    pavement::ClimateSeasons seasons;
    seasons.frozen = state(j.at("frozen"));
    seasons.saturated = state(j.at("saturated"));
    seasons.wet = state(j.at("wet"));
    seasons.dry = state(j.at("dry"));
    return seasons;
}

json record_to_json(const ProjectRecord& record)
{
    json j;
    j["project_id"] = record.project_id;

    if (record.terrain.procedural) {
        j["terrain"] = json{{"procedural", spec_to_json(*record.terrain.procedural)}};
    } else if (record.terrain.grid_file) {
        j["terrain"] = json{{"grid_file", *record.terrain.grid_file}};
    } else {
        j["terrain"] = json::object();
    }

    json vertices = json::array();
    for (const auto& v : record.alignment.vertices) {
        vertices.push_back(json::array({v.x, v.y}));
    }
    j["alignment"] = json{{"vertices", std::move(vertices)},
                          {"width", record.alignment.width},
                          {"design_grade", record.alignment.design_grade}};

    j["soil"] = json{{"uscs_class", pavement::to_string(record.soil.uscs_class)},
                     {"cbr", record.soil.cbr_base}};
    j["seasons"] = seasons_to_json(record.seasons);
    j["traffic"] = json{{"annual_esal", record.traffic.annual_esal},
                        {"design_life_years", record.traffic.design_life_years}};
    j["flood_class"] = hydrology::to_string(record.flood_class);
    j["crossing_stations"] = record.crossing_stations;

    json catchments = json::array();
    for (const auto& spec : record.catchments) {
        catchments.push_back(json{{"area_ha", spec.catchment.area_ha},
                                  {"runoff_coefficient", spec.catchment.runoff_coefficient},
                                  {"rainfall_intensity_mmh",
                                   spec.catchment.rainfall_intensity_mmh},
                                  {"ditch_length_m", spec.ditch_length_m},
                                  {"ditch_slope", spec.ditch_slope}});
    }
    j["catchments"] = std::move(catchments);
    j["lining"] = quantities::to_string(record.lining);

    if (record.derived) {
        const auto& d = *record.derived;
        json items = json::array();
        for (const auto& item : d.boq.items) {
            items.push_back(json{{"material_id", item.material_id},
                                 {"quantity", item.quantity},
                                 {"unit", quantities::to_string(item.unit)}});
        }
        j["derived"] =
            json{{"section",
                  json{{"base_thickness_mm", d.section.base_thickness_mm},
                       {"base_modulus_mpa", d.section.base_modulus_mpa},
                       {"seasonal_subgrade_moduli_mpa", d.section.seasonal_subgrade_moduli_mpa},
                       {"total_damage", d.section.total_damage},
                       {"aggregate_loss_allowance_mm", d.section.aggregate_loss_allowance_mm}}},
                 {"cut_m3", d.cut_m3},
                 {"fill_m3", d.fill_m3},
                 {"grades",
                  json{{"max_grade_before", d.grades.max_grade_before},
                       {"max_grade_after", d.grades.max_grade_after},
                       {"slope_reduction", d.grades.slope_reduction},
                       {"mean_abs_grade", d.grades.mean_abs_grade}}},
                 {"boq", json{{"items", std::move(items)},
                              {"road_area_m2", d.boq.road_area_m2},
                              {"road_length_m", d.boq.road_length_m}}},
                 {"impact", json{{"characterised_kgco2e", d.impact.characterised_kgco2e},
                                 {"normalised", d.impact.normalised},
                                 {"weighted_single_score", d.impact.weighted_single_score},
                                 {"embodied_tco2e", d.impact.embodied_tco2e},
                                 {"per_km_tco2e", d.impact.per_km_tco2e}}}};
    }
    if (record.failure) {
        j["failure"] = *record.failure;
    }
    return j;
}

ProjectRecord record_from_json(const json& j, const std::string& source_name)
{
    ProjectRecord record;
    try {
        record.project_id = j.at("project_id").get<std::string>();

        const auto& terrain_json = j.at("terrain");
        if (terrain_json.contains("procedural")) {
            record.terrain.procedural = spec_from_json(terrain_json.at("procedural"));
        }
        if (terrain_json.contains("grid_file")) {
            record.terrain.grid_file = terrain_json.at("grid_file").get<std::string>();
        }
        record.terrain.validate();

        const auto& alignment_json = j.at("alignment");
        for (const auto& v : alignment_json.at("vertices")) {
            record.alignment.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        }
        record.alignment.width = alignment_json.at("width").get<double>();
        record.alignment.design_grade =
            alignment_json.at("design_grade").get<std::vector<double>>();

        record.soil.uscs_class =
            pavement::uscs_from_string(j.at("soil").at("uscs_class").get<std::string>());
        record.soil.cbr_base = j.at("soil").at("cbr").get<double>();
        if (j.contains("seasons")) {
            record.seasons = seasons_from_json(j.at("seasons"));
        }
        record.traffic.annual_esal = j.at("traffic").at("annual_esal").get<double>();
        record.traffic.design_life_years = j.at("traffic").at("design_life_years").get<int>();
        record.flood_class =
            hydrology::flood_class_from_string(j.at("flood_class").get<std::string>());
        if (j.contains("crossing_stations")) {
            record.crossing_stations = j.at("crossing_stations").get<std::vector<double>>();
        }
        if (j.contains("catchments")) {
            for (const auto& c : j.at("catchments")) {
                CatchmentSpec spec;
                spec.catchment.area_ha = c.at("area_ha").get<double>();
                spec.catchment.runoff_coefficient = c.at("runoff_coefficient").get<double>();
                spec.catchment.rainfall_intensity_mmh =
                    c.at("rainfall_intensity_mmh").get<double>();
                spec.ditch_length_m = c.at("ditch_length_m").get<double>();
                spec.ditch_slope = c.at("ditch_slope").get<double>();
                record.catchments.push_back(spec);
            }
        }
        if (j.contains("lining")) {
            record.lining = quantities::lining_from_string(j.at("lining").get<std::string>());
        }

        if (j.contains("derived")) {
            const auto& d = j.at("derived");
            DerivedOutputs outputs;
            const auto& section = d.at("section");
            outputs.section.base_thickness_mm = section.at("base_thickness_mm").get<double>();
            outputs.section.base_modulus_mpa = section.at("base_modulus_mpa").get<double>();
            outputs.section.seasonal_subgrade_moduli_mpa =
                section.at("seasonal_subgrade_moduli_mpa").get<std::array<double, 4>>();
            outputs.section.total_damage = section.at("total_damage").get<double>();
            outputs.section.aggregate_loss_allowance_mm =
                section.at("aggregate_loss_allowance_mm").get<double>();
            outputs.cut_m3 = d.at("cut_m3").get<double>();
            outputs.fill_m3 = d.at("fill_m3").get<double>();
            const auto& grades = d.at("grades");
            outputs.grades.max_grade_before = grades.at("max_grade_before").get<double>();
            outputs.grades.max_grade_after = grades.at("max_grade_after").get<double>();
            outputs.grades.slope_reduction = grades.at("slope_reduction").get<double>();
            outputs.grades.mean_abs_grade = grades.at("mean_abs_grade").get<double>();
            const auto& boq = d.at("boq");
            for (const auto& item : boq.at("items")) {
                outputs.boq.items.push_back(
                    {item.at("material_id").get<std::string>(),
                     item.at("quantity").get<double>(),
                     quantities::unit_from_string(item.at("unit").get<std::string>())});
            }
            outputs.boq.road_area_m2 = boq.at("road_area_m2").get<double>();
            outputs.boq.road_length_m = boq.at("road_length_m").get<double>();
            const auto& impact = d.at("impact");
            outputs.impact.characterised_kgco2e =
                impact.at("characterised_kgco2e").get<lca::CategoryTotals>();
            outputs.impact.normalised = impact.at("normalised").get<lca::CategoryTotals>();
            outputs.impact.weighted_single_score =
                impact.at("weighted_single_score").get<double>();
            outputs.impact.embodied_tco2e = impact.at("embodied_tco2e").get<double>();
            outputs.impact.per_km_tco2e = impact.at("per_km_tco2e").get<double>();
            record.derived = std::move(outputs);
        }
        if (j.contains("failure")) {
            record.failure = j.at("failure").get<std::string>();
        }
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("{}: bad project document: {}", source_name, e.what()));
    }
    return record;
}

} // namespace

std::string to_json_string(const ProjectRecord& record)
{
    return record_to_json(record).dump(2) + "\n";
}

ProjectRecord record_from_json_string(const std::string& text, const std::string& source_name)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(fmt::format("{}: {}", source_name, e.what()));
    }
    return record_from_json(j, source_name);
}

ProjectRecord load_project(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open project file: {}", path.string()));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto record = record_from_json_string(buffer.str(), path.string());
    // Relative grid files resolve against the project document's directory.
    if (record.terrain.grid_file) {
        std::filesystem::path grid(*record.terrain.grid_file);
        if (grid.is_relative() && path.has_parent_path()) {
            record.terrain.grid_file = (path.parent_path() / grid).string();
        }
    }
    return record;
}

void save_corpus(std::span<const ProjectRecord> records, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    json manifest;
    manifest["count"] = records.size();
    std::size_t failures = 0;
    json files = json::array();
    for (const auto& record : records) {
        const std::string filename = record.project_id + ".json";
        std::ofstream out(dir / filename, std::ios::binary);
        if (!out) {
            throw IoError(fmt::format("cannot write project file: {}",
                                      (dir / filename).string()));
        }
        out << to_json_string(record);
        files.push_back(filename);
        if (record.failure) {
            ++failures;
        }
    }
    manifest["projects"] = std::move(files);
    manifest["failures"] = failures;
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out) {
        throw IoError(fmt::format("cannot write manifest: {}", (dir / "manifest.json").string()));
    }
    out << manifest.dump(2) << "\n";
}

std::vector<ProjectRecord> load_corpus(const std::filesystem::path& dir)
{
    const auto manifest_path = dir / "manifest.json";
    std::ifstream in(manifest_path);
    if (!in) {
        throw IoError(fmt::format("cannot open manifest: {}", manifest_path.string()));
    }
    json manifest;
    try {
        in >> manifest;
    } catch (const json::parse_error& e) {
        throw SchemaError(fmt::format("{}: {}", manifest_path.string(), e.what()));
    }
    std::vector<ProjectRecord> records;
    for (const auto& file : manifest.at("projects")) {
        records.push_back(load_project(dir / file.get<std::string>()));
    }
    return records;
}

// ---------------------------------------------------------------------------
// Flattening for statistics
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kResultsColumns = {
    "project_id",     "length_m",        "width_m",
    "area_m2",        "embodied_tco2e",  "per_km_tco2e",
    "max_grade_before", "max_grade_after", "slope_reduction",
    "mean_abs_grade", "cut_m3",          "fill_m3",
    "cbr",            "soil_class",      "flood_class",
    "traffic_annual_esal", "design_life_y", "base_thickness_mm",
};

} // namespace

void write_results_csv(std::span<const ProjectRecord> records, std::ostream& out)
{
    out << fmt::format("{}\n", fmt::join(kResultsColumns, ","));
    for (const auto& record : records) {
        if (!record.completed()) {
            continue;
        }
        const auto& d = *record.derived;
        out << record.project_id << ',' << csv::format_full(d.boq.road_length_m) << ','
            << csv::format_full(record.alignment.width) << ','
            << csv::format_full(d.boq.road_area_m2) << ','
            << csv::format_full(d.impact.embodied_tco2e) << ','
            << csv::format_full(d.impact.per_km_tco2e) << ','
            << csv::format_full(d.grades.max_grade_before) << ','
            << csv::format_full(d.grades.max_grade_after) << ','
            << csv::format_full(d.grades.slope_reduction) << ','
            << csv::format_full(d.grades.mean_abs_grade) << ','
            << csv::format_full(d.cut_m3) << ',' << csv::format_full(d.fill_m3) << ','
            << csv::format_full(record.soil.cbr_base) << ','
            << pavement::to_string(record.soil.uscs_class) << ','
            << hydrology::to_string(record.flood_class) << ','
            << csv::format_full(record.traffic.annual_esal) << ','
            << record.traffic.design_life_years << ','
            << csv::format_full(d.section.base_thickness_mm) << '\n';
    }
}

stats::Dataset corpus_dataset(std::span<const ProjectRecord> records)
{
    std::vector<double> length, width, area, embodied, per_km, before, after, reduction,
        mean_grade, cut, fill, cbr, traffic, life, thickness;
    std::vector<std::string> soil, flood;
    for (const auto& record : records) {
        if (!record.completed()) {
            continue;
        }
        const auto& d = *record.derived;
        length.push_back(d.boq.road_length_m);
        width.push_back(record.alignment.width);
        area.push_back(d.boq.road_area_m2);
        embodied.push_back(d.impact.embodied_tco2e);
        per_km.push_back(d.impact.per_km_tco2e);
        before.push_back(d.grades.max_grade_before);
        after.push_back(d.grades.max_grade_after);
        reduction.push_back(d.grades.slope_reduction);
        mean_grade.push_back(d.grades.mean_abs_grade);
        cut.push_back(d.cut_m3);
        fill.push_back(d.fill_m3);
        cbr.push_back(record.soil.cbr_base);
        traffic.push_back(record.traffic.annual_esal);
        life.push_back(static_cast<double>(record.traffic.design_life_years));
        thickness.push_back(d.section.base_thickness_mm);
        soil.push_back(std::string(pavement::to_string(record.soil.uscs_class)));
        flood.push_back(std::string(hydrology::to_string(record.flood_class)));
    }

    stats::Dataset data;
    data.add_numeric("length_m", std::move(length));
    data.add_numeric("width_m", std::move(width));
    data.add_numeric("area_m2", std::move(area));
    data.add_numeric("embodied_tco2e", std::move(embodied));
    data.add_numeric("per_km_tco2e", std::move(per_km));
    data.add_numeric("max_grade_before", std::move(before));
    data.add_numeric("max_grade_after", std::move(after));
    data.add_numeric("slope_reduction", std::move(reduction));
    data.add_numeric("mean_abs_grade", std::move(mean_grade));
    data.add_numeric("cut_m3", std::move(cut));
    data.add_numeric("fill_m3", std::move(fill));
    data.add_numeric("cbr", std::move(cbr));
    data.add_numeric("traffic_annual_esal", std::move(traffic));
    data.add_numeric("design_life_y", std::move(life));
    data.add_numeric("base_thickness_mm", std::move(thickness));
    data.add_categorical("soil_class", std::move(soil));
    data.add_categorical("flood_class", std::move(flood));
    return data;
}

stats::Dataset dataset_from_results_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open results file: {}", path.string()));
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw SchemaError(fmt::format("{}: empty results file", path.string()));
    }
    const auto header = csv::split_line(line);
    if (header.empty()) {
        throw SchemaError(fmt::format("{}: missing header", path.string()));
    }

    std::vector<std::vector<std::string>> raw(header.size());
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (csv::trim(line).empty()) {
            continue;
        }
        const auto fields = csv::split_line(line);
        if (fields.size() != header.size()) {
            throw SchemaError(fmt::format("{}: line {}: expected {} fields, got {}",
                                          path.string(), line_no, header.size(), fields.size()));
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            raw[i].push_back(fields[i]);
        }
    }

    stats::Dataset data;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto& name = header[i];
        if (name == "project_id" || name == "soil_class" || name == "flood_class") {
            data.add_categorical(name, std::move(raw[i]));
            continue;
        }
        std::vector<double> values;
        values.reserve(raw[i].size());
        for (std::size_t row = 0; row < raw[i].size(); ++row) {
            values.push_back(csv::parse_double(raw[i][row], path.string(), row + 2, i + 1));
        }
        data.add_numeric(name, std::move(values));
    }
    return data;
}

stats::CorpusReport corpus_analysis(std::span<const ProjectRecord> records,
                                    const stats::AnalysisPlan& plan)
{
    return stats::corpus_analysis(corpus_dataset(records), plan);
}

} // namespace roadcarbon::corpus
