// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include "roadcarbon/commands.hpp"
#include "roadcarbon/config.hpp"
#include "roadcarbon/corpus.hpp"
#include "roadcarbon/errors.hpp"
#include "roadcarbon/hydrology.hpp"
#include "roadcarbon/lca.hpp"
#include "roadcarbon/pavement.hpp"
#include "roadcarbon/stats.hpp"
#include "roadcarbon/terrain.hpp"

#include "support/oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <iostream>
#include <random>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int g_failures = 0;
std::vector<std::string> g_notes;

void note(std::string text)
{
    g_notes.push_back(std::move(text));
}

void require(bool condition, const std::string& message)
{
    if (!condition) {
        ++g_failures;
        g_notes.push_back("FAILED: " + message);
    }
}

bool close_rel(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Criterion {
    int failures_before = 0;
    Clock::time_point start;
    std::string name;

    explicit Criterion(std::string title) : failures_before(g_failures), start(Clock::now()),
                                            name(std::move(title))
    {
        g_notes.clear();
    }

    void finish(double max_seconds = 0.0)
    {
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        const double seconds = static_cast<double>(elapsed.count()) / 1000.0;
        if (max_seconds > 0.0) {
            require(seconds < max_seconds,
                    fmt::format("{} took {:.2f}s, budget {:.0f}s", name, seconds, max_seconds));
        }
        const bool passed = g_failures == failures_before;
        std::cout << fmt::format("[{}] {} ({:.2f}s)\n", passed ? "PASS" : "FAIL", name, seconds);
        for (const auto& line : g_notes) {
            std::cout << "       " << line << "\n";
        }
    }
};

double uniform(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------

void criterion_1_eq1()
{
    Criterion c("criterion 1: resilient modulus (Eq. 1) against the high-precision oracle");
    require(roadcarbon::pavement::resilient_modulus(1.0) == 17.6,
            "CBR = 1 must give exactly 17.6");
    const double lo = std::log(0.5000001);
    const double hi = std::log(100.0);
    for (int i = 0; i < 100; ++i) {
        const double cbr = std::exp(lo + (hi - lo) * (static_cast<double>(i) + 0.5) / 100.0);
        const double got = roadcarbon::pavement::resilient_modulus(cbr);
        const double expected = static_cast<double>(oracles::eq1_resilient_modulus(cbr));
        require(std::abs(got - expected) <= 1e-10 * std::abs(expected),
                fmt::format("M_R({}) = {} vs oracle {}", cbr, got, expected));
    }
    c.finish(1.0);
}

void criterion_2_eq2()
{
    Criterion c("criterion 2: base modulus factor (Eq. 2) with clamped bounds");
    for (int i = 0; i < 100; ++i) {
        const double h = 50.0 + (1200.0 - 50.0) * (static_cast<double>(i) + 0.5) / 100.0;
        const double got = roadcarbon::pavement::base_modulus_factor(h).k;
        const double expected = static_cast<double>(oracles::eq2_base_factor(h));
        require(std::abs(got - expected) <= 1e-10 * std::max(1.0, std::abs(expected)),
                fmt::format("k({}) = {} vs oracle {}", h, got, expected));
    }
    // Boundary thicknesses located by independent bisection on the raw law.
    const double h_low = static_cast<double>(
        oracles::bisect([](long double h) { return oracles::eq2_base_factor_raw(h) - 2.0L; },
                        50.0L, 400.0L));
    const double h_high = static_cast<double>(
        oracles::bisect([](long double h) { return oracles::eq2_base_factor_raw(h) - 4.0L; },
                        400.0L, 1200.0L));
    require(std::abs(h_low - 166.8100537) < 1e-4, fmt::format("k=2 root at {}", h_low));
    require(std::abs(roadcarbon::pavement::base_modulus_factor(h_low).k - 2.0) <= 1e-10,
            "factor at the k=2 boundary");
    require(std::abs(roadcarbon::pavement::base_modulus_factor(h_high).k - 4.0) <= 1e-10,
            "factor at the k=4 boundary");
    note(fmt::format("boundary roots: h(k=2) = {:.4f} mm, h(k=4) = {:.4f} mm", h_low, h_high));
    c.finish(1.0);
}

void criterion_3_earthworks()
{
    using namespace roadcarbon::terrain;
    Criterion c("criterion 3: earthworks volumes against closed-form sections");

    const std::size_t nx = 16;
    const std::size_t ny = 9;
    const TerrainSurface flat({0.0, 0.0}, 10.0, nx, ny, std::vector<double>(nx * ny, 0.0));

    Alignment slab;
    slab.vertices = {{20.0, 40.0}, {120.0, 40.0}};
    slab.width = 10.0;
    slab.design_grade = {-1.0, -1.0};
    auto volumes_of = [&](const Alignment& alignment) {
        const auto samples = sample_alignment(alignment, 10.0);
        std::vector<CrossSection> sections;
        for (const auto& sample : samples) {
            sections.push_back(cross_section(flat, alignment, sample.station, 5.0, 0.5));
        }
        return cut_fill_volumes(sections);
    };

    const auto slab_volumes = volumes_of(slab);
    require(std::abs(slab_volumes.cut_m3 - 1000.0) <= 0.005 * 1000.0,
            fmt::format("slab cut = {} m3, expected 1000 +- 0.5%", slab_volumes.cut_m3));
    require(slab_volumes.fill_m3 == 0.0, "slab has no fill");

    Alignment taper = slab;
    taper.design_grade = {0.0, -1.0}; // cut area ramps 0 -> 10 over 100 m
    const auto taper_volumes = volumes_of(taper);
    require(std::abs(taper_volumes.cut_m3 - 500.0) <= 0.005 * 500.0,
            fmt::format("taper cut = {} m3, expected 500 +- 0.5%", taper_volumes.cut_m3));
    c.finish();
}

void criterion_4_rational()
{
    Criterion c("criterion 4: rational-method unit identity");
    const double q = roadcarbon::hydrology::peak_discharge({1.0, 1.0, 360.0});
    require(q == 1.0, fmt::format("Q = {} must be exactly 1", q));
    c.finish();
}

void criterion_5_lca_linearity()
{
    using roadcarbon::quantities::BillOfQuantities;
    using roadcarbon::quantities::BoqItem;
    using roadcarbon::quantities::Unit;
    Criterion c("criterion 5: characterisation linearity over 1000 random BoQ pairs");

    const auto db = roadcarbon::lca::FactorDatabase::from_rows({
        {"aggregate", "GWP", Unit::cubic_metre, 450.0},
        {"excavation", "GWP", Unit::cubic_metre, 40.0},
        {"imported_fill", "GWP", Unit::cubic_metre, 200.0},
        {"haulage", "GWP", Unit::tonne, 20.0},
        {"concrete", "GWP", Unit::cubic_metre, 300.0},
        {"riprap", "GWP", Unit::tonne, 80.0},
    });
    const std::vector<std::pair<std::string, Unit>> pool = {
        {"aggregate", Unit::cubic_metre}, {"excavation", Unit::cubic_metre},
        {"imported_fill", Unit::cubic_metre}, {"haulage", Unit::tonne},
        {"concrete", Unit::cubic_metre}, {"riprap", Unit::tonne},
    };

    std::mt19937_64 rng(20240042);
    auto random_boq = [&]() {
        BillOfQuantities boq;
        boq.road_length_m = 1000.0;
        boq.road_area_m2 = 4000.0;
        for (const auto& [id, unit] : pool) {
            if (rng() % 3 != 0) {
                boq.items.push_back({id, 1.0e4 * uniform(rng), unit});
            }
        }
        return boq;
    };

    for (int trial = 0; trial < 1000; ++trial) {
        const auto b1 = random_boq();
        const auto b2 = random_boq();
        const double a = 10.0 * uniform(rng);
        const double b = 10.0 * uniform(rng);

        BillOfQuantities combined;
        combined.road_length_m = 1000.0;
        combined.road_area_m2 = 4000.0;
        for (const auto& item : b1.items) {
            combined.items.push_back({item.material_id, a * item.quantity, item.unit});
        }
        for (const auto& item : b2.items) {
            combined.items.push_back({item.material_id, b * item.quantity, item.unit});
        }

        const double lhs = roadcarbon::lca::characterize(combined, db).at("GWP");
        const double rhs = a * roadcarbon::lca::characterize(b1, db).at("GWP") +
                           b * roadcarbon::lca::characterize(b2, db).at("GWP");
        if (!close_rel(lhs, rhs, 1e-9)) {
            require(false, fmt::format("trial {}: {} vs {}", trial, lhs, rhs));
            break;
        }
    }
    c.finish();
}

void criterion_6_stats_oracles()
{
    using namespace roadcarbon::stats;
    Criterion c("criterion 6: statistics against extended-precision oracles (50 seeded "
                "instances each)");

    std::mt19937_64 rng(777);
    auto random_vec = [&](std::size_t n, double lo = -5.0, double hi = 5.0) {
        std::vector<double> v(n);
        for (auto& x : v) {
            x = lo + (hi - lo) * uniform(rng);
        }
        return v;
    };

    // pearson
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 5 + rng() % 16;
        const auto x = random_vec(n);
        auto y = random_vec(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += 0.5 * x[i];
        }
        const auto got = pearson(x, y);
        const auto expected = oracles::pearson(x, y);
        require(close_rel(got.r, static_cast<double>(expected.r), 1e-8),
                fmt::format("pearson r trial {}", trial));
        require(close_rel(got.p_value, static_cast<double>(expected.p), 1e-8),
                fmt::format("pearson p trial {}", trial));
    }

    // ols_vif
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 8 + rng() % 13;
        const auto x1 = random_vec(n);
        const auto x2 = random_vec(n);
        const auto x3 = random_vec(n);
        const auto y = random_vec(n);
        const auto got = ols_vif({"x1", "x2", "x3"}, {x1, x2, x3}, y);
        const auto expected = oracles::ols({x1, x2, x3}, y);
        for (std::size_t i = 0; i < got.fit.coefficients.size(); ++i) {
            require(close_rel(got.fit.coefficients[i],
                              static_cast<double>(expected.coefficients[i]), 1e-8),
                    fmt::format("ols coefficient {} trial {}", i, trial));
        }
        require(close_rel(got.fit.r_squared, static_cast<double>(expected.r_squared), 1e-8),
                fmt::format("ols R^2 trial {}", trial));
    }

    // pca
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 8 + rng() % 13;
        const std::size_t p = 3 + rng() % 3;
        std::vector<std::vector<double>> columns;
        for (std::size_t j = 0; j < p; ++j) {
            columns.push_back(random_vec(n));
        }
        const auto got = pca(columns);
        const auto expected = oracles::psd_eigenvalues(oracles::correlation_matrix(columns));
        for (std::size_t i = 0; i < p; ++i) {
            require(close_rel(got.eigenvalues[i], static_cast<double>(expected[i]), 1e-8),
                    fmt::format("pca eigenvalue {} trial {}", i, trial));
        }
    }

    // Welch t-test
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t na = 4 + rng() % 17;
        const std::size_t nb = 4 + rng() % 17;
        const auto a = random_vec(na, 0.0, 4.0);
        const auto b = random_vec(nb, 0.5, 5.0);
        const auto got = t_test_independent(a, b);
        const auto expected = oracles::welch(a, b);
        require(close_rel(got.statistic, static_cast<double>(expected.t), 1e-8),
                fmt::format("welch t trial {}", trial));
        require(close_rel(got.df, static_cast<double>(expected.df), 1e-8),
                fmt::format("welch df trial {}", trial));
        require(close_rel(got.p_value, static_cast<double>(expected.p), 1e-8),
                fmt::format("welch p trial {}", trial));
    }

    // one-way ANOVA
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = 3 + rng() % 2;
        std::vector<double> values;
        std::vector<std::string> labels;
        std::vector<std::vector<double>> groups;
        for (std::size_t g = 0; g < k; ++g) {
            const std::size_t n = 4 + rng() % 2; // k * n stays within 20 observations
            const auto members = random_vec(n, static_cast<double>(g), g + 3.0);
            groups.push_back(members);
            for (const double v : members) {
                values.push_back(v);
                labels.push_back(fmt::format("g{}", g));
            }
        }
        const auto got = anova_bonferroni(values, labels);
        const auto expected = oracles::anova(groups);
        require(close_rel(got.statistic, static_cast<double>(expected.f), 1e-8),
                fmt::format("anova F trial {}", trial));
        require(close_rel(got.p_value, static_cast<double>(expected.p), 1e-8),
                fmt::format("anova p trial {}", trial));
    }

    // Degenerate cases must surface as typed errors, never as numbers.
    {
        const std::vector<double> constant(6, 1.0);
        const std::vector<double> varying = {1, 2, 3, 4, 5, 6};
        bool threw = false;
        try {
            pearson(constant, varying);
        } catch (const roadcarbon::DegenerateInputError&) {
            threw = true;
        }
        require(threw, "pearson zero variance must throw DegenerateInputError");

        threw = false;
        try {
            ols_vif({"v", "v2"}, {varying, varying}, constant);
        } catch (const roadcarbon::RankDeficiencyError&) {
            threw = true;
        }
        require(threw, "duplicated column must throw RankDeficiencyError");

        threw = false;
        try {
            pca({varying, constant});
        } catch (const roadcarbon::DegenerateInputError&) {
            threw = true;
        }
        require(threw, "constant PCA column must throw DegenerateInputError");

        const auto same = t_test_independent(constant, constant);
        require(same.degenerate && same.p_value == 1.0,
                "identical constant groups produce the degenerate p = 1 report");
    }
    c.finish(10.0);
}

// Shared corpus state for criteria 7, 9, 10.
struct CorpusRun {
    roadcarbon::RunConfig config;
    std::vector<roadcarbon::corpus::ProjectRecord> records;
    roadcarbon::stats::CorpusReport report;
    roadcarbon::stats::Dataset data;
};

CorpusRun run_demo_corpus()
{
    CorpusRun run;
    run.config = roadcarbon::RunConfig::from_file(fs::path(ROADCARBON_DATA_DIR) /
                                                  "demo_config.json");
    const auto db = roadcarbon::lca::FactorDatabase::from_csv(
        run.config.resolve(run.config.factors_path));
    run.records.reserve(run.config.generator.project_count);
    for (std::size_t i = 0; i < run.config.generator.project_count; ++i) {
        run.records.push_back(roadcarbon::corpus::run_pipeline(
            roadcarbon::corpus::generate_project(run.config.generator, i), run.config, db));
    }
    run.data = roadcarbon::corpus::corpus_dataset(run.records);
    run.report = roadcarbon::stats::corpus_analysis(run.data, run.config.plan);
    return run;
}

void criterion_7_directional(const CorpusRun& run, double corpus_seconds)
{
    Criterion c("criterion 7: directional findings on the seed-42 corpus");
    require(corpus_seconds < 60.0,
            fmt::format("corpus + analysis took {:.2f}s, budget 60s", corpus_seconds));
    require(run.config.generator.seed == 42, "bundled config must pin seed 42");
    require(run.records.size() == 200, "bundled config must generate 200 projects");

    std::size_t failures = 0;
    for (const auto& record : run.records) {
        if (!record.completed()) {
            ++failures;
        }
    }
    note(fmt::format("completed {} / {} projects", run.records.size() - failures,
                     run.records.size()));

    // (a) road area vs per-km emissions: positive and significant.
    const auto& area = run.report.area_emissions;
    require(area.ok, "area correlation must run");
    require(area.result.r > 0.0, fmt::format("area r = {}", area.result.r));
    require(area.result.p_value < 0.05, fmt::format("area p = {}", area.result.p_value));
    note(fmt::format("area vs per-km: r = {:.4f}, p = {:.3g}", area.result.r,
                     area.result.p_value));

    // (b) width comparison: 4.0 m emits more than 3.5 m, significantly.
    const auto& width = run.report.width_ttest;
    require(width.ok, "width t-test must run");
    require(width.wide_mean > width.narrow_mean,
            fmt::format("means {} vs {}", width.wide_mean, width.narrow_mean));
    require(width.report.p_value < 0.05, fmt::format("width p = {}", width.report.p_value));
    note(fmt::format("width: mean(4.0) = {:.1f}, mean(3.5) = {:.1f}, p = {:.3g}",
                     width.wide_mean, width.narrow_mean, width.report.p_value));

    // (c) slope reduction vs per-km emissions: negative.
    const auto& slope = run.report.slope_reduction_emissions;
    require(slope.ok, "slope-reduction correlation must run");
    require(slope.result.r < 0.0, fmt::format("slope-reduction r = {}", slope.result.r));
    note(fmt::format("slope reduction vs per-km: r = {:.4f}, p = {:.3g}", slope.result.r,
                     slope.result.p_value));

    // (d) soil-class ANOVA: significant, with well-graded gravel below fat clay.
    const auto& soil = run.report.soil_anova;
    require(soil.ok, "soil ANOVA must run");
    require(soil.report.p_value < 0.05, fmt::format("soil p = {}", soil.report.p_value));
    require(soil.report.group_means.count("GW") == 1 && soil.report.group_means.count("CH") == 1,
            "GW and CH groups must both be present");
    if (soil.report.group_means.count("GW") == 1 && soil.report.group_means.count("CH") == 1) {
        require(soil.report.group_means.at("GW") < soil.report.group_means.at("CH"),
                fmt::format("GW mean {} vs CH mean {}", soil.report.group_means.at("GW"),
                            soil.report.group_means.at("CH")));
        note(fmt::format("soil: F = {:.2f}, p = {:.3g}, GW mean = {:.1f}, CH mean = {:.1f}",
                         soil.report.statistic, soil.report.p_value,
                         soil.report.group_means.at("GW"), soil.report.group_means.at("CH")));
    }

    // (e) flood-class ANOVA on the flood-neutral configuration: no effect.
    const auto& flood = run.report.flood_anova;
    require(flood.ok, "flood ANOVA must run");
    require(flood.report.p_value > 0.05, fmt::format("flood p = {}", flood.report.p_value));
    note(fmt::format("flood: F = {:.3f}, p = {:.3g}", flood.report.statistic,
                     flood.report.p_value));

    // The seed-fixed statistics agree with the independent oracles.
    {
        const auto area_col = run.data.numeric("area_m2");
        const auto perkm_col = run.data.numeric("per_km_tco2e");
        const auto oracle = oracles::pearson(std::vector<double>(area_col.begin(), area_col.end()),
                                             std::vector<double>(perkm_col.begin(),
                                                                 perkm_col.end()));
        require(close_rel(area.result.r, static_cast<double>(oracle.r), 1e-8),
                "area r agrees with the oracle");
        require(close_rel(area.result.p_value, static_cast<double>(oracle.p), 1e-8),
                "area p agrees with the oracle");

        const auto widths = run.data.numeric("width_m");
        std::vector<double> wide_group;
        std::vector<double> narrow_group;
        for (std::size_t i = 0; i < widths.size(); ++i) {
            (widths[i] == width.wide_width ? wide_group : narrow_group)
                .push_back(perkm_col[i]);
        }
        const auto welch = oracles::welch(wide_group, narrow_group);
        require(close_rel(width.report.statistic, static_cast<double>(welch.t), 1e-8),
                "width t agrees with the oracle");

        const auto collect_groups = [&](const std::string& column) {
            const auto labels = run.data.categorical(column);
            std::map<std::string, std::vector<double>> by_label;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                by_label[labels[i]].push_back(perkm_col[i]);
            }
            std::vector<std::vector<double>> groups;
            for (auto& [label, group] : by_label) {
                if (group.size() >= 2) {
                    groups.push_back(std::move(group));
                }
            }
            return groups;
        };
        const auto flood_oracle = oracles::anova(collect_groups("flood_class"));
        require(close_rel(flood.report.statistic, static_cast<double>(flood_oracle.f), 1e-8),
                "flood F agrees with the oracle");
        require(close_rel(flood.report.p_value, static_cast<double>(flood_oracle.p), 1e-8),
                "flood p agrees with the oracle");
        const auto soil_oracle = oracles::anova(collect_groups("soil_class"));
        require(close_rel(soil.report.statistic, static_cast<double>(soil_oracle.f), 1e-8),
                "soil F agrees with the oracle");
    }
    c.finish();
}

void criterion_8_linearity_diagnostic()
{
    using namespace roadcarbon::stats;
    Criterion c("criterion 8: linearity diagnostic separates power-law from linear data");

    std::vector<double> x;
    std::vector<double> y_power;
    std::vector<double> y_linear;
    for (double cbr = 0.5; cbr <= 100.0; cbr *= 1.2) {
        x.push_back(cbr);
        y_power.push_back(17.6 * std::pow(cbr, 0.64));
        y_linear.push_back(3.0 + 2.0 * cbr);
    }

    const auto power_report = linearity_report(x, y_power);
    require(power_report.verdict != LinearityVerdict::linear_adequate,
            "power-law data must not be judged linear");
    require(power_report.loglog.fitted && power_report.loglog.r_squared > 0.999,
            fmt::format("log-log R^2 = {}", power_report.loglog.r_squared));
    note(fmt::format("power-law: verdict = {}, log-log R^2 = {:.6f}, linear R^2 = {:.4f}",
                     to_string(power_report.verdict), power_report.loglog.r_squared,
                     power_report.linear.r_squared));

    const auto linear_verdict = linearity_report(x, y_linear);
    require(linear_verdict.verdict == LinearityVerdict::linear_adequate,
            "exactly linear data must be judged linear-adequate");
    c.finish();
}

void criterion_9_magnitude(const CorpusRun& run)
{
    Criterion c("criterion 9: corpus mean per-km emissions inside the calibration band");
    const auto perkm = run.data.numeric("per_km_tco2e");
    double sum = 0.0;
    for (const double v : perkm) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(perkm.size());
    double ss = 0.0;
    for (const double v : perkm) {
        ss += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(perkm.size() - 1));
    note(fmt::format("mean = {:.1f} tCO2e/km, sd = {:.1f}, n = {}", mean, sd, perkm.size()));
    require(mean >= 400.0 && mean <= 1400.0,
            fmt::format("mean per-km {} outside [400, 1400]", mean));
    c.finish();
}

void criterion_10_determinism()
{
    Criterion c("criterion 10: corpus + analyze runs are byte-identical");

    const auto base = fs::temp_directory_path() / "roadcarbon_acceptance_det";
    fs::remove_all(base);
    fs::create_directories(base);

    auto slurp = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };

    for (const auto* tag : {"runA", "runB"}) {
        roadcarbon::commands::Options options;
        options.config_path = fs::path(ROADCARBON_DATA_DIR) / "demo_config.json";
        options.out_dir = base / tag;
        std::ostringstream out;
        std::ostringstream err;
        const int corpus_code = roadcarbon::commands::cmd_corpus(options, out, err);
        require(corpus_code == 0, fmt::format("cmd_corpus exit {} for {}", corpus_code, tag));
        const int analyze_code = roadcarbon::commands::cmd_analyze(
            base / tag / "results.csv", options, out, err);
        require(analyze_code == 0, fmt::format("cmd_analyze exit {} for {}", analyze_code, tag));
    }

    for (const auto* file : {"results.csv", "report.json", "report.txt"}) {
        require(slurp(base / "runA" / file) == slurp(base / "runB" / file),
                fmt::format("{} differs between runs", file));
    }
    require(slurp(base / "runA" / "corpus" / "manifest.json") ==
                slurp(base / "runB" / "corpus" / "manifest.json"),
            "manifest differs between runs");
    require(slurp(base / "runA" / "corpus" / "p0042.json") ==
                slurp(base / "runB" / "corpus" / "p0042.json"),
            "project document differs between runs");
    fs::remove_all(base);
    c.finish();
}

} // namespace

int main()
{
    criterion_1_eq1();
    criterion_2_eq2();
    criterion_3_earthworks();
    criterion_4_rational();
    criterion_5_lca_linearity();
    criterion_6_stats_oracles();

    CorpusRun run;
    double corpus_seconds = 0.0;
    try {
        const auto start = Clock::now();
        run = run_demo_corpus();
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        corpus_seconds = static_cast<double>(ms) / 1000.0;
        std::cout << fmt::format("-- seed-42 corpus generated and analysed in {:.2f}s\n",
                                 corpus_seconds);
    } catch (const std::exception& e) {
        std::cout << fmt::format("[FAIL] corpus run: {}\n", e.what());
        return 1;
    }
    criterion_7_directional(run, corpus_seconds);
    criterion_8_linearity_diagnostic();
    criterion_9_magnitude(run);
    criterion_10_determinism();

    if (g_failures != 0) {
        std::cout << fmt::format("\n{} acceptance check(s) failed\n", g_failures);
        return 1;
    }
    std::cout << "\nall acceptance criteria passed\n";
    return 0;
}
