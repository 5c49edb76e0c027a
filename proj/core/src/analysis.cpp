#include "roadcarbon/analysis.hpp"

#include "roadcarbon/csv.hpp"
#include "roadcarbon/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace roadcarbon::stats {

using nlohmann::json;

namespace {

constexpr const char* kEmissionsColumn = "per_km_tco2e";

CorrelationEntry run_pearson(const Dataset& data, const std::string& x, const std::string& y)
{
    CorrelationEntry entry;
    entry.x = x;
    entry.y = y;
    try {
        entry.result = pearson(data.numeric(x), data.numeric(y));
        entry.ok = true;
    } catch (const std::exception& e) {
        entry.error = e.what();
    }
    return entry;
}

} // namespace

CorpusReport corpus_analysis(const Dataset& data, const AnalysisPlan& plan)
{
    if (data.rows() < 10) {
        throw DomainError(fmt::format("corpus analysis needs at least 10 records, got {}",
                                      data.rows()));
    }

    CorpusReport report;
    report.rows = data.rows();
    report.plan = plan;

    std::vector<std::string> geometry;
    for (const auto& name : plan.geometry_columns) {
        if (data.has_numeric(name)) {
            geometry.push_back(name);
        }
    }

    // 1. Correlation screen among the geometric parameters.
    for (std::size_t i = 0; i < geometry.size(); ++i) {
        for (std::size_t j = i + 1; j < geometry.size(); ++j) {
            report.geometry_correlations.push_back(run_pearson(data, geometry[i], geometry[j]));
        }
    }

    // 2. VIF screen of the geometry against per-km emissions; collinear
    //    parameters are substituted by the road area downstream.
    try {
        std::vector<std::vector<double>> predictors;
        for (const auto& name : geometry) {
            const auto col = data.numeric(name);
            predictors.emplace_back(col.begin(), col.end());
        }
        report.vif_screen.result = ols_vif(geometry, predictors, data.numeric(kEmissionsColumn),
                                           plan.vif_threshold);
        report.vif_screen.ok = true;
        for (const auto& entry : report.vif_screen.result.vif) {
            if (entry.flagged && entry.name != "area_m2") {
                report.vif_screen.substituted_by_area.push_back(entry.name);
            }
        }
    } catch (const std::exception& e) {
        report.vif_screen.error = e.what();
        if (const auto* rank = dynamic_cast<const RankDeficiencyError*>(&e)) {
            report.vif_screen.substituted_by_area = rank->columns();
        }
    }

    // 3..5. Directional correlations and the width comparison.
    report.area_emissions = run_pearson(data, "area_m2", kEmissionsColumn);
    report.slope_reduction_emissions =
        run_pearson(data, plan.slope_grouping_column, kEmissionsColumn);

    try {
        const auto widths = data.numeric("width_m");
        const auto emissions = data.numeric(kEmissionsColumn);
        std::set<double> distinct(widths.begin(), widths.end());
        if (distinct.size() != 2) {
            throw DegenerateInputError(fmt::format("width t-test needs exactly 2 widths, got {}",
                                                   distinct.size()));
        }
        report.width_ttest.narrow_width = *distinct.begin();
        report.width_ttest.wide_width = *distinct.rbegin();
        std::vector<double> narrow;
        std::vector<double> wide;
        for (std::size_t i = 0; i < widths.size(); ++i) {
            (widths[i] == report.width_ttest.wide_width ? wide : narrow).push_back(emissions[i]);
        }
        report.width_ttest.narrow_n = narrow.size();
        report.width_ttest.wide_n = wide.size();
        // Group a is the wide road, so direction > 0 means wide emits more.
        report.width_ttest.report = t_test_independent(wide, narrow);
        double sum = 0.0;
        for (const double v : wide) {
            sum += v;
        }
        report.width_ttest.wide_mean = sum / static_cast<double>(wide.size());
        sum = 0.0;
        for (const double v : narrow) {
            sum += v;
        }
        report.width_ttest.narrow_mean = sum / static_cast<double>(narrow.size());
        report.width_ttest.ok = true;
    } catch (const std::exception& e) {
        report.width_ttest.error = e.what();
    }

    // 6..7. Flood and soil ANOVAs on per-km emissions.
    const auto run_anova = [&](const std::string& name, const std::string& column) {
        GroupTestEntry entry;
        entry.name = name;
        try {
            const auto labels = data.categorical(column);
            entry.report = anova_bonferroni(data.numeric(kEmissionsColumn),
                                            std::span<const std::string>(labels));
            entry.ok = true;
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        return entry;
    };
    report.flood_anova = run_anova("flood_anova", "flood_class");
    report.soil_anova = run_anova("soil_anova", "soil_class");

    // 8. CBR against per-km emissions.
    report.cbr_emissions = run_pearson(data, "cbr", kEmissionsColumn);

    // 9. Linearity diagnostics for each numeric predictor.
    for (const auto& name : plan.linearity_predictors) {
        LinearityEntry entry;
        entry.predictor = name;
        try {
            entry.report = linearity_report(data.numeric(name), data.numeric(kEmissionsColumn),
                                            plan.linearity_margin);
            entry.ok = true;
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        report.linearity.push_back(std::move(entry));
    }

    return report;
}

namespace {

json correlation_to_json(const CorrelationEntry& entry)
{
    json j{{"x", entry.x}, {"y", entry.y}, {"ok", entry.ok}};
    if (entry.ok) {
        j["r"] = entry.result.r;
        j["p"] = entry.result.p_value;
        j["n"] = entry.result.n;
    } else {
        j["error"] = entry.error;
    }
    return j;
}

json test_report_to_json(const TestReport& report)
{
    json j{{"statistic", report.statistic}, {"df", report.df},
           {"p", report.p_value},          {"direction", report.direction},
           {"degenerate", report.degenerate}};
    if (report.df2 > 0.0) {
        j["df_within"] = report.df2;
    }
    if (!report.group_means.empty()) {
        j["group_means"] = report.group_means;
    }
    if (!report.pairwise.empty()) {
        json pairs = json::array();
        for (const auto& cmp : report.pairwise) {
            pairs.push_back(json{{"a", cmp.group_a},
                                 {"b", cmp.group_b},
                                 {"statistic", cmp.statistic},
                                 {"df", cmp.df},
                                 {"p_raw", cmp.p_raw},
                                 {"p_adjusted", cmp.p_adjusted},
                                 {"direction", cmp.direction}});
        }
        j["pairwise"] = std::move(pairs);
    }
    if (!report.warnings.empty()) {
        j["warnings"] = report.warnings;
    }
    return j;
}

json model_fit_to_json(const ModelFit& fit)
{
    json j{{"fitted", fit.fitted}};
    if (fit.fitted) {
        j["r_squared"] = fit.r_squared;
        j["aic"] = fit.aic;
        j["coefficients"] = fit.coefficients;
    }
    if (!fit.note.empty()) {
        j["note"] = fit.note;
    }
    return j;
}

std::string sig6(double value)
{
    if (std::isinf(value)) {
        return value > 0.0 ? "inf" : "-inf";
    }
    return csv::format_sig6(value);
}

void append_correlation_text(std::string& text, std::string_view title,
                             const CorrelationEntry& entry)
{
    text += fmt::format("[{}]\n", title);
    if (entry.ok) {
        text += fmt::format("  {} ~ {}: r={}, p={}, n={}\n\n", entry.x, entry.y,
                            sig6(entry.result.r), sig6(entry.result.p_value), entry.result.n);
    } else {
        text += fmt::format("  error: {}\n\n", entry.error);
    }
}

} // namespace

std::string CorpusReport::to_json() const
{
    json j;
    j["meta"] = json{{"rows", rows},
                     {"plan", json{{"vif_threshold", plan.vif_threshold},
                                   {"linearity_margin", plan.linearity_margin},
                                   {"alpha", plan.alpha},
                                   {"geometry_columns", plan.geometry_columns},
                                   {"linearity_predictors", plan.linearity_predictors},
                                   {"slope_grouping_column", plan.slope_grouping_column}}}};

    json screen = json::array();
    for (const auto& entry : geometry_correlations) {
        screen.push_back(correlation_to_json(entry));
    }
    j["geometry_correlations"] = std::move(screen);

    {
        json v{{"ok", vif_screen.ok}};
        if (vif_screen.ok) {
            v["r_squared"] = vif_screen.result.fit.r_squared;
            v["coefficients"] = vif_screen.result.fit.coefficients;
            json predictors = json::array();
            for (const auto& entry : vif_screen.result.vif) {
                predictors.push_back(json{{"name", entry.name},
                                          {"vif", entry.vif},
                                          {"flagged", entry.flagged}});
            }
            v["predictors"] = std::move(predictors);
        } else {
            v["error"] = vif_screen.error;
        }
        v["substituted_by_area"] = vif_screen.substituted_by_area;
        j["vif_screen"] = std::move(v);
    }

    j["area_emissions_pearson"] = correlation_to_json(area_emissions);
    j["slope_reduction_pearson"] = correlation_to_json(slope_reduction_emissions);

    {
        json w{{"ok", width_ttest.ok}};
        if (width_ttest.ok) {
            w["test"] = test_report_to_json(width_ttest.report);
            w["narrow_width"] = width_ttest.narrow_width;
            w["wide_width"] = width_ttest.wide_width;
            w["narrow_mean"] = width_ttest.narrow_mean;
            w["wide_mean"] = width_ttest.wide_mean;
            w["narrow_n"] = width_ttest.narrow_n;
            w["wide_n"] = width_ttest.wide_n;
        } else {
            w["error"] = width_ttest.error;
        }
        j["width_ttest"] = std::move(w);
    }

    const auto group_entry = [](const GroupTestEntry& entry) {
        json g{{"ok", entry.ok}};
        if (entry.ok) {
            g["test"] = test_report_to_json(entry.report);
        } else {
            g["error"] = entry.error;
        }
        return g;
    };
    j["flood_anova"] = group_entry(flood_anova);
    j["soil_anova"] = group_entry(soil_anova);
    j["cbr_pearson"] = correlation_to_json(cbr_emissions);

    json lin = json::object();
    for (const auto& entry : linearity) {
        json e{{"ok", entry.ok}};
        if (entry.ok) {
            e["verdict"] = std::string(to_string(entry.report.verdict));
            e["margin"] = entry.report.margin;
            e["linear"] = model_fit_to_json(entry.report.linear);
            e["log_log"] = model_fit_to_json(entry.report.loglog);
            e["quadratic"] = model_fit_to_json(entry.report.quadratic);
        } else {
            e["error"] = entry.error;
        }
        lin[entry.predictor] = std::move(e);
    }
    j["linearity"] = std::move(lin);

    return j.dump(2) + "\n";
}

std::string CorpusReport::to_text() const
{
    std::string text;
    text += fmt::format("Corpus analysis over {} records\n", rows);
    text += "================================\n\n";

    text += "[geometry correlation screen]\n";
    for (const auto& entry : geometry_correlations) {
        if (entry.ok) {
            text += fmt::format("  {} ~ {}: r={}, p={}\n", entry.x, entry.y, sig6(entry.result.r),
                                sig6(entry.result.p_value));
        } else {
            text += fmt::format("  {} ~ {}: error: {}\n", entry.x, entry.y, entry.error);
        }
    }
    text += "\n";

    text += fmt::format("[VIF screen: {} ~ geometry, threshold {}]\n", kEmissionsColumn,
                        sig6(plan.vif_threshold));
    if (vif_screen.ok) {
        text += fmt::format("  R^2={}\n", sig6(vif_screen.result.fit.r_squared));
        for (const auto& entry : vif_screen.result.vif) {
            text += fmt::format("  {}: VIF={}{}\n", entry.name, sig6(entry.vif),
                                entry.flagged ? " (flagged)" : "");
        }
    } else {
        text += fmt::format("  error: {}\n", vif_screen.error);
    }
    if (!vif_screen.substituted_by_area.empty()) {
        text += fmt::format("  substituted by road area: {}\n",
                            fmt::join(vif_screen.substituted_by_area, ", "));
    }
    text += "\n";

    append_correlation_text(text, "road area vs per-km emissions", area_emissions);
    append_correlation_text(text, "slope reduction vs per-km emissions",
                            slope_reduction_emissions);

    text += "[width t-test]\n";
    if (width_ttest.ok) {
        text += fmt::format("  mean({} m)={}, mean({} m)={}\n", sig6(width_ttest.wide_width),
                            sig6(width_ttest.wide_mean), sig6(width_ttest.narrow_width),
                            sig6(width_ttest.narrow_mean));
        text += fmt::format("  t={}, df={}, p={}, direction={}\n", sig6(width_ttest.report.statistic),
                            sig6(width_ttest.report.df), sig6(width_ttest.report.p_value),
                            width_ttest.report.direction > 0 ? "wide > narrow"
                                                             : (width_ttest.report.direction < 0
                                                                    ? "narrow > wide"
                                                                    : "equal"));
    } else {
        text += fmt::format("  error: {}\n", width_ttest.error);
    }
    text += "\n";

    const auto anova_text = [&](std::string_view title, const GroupTestEntry& entry) {
        std::string block = fmt::format("[{}]\n", title);
        if (entry.ok) {
            block += fmt::format("  F={}, df=({}, {}), p={}{}\n", sig6(entry.report.statistic),
                                 sig6(entry.report.df), sig6(entry.report.df2),
                                 sig6(entry.report.p_value),
                                 entry.report.degenerate ? " (degenerate)" : "");
            if (!entry.report.group_means.empty()) {
                block += "  means:";
                for (const auto& [name, mean] : entry.report.group_means) {
                    block += fmt::format(" {}={}", name, sig6(mean));
                }
                block += "\n";
            }
            for (const auto& warning : entry.report.warnings) {
                block += fmt::format("  warning: {}\n", warning);
            }
            for (const auto& cmp : entry.report.pairwise) {
                if (cmp.p_adjusted < plan.alpha) {
                    block += fmt::format("  {} vs {}: p_adj={} (direction {})\n", cmp.group_a,
                                         cmp.group_b, sig6(cmp.p_adjusted),
                                         cmp.direction > 0 ? ">" : (cmp.direction < 0 ? "<" : "="));
                }
            }
        } else {
            block += fmt::format("  error: {}\n", entry.error);
        }
        return block + "\n";
    };
    text += anova_text("flood-class ANOVA on per-km emissions", flood_anova);
    text += anova_text("soil-class ANOVA on per-km emissions", soil_anova);

    append_correlation_text(text, "CBR vs per-km emissions", cbr_emissions);

    text += fmt::format("[linearity diagnostics vs {}]\n", kEmissionsColumn);
    for (const auto& entry : linearity) {
        if (entry.ok) {
            const auto fit_text = [&](const ModelFit& fit) {
                return fit.fitted ? fmt::format("R^2={}", sig6(fit.r_squared))
                                  : std::string("skipped");
            };
            text += fmt::format("  {}: verdict={} (linear {}, log-log {}, quadratic {})\n",
                                entry.predictor, to_string(entry.report.verdict),
                                fit_text(entry.report.linear), fit_text(entry.report.loglog),
                                fit_text(entry.report.quadratic));
        } else {
            text += fmt::format("  {}: error: {}\n", entry.predictor, entry.error);
        }
    }
    return text;
}

} // namespace roadcarbon::stats
