#pragma once

#include "roadcarbon/stats.hpp"

#include <map>
#include <string>
#include <vector>

namespace roadcarbon::stats {

/// Which columns and thresholds the corpus battery runs with.
struct AnalysisPlan {
    double vif_threshold = 10.0;
    double linearity_margin = 0.02;
    double alpha = 0.05;
    std::vector<std::string> geometry_columns = {"length_m", "area_m2", "mean_abs_grade",
                                                 "max_grade_before"};
    std::vector<std::string> linearity_predictors = {"area_m2", "length_m", "cbr",
                                                     "traffic_annual_esal"};
    /// Column used for the slope-grouping variant of the landscape test; the
    /// grouping scheme is a plan choice, not a fixed rule.
    std::string slope_grouping_column = "slope_reduction";
};

struct CorrelationEntry {
    std::string x;
    std::string y;
    bool ok = false;
    std::string error;
    PearsonResult result;
};

struct VifScreen {
    bool ok = false;
    std::string error;
    OlsVifResult result;
    std::vector<std::string> substituted_by_area; // collinear columns replaced by road area
};

struct GroupTestEntry {
    std::string name;
    bool ok = false;
    std::string error;
    TestReport report;
};

struct WidthTest {
    bool ok = false;
    std::string error;
    TestReport report;
    double narrow_width = 0.0;
    double wide_width = 0.0;
    double narrow_mean = 0.0;
    double wide_mean = 0.0;
    std::size_t narrow_n = 0;
    std::size_t wide_n = 0;
};

struct LinearityEntry {
    std::string predictor;
    bool ok = false;
    std::string error;
    LinearityReport report;
};

/// Full corpus battery output. Key names are stable across runs so reports
/// can be diffed.
struct CorpusReport {
    std::size_t rows = 0;
    AnalysisPlan plan;

    std::vector<CorrelationEntry> geometry_correlations;
    VifScreen vif_screen;
    CorrelationEntry area_emissions;
    CorrelationEntry slope_reduction_emissions;
    WidthTest width_ttest;
    GroupTestEntry flood_anova;
    GroupTestEntry soil_anova;
    CorrelationEntry cbr_emissions;
    std::vector<LinearityEntry> linearity;

    std::string to_json() const; // full precision
    std::string to_text() const; // six significant digits
};

/// Run the battery in order: geometry correlation screen, VIF screen with
/// area substitution, area/slope/CBR correlations against per-km emissions,
/// the width t-test, flood and soil ANOVAs, and per-predictor linearity
/// diagnostics. Individual test failures are recorded, not fatal.
CorpusReport corpus_analysis(const Dataset& data, const AnalysisPlan& plan);

} // namespace roadcarbon::stats
