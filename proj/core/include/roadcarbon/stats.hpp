#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace roadcarbon::stats {

/// Regularized incomplete beta I_x(a, b) via the Lentz continued fraction.
double incomplete_beta(double a, double b, double x);

/// Two-sided tail probability of Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

/// Upper tail P(F > f) for an F distribution with (df1, df2).
double f_upper_tail_p(double f, double df1, double df2);

struct PearsonResult {
    double r = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

/// Pearson correlation with the t-distribution p-value on n-2 df.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

struct OlsResult {
    std::vector<double> coefficients; // intercept first, then one per predictor
    double r_squared = 0.0;
    double rss = 0.0;
    double tss = 0.0;
    std::size_t n = 0;
};

/// Ordinary least squares with intercept via Householder QR. Rank deficiency
/// raises RankDeficiencyError naming the dependent columns.
OlsResult ols(const std::vector<std::vector<double>>& predictors, std::span<const double> y,
              const std::vector<std::string>& names = {});

struct VifEntry {
    std::string name;
    double vif = 1.0;
    bool flagged = false;
};

struct OlsVifResult {
    OlsResult fit;
    std::vector<VifEntry> vif;
    double vif_threshold = 10.0;
};

OlsVifResult ols_vif(const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& predictors,
                     std::span<const double> y, double vif_threshold = 10.0);

struct PcaResult {
    std::vector<double> eigenvalues;              // descending
    std::vector<std::vector<double>> loadings;    // loadings[c] is component c
    std::vector<double> explained_variance_ratio; // sums to 1
};

/// PCA on the correlation matrix of the (internally standardized) columns.
PcaResult pca(const std::vector<std::vector<double>>& columns);

struct PairwiseComparison {
    std::string group_a;
    std::string group_b;
    double statistic = 0.0;
    double df = 0.0;
    double p_raw = 1.0;
    double p_adjusted = 1.0;
    int direction = 0; // sign of mean(a) - mean(b)
};

struct TestReport {
    double statistic = 0.0;
    double df = 0.0;  // Welch df, or between-groups df for ANOVA
    double df2 = 0.0; // within-groups df for ANOVA
    double p_value = 1.0;
    int direction = 0;
    bool degenerate = false;
    std::vector<PairwiseComparison> pairwise;
    std::vector<std::string> warnings;
    std::map<std::string, double> group_means;
};

/// Welch's two-sample t-test with Welch-Satterthwaite degrees of freedom.
TestReport t_test_independent(std::span<const double> a, std::span<const double> b);

/// One-way ANOVA with Bonferroni-adjusted pairwise Welch comparisons.
/// Groups with fewer than 2 members are dropped with a warning.
TestReport anova_bonferroni(std::span<const double> values,
                            std::span<const std::string> groups);

enum class LinearityVerdict { linear_adequate, log_log, quadratic };

std::string_view to_string(LinearityVerdict verdict);

struct ModelFit {
    std::string model;
    bool fitted = false;
    double r_squared = 0.0;
    double aic = 0.0;
    std::vector<double> coefficients;
    std::string note;
};

struct LinearityReport {
    ModelFit linear;
    ModelFit loglog;
    ModelFit quadratic;
    LinearityVerdict verdict = LinearityVerdict::linear_adequate;
    double margin = 0.02;
};

/// Fit linear, log-log and quadratic models and judge whether the linear one
/// is adequate: its R^2 must come within `margin` of the best model's.
LinearityReport linearity_report(std::span<const double> x, std::span<const double> y,
                                 double margin = 0.02);

/// Named columns of equal length: numeric vectors plus categorical labels.
class Dataset {
public:
    void add_numeric(std::string name, std::vector<double> values);
    void add_categorical(std::string name, std::vector<std::string> labels);

    std::span<const double> numeric(const std::string& name) const;
    std::span<const std::string> categorical(const std::string& name) const;
    bool has_numeric(const std::string& name) const;
    bool has_categorical(const std::string& name) const;
    std::vector<std::string> numeric_names() const;
    std::size_t rows() const noexcept { return rows_; }

private:
    void check_length(std::size_t incoming, const std::string& name);

    std::size_t rows_ = 0;
    bool any_ = false;
    std::map<std::string, std::vector<double>> numeric_;
    std::map<std::string, std::vector<std::string>> categorical_;
};

} // namespace roadcarbon::stats
