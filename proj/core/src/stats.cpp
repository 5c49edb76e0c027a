#include "roadcarbon/stats.hpp"

#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace roadcarbon::stats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(std::span<const double> values, std::string_view what)
{
    for (const double v : values) {
        if (!std::isfinite(v)) {
            throw DomainError(fmt::format("{} contains a non-finite value", what));
        }
    }
}

double mean_of(std::span<const double> values)
{
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values, double mean)
{
    double ss = 0.0;
    for (const double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return ss / static_cast<double>(values.size() - 1);
}

// Continued-fraction kernel of the regularized incomplete beta (modified
// Lentz), evaluated in long double for ~1e-16 accuracy.
long double beta_cf(long double a, long double b, long double x)
{
    constexpr int max_iterations = 400;
    constexpr long double eps = 1e-18L;
    constexpr long double fpmin = 1e-300L;

    const long double qab = a + b;
    const long double qap = a + 1.0L;
    const long double qam = a - 1.0L;
    long double c = 1.0L;
    long double d = 1.0L - qab * x / qap;
    if (std::fabs(d) < fpmin) {
        d = fpmin;
    }
    d = 1.0L / d;
    long double h = d;
    for (int m = 1; m <= max_iterations; ++m) {
        const auto md = static_cast<long double>(m);
        const long double m2 = 2.0L * md;
        long double aa = md * (b - md) * x / ((qam + m2) * (a + m2));
        d = 1.0L + aa * d;
        if (std::fabs(d) < fpmin) {
            d = fpmin;
        }
        c = 1.0L + aa / c;
        if (std::fabs(c) < fpmin) {
            c = fpmin;
        }
        d = 1.0L / d;
        h *= d * c;
        aa = -(a + md) * (qab + md) * x / ((a + m2) * (qap + m2));
        d = 1.0L + aa * d;
        if (std::fabs(d) < fpmin) {
            d = fpmin;
        }
        c = 1.0L + aa / c;
        if (std::fabs(c) < fpmin) {
            c = fpmin;
        }
        d = 1.0L / d;
        const long double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0L) < eps) {
            break;
        }
    }
    return h;
}

long double incomplete_beta_ld(long double a, long double b, long double x)
{
    if (x <= 0.0L) {
        return 0.0L;
    }
    if (x >= 1.0L) {
        return 1.0L;
    }
    const long double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                       a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0L) / (a + b + 2.0L)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0L - front * beta_cf(b, a, 1.0L - x) / b;
}

} // namespace

double incomplete_beta(double a, double b, double x)
{
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError(fmt::format("incomplete beta needs positive shape parameters, "
                                      "got a={}, b={}",
                                      a, b));
    }
    if (x < 0.0 || x > 1.0) {
        throw DomainError(fmt::format("incomplete beta argument must be in [0, 1], got {}", x));
    }
    return static_cast<double>(incomplete_beta_ld(a, b, x));
}

double student_t_two_sided_p(double t, double df)
{
    if (!(df > 0.0)) {
        throw DomainError(fmt::format("t distribution needs positive df, got {}", df));
    }
    if (std::isinf(t)) {
        return 0.0;
    }
    const double x = df / (df + t * t);
    return incomplete_beta(df / 2.0, 0.5, x);
}

double f_upper_tail_p(double f, double df1, double df2)
{
    if (!(df1 > 0.0) || !(df2 > 0.0)) {
        throw DomainError(fmt::format("F distribution needs positive df, got ({}, {})", df1,
                                      df2));
    }
    if (f <= 0.0) {
        return 1.0;
    }
    if (std::isinf(f)) {
        return 0.0;
    }
    return incomplete_beta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) {
        throw DomainError(fmt::format("pearson needs equal lengths, got {} and {}", x.size(),
                                      y.size()));
    }
    if (x.size() < 3) {
        throw DomainError(fmt::format("pearson needs n >= 3, got {}", x.size()));
    }
    require_finite(x, "x");
    require_finite(y, "y");

    const double mx = mean_of(x);
    const double my = mean_of(y);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) {
        throw DegenerateInputError("pearson input has zero variance");
    }

    PearsonResult result;
    result.n = x.size();
    result.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);

    const auto df = static_cast<double>(x.size() - 2);
    const double one_minus_r2 = std::max(0.0, 1.0 - result.r * result.r);
    if (one_minus_r2 == 0.0) {
        result.p_value = 0.0;
    } else {
        const double t = result.r * std::sqrt(df / one_minus_r2);
        result.p_value = student_t_two_sided_p(t, df);
    }
    return result;
}

namespace {

// Householder QR least squares on the design matrix [1 | predictors].
// Returns coefficients and residual sum of squares; throws when a pivot
// collapses, naming the offending design columns.
struct QrFit {
    std::vector<double> coefficients;
    double rss = 0.0;
};

QrFit qr_least_squares(const std::vector<std::vector<double>>& predictors,
                       std::span<const double> y, const std::vector<std::string>& names)
{
    const std::size_t n = y.size();
    const std::size_t p = predictors.size() + 1;

    // Column-major working copy of the design matrix.
    std::vector<std::vector<double>> a(p, std::vector<double>(n));
    std::fill(a[0].begin(), a[0].end(), 1.0);
    for (std::size_t j = 0; j < predictors.size(); ++j) {
        a[j + 1].assign(predictors[j].begin(), predictors[j].end());
    }
    std::vector<double> rhs(y.begin(), y.end());

    double max_norm = 0.0;
    for (const auto& col : a) {
        double ss = 0.0;
        for (const double v : col) {
            ss += v * v;
        }
        max_norm = std::max(max_norm, std::sqrt(ss));
    }

    std::vector<double> diag(p, 0.0);
    std::vector<std::string> dependent;
    for (std::size_t k = 0; k < p; ++k) {
        double sigma = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            sigma += a[k][i] * a[k][i];
        }
        const double alpha = a[k][k] >= 0.0 ? -std::sqrt(sigma) : std::sqrt(sigma);
        diag[k] = alpha;
        if (std::abs(alpha) <= 1e-10 * std::max(1.0, max_norm)) {
            dependent.push_back(k == 0 ? std::string("intercept")
                                       : (k - 1 < names.size() ? names[k - 1]
                                                               : fmt::format("x{}", k)));
            continue;
        }
        a[k][k] -= alpha;
        double beta = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            beta += a[k][i] * a[k][i];
        }
        beta = 2.0 / beta;
        for (std::size_t j = k + 1; j < p; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < n; ++i) {
                dot += a[k][i] * a[j][i];
            }
            dot *= beta;
            for (std::size_t i = k; i < n; ++i) {
                a[j][i] -= dot * a[k][i];
            }
        }
        double dot = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            dot += a[k][i] * rhs[i];
        }
        dot *= beta;
        for (std::size_t i = k; i < n; ++i) {
            rhs[i] -= dot * a[k][i];
        }
    }
    if (!dependent.empty()) {
        throw RankDeficiencyError(fmt::format("design matrix is rank deficient; dependent "
                                              "columns: {}",
                                              fmt::join(dependent, ", ")),
                                  dependent);
    }

    QrFit fit;
    fit.coefficients.assign(p, 0.0);
    for (std::size_t kk = p; kk-- > 0;) {
        double sum = rhs[kk];
        for (std::size_t j = kk + 1; j < p; ++j) {
            sum -= a[j][kk] * fit.coefficients[j];
        }
        fit.coefficients[kk] = sum / diag[kk];
    }
    for (std::size_t i = p; i < n; ++i) {
        fit.rss += rhs[i] * rhs[i];
    }
    return fit;
}

} // namespace

OlsResult ols(const std::vector<std::vector<double>>& predictors, std::span<const double> y,
              const std::vector<std::string>& names)
{
    const std::size_t n = y.size();
    for (std::size_t j = 0; j < predictors.size(); ++j) {
        if (predictors[j].size() != n) {
            throw DomainError(fmt::format("predictor {} has {} rows, response has {}", j,
                                          predictors[j].size(), n));
        }
        require_finite(predictors[j], "predictor");
    }
    require_finite(y, "response");
    if (n < predictors.size() + 2) {
        throw DomainError(fmt::format("OLS needs n > predictors + 1 ({} rows, {} predictors)", n,
                                      predictors.size()));
    }

    const auto fit = qr_least_squares(predictors, y, names);

    OlsResult result;
    result.coefficients = fit.coefficients;
    result.n = n;
    result.rss = fit.rss;
    const double my = mean_of(y);
    for (const double v : y) {
        result.tss += (v - my) * (v - my);
    }
    if (result.tss <= 0.0) {
        throw DegenerateInputError("OLS response has zero variance");
    }
    result.r_squared = 1.0 - result.rss / result.tss;
    return result;
}

OlsVifResult ols_vif(const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& predictors,
                     std::span<const double> y, double vif_threshold)
{
    if (names.size() != predictors.size()) {
        throw DomainError(fmt::format("{} names for {} predictors", names.size(),
                                      predictors.size()));
    }
    OlsVifResult result;
    result.vif_threshold = vif_threshold;
    result.fit = ols(predictors, y, names);

    for (std::size_t j = 0; j < predictors.size(); ++j) {
        VifEntry entry;
        entry.name = names[j];
        if (predictors.size() == 1) {
            entry.vif = 1.0;
        } else {
            std::vector<std::vector<double>> others;
            std::vector<std::string> other_names;
            for (std::size_t k = 0; k < predictors.size(); ++k) {
                if (k != j) {
                    others.push_back(predictors[k]);
                    other_names.push_back(names[k]);
                }
            }
            const auto aux = ols(others, predictors[j], other_names);
            const double denom = 1.0 - aux.r_squared;
            entry.vif = denom <= 1e-12 ? kInf : 1.0 / denom;
        }
        entry.flagged = entry.vif > vif_threshold;
        result.vif.push_back(std::move(entry));
    }
    return result;
}

namespace {

// Cyclic Jacobi eigen-decomposition of a symmetric matrix (row-major, size p).
void jacobi_eigen(std::vector<double>& m, std::size_t p, std::vector<double>& eigenvalues,
                  std::vector<std::vector<double>>& vectors)
{
    vectors.assign(p, std::vector<double>(p, 0.0));
    for (std::size_t i = 0; i < p; ++i) {
        vectors[i][i] = 1.0;
    }

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i + 1; j < p; ++j) {
                off += m[i * p + j] * m[i * p + j];
            }
        }
        if (off < 1e-28) {
            break;
        }
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i + 1; j < p; ++j) {
                const double apq = m[i * p + j];
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                const double app = m[i * p + i];
                const double aqq = m[j * p + j];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < p; ++k) {
                    const double mik = m[i * p + k];
                    const double mjk = m[j * p + k];
                    m[i * p + k] = c * mik - s * mjk;
                    m[j * p + k] = s * mik + c * mjk;
                }
                for (std::size_t k = 0; k < p; ++k) {
                    const double mki = m[k * p + i];
                    const double mkj = m[k * p + j];
                    m[k * p + i] = c * mki - s * mkj;
                    m[k * p + j] = s * mki + c * mkj;
                }
                for (std::size_t k = 0; k < p; ++k) {
                    const double vki = vectors[i][k];
                    const double vkj = vectors[j][k];
                    vectors[i][k] = c * vki - s * vkj;
                    vectors[j][k] = s * vki + c * vkj;
                }
            }
        }
    }

    eigenvalues.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        eigenvalues[i] = m[i * p + i];
    }
}

} // namespace

PcaResult pca(const std::vector<std::vector<double>>& columns)
{
    const std::size_t p = columns.size();
    if (p < 2) {
        throw DomainError(fmt::format("PCA needs at least 2 columns, got {}", p));
    }
    const std::size_t n = columns[0].size();
    if (n < 2) {
        throw DomainError(fmt::format("PCA needs at least 2 rows, got {}", n));
    }
    for (const auto& col : columns) {
        if (col.size() != n) {
            throw DomainError("PCA columns must have equal lengths");
        }
        require_finite(col, "PCA column");
    }

    // Standardize and build the correlation matrix.
    std::vector<std::vector<double>> z(p, std::vector<double>(n));
    for (std::size_t j = 0; j < p; ++j) {
        const double mj = mean_of(columns[j]);
        const double var = sample_variance(columns[j], mj);
        if (!(var > 0.0)) {
            throw DegenerateInputError(fmt::format("PCA column {} is constant", j));
        }
        const double sd = std::sqrt(var);
        for (std::size_t i = 0; i < n; ++i) {
            z[j][i] = (columns[j][i] - mj) / sd;
        }
    }
    std::vector<double> corr(p * p, 0.0);
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a; b < p; ++b) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                dot += z[a][i] * z[b][i];
            }
            const double value = dot / static_cast<double>(n - 1);
            corr[a * p + b] = value;
            corr[b * p + a] = value;
        }
    }

    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> vectors;
    jacobi_eigen(corr, p, eigenvalues, vectors);

    std::vector<std::size_t> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return eigenvalues[a] > eigenvalues[b];
    });

    PcaResult result;
    result.eigenvalues.reserve(p);
    result.loadings.reserve(p);
    double total = 0.0;
    for (const std::size_t idx : order) {
        const double lambda = std::max(0.0, eigenvalues[idx]);
        result.eigenvalues.push_back(lambda);
        total += lambda;

        auto component = vectors[idx];
        // Deterministic sign: the largest-magnitude loading is positive.
        std::size_t arg = 0;
        for (std::size_t k = 1; k < p; ++k) {
            if (std::abs(component[k]) > std::abs(component[arg])) {
                arg = k;
            }
        }
        if (component[arg] < 0.0) {
            for (auto& v : component) {
                v = -v;
            }
        }
        result.loadings.push_back(std::move(component));
    }
    result.explained_variance_ratio.reserve(p);
    for (const double lambda : result.eigenvalues) {
        result.explained_variance_ratio.push_back(lambda / total);
    }
    return result;
}

TestReport t_test_independent(std::span<const double> a, std::span<const double> b)
{
    if (a.size() < 2 || b.size() < 2) {
        throw DomainError(fmt::format("t-test needs >= 2 observations per group, got {} and {}",
                                      a.size(), b.size()));
    }
    require_finite(a, "group a");
    require_finite(b, "group b");

    const double ma = mean_of(a);
    const double mb = mean_of(b);
    const double va = sample_variance(a, ma);
    const double vb = sample_variance(b, mb);
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());

    TestReport report;
    const double diff = ma - mb;
    report.direction = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);

    const double se2 = va / na + vb / nb;
    if (se2 <= 0.0) {
        // Both groups constant.
        report.degenerate = true;
        if (diff == 0.0) {
            report.statistic = 0.0;
            report.p_value = 1.0;
        } else {
            report.statistic = diff > 0.0 ? kInf : -kInf;
            report.p_value = 0.0;
        }
        report.df = na + nb - 2.0;
        return report;
    }

    report.statistic = diff / std::sqrt(se2);
    const double num = se2 * se2;
    const double den = (va / na) * (va / na) / (na - 1.0) + (vb / nb) * (vb / nb) / (nb - 1.0);
    report.df = num / den;
    report.p_value = student_t_two_sided_p(report.statistic, report.df);
    return report;
}

TestReport anova_bonferroni(std::span<const double> values, std::span<const std::string> groups)
{
    if (values.size() != groups.size()) {
        throw DomainError(fmt::format("{} values but {} group labels", values.size(),
                                      groups.size()));
    }
    require_finite(values, "values");

    std::map<std::string, std::vector<double>> by_group;
    for (std::size_t i = 0; i < values.size(); ++i) {
        by_group[groups[i]].push_back(values[i]);
    }

    TestReport report;
    std::map<std::string, std::vector<double>> kept;
    for (auto& [name, members] : by_group) {
        if (members.size() < 2) {
            report.warnings.push_back(fmt::format("group '{}' excluded: {} member(s)", name,
                                                  members.size()));
        } else {
            kept.emplace(name, std::move(members));
        }
    }
    if (kept.size() < 2) {
        throw DegenerateInputError(fmt::format("ANOVA needs >= 2 groups with >= 2 members, "
                                               "got {}",
                                               kept.size()));
    }

    double grand_sum = 0.0;
    std::size_t n = 0;
    for (const auto& [name, members] : kept) {
        grand_sum += std::accumulate(members.begin(), members.end(), 0.0);
        n += members.size();
    }
    const double grand_mean = grand_sum / static_cast<double>(n);

    double ss_between = 0.0;
    double ss_within = 0.0;
    for (const auto& [name, members] : kept) {
        const double gm = mean_of(members);
        report.group_means[name] = gm;
        ss_between += static_cast<double>(members.size()) * (gm - grand_mean) * (gm - grand_mean);
        for (const double v : members) {
            ss_within += (v - gm) * (v - gm);
        }
    }

    const auto k = static_cast<double>(kept.size());
    report.df = k - 1.0;
    report.df2 = static_cast<double>(n) - k;

    if (ss_within <= 0.0) {
        if (ss_between > 0.0) {
            // Constant groups with distinct means: infinite F.
            report.degenerate = true;
            report.statistic = kInf;
            report.p_value = 0.0;
        } else {
            report.degenerate = true;
            report.statistic = 0.0;
            report.p_value = 1.0;
        }
    } else {
        report.statistic = (ss_between / report.df) / (ss_within / report.df2);
        report.p_value = f_upper_tail_p(report.statistic, report.df, report.df2);
    }

    // Pairwise Welch comparisons, Bonferroni-adjusted over all pairs.
    std::vector<std::string> names;
    names.reserve(kept.size());
    for (const auto& [name, members] : kept) {
        names.push_back(name);
    }
    const double m = k * (k - 1.0) / 2.0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const auto& ga = kept[names[i]];
            const auto& gb = kept[names[j]];
            const auto sub = t_test_independent(ga, gb);
            PairwiseComparison cmp;
            cmp.group_a = names[i];
            cmp.group_b = names[j];
            cmp.statistic = sub.statistic;
            cmp.df = sub.df;
            cmp.p_raw = sub.p_value;
            cmp.p_adjusted = std::min(1.0, m * sub.p_value);
            cmp.direction = sub.direction;
            report.pairwise.push_back(std::move(cmp));
        }
    }
    return report;
}

std::string_view to_string(LinearityVerdict verdict)
{
    switch (verdict) {
    case LinearityVerdict::linear_adequate: return "linear-adequate";
    case LinearityVerdict::log_log: return "log-log";
    case LinearityVerdict::quadratic: return "quadratic";
    }
    return "linear-adequate";
}

namespace {

ModelFit fit_model(const std::string& model, const std::vector<std::vector<double>>& predictors,
                   std::span<const double> y)
{
    ModelFit fit;
    fit.model = model;
    const auto res = ols(predictors, y);
    fit.fitted = true;
    fit.r_squared = res.r_squared;
    fit.coefficients = res.coefficients;
    const auto n = static_cast<double>(res.n);
    const auto params = static_cast<double>(res.coefficients.size());
    fit.aic = n * std::log(std::max(res.rss, 1e-300) / n) + 2.0 * params;
    return fit;
}

} // namespace

LinearityReport linearity_report(std::span<const double> x, std::span<const double> y,
                                 double margin)
{
    if (x.size() != y.size()) {
        throw DomainError(fmt::format("linearity report needs equal lengths, got {} and {}",
                                      x.size(), y.size()));
    }
    if (x.size() < 4) {
        throw DomainError(fmt::format("linearity report needs n >= 4, got {}", x.size()));
    }
    require_finite(x, "x");
    require_finite(y, "y");
    if (!(margin >= 0.0)) {
        throw DomainError(fmt::format("margin must be >= 0, got {}", margin));
    }

    LinearityReport report;
    report.margin = margin;

    const std::vector<double> xv(x.begin(), x.end());
    report.linear = fit_model("linear", {xv}, y);

    std::vector<double> x2(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x2[i] = x[i] * x[i];
    }
    report.quadratic = fit_model("quadratic", {xv, x2}, y);

    const bool positive = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; }) &&
                          std::all_of(y.begin(), y.end(), [](double v) { return v > 0.0; });
    if (positive) {
        std::vector<double> lx(x.size());
        std::vector<double> ly(y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            lx[i] = std::log(x[i]);
            ly[i] = std::log(y[i]);
        }
        report.loglog = fit_model("log-log", {lx}, ly);
    } else {
        report.loglog.model = "log-log";
        report.loglog.fitted = false;
        report.loglog.note = "skipped: non-positive values";
    }

    double best = report.linear.r_squared;
    best = std::max(best, report.quadratic.r_squared);
    if (report.loglog.fitted) {
        best = std::max(best, report.loglog.r_squared);
    }

    if (report.linear.r_squared >= best - margin) {
        report.verdict = LinearityVerdict::linear_adequate;
    } else if (report.loglog.fitted && report.loglog.r_squared >= report.quadratic.r_squared) {
        // Ties go to the two-parameter model.
        report.verdict = LinearityVerdict::log_log;
    } else {
        report.verdict = LinearityVerdict::quadratic;
    }
    return report;
}

void Dataset::check_length(std::size_t incoming, const std::string& name)
{
    if (!any_) {
        rows_ = incoming;
        any_ = true;
        return;
    }
    if (incoming != rows_) {
        throw DomainError(fmt::format("column '{}' has {} rows, dataset has {}", name, incoming,
                                      rows_));
    }
}

void Dataset::add_numeric(std::string name, std::vector<double> values)
{
    check_length(values.size(), name);
    require_finite(values, name);
    numeric_[std::move(name)] = std::move(values);
}

void Dataset::add_categorical(std::string name, std::vector<std::string> labels)
{
    check_length(labels.size(), name);
    categorical_[std::move(name)] = std::move(labels);
}

std::span<const double> Dataset::numeric(const std::string& name) const
{
    const auto it = numeric_.find(name);
    if (it == numeric_.end()) {
        throw DomainError(fmt::format("no numeric column '{}'", name));
    }
    return it->second;
}

std::span<const std::string> Dataset::categorical(const std::string& name) const
{
    const auto it = categorical_.find(name);
    if (it == categorical_.end()) {
        throw DomainError(fmt::format("no categorical column '{}'", name));
    }
    return it->second;
}

bool Dataset::has_numeric(const std::string& name) const
{
    return numeric_.contains(name);
}

bool Dataset::has_categorical(const std::string& name) const
{
    return categorical_.contains(name);
}

std::vector<std::string> Dataset::numeric_names() const
{
    std::vector<std::string> names;
    names.reserve(numeric_.size());
    for (const auto& [name, col] : numeric_) {
        names.push_back(name);
    }
    return names;
}

} // namespace roadcarbon::stats
