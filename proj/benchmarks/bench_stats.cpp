#include "roadcarbon/stats.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace roadcarbon::stats;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n)
{
    std::vector<double> v(n);
    for (auto& x : v) {
        x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    return v;
}

void bm_pearson(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_vector(rng, n);
    const auto y = random_vector(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pearson(x, y));
    }
}
BENCHMARK(bm_pearson)->Arg(200)->Arg(10000);

void bm_ols_vif(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::vector<std::vector<double>> predictors = {
        random_vector(rng, n), random_vector(rng, n), random_vector(rng, n),
        random_vector(rng, n)};
    const auto y = random_vector(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ols_vif({"a", "b", "c", "d"}, predictors, y));
    }
}
BENCHMARK(bm_ols_vif)->Arg(200)->Arg(2000);

void bm_pca(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<double>> columns;
    for (int j = 0; j < 8; ++j) {
        columns.push_back(random_vector(rng, n));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(pca(columns));
    }
}
BENCHMARK(bm_pca)->Arg(500)->Arg(5000);

void bm_anova(benchmark::State& state)
{
    std::mt19937_64 rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> values = random_vector(rng, n);
    std::vector<std::string> groups;
    groups.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        groups.push_back(std::string(1, static_cast<char>('a' + (rng() % 15))));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(anova_bonferroni(values, groups));
    }
}
BENCHMARK(bm_anova)->Arg(200)->Arg(2000);

void bm_incomplete_beta(benchmark::State& state)
{
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-6;
        if (x >= 1.0) {
            x = 1e-6;
        }
        benchmark::DoNotOptimize(incomplete_beta(9.0, 0.5, x));
    }
}
BENCHMARK(bm_incomplete_beta);

} // namespace
