#pragma once

#include "roadcarbon/quantities.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace roadcarbon::lca {

struct EmissionFactor {
    std::string material_id;
    std::string category = "GWP";
    quantities::Unit unit = quantities::Unit::cubic_metre;
    double factor_kgco2e = 0.0; // kgCO2eq per unit
};

/// Immutable lookup of characterisation factors keyed by (material, category).
class FactorDatabase {
public:
    FactorDatabase() = default;
    static FactorDatabase from_rows(std::vector<EmissionFactor> rows);

    /// CSV with header material_id,category,unit,factor_kgco2e_per_unit.
    static FactorDatabase from_csv(const std::filesystem::path& path);
    static FactorDatabase from_csv(std::istream& in, const std::string& source_name = "<stream>");

    const EmissionFactor* find(std::string_view material_id, std::string_view category) const;
    const std::vector<std::string>& categories() const noexcept { return categories_; }
    std::size_t size() const noexcept { return factors_.size(); }

private:
    std::map<std::pair<std::string, std::string>, EmissionFactor> factors_;
    std::vector<std::string> categories_; // sorted unique
};

/// Per-category values keyed by category name (sorted, deterministic).
using CategoryTotals = std::map<std::string, double>;

/// Characterised totals: sum over items of factor * quantity, per category.
CategoryTotals characterize(const quantities::BillOfQuantities& boq, const FactorDatabase& db);

/// Divide each category total by its (positive) reference value.
CategoryTotals normalize(const CategoryTotals& totals, const CategoryTotals& references);

/// Weighted single score: sum of weight * normalised value.
double weight(const CategoryTotals& normalised, const CategoryTotals& weights);

struct ImpactResult {
    CategoryTotals characterised_kgco2e;
    CategoryTotals normalised;
    double weighted_single_score = 0.0;
    double embodied_tco2e = 0.0;  // GWP total, tonnes
    double per_km_tco2e = 0.0;    // embodied per kilometre of road
};

inline constexpr std::string_view kGwpCategory = "GWP";

/// Characterise, normalise and weight a bill of quantities, then report the
/// embodied total and the per-km value.
ImpactResult assess_project(const quantities::BillOfQuantities& boq, const FactorDatabase& db,
                            const CategoryTotals& references, const CategoryTotals& weights);

} // namespace roadcarbon::lca
