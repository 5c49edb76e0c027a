#include "roadcarbon/lca.hpp"

#include "roadcarbon/csv.hpp"
#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace roadcarbon::lca {

FactorDatabase FactorDatabase::from_rows(std::vector<EmissionFactor> rows)
{
    FactorDatabase db;
    std::size_t row_no = 0;
    for (auto& row : rows) {
        ++row_no;
        if (row.material_id.empty() || row.category.empty()) {
            throw SchemaError(fmt::format("factor row {}: material and category required",
                                          row_no));
        }
        if (!(row.factor_kgco2e >= 0.0) || !std::isfinite(row.factor_kgco2e)) {
            throw SchemaError(fmt::format("factor row {} ('{}'): factor must be finite and >= 0, "
                                          "got {}",
                                          row_no, row.material_id, row.factor_kgco2e));
        }
        auto key = std::make_pair(row.material_id, row.category);
        if (db.factors_.contains(key)) {
            throw SchemaError(fmt::format("factor row {}: duplicate entry for ('{}', '{}')",
                                          row_no, row.material_id, row.category));
        }
        db.factors_.emplace(std::move(key), std::move(row));
    }
    for (const auto& [key, factor] : db.factors_) {
        if (std::find(db.categories_.begin(), db.categories_.end(), key.second) ==
            db.categories_.end()) {
            db.categories_.push_back(key.second);
        }
    }
    std::sort(db.categories_.begin(), db.categories_.end());
    return db;
}

FactorDatabase FactorDatabase::from_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open factor table: {}", path.string()));
    }
    return from_csv(in, path.string());
}

FactorDatabase FactorDatabase::from_csv(std::istream& in, const std::string& source_name)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw SchemaError(fmt::format("{}: empty factor table", source_name));
    }
    const auto header = csv::split_line(line);
    const std::vector<std::string> expected = {"material_id", "category", "unit",
                                               "factor_kgco2e_per_unit"};
    if (header != expected) {
        throw SchemaError(fmt::format("{}: factor table header must be "
                                      "material_id,category,unit,factor_kgco2e_per_unit",
                                      source_name));
    }

    std::vector<EmissionFactor> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (csv::trim(line).empty()) {
            continue;
        }
        const auto fields = csv::split_line(line);
        if (fields.size() != 4) {
            throw SchemaError(fmt::format("{}: line {}: expected 4 fields, got {}", source_name,
                                          line_no, fields.size()));
        }
        EmissionFactor factor;
        factor.material_id = fields[0];
        factor.category = fields[1];
        try {
            factor.unit = quantities::unit_from_string(fields[2]);
        } catch (const SchemaError& e) {
            throw SchemaError(fmt::format("{}: line {}: {}", source_name, line_no, e.what()));
        }
        factor.factor_kgco2e = csv::parse_double(fields[3], source_name, line_no, 4);
        rows.push_back(std::move(factor));
    }
    try {
        return from_rows(std::move(rows));
    } catch (const SchemaError& e) {
        throw SchemaError(fmt::format("{}: {}", source_name, e.what()));
    }
}

const EmissionFactor* FactorDatabase::find(std::string_view material_id,
                                           std::string_view category) const
{
    const auto it = factors_.find(std::make_pair(std::string(material_id), std::string(category)));
    return it == factors_.end() ? nullptr : &it->second;
}

CategoryTotals characterize(const quantities::BillOfQuantities& boq, const FactorDatabase& db)
{
    std::vector<std::string> missing;
    CategoryTotals totals;
    for (const auto& category : db.categories()) {
        totals[category] = 0.0;
    }

    for (const auto& item : boq.items) {
        item.validate();
        for (const auto& category : db.categories()) {
            const EmissionFactor* factor = db.find(item.material_id, category);
            if (factor == nullptr) {
                missing.push_back(fmt::format("{} ({})", item.material_id, category));
                continue;
            }
            if (factor->unit != item.unit) {
                throw SchemaError(fmt::format("material '{}': BoQ unit {} does not match factor "
                                              "unit {}",
                                              item.material_id,
                                              quantities::to_string(item.unit),
                                              quantities::to_string(factor->unit)));
            }
            totals[category] += factor->factor_kgco2e * item.quantity;
        }
    }
    if (!missing.empty()) {
        auto message = fmt::format("missing emission factors for: {}", fmt::join(missing, ", "));
        throw AssessmentError(message, std::move(missing));
    }
    return totals;
}

CategoryTotals normalize(const CategoryTotals& totals, const CategoryTotals& references)
{
    CategoryTotals normalised;
    for (const auto& [category, total] : totals) {
        const auto it = references.find(category);
        if (it == references.end()) {
            throw ConfigError(fmt::format("no normalisation reference for category '{}'",
                                          category));
        }
        if (!(it->second > 0.0)) {
            throw ConfigError(fmt::format("normalisation reference for '{}' must be positive, "
                                          "got {}",
                                          category, it->second));
        }
        normalised[category] = total / it->second;
    }
    return normalised;
}

double weight(const CategoryTotals& normalised, const CategoryTotals& weights)
{
    double score = 0.0;
    for (const auto& [category, value] : normalised) {
        const auto it = weights.find(category);
        const double w = it == weights.end() ? 0.0 : it->second;
        if (w < 0.0) {
            throw ConfigError(fmt::format("weight for '{}' must be >= 0, got {}", category, w));
        }
        score += w * value;
    }
    return score;
}

ImpactResult assess_project(const quantities::BillOfQuantities& boq, const FactorDatabase& db,
                            const CategoryTotals& references, const CategoryTotals& weights)
{
    if (!(boq.road_length_m > 0.0)) {
        throw DomainError(fmt::format("road length must be positive, got {}", boq.road_length_m));
    }
    ImpactResult result;
    result.characterised_kgco2e = characterize(boq, db);
    result.normalised = normalize(result.characterised_kgco2e, references);
    result.weighted_single_score = weight(result.normalised, weights);

    const auto gwp = result.characterised_kgco2e.find(std::string(kGwpCategory));
    const double gwp_kg = gwp == result.characterised_kgco2e.end() ? 0.0 : gwp->second;
    result.embodied_tco2e = gwp_kg / 1000.0;
    result.per_km_tco2e = result.embodied_tco2e / (boq.road_length_m / 1000.0);
    return result;
}

} // namespace roadcarbon::lca
