#include "roadcarbon/quantities.hpp"

#include "roadcarbon/csv.hpp"
#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace roadcarbon::quantities {

std::string_view to_string(Unit unit)
{
    switch (unit) {
    case Unit::cubic_metre: return "m3";
    case Unit::tonne: return "t";
    case Unit::square_metre: return "m2";
    case Unit::metre: return "m";
    }
    return "m3";
}

Unit unit_from_string(std::string_view name)
{
    if (name == "m3") {
        return Unit::cubic_metre;
    }
    if (name == "t") {
        return Unit::tonne;
    }
    if (name == "m2") {
        return Unit::square_metre;
    }
    if (name == "m") {
        return Unit::metre;
    }
    throw SchemaError(fmt::format("unknown unit: '{}'", name));
}

std::string_view to_string(DitchLining lining)
{
    switch (lining) {
    case DitchLining::none: return "none";
    case DitchLining::concrete: return "concrete";
    case DitchLining::riprap: return "riprap";
    }
    return "none";
}

DitchLining lining_from_string(std::string_view name)
{
    if (name == "none") {
        return DitchLining::none;
    }
    if (name == "concrete") {
        return DitchLining::concrete;
    }
    if (name == "riprap") {
        return DitchLining::riprap;
    }
    throw SchemaError(fmt::format("unknown ditch lining: '{}'", name));
}

void BoqItem::validate() const
{
    if (material_id.empty()) {
        throw DomainError("BoQ item needs a material id");
    }
    if (!(quantity >= 0.0) || !std::isfinite(quantity)) {
        throw DomainError(fmt::format("BoQ quantity for '{}' must be finite and >= 0, got {}",
                                      material_id, quantity));
    }
}

void EarthworksConfig::validate() const
{
    if (!(reuse_ratio >= 0.0) || !(reuse_ratio <= 1.0)) {
        throw ConfigError(fmt::format("reuse ratio must be in [0, 1], got {}", reuse_ratio));
    }
    if (!(aggregate_density_tpm3 > 0.0) || !(fill_density_tpm3 > 0.0) ||
        !(concrete_density_tpm3 > 0.0)) {
        throw ConfigError("material densities must be positive");
    }
    if (!(lining_thickness_m > 0.0) || !(riprap_areal_density_tpm2 > 0.0)) {
        throw ConfigError("lining thickness and riprap density must be positive");
    }
}

BoqItem aggregate_volume(const terrain::Alignment& alignment,
                         const pavement::PavementSection& section)
{
    alignment.validate();
    if (!(section.base_thickness_mm > 0.0)) {
        throw DomainError(fmt::format("base thickness must be positive, got {} mm",
                                      section.base_thickness_mm));
    }
    const double volume = terrain::alignment_length(alignment) * alignment.width *
                          section.base_thickness_mm / 1000.0;
    return BoqItem{std::string(material::aggregate), volume, Unit::cubic_metre};
}

std::vector<BoqItem> earthworks_quantities(double cut_m3, double fill_m3,
                                           const EarthworksConfig& config)
{
    if (!(cut_m3 >= 0.0) || !(fill_m3 >= 0.0)) {
        throw DomainError(fmt::format("cut and fill must be >= 0, got {} / {}", cut_m3, fill_m3));
    }
    config.validate();

    std::vector<BoqItem> items;
    if (cut_m3 > 0.0) {
        items.push_back({std::string(material::excavation), cut_m3, Unit::cubic_metre});
    }
    const double imported = std::max(0.0, fill_m3 - config.reuse_ratio * cut_m3);
    if (imported > 0.0) {
        items.push_back({std::string(material::imported_fill), imported, Unit::cubic_metre});
        items.push_back({std::string(material::haulage), imported * config.fill_density_tpm3,
                         Unit::tonne});
    }
    return items;
}

std::vector<BoqItem> drainage_quantities(std::span<const hydrology::Ditch> ditches,
                                         DitchLining lining, std::span<const double> lengths_m,
                                         const EarthworksConfig& config)
{
    if (ditches.size() != lengths_m.size()) {
        throw DomainError(fmt::format("{} ditches but {} lengths", ditches.size(),
                                      lengths_m.size()));
    }
    config.validate();
    std::vector<BoqItem> items;
    if (lining == DitchLining::none) {
        return items;
    }

    double lined_area = 0.0;
    for (std::size_t i = 0; i < ditches.size(); ++i) {
        if (!(lengths_m[i] >= 0.0)) {
            throw DomainError(fmt::format("ditch length must be >= 0, got {}", lengths_m[i]));
        }
        const hydrology::DitchTemplate shape{ditches[i].bottom_width_m, ditches[i].side_slope,
                                             ditches[i].depth_m};
        lined_area += hydrology::wetted_perimeter(shape, ditches[i].depth_m) * lengths_m[i];
    }

    if (lining == DitchLining::concrete) {
        const double volume = lined_area * config.lining_thickness_m;
        if (volume > 0.0) {
            items.push_back({std::string(material::concrete), volume, Unit::cubic_metre});
        }
    } else {
        const double tonnage = lined_area * config.riprap_areal_density_tpm2;
        if (tonnage > 0.0) {
            items.push_back({std::string(material::riprap), tonnage, Unit::tonne});
        }
    }
    return items;
}

BillOfQuantities assemble_boq(std::span<const std::vector<BoqItem>> parts,
                              const terrain::Alignment& alignment)
{
    alignment.validate();

    std::map<std::string, BoqItem> merged;
    for (const auto& part : parts) {
        for (const auto& item : part) {
            item.validate();
            auto [it, inserted] = merged.try_emplace(item.material_id, item);
            if (!inserted) {
                if (it->second.unit != item.unit) {
                    throw SchemaError(fmt::format("material '{}' appears with units {} and {}",
                                                  item.material_id, to_string(it->second.unit),
                                                  to_string(item.unit)));
                }
                it->second.quantity += item.quantity;
            }
        }
    }

    BillOfQuantities boq;
    boq.road_length_m = terrain::alignment_length(alignment);
    boq.road_area_m2 = boq.road_length_m * alignment.width;
    boq.items.reserve(merged.size());
    for (auto& [id, item] : merged) {
        boq.items.push_back(std::move(item));
    }
    return boq;
}

void write_boq_csv(const BillOfQuantities& boq, std::ostream& out)
{
    out << "material_id,quantity,unit\n";
    for (const auto& item : boq.items) {
        out << item.material_id << ',' << csv::format_sig6(item.quantity) << ','
            << to_string(item.unit) << '\n';
    }
}

} // namespace roadcarbon::quantities
