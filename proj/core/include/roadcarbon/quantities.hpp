#pragma once

#include "roadcarbon/hydrology.hpp"
#include "roadcarbon/pavement.hpp"
#include "roadcarbon/terrain.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace roadcarbon::quantities {

enum class Unit { cubic_metre, tonne, square_metre, metre };

std::string_view to_string(Unit unit);
Unit unit_from_string(std::string_view name);

/// Material identifiers matched against the emission-factor database.
namespace material {
inline constexpr std::string_view aggregate = "aggregate";
inline constexpr std::string_view excavation = "excavation";
inline constexpr std::string_view imported_fill = "imported_fill";
inline constexpr std::string_view haulage = "haulage";
inline constexpr std::string_view concrete = "concrete";
inline constexpr std::string_view riprap = "riprap";
} // namespace material

struct BoqItem {
    std::string material_id;
    double quantity = 0.0;
    Unit unit = Unit::cubic_metre;

    void validate() const;
};

struct BillOfQuantities {
    std::vector<BoqItem> items; // merged, sorted by material_id
    double road_area_m2 = 0.0;
    double road_length_m = 0.0;
};

struct EarthworksConfig {
    double reuse_ratio = 0.8;                 // share of cut reusable as fill
    double aggregate_density_tpm3 = 2.2;
    double fill_density_tpm3 = 1.8;
    double concrete_density_tpm3 = 2.4;
    double lining_thickness_m = 0.1;
    double riprap_areal_density_tpm2 = 0.4;

    void validate() const;
};

enum class DitchLining { none, concrete, riprap };

std::string_view to_string(DitchLining lining);
DitchLining lining_from_string(std::string_view name);

/// Base aggregate volume: length * width * thickness.
BoqItem aggregate_volume(const terrain::Alignment& alignment,
                         const pavement::PavementSection& section);

/// Excavation, imported fill net of reused cut, and haulage tonnage for the
/// imported material. Zero-quantity items are omitted.
std::vector<BoqItem> earthworks_quantities(double cut_m3, double fill_m3,
                                           const EarthworksConfig& config);

/// Lining materials for the sized ditches: concrete volume over the wetted
/// perimeter, or riprap tonnage over the lined area. Unlined ditches produce
/// nothing.
std::vector<BoqItem> drainage_quantities(std::span<const hydrology::Ditch> ditches,
                                         DitchLining lining, std::span<const double> lengths_m,
                                         const EarthworksConfig& config);

/// Merge item lists by material, summing quantities, and attach the road
/// area/length. Mixed units for one material are a schema error.
BillOfQuantities assemble_boq(std::span<const std::vector<BoqItem>> parts,
                              const terrain::Alignment& alignment);

/// Columns material_id,quantity,unit with six-significant-digit quantities.
void write_boq_csv(const BillOfQuantities& boq, std::ostream& out);

} // namespace roadcarbon::quantities
