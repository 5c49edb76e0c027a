#include "roadcarbon/hydrology.hpp"

#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace roadcarbon::hydrology {

void Catchment::validate() const
{
    if (!(area_ha > 0.0)) {
        throw DomainError(fmt::format("catchment area must be positive, got {} ha", area_ha));
    }
    if (!(runoff_coefficient > 0.0) || !(runoff_coefficient <= 1.0)) {
        throw DomainError(fmt::format("runoff coefficient must be in (0, 1], got {}",
                                      runoff_coefficient));
    }
    if (!(rainfall_intensity_mmh >= 0.0)) {
        throw DomainError(fmt::format("rainfall intensity must be >= 0, got {}",
                                      rainfall_intensity_mmh));
    }
}

double peak_discharge(const Catchment& catchment)
{
    catchment.validate();
    return catchment.runoff_coefficient * catchment.rainfall_intensity_mmh * catchment.area_ha /
           360.0;
}

double flow_area(const DitchTemplate& shape, double depth_m)
{
    return depth_m * (shape.bottom_width_m + shape.side_slope * depth_m);
}

double wetted_perimeter(const DitchTemplate& shape, double depth_m)
{
    return shape.bottom_width_m +
           2.0 * depth_m * std::sqrt(1.0 + shape.side_slope * shape.side_slope);
}

double manning_capacity(const DitchTemplate& shape, double depth_m, double longitudinal_slope,
                        double manning_n)
{
    if (depth_m <= 0.0) {
        return 0.0;
    }
    const double area = flow_area(shape, depth_m);
    const double radius = area / wetted_perimeter(shape, depth_m);
    return area * std::pow(radius, 2.0 / 3.0) * std::sqrt(longitudinal_slope) / manning_n;
}

Ditch size_ditch(double q_design_m3s, double longitudinal_slope, double manning_n,
                 const DitchTemplate& shape, double depth_step_m)
{
    if (!(q_design_m3s >= 0.0)) {
        throw DomainError(fmt::format("design discharge must be >= 0, got {}", q_design_m3s));
    }
    if (!(longitudinal_slope > 0.0)) {
        throw DomainError(fmt::format("ditch slope must be positive, got {}", longitudinal_slope));
    }
    if (!(manning_n > 0.0)) {
        throw DomainError(fmt::format("Manning n must be positive, got {}", manning_n));
    }
    if (!(shape.bottom_width_m > 0.0) || !(shape.side_slope >= 0.0) || !(shape.max_depth_m > 0.0)) {
        throw DomainError("ditch template needs positive bottom width and depth limit");
    }
    if (!(depth_step_m > 0.0)) {
        throw DomainError(fmt::format("depth step must be positive, got {}", depth_step_m));
    }

    const auto steps = static_cast<std::size_t>(std::round(shape.max_depth_m / depth_step_m));
    for (std::size_t i = 1; i <= steps; ++i) {
        const double depth = static_cast<double>(i) * depth_step_m;
        const double capacity = manning_capacity(shape, depth, longitudinal_slope, manning_n);
        if (capacity >= q_design_m3s) {
            Ditch ditch;
            ditch.bottom_width_m = shape.bottom_width_m;
            ditch.side_slope = shape.side_slope;
            ditch.depth_m = depth;
            ditch.longitudinal_slope = longitudinal_slope;
            ditch.manning_n = manning_n;
            ditch.capacity_m3s = capacity;
            return ditch;
        }
    }
    throw DomainError(fmt::format("no ditch depth up to {} m carries {} m3/s "
                                  "(slope {}, n {}, bottom {} m)",
                                  shape.max_depth_m, q_design_m3s, longitudinal_slope, manning_n,
                                  shape.bottom_width_m));
}

std::string_view to_string(FloodClass cls)
{
    switch (cls) {
    case FloodClass::low: return "low";
    case FloodClass::medium: return "medium";
    case FloodClass::high: return "high";
    }
    return "low";
}

FloodClass flood_class_from_string(std::string_view name)
{
    if (name == "low") {
        return FloodClass::low;
    }
    if (name == "medium") {
        return FloodClass::medium;
    }
    if (name == "high") {
        return FloodClass::high;
    }
    throw DomainError(fmt::format("unknown flood class: '{}'", name));
}

double FreeboardTable::freeboard(FloodClass cls) const
{
    switch (cls) {
    case FloodClass::low: return low_m;
    case FloodClass::medium: return medium_m;
    case FloodClass::high: return high_m;
    }
    return low_m;
}

void FreeboardTable::validate() const
{
    if (!(low_m >= 0.0) || !(medium_m >= 0.0) || !(high_m >= 0.0)) {
        throw ConfigError("freeboards must be >= 0");
    }
}

FloodRisk FloodRisk::from_class(FloodClass cls, const FreeboardTable& table)
{
    table.validate();
    return FloodRisk{cls, table.freeboard(cls)};
}

terrain::Alignment flood_adjust_grade(const terrain::Alignment& alignment, const FloodRisk& risk,
                                      std::span<const double> crossing_stations,
                                      double crossing_window_m)
{
    alignment.validate();
    if (!(risk.freeboard_m >= 0.0)) {
        throw DomainError(fmt::format("freeboard must be >= 0, got {}", risk.freeboard_m));
    }
    if (!(crossing_window_m >= 0.0)) {
        throw DomainError(fmt::format("crossing window must be >= 0, got {}", crossing_window_m));
    }
    const double length = terrain::alignment_length(alignment);
    for (const double station : crossing_stations) {
        if (station < 0.0 || station > length) {
            throw DomainError(fmt::format("crossing station {} outside alignment length {}",
                                          station, length));
        }
    }

    terrain::Alignment adjusted = alignment;
    const auto stations = terrain::vertex_stations(alignment);
    for (std::size_t i = 0; i < stations.size(); ++i) {
        bool in_crossing = false;
        for (const double crossing : crossing_stations) {
            if (std::abs(stations[i] - crossing) <= crossing_window_m) {
                in_crossing = true;
                break;
            }
        }
        if (!in_crossing) {
            adjusted.design_grade[i] += risk.freeboard_m;
        }
    }
    return adjusted;
}

} // namespace roadcarbon::hydrology
