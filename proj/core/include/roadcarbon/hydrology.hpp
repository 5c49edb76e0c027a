#pragma once

#include "roadcarbon/terrain.hpp"

#include <span>
#include <string_view>

namespace roadcarbon::hydrology {

struct Catchment {
    double area_ha = 0.0;
    double runoff_coefficient = 0.5;      // C in (0, 1]
    double rainfall_intensity_mmh = 0.0;  // i >= 0

    void validate() const;
};

/// Rational-method peak discharge Q = C * i * A / 360 (m3/s).
double peak_discharge(const Catchment& catchment);

struct DitchTemplate {
    double bottom_width_m = 0.5;
    double side_slope = 1.0; // horizontal per unit vertical; 0 = rectangular
    double max_depth_m = 2.0;
};

struct Ditch {
    double bottom_width_m = 0.5;
    double side_slope = 1.0;
    double depth_m = 0.0;
    double longitudinal_slope = 0.01;
    double manning_n = 0.025;
    double capacity_m3s = 0.0;
};

double flow_area(const DitchTemplate& shape, double depth_m);
double wetted_perimeter(const DitchTemplate& shape, double depth_m);

/// Manning normal-flow capacity of the trapezoid at a given depth.
double manning_capacity(const DitchTemplate& shape, double depth_m, double longitudinal_slope,
                        double manning_n);

/// Smallest depth on a 5 cm grid whose Manning capacity covers the design
/// discharge. Throws DomainError when no depth up to the template maximum is
/// enough.
Ditch size_ditch(double q_design_m3s, double longitudinal_slope, double manning_n,
                 const DitchTemplate& shape, double depth_step_m = 0.05);

enum class FloodClass { low, medium, high };

std::string_view to_string(FloodClass cls);
FloodClass flood_class_from_string(std::string_view name);

struct FreeboardTable {
    double low_m = 0.0;
    double medium_m = 0.3;
    double high_m = 0.6;

    double freeboard(FloodClass cls) const;
    void validate() const;
};

struct FloodRisk {
    FloodClass cls = FloodClass::low;
    double freeboard_m = 0.0;

    static FloodRisk from_class(FloodClass cls, const FreeboardTable& table = {});
};

/// Raise design grades by the freeboard everywhere except within the window
/// around low-water crossing stations, where the grade stays untouched.
terrain::Alignment flood_adjust_grade(const terrain::Alignment& alignment, const FloodRisk& risk,
                                      std::span<const double> crossing_stations,
                                      double crossing_window_m = 10.0);

} // namespace roadcarbon::hydrology
