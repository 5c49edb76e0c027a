#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace roadcarbon::terrain {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Regular elevation grid with bilinear interpolation between nodes.
/// Node (ix, iy) sits at origin + (ix, iy) * cell_size; elevations are stored
/// row by row (iy outer, ix inner), matching the CSV layout.
class TerrainSurface {
public:
    TerrainSurface(Point2 origin, double cell_size, std::size_t nx, std::size_t ny,
                   std::vector<double> elevations);

    /// Header row `nx,ny,cell_size,origin_x,origin_y`, then ny rows of nx elevations.
    static TerrainSurface from_csv(const std::filesystem::path& path);
    static TerrainSurface from_csv(std::istream& in, const std::string& source_name = "<stream>");
    void to_csv(std::ostream& out) const;

    double elevation_at(Point2 point) const;
    bool contains(Point2 point) const;

    double node(std::size_t ix, std::size_t iy) const { return elevations_[iy * nx_ + ix]; }
    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    double cell_size() const noexcept { return cell_size_; }
    Point2 origin() const noexcept { return origin_; }
    double max_x() const noexcept { return origin_.x + static_cast<double>(nx_ - 1) * cell_size_; }
    double max_y() const noexcept { return origin_.y + static_cast<double>(ny_ - 1) * cell_size_; }
    std::span<const double> elevations() const noexcept { return elevations_; }

private:
    Point2 origin_;
    double cell_size_;
    std::size_t nx_;
    std::size_t ny_;
    std::vector<double> elevations_;
};

/// Road centreline with per-vertex design (finished-grade) elevations.
struct Alignment {
    std::vector<Point2> vertices;
    double width = 3.5;
    std::vector<double> design_grade;

    void validate() const;
};

double alignment_length(const Alignment& alignment);

/// Chainage of every vertex, starting at 0.
std::vector<double> vertex_stations(const Alignment& alignment);

struct StationSample {
    double station = 0.0;
    Point2 point;
    double design_elevation = 0.0;
};

/// Stations at 0, spacing, 2*spacing, ... plus the endpoint. Design elevations
/// are interpolated linearly between vertex grades.
std::vector<StationSample> sample_alignment(const Alignment& alignment, double spacing);

/// Centreline point, design elevation and unit direction at a chainage.
StationSample station_at(const Alignment& alignment, double station);

struct CrossSection {
    double station = 0.0;
    std::vector<std::pair<double, double>> ground_profile; // (offset m, elevation m)
    std::vector<std::pair<double, double>> design_profile;
    double cut_area = 0.0;
    double fill_area = 0.0;
};

/// Sample the ground perpendicular to the alignment and integrate cut/fill
/// areas against the flat design level by the trapezoidal rule.
CrossSection cross_section(const TerrainSurface& surface, const Alignment& alignment,
                           double station, double half_width, double offset_step = 0.5);

struct EarthworkVolumes {
    double cut_m3 = 0.0;
    double fill_m3 = 0.0;
};

/// Average-end-area volumes over an ordered run of sections.
EarthworkVolumes cut_fill_volumes(std::span<const CrossSection> sections);

struct GradeProfile {
    std::vector<double> stations; // chainage at the start of each segment
    std::vector<double> grades;   // signed slope of each segment
    double max_abs_grade = 0.0;
};

GradeProfile grade_profile(const Alignment& alignment);

struct GradeCapResult {
    Alignment alignment;
    bool feasible = true;
    double max_abs_grade_before = 0.0;
    double max_abs_grade_after = 0.0;
    int iterations = 0;
};

/// Smooth design grades until no segment exceeds max_grade, holding the
/// endpoint elevations fixed. Infeasible endpoints are reported, not clamped.
GradeCapResult cap_grades(const Alignment& alignment, double max_grade);

/// D8 steepest-descent drainage over a surface. direction holds the index of
/// the downstream neighbour (0..7) or kSink; accumulation counts the cell
/// itself plus everything upstream of it.
class FlowField {
public:
    static constexpr std::int8_t kSink = -1;

    FlowField(std::size_t nx, std::size_t ny)
        : nx_(nx), ny_(ny), direction_(nx * ny, kSink), accumulation_(nx * ny, 1) {}

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    std::int8_t direction(std::size_t ix, std::size_t iy) const { return direction_[iy * nx_ + ix]; }
    std::uint32_t accumulation(std::size_t ix, std::size_t iy) const { return accumulation_[iy * nx_ + ix]; }
    bool is_sink(std::size_t ix, std::size_t iy) const { return direction(ix, iy) == kSink; }

    /// Grid offset (dx, dy) of neighbour slot 0..7.
    static std::pair<int, int> neighbour_offset(int slot);

    std::vector<std::int8_t>& directions() noexcept { return direction_; }
    std::vector<std::uint32_t>& accumulations() noexcept { return accumulation_; }
    std::span<const std::int8_t> directions() const noexcept { return direction_; }
    std::span<const std::uint32_t> accumulations() const noexcept { return accumulation_; }

private:
    std::size_t nx_;
    std::size_t ny_;
    std::vector<std::int8_t> direction_;
    std::vector<std::uint32_t> accumulation_;
};

FlowField flow_paths(const TerrainSurface& surface);

} // namespace roadcarbon::terrain
