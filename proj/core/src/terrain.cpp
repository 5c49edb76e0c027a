#include "roadcarbon/terrain.hpp"

#include "roadcarbon/csv.hpp"
#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace roadcarbon::terrain {

namespace {

constexpr std::array<std::pair<int, int>, 8> kNeighbourOffsets = {{
    {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1},
}};

double distance(Point2 a, Point2 b)
{
    return std::hypot(b.x - a.x, b.y - a.y);
}

} // namespace

TerrainSurface::TerrainSurface(Point2 origin, double cell_size, std::size_t nx, std::size_t ny,
                               std::vector<double> elevations)
    : origin_(origin), cell_size_(cell_size), nx_(nx), ny_(ny), elevations_(std::move(elevations))
{
    if (!(cell_size_ > 0.0) || !std::isfinite(cell_size_)) {
        throw DomainError(fmt::format("terrain cell size must be positive, got {}", cell_size_));
    }
    if (nx_ < 2 || ny_ < 2) {
        throw DomainError(fmt::format("terrain grid must be at least 2x2, got {}x{}", nx_, ny_));
    }
    if (elevations_.size() != nx_ * ny_) {
        throw DomainError(fmt::format("terrain grid {}x{} needs {} elevations, got {}", nx_, ny_,
                                      nx_ * ny_, elevations_.size()));
    }
    for (const double z : elevations_) {
        if (!std::isfinite(z)) {
            throw DomainError("terrain elevations must all be finite");
        }
    }
}

TerrainSurface TerrainSurface::from_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open terrain file: {}", path.string()));
    }
    return from_csv(in, path.string());
}

TerrainSurface TerrainSurface::from_csv(std::istream& in, const std::string& source_name)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw SchemaError(fmt::format("{}: empty terrain file", source_name));
    }
    const auto header = csv::split_line(line);
    if (header.size() != 5) {
        throw SchemaError(fmt::format("{}: terrain header needs 5 fields "
                                      "(nx,ny,cell_size,origin_x,origin_y), got {}",
                                      source_name, header.size()));
    }
    const auto nx = static_cast<std::size_t>(csv::parse_double(header[0], source_name, 1, 1));
    const auto ny = static_cast<std::size_t>(csv::parse_double(header[1], source_name, 1, 2));
    const double cell = csv::parse_double(header[2], source_name, 1, 3);
    const Point2 origin{csv::parse_double(header[3], source_name, 1, 4),
                        csv::parse_double(header[4], source_name, 1, 5)};

    std::vector<double> elevations;
    elevations.reserve(nx * ny);
    for (std::size_t row = 0; row < ny; ++row) {
        if (!std::getline(in, line)) {
            throw SchemaError(fmt::format("{}: expected {} elevation rows, got {}", source_name,
                                          ny, row));
        }
        const auto fields = csv::split_line(line);
        if (fields.size() != nx) {
            throw SchemaError(fmt::format("{}: line {}: expected {} elevations, got {}",
                                          source_name, row + 2, nx, fields.size()));
        }
        for (std::size_t col = 0; col < nx; ++col) {
            elevations.push_back(csv::parse_double(fields[col], source_name, row + 2, col + 1));
        }
    }
    return TerrainSurface(origin, cell, nx, ny, std::move(elevations));
}

void TerrainSurface::to_csv(std::ostream& out) const
{
    out << nx_ << ',' << ny_ << ',' << csv::format_full(cell_size_) << ','
        << csv::format_full(origin_.x) << ',' << csv::format_full(origin_.y) << '\n';
    for (std::size_t iy = 0; iy < ny_; ++iy) {
        for (std::size_t ix = 0; ix < nx_; ++ix) {
            if (ix != 0) {
                out << ',';
            }
            out << csv::format_full(node(ix, iy));
        }
        out << '\n';
    }
}

bool TerrainSurface::contains(Point2 point) const
{
    return point.x >= origin_.x && point.x <= max_x() && point.y >= origin_.y &&
           point.y <= max_y();
}

double TerrainSurface::elevation_at(Point2 point) const
{
    if (!contains(point)) {
        throw DomainError(fmt::format("point ({}, {}) outside terrain bounds "
                                      "[{}, {}] x [{}, {}]",
                                      point.x, point.y, origin_.x, max_x(), origin_.y, max_y()));
    }
    const double fx = (point.x - origin_.x) / cell_size_;
    const double fy = (point.y - origin_.y) / cell_size_;
    auto ix = static_cast<std::size_t>(fx);
    auto iy = static_cast<std::size_t>(fy);
    ix = std::min(ix, nx_ - 2);
    iy = std::min(iy, ny_ - 2);
    const double tx = fx - static_cast<double>(ix);
    const double ty = fy - static_cast<double>(iy);

    const double z00 = node(ix, iy);
    const double z10 = node(ix + 1, iy);
    const double z01 = node(ix, iy + 1);
    const double z11 = node(ix + 1, iy + 1);
    const double bottom = z00 + (z10 - z00) * tx;
    const double top = z01 + (z11 - z01) * tx;
    return bottom + (top - bottom) * ty;
}

void Alignment::validate() const
{
    if (vertices.size() < 2) {
        throw DomainError(fmt::format("alignment needs at least 2 vertices, got {}",
                                      vertices.size()));
    }
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw DomainError(fmt::format("alignment width must be positive, got {}", width));
    }
    if (design_grade.size() != vertices.size()) {
        throw DomainError(fmt::format("alignment has {} vertices but {} design grades",
                                      vertices.size(), design_grade.size()));
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (distance(vertices[i], vertices[i + 1]) <= 0.0) {
            throw DomainError(fmt::format("alignment vertices {} and {} coincide", i, i + 1));
        }
    }
    for (const auto& v : vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
            throw DomainError("alignment vertices must be finite");
        }
    }
    for (const double z : design_grade) {
        if (!std::isfinite(z)) {
            throw DomainError("alignment design grades must be finite");
        }
    }
}

std::vector<double> vertex_stations(const Alignment& alignment)
{
    std::vector<double> stations;
    stations.reserve(alignment.vertices.size());
    double chainage = 0.0;
    stations.push_back(0.0);
    for (std::size_t i = 0; i + 1 < alignment.vertices.size(); ++i) {
        chainage += distance(alignment.vertices[i], alignment.vertices[i + 1]);
        stations.push_back(chainage);
    }
    return stations;
}

double alignment_length(const Alignment& alignment)
{
    return vertex_stations(alignment).back();
}

namespace {

// Segment index whose [station(i), station(i+1)] interval covers the chainage.
std::size_t segment_for_station(const std::vector<double>& stations, double station)
{
    const auto it = std::upper_bound(stations.begin(), stations.end(), station);
    const auto idx = static_cast<std::size_t>(std::distance(stations.begin(), it));
    if (idx == 0) {
        return 0;
    }
    return std::min(idx - 1, stations.size() - 2);
}

} // namespace

StationSample station_at(const Alignment& alignment, double station)
{
    alignment.validate();
    const auto stations = vertex_stations(alignment);
    const double length = stations.back();
    const double tol = 1e-9 * std::max(1.0, length);
    if (station < -tol || station > length + tol) {
        throw DomainError(fmt::format("station {} outside alignment length {}", station, length));
    }
    const double s = std::clamp(station, 0.0, length);
    const std::size_t seg = segment_for_station(stations, s);
    const double seg_len = stations[seg + 1] - stations[seg];
    const double t = (s - stations[seg]) / seg_len;

    const Point2 a = alignment.vertices[seg];
    const Point2 b = alignment.vertices[seg + 1];
    StationSample sample;
    sample.station = s;
    sample.point = Point2{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
    sample.design_elevation = alignment.design_grade[seg] +
                              (alignment.design_grade[seg + 1] - alignment.design_grade[seg]) * t;
    return sample;
}

std::vector<StationSample> sample_alignment(const Alignment& alignment, double spacing)
{
    alignment.validate();
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw DomainError(fmt::format("station spacing must be positive, got {}", spacing));
    }
    const double length = alignment_length(alignment);
    std::vector<StationSample> samples;
    const auto count = static_cast<std::size_t>(length / spacing);
    samples.reserve(count + 2);
    for (std::size_t i = 0; i <= count; ++i) {
        samples.push_back(station_at(alignment, static_cast<double>(i) * spacing));
    }
    // Endpoint always included; skip when the grid already landed on it.
    if (samples.back().station < length - 1e-9 * std::max(1.0, length)) {
        samples.push_back(station_at(alignment, length));
    } else {
        samples.back() = station_at(alignment, length);
    }
    return samples;
}

CrossSection cross_section(const TerrainSurface& surface, const Alignment& alignment,
                           double station, double half_width, double offset_step)
{
    if (!(half_width > 0.0)) {
        throw DomainError(fmt::format("half width must be positive, got {}", half_width));
    }
    if (!(offset_step > 0.0)) {
        throw DomainError(fmt::format("offset step must be positive, got {}", offset_step));
    }
    const auto sample = station_at(alignment, station);

    // Direction of the segment containing the station gives the normal.
    const auto stations = vertex_stations(alignment);
    const std::size_t seg = segment_for_station(stations, sample.station);
    const Point2 a = alignment.vertices[seg];
    const Point2 b = alignment.vertices[seg + 1];
    const double seg_len = distance(a, b);
    const Point2 normal{-(b.y - a.y) / seg_len, (b.x - a.x) / seg_len};

    // Uniform offsets hitting both edges exactly, at least 5 of them.
    auto intervals = static_cast<std::size_t>(std::ceil(2.0 * half_width / offset_step));
    intervals = std::max<std::size_t>(intervals, 4);
    const double step = 2.0 * half_width / static_cast<double>(intervals);

    CrossSection section;
    section.station = sample.station;
    section.ground_profile.reserve(intervals + 1);
    section.design_profile.reserve(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double offset = -half_width + static_cast<double>(i) * step;
        const Point2 p{sample.point.x + normal.x * offset, sample.point.y + normal.y * offset};
        if (!surface.contains(p)) {
            throw DomainError(fmt::format("cross section at station {} exits terrain bounds at "
                                          "offset {}",
                                          sample.station, offset));
        }
        section.ground_profile.emplace_back(offset, surface.elevation_at(p));
        section.design_profile.emplace_back(offset, sample.design_elevation);
    }

    double cut = 0.0;
    double fill = 0.0;
    for (std::size_t i = 0; i + 1 < section.ground_profile.size(); ++i) {
        const double dz0 = section.ground_profile[i].second - section.design_profile[i].second;
        const double dz1 =
            section.ground_profile[i + 1].second - section.design_profile[i + 1].second;
        const double width = section.ground_profile[i + 1].first - section.ground_profile[i].first;
        cut += 0.5 * (std::max(0.0, dz0) + std::max(0.0, dz1)) * width;
        fill += 0.5 * (std::max(0.0, -dz0) + std::max(0.0, -dz1)) * width;
    }
    section.cut_area = cut;
    section.fill_area = fill;
    return section;
}

EarthworkVolumes cut_fill_volumes(std::span<const CrossSection> sections)
{
    if (sections.size() < 2) {
        throw DomainError(fmt::format("cut/fill volumes need at least 2 sections, got {}",
                                      sections.size()));
    }
    EarthworkVolumes volumes;
    for (std::size_t i = 0; i + 1 < sections.size(); ++i) {
        const double ds = sections[i + 1].station - sections[i].station;
        if (!(ds > 0.0)) {
            throw DomainError(fmt::format("section stations must strictly increase "
                                          "({} then {})",
                                          sections[i].station, sections[i + 1].station));
        }
        volumes.cut_m3 += 0.5 * (sections[i].cut_area + sections[i + 1].cut_area) * ds;
        volumes.fill_m3 += 0.5 * (sections[i].fill_area + sections[i + 1].fill_area) * ds;
    }
    return volumes;
}

GradeProfile grade_profile(const Alignment& alignment)
{
    alignment.validate();
    const auto stations = vertex_stations(alignment);
    GradeProfile profile;
    profile.stations.reserve(stations.size() - 1);
    profile.grades.reserve(stations.size() - 1);
    for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
        const double ds = stations[i + 1] - stations[i];
        if (!(ds > 0.0)) {
            throw DomainError(fmt::format("zero-length segment at vertex {}", i));
        }
        profile.stations.push_back(stations[i]);
        profile.grades.push_back((alignment.design_grade[i + 1] - alignment.design_grade[i]) / ds);
    }
    profile.max_abs_grade = 0.0;
    for (const double g : profile.grades) {
        profile.max_abs_grade = std::max(profile.max_abs_grade, std::abs(g));
    }
    return profile;
}

GradeCapResult cap_grades(const Alignment& alignment, double max_grade)
{
    alignment.validate();
    if (!(max_grade > 0.0) || !(max_grade < 1.0)) {
        throw DomainError(fmt::format("max grade must be in (0, 1), got {}", max_grade));
    }

    GradeCapResult result;
    result.alignment = alignment;
    result.max_abs_grade_before = grade_profile(alignment).max_abs_grade;

    const auto stations = vertex_stations(alignment);
    const double length = stations.back();
    const std::size_t n = alignment.vertices.size();

    // With interior vertices free, feasibility reduces to the endpoint chord.
    const double endpoint_grade =
        std::abs(alignment.design_grade[n - 1] - alignment.design_grade[0]) / length;
    if (endpoint_grade > max_grade * (1.0 + 1e-12)) {
        result.feasible = false;
        result.max_abs_grade_after = result.max_abs_grade_before;
        return result;
    }

    auto& z = result.alignment.design_grade;

    // Raise low points only where the pinned endpoints force it; the floor
    // profile is itself cap-compliant.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double floor = std::max(z.front() - max_grade * stations[i],
                                      z.back() - max_grade * (length - stations[i]));
        z[i] = std::max(z[i], floor);
    }

    // Lower high points by slope-limited erosion: forward/backward sweeps
    // clamp each vertex to neighbour + cap. Two passes reach the largest
    // compliant profile below the input; the loop guards rounding.
    const int max_sweeps = 64;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double limit = z[i - 1] + max_grade * (stations[i] - stations[i - 1]);
            if (z[i] > limit) {
                z[i] = limit;
                changed = true;
            }
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            const double limit = z[i + 1] + max_grade * (stations[i + 1] - stations[i]);
            if (z[i] > limit) {
                z[i] = limit;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    result.iterations = sweep;
    result.max_abs_grade_after = grade_profile(result.alignment).max_abs_grade;
    return result;
}

std::pair<int, int> FlowField::neighbour_offset(int slot)
{
    return kNeighbourOffsets[static_cast<std::size_t>(slot)];
}

FlowField flow_paths(const TerrainSurface& surface)
{
    const std::size_t nx = surface.nx();
    const std::size_t ny = surface.ny();
    FlowField field(nx, ny);

    auto& dirs = field.directions();
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double here = surface.node(ix, iy);
            double lowest = here;
            std::int8_t best = FlowField::kSink;
            for (int slot = 0; slot < 8; ++slot) {
                const auto [dx, dy] = kNeighbourOffsets[static_cast<std::size_t>(slot)];
                const auto jx = static_cast<std::ptrdiff_t>(ix) + dx;
                const auto jy = static_cast<std::ptrdiff_t>(iy) + dy;
                if (jx < 0 || jy < 0 || jx >= static_cast<std::ptrdiff_t>(nx) ||
                    jy >= static_cast<std::ptrdiff_t>(ny)) {
                    continue;
                }
                const double there = surface.node(static_cast<std::size_t>(jx),
                                                  static_cast<std::size_t>(jy));
                if (there < lowest) {
                    lowest = there;
                    best = static_cast<std::int8_t>(slot);
                }
            }
            dirs[iy * nx + ix] = best;
        }
    }

    // Flow targets are strictly lower, so descending-elevation order visits
    // every cell before its downstream neighbour.
    std::vector<std::size_t> order(nx * ny);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double za = surface.elevations()[a];
        const double zb = surface.elevations()[b];
        return za > zb;
    });

    auto& acc = field.accumulations();
    for (const std::size_t cell : order) {
        const std::int8_t slot = dirs[cell];
        if (slot == FlowField::kSink) {
            continue;
        }
        const auto [dx, dy] = kNeighbourOffsets[static_cast<std::size_t>(slot)];
        const std::size_t ix = cell % nx;
        const std::size_t iy = cell / nx;
        const auto jx = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(ix) + dx);
        const auto jy = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(iy) + dy);
        acc[jy * nx + jx] += acc[cell];
    }
    return field;
}

} // namespace roadcarbon::terrain
