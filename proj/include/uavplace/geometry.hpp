// SPDX-License-Identifier: Apache-2.0
//
// uavplace - simultaneous placement of multiple UAV base stations
// Copyright (C) 2026 The uavplace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef UAVPLACE_GEOMETRY_HPP
#define UAVPLACE_GEOMETRY_HPP

#include "error.hpp"
#include "random.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace uavplace
{

struct Point3
{
    double x = 0.0; // meters
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Point3 &) const = default;
};

inline bool is_finite(const Point3 &p) noexcept
{
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// Axis-aligned horizontal rectangle served by exactly one UAV
struct Region
{
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;

    double width() const noexcept { return x_max - x_min; }
    double height() const noexcept { return y_max - y_min; }

    bool contains_xy(const Point3 &p) const noexcept
    {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    void validate() const
    {
        if (!(x_min < x_max) || !(y_min < y_max))
            throw Error(ErrorKind::ValidationError, "region bounds must satisfy min < max");
    }
};

enum class ZoneMode
{
    Ellipse, // exact elliptical no-hover zone
    Band     // rectangular approximation: vertical strip |x - center_x| < b
};

struct RestrictedZone
{
    double center_x = 0.0;
    double center_y = 0.0;
    double semi_major = 1.0; // a, along y
    double semi_minor = 1.0; // b, along x
    ZoneMode mode = ZoneMode::Band;

    void validate() const
    {
        if (!(semi_major > 0.0) || !(semi_minor > 0.0))
            throw Error(ErrorKind::ValidationError, "restricted zone axes must be positive");
    }
};

struct AltitudeBand
{
    double h_min = 0.0;
    double h_max = 0.0;

    void validate() const
    {
        if (!(h_min > 0.0) || !(h_min <= h_max))
            throw Error(ErrorKind::ValidationError, "altitude band requires 0 < h_min <= h_max");
    }
};

// Candidate hover positions of one region. source_index[i] is the position of points[i] in the
// unfiltered lattice, so filtered grids can always be traced back to the original layout.
struct CandidateGrid
{
    std::size_t region = 0;
    std::vector<Point3> points;
    std::vector<std::size_t> source_index;

    std::size_t size() const noexcept { return points.size(); }
    bool empty() const noexcept { return points.empty(); }
};

inline double distance(const Point3 &p, const Point3 &q) noexcept
{
    const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Boundary counts as outside (non-strict inequality)
inline bool outside_restricted_ellipse(const Point3 &p, const RestrictedZone &zone) noexcept
{
    const double u = (p.x - zone.center_x) / zone.semi_minor;
    const double v = (p.y - zone.center_y) / zone.semi_major;
    return u * u + v * v >= 1.0;
}

inline bool outside_restricted_band(const Point3 &p, const RestrictedZone &zone) noexcept
{
    return std::abs(p.x - zone.center_x) >= zone.semi_minor;
}

inline bool outside_restricted_zone(const Point3 &p, const RestrictedZone &zone) noexcept
{
    return zone.mode == ZoneMode::Ellipse ? outside_restricted_ellipse(p, zone)
                                          : outside_restricted_band(p, zone);
}

inline bool altitude_ok(const Point3 &p, const AltitudeBand &band) noexcept
{
    return band.h_min <= p.z && p.z <= band.h_max;
}

inline bool position_allowed(const Point3 &p, const RestrictedZone &zone, const AltitudeBand &band) noexcept
{
    return outside_restricted_zone(p, zone) && altitude_ok(p, band);
}

// Keeps the candidates that pass both regulatory predicates, in their original order.
// Throws EmptyGrid when nothing survives.
inline CandidateGrid filter_candidates(const CandidateGrid &grid, const RestrictedZone &zone,
                                       const AltitudeBand &band)
{
    CandidateGrid out;
    out.region = grid.region;
    for (std::size_t i = 0; i < grid.points.size(); ++i)
    {
        if (!position_allowed(grid.points[i], zone, band))
            continue;
        out.points.push_back(grid.points[i]);
        out.source_index.push_back(i < grid.source_index.size() ? grid.source_index[i] : i);
    }
    if (out.empty())
        throw Error(ErrorKind::EmptyGrid,
                    "no candidate of region " + std::to_string(grid.region) + " survives the regulatory filter");
    return out;
}

// n_x * n_y horizontal lattice at cell centers, times n_z altitudes evenly spanning [h_min, h_max].
// Ordering: x outermost, then y, altitude fastest. With n_z == 1 the single level is mid-band.
inline CandidateGrid make_lattice_grid(std::size_t region_id, const Region &region, std::size_t n_x,
                                       std::size_t n_y, std::size_t n_z, const AltitudeBand &band)
{
    if (n_x == 0 || n_y == 0 || n_z == 0)
        throw Error(ErrorKind::ValidationError, "candidate lattice dimensions must be >= 1");

    CandidateGrid g;
    g.region = region_id;
    g.points.reserve(n_x * n_y * n_z);
    const double dx = region.width() / static_cast<double>(n_x);
    const double dy = region.height() / static_cast<double>(n_y);
    for (std::size_t ix = 0; ix < n_x; ++ix)
        for (std::size_t iy = 0; iy < n_y; ++iy)
            for (std::size_t iz = 0; iz < n_z; ++iz)
            {
                double z = n_z == 1 ? 0.5 * (band.h_min + band.h_max)
                                    : band.h_min + (band.h_max - band.h_min) * static_cast<double>(iz) /
                                                       static_cast<double>(n_z - 1);
                if (iz + 1 == n_z && n_z > 1)
                    z = band.h_max; // exact upper level, no rounding drift
                g.points.push_back({region.x_min + (static_cast<double>(ix) + 0.5) * dx,
                                    region.y_min + (static_cast<double>(iy) + 0.5) * dy, z});
            }
    g.source_index.resize(g.points.size());
    for (std::size_t i = 0; i < g.source_index.size(); ++i)
        g.source_index[i] = i;
    return g;
}

// Ground users (z = 0) drawn uniformly over the region rectangle
inline std::vector<Point3> place_users(const Region &region, std::size_t count, std::uint64_t seed)
{
    if (count == 0)
        throw Error(ErrorKind::InvalidArgument, "user count must be >= 1");
    Rng rng(seed);
    std::vector<Point3> users(count);
    for (auto &u : users)
    {
        u.x = region.x_min + region.width() * rng.uniform();
        u.y = region.y_min + region.height() * rng.uniform();
        u.z = 0.0;
    }
    return users;
}

} // namespace uavplace

#endif
