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

#ifndef UAVPLACE_CONFIG_HPP
#define UAVPLACE_CONFIG_HPP

#include "error.hpp"
#include "geometry.hpp"

#include <cerrno>
#include <cmath>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace uavplace
{

enum class GainMode
{
    Deterministic, // alpha = 1 for every user
    Gaussian       // alpha ~ CN(0, 1), seeded
};

enum class PowerMode
{
    PerUav, // uav_power_mw split equally among the UAV's users
    PerUser // every user gets uav_power_mw
};

enum class SinrStorage
{
    Matrix, // materialize S
    Stream  // assemble rows of S from the gain tables on demand
};

// Experiment description. Defaults reproduce the reference 114 m x 114 m, four-region setup.
struct ScenarioConfig
{
    double area_side_m = 114.0;
    std::size_t region_rows = 2;
    std::size_t region_cols = 2;
    std::size_t users_per_region = 5;
    std::size_t num_uavs = 4;
    std::size_t num_antennas = 6;
    double pathloss_exponent = 2.0;
    double spacing_ratio = 0.5;
    std::size_t grid_nx = 2;
    std::size_t grid_ny = 2;
    std::size_t grid_nz = 5;
    // Explicit per-region candidate lists; when set for a region they replace the lattice
    std::map<std::size_t, std::vector<Point3>> candidates;
    double h_min_m = 22.0;
    double h_max_m = 36.0;
    ZoneMode zone_mode = ZoneMode::Band;
    double zone_a_m = 22.0;
    double zone_b_m = 11.0;
    double uav_power_mw = 1.0;
    PowerMode power_mode = PowerMode::PerUav;
    double n0_dbm = -35.0;
    double gamma_th_db = -5.49;
    GainMode gain_mode = GainMode::Deterministic;
    std::uint64_t seed = 1;
    bool seed_given = false;
    SinrStorage sinr_storage = SinrStorage::Matrix;

    std::size_t region_count() const noexcept { return region_rows * region_cols; }
    double region_width() const noexcept { return area_side_m / static_cast<double>(region_cols); }
    double region_height() const noexcept { return area_side_m / static_cast<double>(region_rows); }

    // Region j is row j / cols, column j % cols; x grows with the column, y with the row
    Region region(std::size_t j) const noexcept
    {
        const double w = region_width(), h = region_height();
        const double c = static_cast<double>(j % region_cols), r = static_cast<double>(j / region_cols);
        return {c * w, (c + 1.0) * w, r * h, (r + 1.0) * h};
    }

    RestrictedZone zone() const noexcept
    {
        return {0.5 * area_side_m, 0.5 * area_side_m, zone_a_m, zone_b_m, zone_mode};
    }

    AltitudeBand band() const noexcept { return {h_min_m, h_max_m}; }

    void validate() const
    {
        auto fail = [](const std::string &field, const std::string &msg) {
            throw Error(ErrorKind::ValidationError, field + ": " + msg);
        };
        if (!(area_side_m > 0.0))
            fail("area_side_m", "must be positive");
        if (region_rows == 0)
            fail("region_rows", "must be >= 1");
        if (region_cols == 0)
            fail("region_cols", "must be >= 1");
        if (num_uavs != region_count())
            fail("num_uavs", "must equal region_rows * region_cols (" + std::to_string(region_count()) + ")");
        if (users_per_region == 0)
            fail("users_per_region", "must be >= 1");
        if (num_antennas == 0)
            fail("num_antennas", "must be >= 1");
        if (!(pathloss_exponent >= 0.0))
            fail("pathloss_exponent", "must be >= 0");
        if (!(spacing_ratio > 0.0))
            fail("spacing_ratio", "must be positive");
        if (grid_nx == 0)
            fail("grid_nx", "must be >= 1");
        if (grid_ny == 0)
            fail("grid_ny", "must be >= 1");
        if (grid_nz == 0)
            fail("grid_nz", "must be >= 1");
        if (!(h_min_m > 0.0))
            fail("h_min_m", "must be positive");
        if (!(h_min_m <= h_max_m))
            fail("h_max_m", "must be >= h_min_m");
        if (!(zone_a_m > 0.0))
            fail("zone_a_m", "must be positive");
        if (!(zone_b_m > 0.0))
            fail("zone_b_m", "must be positive");
        if (!(uav_power_mw >= 0.0))
            fail("uav_power_mw", "must be >= 0");
        if (!std::isfinite(n0_dbm))
            fail("n0_dbm", "must be finite");
        if (!std::isfinite(gamma_th_db))
            fail("gamma_th_db", "must be finite");
        if (gain_mode == GainMode::Gaussian && !seed_given)
            fail("seed", "is mandatory with gain_mode = gaussian");
        for (const auto &[j, pts] : candidates)
        {
            const std::string key = "candidates_" + std::to_string(j);
            if (j >= region_count())
                fail(key, "region index out of range");
            if (pts.empty())
                fail(key, "candidate list is empty");
            const Region r = region(j);
            for (const auto &p : pts)
                if (!is_finite(p) || !r.contains_xy(p))
                    fail(key, "candidate lies outside its region");
        }
    }
};

inline const char *to_string(ZoneMode m) noexcept { return m == ZoneMode::Ellipse ? "ellipse" : "band"; }
inline const char *to_string(GainMode m) noexcept
{
    return m == GainMode::Gaussian ? "gaussian" : "deterministic";
}
inline const char *to_string(PowerMode m) noexcept { return m == PowerMode::PerUser ? "per_user" : "per_uav"; }
inline const char *to_string(SinrStorage m) noexcept { return m == SinrStorage::Stream ? "stream" : "matrix"; }

namespace detail
{

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_double(const std::string &key, const std::string &v, std::size_t line)
{
    char *end = nullptr;
    errno = 0;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(d))
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": " + key + ": '" + v + "' is not a finite number");
    return d;
}

inline std::uint64_t parse_uint(const std::string &key, const std::string &v, std::size_t line)
{
    std::uint64_t out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || p != v.data() + v.size())
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": " + key + ": '" + v + "' is not a non-negative integer");
    return out;
}

// "x y z; x y z; ..." (commas also accepted as separators inside a point)
inline std::vector<Point3> parse_points(const std::string &key, const std::string &v, std::size_t line)
{
    std::vector<Point3> pts;
    std::stringstream groups(v);
    std::string group;
    while (std::getline(groups, group, ';'))
    {
        for (auto &ch : group)
            if (ch == ',')
                ch = ' ';
        std::stringstream ss(group);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (tok.size() != 3)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + key +
                                                   ": every candidate needs exactly three coordinates");
        pts.push_back({parse_double(key, tok[0], line), parse_double(key, tok[1], line),
                       parse_double(key, tok[2], line)});
    }
    return pts;
}

} // namespace detail

// Flat "key = value" text, '#' starts a comment. Omitted keys keep their defaults; unknown or
// repeated keys are errors. The result is validated.
inline ScenarioConfig parse_config(std::string_view text)
{
    using namespace detail;
    ScenarioConfig cfg;
    std::map<std::string, std::size_t> seen;
    std::stringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw))
    {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty())
            continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected 'key = value'");
        const std::string key = trim(std::string_view(s).substr(0, eq));
        const std::string val = trim(std::string_view(s).substr(eq + 1));
        if (key.empty())
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": missing key");
        if (!seen.emplace(key, line).second)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": duplicate key " + key);

        auto num = [&] { return parse_double(key, val, line); };
        auto count = [&] { return static_cast<std::size_t>(parse_uint(key, val, line)); };
        auto choice = [&](std::initializer_list<const char *> allowed) {
            for (const char *a : allowed)
                if (val == a)
                    return;
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + key + ": unknown value '" +
                                                   val + "'");
        };

        if (key == "area_side_m") cfg.area_side_m = num();
        else if (key == "region_rows") cfg.region_rows = count();
        else if (key == "region_cols") cfg.region_cols = count();
        else if (key == "users_per_region") cfg.users_per_region = count();
        else if (key == "num_uavs") cfg.num_uavs = count();
        else if (key == "num_antennas") cfg.num_antennas = count();
        else if (key == "pathloss_exponent") cfg.pathloss_exponent = num();
        else if (key == "spacing_ratio") cfg.spacing_ratio = num();
        else if (key == "grid_nx") cfg.grid_nx = count();
        else if (key == "grid_ny") cfg.grid_ny = count();
        else if (key == "grid_nz") cfg.grid_nz = count();
        else if (key == "h_min_m") cfg.h_min_m = num();
        else if (key == "h_max_m") cfg.h_max_m = num();
        else if (key == "zone_mode")
        {
            choice({"band", "ellipse"});
            cfg.zone_mode = val == "ellipse" ? ZoneMode::Ellipse : ZoneMode::Band;
        }
        else if (key == "zone_a_m") cfg.zone_a_m = num();
        else if (key == "zone_b_m") cfg.zone_b_m = num();
        else if (key == "uav_power_mw") cfg.uav_power_mw = num();
        else if (key == "power_mode")
        {
            choice({"per_uav", "per_user"});
            cfg.power_mode = val == "per_user" ? PowerMode::PerUser : PowerMode::PerUav;
        }
        else if (key == "n0_dbm") cfg.n0_dbm = num();
        else if (key == "gamma_th_db") cfg.gamma_th_db = num();
        else if (key == "gain_mode")
        {
            choice({"deterministic", "gaussian"});
            cfg.gain_mode = val == "gaussian" ? GainMode::Gaussian : GainMode::Deterministic;
        }
        else if (key == "seed")
        {
            cfg.seed = parse_uint(key, val, line);
            cfg.seed_given = true;
        }
        else if (key == "sinr_storage")
        {
            choice({"matrix", "stream"});
            cfg.sinr_storage = val == "stream" ? SinrStorage::Stream : SinrStorage::Matrix;
        }
        else if (key.rfind("candidates_", 0) == 0)
        {
            const std::string idx = key.substr(11);
            cfg.candidates[static_cast<std::size_t>(parse_uint(key, idx, line))] = parse_points(key, val, line);
        }
        else
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": unknown key " + key);
    }
    cfg.validate();
    return cfg;
}

inline ScenarioConfig load_config(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw Error(ErrorKind::IoError, "cannot open config file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

// Canonical text form: every key, fixed order, full precision. parse_config(to_text(c)) == c.
inline std::string to_text(const ScenarioConfig &c)
{
    using detail::format_double;
    std::string s;
    auto put = [&s](const std::string &k, const std::string &v) { s += k + " = " + v + "\n"; };
    put("area_side_m", format_double(c.area_side_m));
    put("region_rows", std::to_string(c.region_rows));
    put("region_cols", std::to_string(c.region_cols));
    put("users_per_region", std::to_string(c.users_per_region));
    put("num_uavs", std::to_string(c.num_uavs));
    put("num_antennas", std::to_string(c.num_antennas));
    put("pathloss_exponent", format_double(c.pathloss_exponent));
    put("spacing_ratio", format_double(c.spacing_ratio));
    put("grid_nx", std::to_string(c.grid_nx));
    put("grid_ny", std::to_string(c.grid_ny));
    put("grid_nz", std::to_string(c.grid_nz));
    for (const auto &[j, pts] : c.candidates)
    {
        std::string v;
        for (std::size_t i = 0; i < pts.size(); ++i)
            v += (i ? "; " : "") + format_double(pts[i].x) + " " + format_double(pts[i].y) + " " +
                 format_double(pts[i].z);
        put("candidates_" + std::to_string(j), v);
    }
    put("h_min_m", format_double(c.h_min_m));
    put("h_max_m", format_double(c.h_max_m));
    put("zone_mode", to_string(c.zone_mode));
    put("zone_a_m", format_double(c.zone_a_m));
    put("zone_b_m", format_double(c.zone_b_m));
    put("uav_power_mw", format_double(c.uav_power_mw));
    put("power_mode", to_string(c.power_mode));
    put("n0_dbm", format_double(c.n0_dbm));
    put("gamma_th_db", format_double(c.gamma_th_db));
    put("gain_mode", to_string(c.gain_mode));
    put("seed", std::to_string(c.seed));
    put("sinr_storage", to_string(c.sinr_storage));
    return s;
}

// FNV-1a over the canonical text
inline std::uint64_t config_hash(const ScenarioConfig &c)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_text(c))
    {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace uavplace

#endif
