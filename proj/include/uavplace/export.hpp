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

#ifndef UAVPLACE_EXPORT_HPP
#define UAVPLACE_EXPORT_HPP

#include "config.hpp"
#include "error.hpp"
#include "scenario.hpp"
#include "selection.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace uavplace
{

enum class ExportFormat
{
    Csv,
    Json
};

enum class ExportWhat
{
    Placement, // uav_index, x, y, z
    Sinr,      // user_index, sinr_db
    Sweep,     // threshold_db, uav_index, x, y, z, feasible_count
    Scatter    // seed, uav_index, x, y, z, feasible_count
};

inline ExportWhat parse_export_what(const std::string &s)
{
    if (s == "placement") return ExportWhat::Placement;
    if (s == "sinr") return ExportWhat::Sinr;
    if (s == "sweep") return ExportWhat::Sweep;
    if (s == "scatter") return ExportWhat::Scatter;
    throw Error(ErrorKind::InvalidArgument, "unknown export table '" + s + "'");
}

inline const char *to_string(ExportWhat w) noexcept
{
    switch (w)
    {
    case ExportWhat::Placement: return "placement";
    case ExportWhat::Sinr: return "sinr";
    case ExportWhat::Sweep: return "sweep";
    case ExportWhat::Scatter: return "scatter";
    }
    return "?";
}

namespace detail
{

// One logical table; cells are numbers, rendered identically for csv and json
struct Table
{
    std::vector<std::string> columns;
    std::vector<bool> integral;
    std::vector<std::vector<double>> rows;
};

inline Table make_table(const RunArtifacts &a, ExportWhat what)
{
    Table t;
    auto need_placement = [&]() -> const PlacementResult & {
        if (!a.placement)
            throw Error(ErrorKind::InvalidArgument,
                        std::string("'") + to_string(what) + "' export needs a solve run, got " + to_string(a.kind));
        return *a.placement;
    };
    switch (what)
    {
    case ExportWhat::Placement: {
        const auto &p = need_placement();
        t.columns = {"uav_index", "x", "y", "z"};
        t.integral = {true, false, false, false};
        for (std::size_t j = 0; j < p.positions.size(); ++j)
            t.rows.push_back({double(j), p.positions[j].x, p.positions[j].y, p.positions[j].z});
        break;
    }
    case ExportWhat::Sinr: {
        const auto &p = need_placement();
        t.columns = {"user_index", "sinr_db"};
        t.integral = {true, false};
        for (std::size_t k = 0; k < p.sinr_db.size(); ++k)
            t.rows.push_back({double(k), p.sinr_db[k]});
        break;
    }
    case ExportWhat::Sweep:
    case ExportWhat::Scatter: {
        const bool sweep = what == ExportWhat::Sweep;
        if (a.kind != (sweep ? RunKind::Sweep : RunKind::Scatter))
            throw Error(ErrorKind::InvalidArgument,
                        std::string("'") + to_string(what) + "' export does not match run kind " + to_string(a.kind));
        t.columns = {sweep ? "threshold_db" : "seed", "uav_index", "x", "y", "z", "feasible_count"};
        t.integral = {!sweep, true, false, false, false, true};
        for (const auto &r : a.sweep)
            for (std::size_t j = 0; j < r.result.positions.size(); ++j)
            {
                const auto &p = r.result.positions[j];
                t.rows.push_back({sweep ? r.threshold_db : double(r.seed), double(j), p.x, p.y, p.z,
                                  double(r.result.feasible_count)});
            }
        break;
    }
    }
    return t;
}

inline std::string format_cell(double v, bool integral)
{
    char buf[64];
    if (integral)
        std::snprintf(buf, sizeof buf, "%.0f", v);
    else
        std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

} // namespace detail

// Plain-text export. CSV starts with one '#' line naming seed, config hash and PRNG, then the header.
inline std::string render_export(const RunArtifacts &a, ExportFormat format, ExportWhat what)
{
    const auto t = detail::make_table(a, what);
    if (format == ExportFormat::Csv)
    {
        std::string s = "# seed=" + std::to_string(a.seed) + " config_hash=" + a.config_hash + " prng=" + a.prng +
                        " method=" + to_string(a.method) + "\n";
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            s += (c ? "," : "") + t.columns[c];
        s += "\n";
        for (const auto &row : t.rows)
        {
            for (std::size_t c = 0; c < row.size(); ++c)
                s += (c ? "," : "") + detail::format_cell(row[c], t.integral[c]);
            s += "\n";
        }
        return s;
    }

    nlohmann::ordered_json j;
    j["seed"] = a.seed;
    j["config_hash"] = a.config_hash;
    j["prng"] = a.prng;
    j["method"] = to_string(a.method);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : t.rows)
    {
        nlohmann::ordered_json r;
        for (std::size_t c = 0; c < row.size(); ++c)
        {
            if (t.integral[c])
                r[t.columns[c]] = static_cast<long long>(row[c]);
            else
                r[t.columns[c]] = row[c];
        }
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

inline void write_text_file(const std::string &path, const std::string &content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
    f << content;
    if (!f)
        throw Error(ErrorKind::IoError, "write to " + path + " failed");
}

inline std::string read_text_file(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::IoError, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// ---- run record (run.json) ----

inline nlohmann::ordered_json to_json(const PlacementResult &r)
{
    nlohmann::ordered_json j;
    j["method"] = to_string(r.method);
    j["combination"] = r.combination;
    j["threshold_db"] = r.threshold_db;
    j["feasible"] = r.feasible;
    j["relaxation_gap"] = r.relaxation_gap;
    j["lp_infeasible"] = r.lp_infeasible;
    j["lp_rounded"] = r.lp_rounded;
    j["lp_margin_db"] = r.lp_margin_db;
    j["feasible_count"] = r.feasible_count;
    j["min_sinr_db"] = r.min_sinr_db;
    j["positions"] = nlohmann::ordered_json::array();
    for (const auto &p : r.positions)
        j["positions"].push_back({p.x, p.y, p.z});
    j["sinr_db"] = r.sinr_db;
    j["support"] = nlohmann::ordered_json::array();
    for (const auto &[a, w] : r.support)
        j["support"].push_back({{"combination", a}, {"weight", w}});
    return j;
}

inline PlacementResult placement_from_json(const nlohmann::ordered_json &j)
{
    PlacementResult r;
    r.method = j.at("method").get<std::string>() == "brute" ? Method::Brute : Method::Lp;
    r.combination = j.at("combination").get<std::size_t>();
    r.threshold_db = j.at("threshold_db").get<double>();
    r.feasible = j.at("feasible").get<bool>();
    r.relaxation_gap = j.at("relaxation_gap").get<bool>();
    r.lp_infeasible = j.at("lp_infeasible").get<bool>();
    r.lp_rounded = j.at("lp_rounded").get<std::size_t>();
    r.lp_margin_db = j.at("lp_margin_db").get<double>();
    r.feasible_count = j.at("feasible_count").get<std::size_t>();
    r.min_sinr_db = j.at("min_sinr_db").get<double>();
    for (const auto &p : j.at("positions"))
        r.positions.push_back({p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()});
    r.sinr_db = j.at("sinr_db").get<std::vector<double>>();
    for (const auto &s : j.at("support"))
        r.support.emplace_back(s.at("combination").get<std::size_t>(), s.at("weight").get<double>());
    return r;
}

inline nlohmann::ordered_json to_json(const RunArtifacts &a)
{
    nlohmann::ordered_json j;
    j["kind"] = to_string(a.kind);
    j["seed"] = a.seed;
    j["config_hash"] = a.config_hash;
    j["prng"] = a.prng;
    j["method"] = to_string(a.method);
    j["config"] = to_text(a.config);
    j["combinations"] = a.combinations;
    j["lattice_sizes"] = a.lattice_sizes;
    j["filtered_sizes"] = a.filtered_sizes;
    if (a.placement)
        j["placement"] = to_json(*a.placement);
    j["sweep"] = nlohmann::ordered_json::array();
    for (const auto &r : a.sweep)
        j["sweep"].push_back({{"threshold_db", r.threshold_db}, {"seed", r.seed}, {"result", to_json(r.result)}});
    j["timing"] = {{"precompute_s", a.timing.precompute_s},
                   {"sinr_build_s", a.timing.sinr_build_s},
                   {"solve_s", a.timing.solve_s}};
    return j;
}

inline RunArtifacts artifacts_from_json(const nlohmann::ordered_json &j)
{
    RunArtifacts a;
    try
    {
        const auto kind = j.at("kind").get<std::string>();
        a.kind = kind == "sweep" ? RunKind::Sweep : (kind == "scatter" ? RunKind::Scatter : RunKind::Solve);
        a.seed = j.at("seed").get<std::uint64_t>();
        a.config_hash = j.at("config_hash").get<std::string>();
        a.prng = j.at("prng").get<std::string>();
        a.method = j.at("method").get<std::string>() == "brute" ? Method::Brute : Method::Lp;
        a.config = parse_config(j.at("config").get<std::string>());
        a.combinations = j.at("combinations").get<std::size_t>();
        a.lattice_sizes = j.at("lattice_sizes").get<std::vector<std::size_t>>();
        a.filtered_sizes = j.at("filtered_sizes").get<std::vector<std::size_t>>();
        if (j.contains("placement"))
            a.placement = placement_from_json(j.at("placement"));
        for (const auto &r : j.at("sweep"))
            a.sweep.push_back({r.at("threshold_db").get<double>(), r.at("seed").get<std::uint64_t>(),
                               placement_from_json(r.at("result"))});
        const auto &t = j.at("timing");
        a.timing = {t.at("precompute_s").get<double>(), t.at("sinr_build_s").get<double>(),
                    t.at("solve_s").get<double>()};
    }
    catch (const nlohmann::json::exception &e)
    {
        throw Error(ErrorKind::ParseError, std::string("malformed run record: ") + e.what());
    }
    return a;
}

inline RunArtifacts load_artifacts(const std::string &path)
{
    const auto text = read_text_file(path);
    try
    {
        return artifacts_from_json(nlohmann::ordered_json::parse(text));
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

} // namespace uavplace

#endif
