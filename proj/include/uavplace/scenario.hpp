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

#ifndef UAVPLACE_SCENARIO_HPP
#define UAVPLACE_SCENARIO_HPP

#include "channel.hpp"
#include "combination.hpp"
#include "config.hpp"
#include "geometry.hpp"
#include "radio.hpp"
#include "random.hpp"
#include "selection.hpp"
#include "units.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uavplace
{

// Sub-stream ids for derive_seed
inline constexpr std::uint64_t gain_stream = 0x6761696eULL;

// Regions, users, candidate grids and the radio model of one configuration
struct Scenario
{
    ScenarioConfig config;
    std::vector<Region> regions;
    std::vector<CandidateGrid> lattice; // before the regulatory filter
    std::vector<CandidateGrid> grids;   // after it
    RestrictedZone zone;
    AltitudeBand band;
    RadioModel radio;
    CombinationSpace space;
};

inline Scenario build_scenario(const ScenarioConfig &cfg)
{
    cfg.validate();
    Scenario sc;
    sc.config = cfg;
    sc.zone = cfg.zone();
    sc.band = cfg.band();

    auto &m = sc.radio;
    m.array = {cfg.num_antennas, cfg.spacing_ratio};
    m.link = {cfg.pathloss_exponent};
    m.noise_mw = dbm_to_mw(cfg.n0_dbm);
    m.uavs = cfg.num_uavs;

    const double per_user_mw = cfg.power_mode == PowerMode::PerUav
                                   ? equal_power(cfg.uav_power_mw, cfg.users_per_region).front()
                                   : cfg.uav_power_mw;
    for (std::size_t j = 0; j < cfg.region_count(); ++j)
    {
        const Region r = cfg.region(j);
        sc.regions.push_back(r);
        for (const auto &u : place_users(r, cfg.users_per_region, derive_seed(cfg.seed, j)))
        {
            m.users.push_back(u);
            m.owner.push_back(j);
            m.power_mw.push_back(per_user_mw);
        }

        CandidateGrid g;
        if (auto it = cfg.candidates.find(j); it != cfg.candidates.end())
        {
            g.region = j;
            g.points = it->second;
            for (std::size_t i = 0; i < g.points.size(); ++i)
                g.source_index.push_back(i);
        }
        else
            g = make_lattice_grid(j, r, cfg.grid_nx, cfg.grid_ny, cfg.grid_nz, sc.band);
        sc.lattice.push_back(g);
        sc.grids.push_back(filter_candidates(g, sc.zone, sc.band));
    }

    if (cfg.gain_mode == GainMode::Gaussian)
    {
        Rng rng(derive_seed(cfg.seed, gain_stream));
        for (std::size_t k = 0; k < m.users.size(); ++k)
            m.gains.push_back(sample_complex_gain(rng));
    }
    else
        m.gains.assign(m.users.size(), Complex{1.0, 0.0});

    sc.space = CombinationSpace::from_grids(sc.grids);
    return sc;
}

struct Timing
{
    double precompute_s = 0.0;
    double sinr_build_s = 0.0;
    double solve_s = 0.0;
};

// Scenario plus its precomputed gain tables and (unless streaming) the materialized S
class Engine
{
  public:
    explicit Engine(const ScenarioConfig &cfg) : sc_(build_scenario(cfg))
    {
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        tables_ = precompute_gain_tables(sc_.grids, sc_.radio);
        auto t1 = clock::now();
        if (cfg.sinr_storage == SinrStorage::Matrix)
            S_ = build_sinr_matrix(sc_.space, tables_, sc_.radio.noise_mw);
        auto t2 = clock::now();
        timing_.precompute_s = std::chrono::duration<double>(t1 - t0).count();
        timing_.sinr_build_s = std::chrono::duration<double>(t2 - t1).count();
    }

    const Scenario &scenario() const noexcept { return sc_; }
    const GainTables &tables() const noexcept { return tables_; }
    bool materialized() const noexcept { return S_.has_value(); }
    const SinrMatrix &sinr_matrix() const { return S_.value(); }
    StreamingSinrRows stream() const { return {tables_, sc_.space, sc_.radio.noise_mw}; }
    const Timing &timing() const noexcept { return timing_; }

    PlacementResult select(double gamma_th_db, Method method)
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double g = db_to_linear(gamma_th_db);
        PlacementResult r = S_ ? select_placement(*S_, g, method, sc_.space, sc_.grids, sc_.zone, sc_.band)
                               : select_placement(stream(), g, method, sc_.space, sc_.grids, sc_.zone, sc_.band);
        r.threshold_db = gamma_th_db;
        timing_.solve_s += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }

  private:
    Scenario sc_;
    GainTables tables_;
    std::optional<SinrMatrix> S_;
    Timing timing_;
};

enum class RunKind
{
    Solve,
    Sweep,  // thresholds varied on one scenario
    Scatter // seeds varied at one threshold
};

inline const char *to_string(RunKind k) noexcept
{
    return k == RunKind::Solve ? "solve" : (k == RunKind::Sweep ? "sweep" : "scatter");
}

struct SweepRow
{
    double threshold_db = 0.0;
    std::uint64_t seed = 0;
    PlacementResult result;
};

struct RunArtifacts
{
    RunKind kind = RunKind::Solve;
    ScenarioConfig config;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string prng = prng_name;
    Method method = Method::Lp;
    std::size_t combinations = 0;
    std::vector<std::size_t> lattice_sizes;
    std::vector<std::size_t> filtered_sizes;
    std::optional<PlacementResult> placement;
    std::vector<SweepRow> sweep;
    Timing timing;

    // 0 = every reported placement is feasible, 2 = something infeasible was reported
    int exit_code() const noexcept
    {
        if (placement && !placement->feasible)
            return 2;
        for (const auto &r : sweep)
            if (!r.result.feasible)
                return 2;
        return 0;
    }
};

namespace detail
{

inline RunArtifacts start_artifacts(RunKind kind, const ScenarioConfig &cfg, Method method)
{
    RunArtifacts a;
    a.kind = kind;
    a.config = cfg;
    a.config_hash = hex64(config_hash(cfg));
    a.seed = cfg.seed;
    a.method = method;
    return a;
}

inline void record_engine(RunArtifacts &a, const Engine &eng)
{
    a.combinations = eng.scenario().space.count();
    a.lattice_sizes.clear();
    a.filtered_sizes.clear();
    for (const auto &g : eng.scenario().lattice)
        a.lattice_sizes.push_back(g.size());
    for (const auto &g : eng.scenario().grids)
        a.filtered_sizes.push_back(g.size());
}

} // namespace detail

// Full positioning pipeline at the configured threshold
inline RunArtifacts run_solve(const ScenarioConfig &cfg, Method method)
{
    auto a = detail::start_artifacts(RunKind::Solve, cfg, method);
    Engine eng(cfg);
    detail::record_engine(a, eng);
    a.placement = eng.select(cfg.gamma_th_db, method);
    a.timing = eng.timing();
    return a;
}

// One selection per threshold on the same scenario; channels and S are computed once
inline RunArtifacts run_sweep(const ScenarioConfig &cfg, const std::vector<double> &thresholds_db, Method method)
{
    if (thresholds_db.empty())
        throw Error(ErrorKind::InvalidArgument, "threshold sweep needs at least one threshold");
    auto a = detail::start_artifacts(RunKind::Sweep, cfg, method);
    Engine eng(cfg);
    detail::record_engine(a, eng);
    for (double t : thresholds_db)
        a.sweep.push_back({t, cfg.seed, eng.select(t, method)});
    a.timing = eng.timing();
    return a;
}

// One scenario per seed (different user drops) at the configured threshold
inline RunArtifacts run_seed_sweep(const ScenarioConfig &cfg, const std::vector<std::uint64_t> &seeds, Method method)
{
    if (seeds.empty())
        throw Error(ErrorKind::InvalidArgument, "seed sweep needs at least one seed");
    auto a = detail::start_artifacts(RunKind::Scatter, cfg, method);
    for (auto s : seeds)
    {
        ScenarioConfig c = cfg;
        c.seed = s;
        c.seed_given = true;
        Engine eng(c);
        detail::record_engine(a, eng);
        a.sweep.push_back({cfg.gamma_th_db, s, eng.select(cfg.gamma_th_db, method)});
        a.timing.precompute_s += eng.timing().precompute_s;
        a.timing.sinr_build_s += eng.timing().sinr_build_s;
        a.timing.solve_s += eng.timing().solve_s;
    }
    return a;
}

// n evenly spaced values from `from` to `to`, both included
inline std::vector<double> linspace(double from, double to, std::size_t n)
{
    std::vector<double> v;
    if (n == 1)
        return {from};
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(from + (to - from) * static_cast<double>(i) / static_cast<double>(n - 1));
    if (n > 1)
        v.back() = to;
    return v;
}

} // namespace uavplace

#endif
