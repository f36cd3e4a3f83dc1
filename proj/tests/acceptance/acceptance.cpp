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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <uavplace/uavplace.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>

using namespace uavplace;

namespace
{

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double a = 0, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

ScenarioConfig seeded(std::uint64_t seed)
{
    ScenarioConfig c;
    c.seed = seed;
    c.seed_given = true;
    return c;
}

ScenarioConfig gaussian(std::uint64_t seed)
{
    auto c = seeded(seed);
    c.gain_mode = GainMode::Gaussian;
    return c;
}

// 1. Enumerated space at reference scale
Outcome combination_count()
{
    const auto t0 = clock_type::now();
    const auto sc = build_scenario(ScenarioConfig{});
    std::size_t lattice = 1;
    for (const auto &g : sc.lattice)
        lattice *= g.size();
    std::size_t walked = 0;
    std::vector<std::size_t> d(sc.space.regions(), 0);
    do
        ++walked;
    while (sc.space.increment(d));
    const double t = seconds_since(t0);
    const bool ok = lattice == 160000 && sc.space.count() == 160000 && walked == 160000 && t < 1.0;
    return {ok, fmt("lattice %.0f, filtered %.0f, walked %.0f", double(lattice), double(sc.space.count()),
                    double(walked)) +
                    fmt(", %.3f s", t)};
}

// 2. LP pipeline lands in the exact feasible set
Outcome oracle_lp_agreement()
{
    std::size_t member = 0, flagged = 0, unflagged_miss = 0;
    for (std::uint64_t s = 1; s <= 50; ++s)
    {
        Engine eng(seeded(s));
        const auto &S = eng.sinr_matrix();
        const double th_db = linear_to_db(oracle_scan(S, 0.0).best_min) - 0.5;
        const auto set = brute_force_feasible(S, db_to_linear(th_db));
        const auto r = eng.select(th_db, Method::Lp);
        const bool in = std::binary_search(set.begin(), set.end(), r.combination);
        member += in;
        flagged += r.relaxation_gap || r.lp_infeasible;
        if (!in && !(r.relaxation_gap || r.lp_infeasible))
            ++unflagged_miss;
    }
    return {member == 50 && unflagged_miss == 0,
            fmt("%.0f/50 in oracle set, %.0f flagged fallbacks, %.0f unflagged misses", double(member), double(flagged),
                double(unflagged_miss))};
}

// 3. Every emitted position respects the band and the altitude limits
Outcome regulatory_compliance()
{
    std::size_t positions = 0, violations = 0;
    auto check = [&](const PlacementResult &r) {
        for (const auto &p : r.positions)
        {
            ++positions;
            if (std::abs(p.x - 57.0) < 11.0 || p.z < 22.0 || p.z > 36.0)
                ++violations;
        }
    };
    const auto sweep = run_sweep(ScenarioConfig{}, linspace(-6.38, -10.0, 50), Method::Lp);
    for (const auto &row : sweep.sweep)
        check(row.result);
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 50; ++s)
        seeds.push_back(s);
    const auto scatter = run_seed_sweep(ScenarioConfig{}, seeds, Method::Lp);
    for (const auto &row : scatter.sweep)
        check(row.result);
    const bool ok = sweep.sweep.size() == 50 && scatter.sweep.size() == 50 && positions == 400 && violations == 0;
    return {ok, fmt("%.0f positions, %.0f violations", double(positions), double(violations))};
}

// 4. Feasible sets shrink as the threshold rises
Outcome monotone_nesting()
{
    Rng rng(404);
    std::size_t nested = 0, non_trivial = 0;
    for (std::uint64_t s = 1; s <= 4; ++s)
    {
        Engine eng(seeded(s));
        const auto &S = eng.sinr_matrix();
        const double top = linear_to_db(oracle_scan(S, 0.0).best_min);
        for (int p = 0; p < 5; ++p)
        {
            double t1 = top + 0.2 - 4.0 * rng.uniform();
            double t2 = top + 0.2 - 4.0 * rng.uniform();
            if (t1 < t2)
                std::swap(t1, t2);
            if (t1 == t2)
                t2 -= 0.1;
            const auto a = brute_force_feasible(S, db_to_linear(t1));
            const auto b = brute_force_feasible(S, db_to_linear(t2));
            nested += std::includes(b.begin(), b.end(), a.begin(), a.end());
            non_trivial += !a.empty() && a.size() < b.size();
        }
    }
    return {nested == 20, fmt("%.0f/20 pairs nested, %.0f strictly growing", double(nested), double(non_trivial))};
}

// 5. Gain-table assembly against the reference SINR
Outcome table_assembly()
{
    double worst = 0.0;
    std::size_t pairs = 0;
    for (const auto &cfg : {seeded(1), gaussian(2), gaussian(3)})
    {
        const auto sc = build_scenario(cfg);
        const auto t = precompute_gain_tables(sc.grids, sc.radio);
        Rng rng(derive_seed(cfg.seed, 0x5eed));
        for (int i = 0; i < 1000; ++i)
        {
            const auto a = std::min(sc.space.count() - 1, std::size_t(rng.uniform() * double(sc.space.count())));
            const auto k = std::min(sc.radio.user_count() - 1, std::size_t(rng.uniform() * double(sc.radio.user_count())));
            const auto digits = sc.space.to_digits(a);
            const auto pos = combination_to_positions(a, sc.space, sc.grids);
            worst = std::max(worst, rel_err(assembled_sinr(t, digits, k, sc.radio.noise_mw), sinr_direct(pos, k, sc.radio)));
            ++pairs;
        }
    }
    return {worst <= 1e-9, fmt("%.0f pairs, worst relative error %.3e", double(pairs), worst)};
}

// 6. Steering norm, channel power identity, single-path multipath
Outcome channel_units()
{
    Rng rng(606);
    const ArrayConfig arr{};
    const LinkParams link{};
    double worst_a = 0.0, worst_h = 0.0, worst_mp = 0.0;
    for (int i = 0; i < 10000; ++i)
    {
        const double theta = (rng.uniform() - 0.5) * std::numbers::pi;
        worst_a = std::max(worst_a, std::abs(std::sqrt(squared_norm(steering_vector(theta, arr))) - 1.0));
    }
    for (int i = 0; i < 10000; ++i)
    {
        const Point3 uav{114 * rng.uniform(), 114 * rng.uniform(), 22 + 14 * rng.uniform()};
        const Point3 user{114 * rng.uniform(), 114 * rng.uniform(), 0.0};
        const Complex alpha = sample_complex_gain(rng);
        const double d = distance(uav, user);
        const auto h = los_channel(uav, user, alpha, link, arr);
        const double want = double(arr.antennas) * std::norm(alpha) / (1.0 + std::pow(d, link.pathloss_exponent));
        worst_h = std::max(worst_h, rel_err(squared_norm(h), want));
        const PathComponent path{alpha, aod(uav, user)};
        const auto mp = multipath_channel(std::span(&path, 1), d, link, arr);
        for (std::size_t n = 0; n < arr.antennas; ++n)
            worst_mp = std::max(worst_mp, std::abs(mp[n] - h[n]));
    }
    return {worst_a <= 1e-12 && worst_h <= 1e-12 && worst_mp == 0.0,
            fmt("|a| err %.2e, |h|^2 rel err %.2e, multipath diff %.2e", worst_a, worst_h, worst_mp)};
}

// 7. Rotating one user's gain by a unit phase leaves S unchanged
Outcome phase_invariance()
{
    const auto base = build_scenario(gaussian(7));
    const auto S0 = build_sinr_matrix(base.space, precompute_gain_tables(base.grids, base.radio), base.radio.noise_mw);
    Rng rng(707);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial)
    {
        auto sc = base;
        const auto k = std::min(sc.radio.user_count() - 1, std::size_t(rng.uniform() * double(sc.radio.user_count())));
        sc.radio.gains[k] *= std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        const auto S = build_sinr_matrix(sc.space, precompute_gain_tables(sc.grids, sc.radio), sc.radio.noise_mw);
        for (std::size_t i = 0; i < S.data().size(); ++i)
            worst = std::max(worst, rel_err(S.data()[i], S0.data()[i]));
    }
    return {worst <= 1e-9, fmt("5 rotations over %.0f entries, worst relative change %.3e", double(S0.data().size()),
                               worst)};
}

// 8. Threshold above some user's best SINR: LP infeasible and empty oracle set
Outcome infeasibility_bound()
{
    std::size_t consistent = 0;
    for (std::uint64_t s = 1; s <= 10; ++s)
    {
        const auto cfg = s % 2 ? seeded(s) : gaussian(s);
        Engine eng(cfg);
        const auto &S = eng.sinr_matrix();
        std::vector<double> col(S.cols(), 0.0);
        for (std::size_t a = 0; a < S.rows(); ++a)
            for (std::size_t k = 0; k < S.cols(); ++k)
                col[k] = std::max(col[k], S(a, k));
        // Alternate between the weakest user and a random one
        const std::size_t k = s % 3 == 0 ? std::size_t(s) % S.cols()
                                         : std::size_t(std::min_element(col.begin(), col.end()) - col.begin());
        const double gamma = col[k] * db_to_linear(0.01 * double(s));
        bool lp_infeasible = false;
        try
        {
            solve_l1_relaxation(S, gamma);
        }
        catch (const Error &e)
        {
            lp_infeasible = e.kind() == ErrorKind::Infeasible;
        }
        const auto r = eng.select(linear_to_db(gamma), Method::Lp);
        if (lp_infeasible && brute_force_feasible(S, gamma).empty() && r.lp_infeasible && !r.feasible)
            ++consistent;
    }
    return {consistent == 10, fmt("%.0f/10 cases consistent", double(consistent))};
}

// 9. End-to-end time at reference scale, with timing carried in the run record
Outcome performance()
{
    ScenarioConfig cfg;
    const auto t0 = clock_type::now();
    const auto a = run_solve(cfg, Method::Lp);
    const double total = seconds_since(t0);
    const auto j = to_json(a);
    const bool recorded = j.contains("timing") && a.timing.sinr_build_s > 0.0 && a.timing.solve_s > 0.0;
    return {total <= 60.0 && recorded,
            fmt("total %.2f s (tables %.3f s, S %.3f s", total, a.timing.precompute_s, a.timing.sinr_build_s) +
                fmt(", select %.3f s)", a.timing.solve_s)};
}

// 10. Identical config and seed give byte-identical exports
Outcome determinism()
{
    const auto dir = std::filesystem::temp_directory_path() / "uavplace_acceptance";
    std::filesystem::create_directories(dir);
    auto cfg = gaussian(10);
    cfg.gamma_th_db = -7.0;
    std::size_t files = 0, same = 0;
    for (auto what : {ExportWhat::Placement, ExportWhat::Sinr, ExportWhat::Sweep})
        for (auto f : {ExportFormat::Csv, ExportFormat::Json})
        {
            std::string bytes[2];
            for (int run = 0; run < 2; ++run)
            {
                const auto a = what == ExportWhat::Sweep ? run_sweep(cfg, {-6.5, -7.5, -9.0}, Method::Lp)
                                                         : run_solve(cfg, Method::Lp);
                const auto path = dir / ("run" + std::to_string(run) + "_" + to_string(what) +
                                         (f == ExportFormat::Csv ? ".csv" : ".json"));
                write_text_file(path.string(), render_export(a, f, what));
                bytes[run] = read_text_file(path.string());
            }
            ++files;
            same += bytes[0] == bytes[1] && !bytes[0].empty();
        }
    std::filesystem::remove_all(dir);
    return {same == files, fmt("%.0f/%.0f export pairs byte-identical", double(same), double(files))};
}

} // namespace

int main()
{
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"combination count", combination_count},
        {"oracle/LP agreement", oracle_lp_agreement},
        {"regulatory compliance", regulatory_compliance},
        {"monotone nesting", monotone_nesting},
        {"table assembly equivalence", table_assembly},
        {"channel unit checks", channel_units},
        {"phase invariance", phase_invariance},
        {"infeasibility bound", infeasibility_bound},
        {"performance envelope", performance},
        {"determinism", determinism},
    };
    int failures = 0;
    int n = 0;
    for (const auto &[name, run] : criteria)
    {
        ++n;
        Outcome o;
        try
        {
            o = run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("criterion %2d %-28s %s  (%s)\n", n, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", n - failures, n);
    return failures == 0 ? 0 : 1;
}
