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

#ifndef UAVPLACE_SELECTION_HPP
#define UAVPLACE_SELECTION_HPP

#include "combination.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "radio.hpp"
#include "simplex.hpp"
#include "units.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace uavplace
{

// Slack allowed when comparing a linear SINR against the threshold
inline constexpr double oracle_tolerance = 1e-9;
inline constexpr double lp_tolerance = 1e-7;

inline bool meets_threshold(double sinr, double gamma_th) noexcept
{
    return sinr >= gamma_th - oracle_tolerance;
}

// One exhaustive pass over the rows of S: the exact feasible set of the one-hot problem, plus the
// max-min combination (argmax_a min_k S[a,k], lowest index on ties).
struct OracleScan
{
    std::vector<std::size_t> feasible;
    std::size_t best_index = 0;
    double best_min = -std::numeric_limits<double>::infinity();
};

template <SinrRows Rows>
OracleScan oracle_scan(const Rows &S, double gamma_th)
{
    OracleScan out;
    std::vector<double> row(S.cols());
    for (std::size_t a = 0; a < S.rows(); ++a)
    {
        S.fill_row(a, row);
        const double mn = row.empty() ? std::numeric_limits<double>::infinity()
                                      : *std::min_element(row.begin(), row.end());
        if (mn > out.best_min)
        {
            out.best_min = mn;
            out.best_index = a;
        }
        if (meets_threshold(mn, gamma_th))
            out.feasible.push_back(a);
    }
    return out;
}

template <SinrRows Rows>
std::vector<std::size_t> brute_force_feasible(const Rows &S, double gamma_th)
{
    return oracle_scan(S, gamma_th).feasible;
}

struct SelectionVector
{
    std::vector<double> e; // length c
    double margin = 0.0;   // max over feasible e of min_k (e^T S)_k, linear SINR
    std::size_t iterations = 0;
    std::vector<std::size_t> working_set;
};

// Relaxed selection LP: find e with 0 <= e <= 1, sum(e) <= 1 and e^T S >= gamma_th.
// Among feasible points the one maximizing min_k (e^T S)_k is returned, so the output is unique up
// to the deterministic pivoting rules. The c-column LP is solved by column generation: a small
// master over a working set of rows, priced against all of S with the master's row duals.
template <SinrRows Rows>
SelectionVector solve_l1_relaxation(const Rows &S, double gamma_th, std::size_t max_rounds = 10000)
{
    const std::size_t c = S.rows();
    const std::size_t U = S.cols();
    if (c == 0 || U == 0)
        throw Error(ErrorKind::InvalidArgument, "SINR matrix is empty");

    // Seed the working set with the max-min row and each user's best row
    std::vector<double> row(U);
    double scale = 0.0;
    std::vector<double> col_best(U, -1.0);
    std::vector<std::size_t> col_arg(U, 0);
    std::size_t mm_arg = 0;
    double mm_val = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < c; ++a)
    {
        S.fill_row(a, row);
        double mn = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < U; ++k)
        {
            if (!std::isfinite(row[k]) || row[k] < 0.0)
                throw Error(ErrorKind::NumericalFailure, "SINR matrix has a negative or non-finite entry");
            scale = std::max(scale, row[k]);
            mn = std::min(mn, row[k]);
            if (row[k] > col_best[k])
            {
                col_best[k] = row[k];
                col_arg[k] = a;
            }
        }
        if (mn > mm_val)
        {
            mm_val = mn;
            mm_arg = a;
        }
    }
    for (std::size_t k = 0; k < U; ++k)
        if (col_best[k] < gamma_th - lp_tolerance)
            throw Error(ErrorKind::Infeasible, "user " + std::to_string(k) +
                                                   " cannot reach the threshold under any combination");
    if (!(scale > 0.0))
        scale = 1.0;

    std::vector<std::size_t> work{mm_arg};
    for (auto a : col_arg)
        work.push_back(a);
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());

    // Working-set rows of S, normalized by `scale`
    std::vector<std::vector<double>> cols;
    for (auto a : work)
    {
        S.fill_row(a, row);
        for (auto &v : row)
            v /= scale;
        cols.push_back(row);
    }

    SelectionVector out;
    LpSolution lp;
    for (std::size_t round = 0;; ++round)
    {
        if (round >= max_rounds)
            throw Error(ErrorKind::NumericalFailure, "column generation did not converge");

        // Master: variables [e_w..., t]; rows k: t - sum_w e_w S'[w,k] <= 0; last row: sum_w e_w <= 1
        const std::size_t n = cols.size() + 1;
        DenseSimplex::Matrix A(U + 1, std::vector<double>(n, 0.0));
        for (std::size_t k = 0; k < U; ++k)
        {
            for (std::size_t w = 0; w < cols.size(); ++w)
                A[k][w] = -cols[w][k];
            A[k][n - 1] = 1.0;
        }
        for (std::size_t w = 0; w < cols.size(); ++w)
            A[U][w] = 1.0;
        std::vector<double> b(U + 1, 0.0);
        b[U] = 1.0;
        std::vector<double> cost(n, 0.0);
        cost[n - 1] = 1.0;

        lp = DenseSimplex(A, b, cost).solve();
        if (lp.status != LpStatus::Optimal)
            throw Error(ErrorKind::NumericalFailure, "master LP did not reach an optimum");

        // Price every row: reduced profit sum_k y_k S'[a,k] - mu
        const double mu = lp.dual[U];
        double best_rc = 1e-10;
        std::size_t best_a = c;
        for (std::size_t a = 0; a < c; ++a)
        {
            S.fill_row(a, row);
            double v = -mu;
            for (std::size_t k = 0; k < U; ++k)
                v += lp.dual[k] * row[k] / scale;
            if (v > best_rc)
            {
                best_rc = v;
                best_a = a;
            }
        }
        out.iterations = round + 1;
        if (best_a == c)
            break;
        if (std::find(work.begin(), work.end(), best_a) != work.end())
            break; // already priced in; remaining profit is round-off
        work.push_back(best_a);
        S.fill_row(best_a, row);
        for (auto &v : row)
            v /= scale;
        cols.push_back(row);
    }

    out.margin = lp.objective * scale;
    out.working_set = work;
    out.e.assign(c, 0.0);
    for (std::size_t w = 0; w < work.size(); ++w)
        out.e[work[w]] = std::clamp(lp.x[w], 0.0, 1.0);

    if (out.margin < gamma_th - lp_tolerance)
        throw Error(ErrorKind::Infeasible, "no convex combination of placements meets the SINR threshold");
    return out;
}

// Index of the largest weight, lowest index on ties
inline std::size_t round_selection(std::span<const double> e)
{
    if (e.empty())
        throw Error(ErrorKind::InvalidArgument, "empty selection vector");
    std::size_t best = 0;
    for (std::size_t a = 1; a < e.size(); ++a)
        if (e[a] > e[best])
            best = a;
    return best;
}

enum class Method
{
    Lp,
    Brute
};

inline const char *to_string(Method m) noexcept { return m == Method::Lp ? "lp" : "brute"; }

struct PlacementResult
{
    Method method = Method::Lp;
    std::size_t combination = 0;
    std::vector<Point3> positions;    // tau
    std::vector<double> sinr_db;      // per user
    double min_sinr_db = 0.0;
    double threshold_db = 0.0;
    bool feasible = false;            // oracle verdict for `combination`
    bool relaxation_gap = false;      // the LP's rounded index failed and was replaced
    bool lp_infeasible = false;       // the relaxation itself had no feasible point
    std::size_t lp_rounded = 0;       // argmax of e (lp only)
    double lp_margin_db = 0.0;
    std::vector<std::pair<std::size_t, double>> support; // non-zero entries of e
    std::size_t feasible_count = 0;   // size of the exact feasible set
};

// Oracle post-check of one combination: SINR threshold for every user plus the regulatory predicates.
template <SinrRows Rows>
PlacementResult verify_placement(std::size_t a, const Rows &S, double gamma_th, const CombinationSpace &space,
                                 std::span<const CandidateGrid> grids, const RestrictedZone &zone,
                                 const AltitudeBand &band)
{
    if (a >= S.rows())
        throw Error(ErrorKind::IndexOutOfRange, "combination index outside the SINR matrix");
    PlacementResult r;
    r.combination = a;
    r.threshold_db = linear_to_db(gamma_th);
    r.positions = combination_to_positions(a, space, grids);
    std::vector<double> row(S.cols());
    S.fill_row(a, row);
    bool ok = true;
    double mn = std::numeric_limits<double>::infinity();
    for (double s : row)
    {
        r.sinr_db.push_back(linear_to_db(s));
        mn = std::min(mn, s);
        ok = ok && meets_threshold(s, gamma_th);
    }
    for (const auto &p : r.positions)
        ok = ok && position_allowed(p, zone, band);
    r.min_sinr_db = linear_to_db(mn);
    r.feasible = ok;
    return r;
}

// LP or exhaustive selection followed by the oracle post-check. The exhaustive method picks the
// max-min combination. The LP method keeps its rounded index when it passes the check; otherwise
// it falls back to the max-min combination and raises relaxation_gap (or lp_infeasible).
template <SinrRows Rows>
PlacementResult select_placement(const Rows &S, double gamma_th, Method method, const CombinationSpace &space,
                                 std::span<const CandidateGrid> grids, const RestrictedZone &zone,
                                 const AltitudeBand &band)
{
    const auto scan = oracle_scan(S, gamma_th);
    PlacementResult r;

    if (method == Method::Brute)
    {
        r = verify_placement(scan.best_index, S, gamma_th, space, grids, zone, band);
    }
    else
    {
        try
        {
            const auto sel = solve_l1_relaxation(S, gamma_th);
            const std::size_t rounded = round_selection(sel.e);
            r = verify_placement(rounded, S, gamma_th, space, grids, zone, band);
            if (!r.feasible)
            {
                r = verify_placement(scan.best_index, S, gamma_th, space, grids, zone, band);
                r.relaxation_gap = true;
            }
            r.lp_rounded = rounded;
            r.lp_margin_db = linear_to_db(sel.margin);
            for (auto a : sel.working_set)
                if (sel.e[a] > 0.0)
                    r.support.emplace_back(a, sel.e[a]);
            std::sort(r.support.begin(), r.support.end());
        }
        catch (const Error &err)
        {
            if (err.kind() != ErrorKind::Infeasible)
                throw;
            r = verify_placement(scan.best_index, S, gamma_th, space, grids, zone, band);
            r.lp_infeasible = true;
            r.lp_rounded = scan.best_index;
        }
    }
    r.method = method;
    r.feasible_count = scan.feasible.size();
    return r;
}

} // namespace uavplace

#endif
