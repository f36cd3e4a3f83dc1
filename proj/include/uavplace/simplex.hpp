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

#ifndef UAVPLACE_SIMPLEX_HPP
#define UAVPLACE_SIMPLEX_HPP

#include "error.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace uavplace
{

enum class LpStatus
{
    Optimal,
    Infeasible,
    Unbounded
};

struct LpSolution
{
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;    // primal, length n
    std::vector<double> dual; // one price per row, length m
    std::size_t pivots = 0;
};

// Dense two-phase tableau simplex for
//     maximize c^T x  subject to  A x <= b,  x >= 0.
// Dantzig pricing with lowest-index ties; after a run of degenerate pivots it switches to Bland's
// rule, which cannot cycle. Intended for small master problems (tens of rows, hundreds of columns).
class DenseSimplex
{
  public:
    using Matrix = std::vector<std::vector<double>>;

    DenseSimplex(const Matrix &A, const std::vector<double> &b, const std::vector<double> &c, double eps = 1e-11)
        : m_(b.size()), n_(c.size()), eps_(eps), N_(n_ + 1), B_(m_), D_(m_ + 2, std::vector<double>(n_ + 2, 0.0))
    {
        if (A.size() != m_)
            throw Error(ErrorKind::InvalidArgument, "constraint matrix row count differs from rhs length");
        for (std::size_t i = 0; i < m_; ++i)
        {
            if (A[i].size() != n_)
                throw Error(ErrorKind::InvalidArgument, "constraint matrix column count differs from cost length");
            for (std::size_t j = 0; j < n_; ++j)
                D_[i][j] = A[i][j];
            B_[i] = static_cast<long>(n_ + i);
            D_[i][n_] = -1.0;
            D_[i][n_ + 1] = b[i];
        }
        for (std::size_t j = 0; j < n_; ++j)
        {
            N_[j] = static_cast<long>(j);
            D_[m_][j] = -c[j];
        }
        N_[n_] = -1;
        D_[m_ + 1][n_] = 1.0;
    }

    LpSolution solve()
    {
        LpSolution out;
        out.x.assign(n_, 0.0);
        out.dual.assign(m_, 0.0);

        if (m_ > 0)
        {
            std::size_t r = 0;
            for (std::size_t i = 1; i < m_; ++i)
                if (D_[i][n_ + 1] < D_[r][n_ + 1])
                    r = i;
            if (D_[r][n_ + 1] < -eps_)
            {
                pivot(r, n_);
                if (!run(2) || D_[m_ + 1][n_ + 1] < -eps_)
                {
                    out.status = LpStatus::Infeasible;
                    out.pivots = pivots_;
                    return out;
                }
                for (std::size_t i = 0; i < m_; ++i)
                    if (B_[i] == -1)
                    {
                        std::size_t s = 0;
                        for (std::size_t j = 1; j <= n_; ++j)
                            if (std::make_pair(D_[i][j], N_[j]) < std::make_pair(D_[i][s], N_[s]))
                                s = j;
                        pivot(i, s);
                    }
            }
        }

        const bool bounded = run(1);
        out.pivots = pivots_;
        if (!bounded)
        {
            out.status = LpStatus::Unbounded;
            out.objective = std::numeric_limits<double>::infinity();
            return out;
        }
        for (std::size_t i = 0; i < m_; ++i)
            if (B_[i] >= 0 && static_cast<std::size_t>(B_[i]) < n_)
                out.x[static_cast<std::size_t>(B_[i])] = D_[i][n_ + 1];
        // Row prices are the reduced costs of the non-basic slack columns
        for (std::size_t j = 0; j <= n_; ++j)
            if (N_[j] >= static_cast<long>(n_))
                out.dual[static_cast<std::size_t>(N_[j]) - n_] = D_[m_][j];
        out.objective = D_[m_][n_ + 1];
        out.status = LpStatus::Optimal;
        return out;
    }

  private:
    void pivot(std::size_t r, std::size_t s)
    {
        ++pivots_;
        const double inv = 1.0 / D_[r][s];
        for (std::size_t i = 0; i < m_ + 2; ++i)
        {
            if (i == r || std::abs(D_[i][s]) <= eps_ * 1e-3)
                continue;
            const double f = D_[i][s] * inv;
            for (std::size_t j = 0; j < n_ + 2; ++j)
                D_[i][j] -= D_[r][j] * f;
            D_[i][s] = D_[r][s] * f;
        }
        for (std::size_t j = 0; j < n_ + 2; ++j)
            if (j != s)
                D_[r][j] *= inv;
        for (std::size_t i = 0; i < m_ + 2; ++i)
            if (i != r)
                D_[i][s] *= -inv;
        D_[r][s] = inv;
        std::swap(B_[r], N_[s]);
    }

    bool run(int phase)
    {
        const std::size_t obj = phase == 1 ? m_ : m_ + 1;
        std::size_t degenerate_run = 0;
        const std::size_t iteration_cap = 50 * (m_ + n_ + 10);
        for (std::size_t it = 0;; ++it)
        {
            if (it > iteration_cap)
                throw Error(ErrorKind::NumericalFailure, "simplex exceeded its iteration budget");
            const bool bland = degenerate_run > m_ + 5;

            std::size_t s = n_ + 1; // none
            for (std::size_t j = 0; j <= n_; ++j)
            {
                if (N_[j] == -phase)
                    continue;
                if (D_[obj][j] >= -eps_)
                    continue;
                if (s == n_ + 1)
                    s = j;
                else if (bland ? N_[j] < N_[s]
                               : std::make_pair(D_[obj][j], N_[j]) < std::make_pair(D_[obj][s], N_[s]))
                    s = j;
            }
            if (s == n_ + 1)
                return true;

            std::size_t r = m_; // none
            for (std::size_t i = 0; i < m_; ++i)
            {
                if (D_[i][s] <= eps_)
                    continue;
                if (r == m_)
                {
                    r = i;
                    continue;
                }
                const double ri = D_[i][n_ + 1] / D_[i][s];
                const double rr = D_[r][n_ + 1] / D_[r][s];
                if (ri < rr || (ri == rr && B_[i] < B_[r]))
                    r = i;
            }
            if (r == m_)
                return false;

            degenerate_run = std::abs(D_[r][n_ + 1]) <= eps_ ? degenerate_run + 1 : 0;
            pivot(r, s);
        }
    }

    std::size_t m_, n_;
    double eps_;
    std::size_t pivots_ = 0;
    std::vector<long> N_, B_;
    Matrix D_;
};

inline LpSolution solve_lp(const DenseSimplex::Matrix &A, const std::vector<double> &b, const std::vector<double> &c)
{
    return DenseSimplex(A, b, c).solve();
}

} // namespace uavplace

#endif
