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

#ifndef UAVPLACE_COMBINATION_HPP
#define UAVPLACE_COMBINATION_HPP

#include "error.hpp"
#include "geometry.hpp"

#include <cstddef>
#include <limits>
#include <ranges>
#include <span>
#include <string>
#include <vector>

namespace uavplace
{

// Mixed-radix indexing of "one candidate per region" choices. Region 0 is the most significant
// digit, so index 0 picks every first candidate and index count()-1 every last one.
class CombinationSpace
{
  public:
    CombinationSpace() = default;

    explicit CombinationSpace(std::vector<std::size_t> radix) : radix_(std::move(radix))
    {
        if (radix_.empty())
            throw Error(ErrorKind::EmptyGrid, "combination space needs at least one region");
        count_ = 1;
        for (std::size_t j = 0; j < radix_.size(); ++j)
        {
            if (radix_[j] == 0)
                throw Error(ErrorKind::EmptyGrid, "region " + std::to_string(j) + " has no candidate");
            if (count_ > std::numeric_limits<std::size_t>::max() / radix_[j])
                throw Error(ErrorKind::ValidationError, "combination count overflows");
            count_ *= radix_[j];
        }
    }

    static CombinationSpace from_grids(std::span<const CandidateGrid> grids)
    {
        std::vector<std::size_t> r;
        r.reserve(grids.size());
        for (const auto &g : grids)
            r.push_back(g.size());
        return CombinationSpace(std::move(r));
    }

    std::size_t regions() const noexcept { return radix_.size(); }
    std::size_t count() const noexcept { return count_; }
    std::size_t radix(std::size_t j) const noexcept { return radix_[j]; }
    const std::vector<std::size_t> &radices() const noexcept { return radix_; }

    void to_digits(std::size_t a, std::span<std::size_t> digits) const
    {
        if (a >= count_)
            throw Error(ErrorKind::IndexOutOfRange,
                        "combination " + std::to_string(a) + " outside [0, " + std::to_string(count_) + ")");
        for (std::size_t j = radix_.size(); j-- > 0;)
        {
            digits[j] = a % radix_[j];
            a /= radix_[j];
        }
    }

    std::vector<std::size_t> to_digits(std::size_t a) const
    {
        std::vector<std::size_t> d(radix_.size());
        to_digits(a, d);
        return d;
    }

    std::size_t from_digits(std::span<const std::size_t> digits) const
    {
        std::size_t a = 0;
        for (std::size_t j = 0; j < radix_.size(); ++j)
        {
            if (digits[j] >= radix_[j])
                throw Error(ErrorKind::IndexOutOfRange, "combination digit out of range");
            a = a * radix_[j] + digits[j];
        }
        return a;
    }

    // Advances digits to the next index in increasing order; returns false after the last one
    bool increment(std::span<std::size_t> digits) const noexcept
    {
        for (std::size_t j = radix_.size(); j-- > 0;)
        {
            if (++digits[j] < radix_[j])
                return true;
            digits[j] = 0;
        }
        return false;
    }

  private:
    std::vector<std::size_t> radix_;
    std::size_t count_ = 0;
};

// All combination indices in increasing order
inline auto enumerate_combinations(const CombinationSpace &space)
{
    return std::views::iota(std::size_t{0}, space.count());
}

inline std::vector<Point3> combination_to_positions(std::size_t a, const CombinationSpace &space,
                                                    std::span<const CandidateGrid> grids)
{
    const auto digits = space.to_digits(a);
    std::vector<Point3> pos(space.regions());
    for (std::size_t j = 0; j < pos.size(); ++j)
        pos[j] = grids[j].points[digits[j]];
    return pos;
}

// Row-major c x (3 D) matrix of concatenated UAV coordinates, one row per combination
struct LocationMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    std::span<const double> row(std::size_t a) const { return {data.data() + a * cols, cols}; }
};

inline LocationMatrix build_location_matrix(const CombinationSpace &space, std::span<const CandidateGrid> grids)
{
    LocationMatrix L;
    L.rows = space.count();
    L.cols = 3 * space.regions();
    L.data.resize(L.rows * L.cols);
    std::vector<std::size_t> digits(space.regions(), 0);
    std::size_t a = 0;
    do
    {
        double *r = L.data.data() + a * L.cols;
        for (std::size_t j = 0; j < digits.size(); ++j)
        {
            const auto &p = grids[j].points[digits[j]];
            r[3 * j] = p.x;
            r[3 * j + 1] = p.y;
            r[3 * j + 2] = p.z;
        }
        ++a;
    } while (space.increment(digits));
    return L;
}

// tau = e^T L, evaluated without materializing L. Integral e returns the selected row exactly.
inline std::vector<Point3> weighted_positions(std::span<const double> e, const CombinationSpace &space,
                                              std::span<const CandidateGrid> grids)
{
    std::vector<Point3> tau(space.regions());
    std::vector<std::size_t> digits(space.regions());
    for (std::size_t a = 0; a < e.size(); ++a)
    {
        if (e[a] == 0.0)
            continue;
        space.to_digits(a, digits);
        for (std::size_t j = 0; j < tau.size(); ++j)
        {
            const auto &p = grids[j].points[digits[j]];
            tau[j].x += e[a] * p.x;
            tau[j].y += e[a] * p.y;
            tau[j].z += e[a] * p.z;
        }
    }
    return tau;
}

} // namespace uavplace

#endif
