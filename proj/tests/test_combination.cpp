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

#include <uavplace/combination.hpp>
#include <uavplace/random.hpp>

#include <gtest/gtest.h>

#include <vector>

using namespace uavplace;

namespace
{

std::vector<CandidateGrid> numbered_grids(const std::vector<std::size_t> &sizes)
{
    std::vector<CandidateGrid> g(sizes.size());
    for (std::size_t j = 0; j < sizes.size(); ++j)
    {
        g[j].region = j;
        for (std::size_t q = 0; q < sizes[j]; ++q)
        {
            g[j].points.push_back({double(j), double(q), 22.0 + double(q)});
            g[j].source_index.push_back(q);
        }
    }
    return g;
}

} // namespace

TEST(CombinationSpace, Counts)
{
    EXPECT_EQ(CombinationSpace({20, 20, 20, 20}).count(), 160000u);
    EXPECT_EQ(CombinationSpace({1, 1, 1, 1}).count(), 1u);
    const CombinationSpace s({2, 3});
    EXPECT_EQ(s.count(), 6u);
    std::vector<std::size_t> seen;
    for (auto a : enumerate_combinations(s))
        seen.push_back(a);
    EXPECT_EQ(seen, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(CombinationSpace, EmptyRegionIsEmptyGrid)
{
    try
    {
        CombinationSpace({3, 0, 2});
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyGrid);
    }
}

TEST(CombinationSpace, FirstAndLastIndex)
{
    const auto grids = numbered_grids({3, 4, 2});
    const auto space = CombinationSpace::from_grids(grids);
    const auto first = combination_to_positions(0, space, grids);
    const auto last = combination_to_positions(space.count() - 1, space, grids);
    for (std::size_t j = 0; j < 3; ++j)
    {
        EXPECT_EQ(first[j], grids[j].points.front());
        EXPECT_EQ(last[j], grids[j].points.back());
    }
    try
    {
        combination_to_positions(space.count(), space, grids);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
}

TEST(CombinationSpace, DigitRoundTripOnRandomIndices)
{
    const CombinationSpace space({20, 20, 20, 20});
    Rng rng(9);
    for (int i = 0; i < 1000; ++i)
    {
        const auto a = static_cast<std::size_t>(rng.uniform() * double(space.count()));
        EXPECT_EQ(space.from_digits(space.to_digits(a)), a);
    }
}

TEST(CombinationSpace, IncrementWalksIndicesInOrder)
{
    const CombinationSpace space({2, 3, 4});
    std::vector<std::size_t> d(3, 0);
    std::size_t a = 0;
    do
    {
        EXPECT_EQ(space.from_digits(d), a);
        ++a;
    } while (space.increment(d));
    EXPECT_EQ(a, space.count());
}

TEST(LocationMatrix, RowsMatchPositionsAndIntegralSelection)
{
    const auto grids = numbered_grids({3, 2, 2});
    const auto space = CombinationSpace::from_grids(grids);
    const auto L = build_location_matrix(space, grids);
    ASSERT_EQ(L.rows, 12u);
    ASSERT_EQ(L.cols, 9u);
    for (std::size_t a = 0; a < L.rows; ++a)
    {
        const auto pos = combination_to_positions(a, space, grids);
        std::vector<double> e(space.count(), 0.0);
        e[a] = 1.0;
        const auto tau = weighted_positions(e, space, grids);
        for (std::size_t j = 0; j < pos.size(); ++j)
        {
            EXPECT_EQ(L.row(a)[3 * j], pos[j].x);
            EXPECT_EQ(L.row(a)[3 * j + 1], pos[j].y);
            EXPECT_EQ(L.row(a)[3 * j + 2], pos[j].z);
            EXPECT_EQ(tau[j], pos[j]);
        }
    }
}
