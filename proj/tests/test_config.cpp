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

#include <uavplace/config.hpp>

#include <gtest/gtest.h>

using namespace uavplace;

namespace
{

ErrorKind kind_of(const std::string &text)
{
    try
    {
        parse_config(text);
    }
    catch (const Error &e)
    {
        return e.kind();
    }
    return ErrorKind::InvalidArgument; // sentinel: no error
}

} // namespace

TEST(Config, EmptyTextGivesReferenceDefaults)
{
    const auto c = parse_config("# nothing overridden\n\n");
    EXPECT_EQ(c.area_side_m, 114.0);
    EXPECT_EQ(c.region_count(), 4u);
    EXPECT_EQ(c.region_width(), 57.0);
    EXPECT_EQ(c.users_per_region, 5u);
    EXPECT_EQ(c.num_uavs, 4u);
    EXPECT_EQ(c.num_antennas, 6u);
    EXPECT_EQ(c.pathloss_exponent, 2.0);
    EXPECT_EQ(c.zone_b_m, 11.0);
    EXPECT_EQ(c.h_min_m, 22.0);
    EXPECT_EQ(c.h_max_m, 36.0);
    EXPECT_EQ(c.uav_power_mw, 1.0);
    EXPECT_EQ(c.n0_dbm, -35.0);
    EXPECT_EQ(c.grid_nx * c.grid_ny * c.grid_nz, 20u);
    EXPECT_EQ(c.zone().center_x, 57.0);
}

TEST(Config, ParsesOverridesAndComments)
{
    const auto c = parse_config("h_min_m = 25   # raised floor\n"
                                "zone_mode=ellipse\n"
                                "gain_mode = gaussian\n"
                                "seed = 99\n"
                                "candidates_2 = 10 70 30; 20, 80, 25\n");
    EXPECT_EQ(c.h_min_m, 25.0);
    EXPECT_EQ(c.zone_mode, ZoneMode::Ellipse);
    EXPECT_EQ(c.gain_mode, GainMode::Gaussian);
    EXPECT_EQ(c.seed, 99u);
    ASSERT_EQ(c.candidates.at(2).size(), 2u);
    EXPECT_EQ(c.candidates.at(2)[1], (Point3{20, 80, 25}));
}

TEST(Config, ValidationErrorsNameTheField)
{
    try
    {
        parse_config("h_min_m = 40\n");
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
        EXPECT_NE(std::string(e.what()).find("h_max_m"), std::string::npos);
    }
    try
    {
        parse_config("num_uavs = 3\n");
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
        EXPECT_NE(std::string(e.what()).find("num_uavs"), std::string::npos);
    }
    EXPECT_EQ(kind_of("gain_mode = gaussian\n"), ErrorKind::ValidationError); // seed missing
    EXPECT_EQ(kind_of("candidates_0 = 80 80 30\n"), ErrorKind::ValidationError);
    EXPECT_EQ(kind_of("zone_b_m = 0\n"), ErrorKind::ValidationError);
}

TEST(Config, ParseErrors)
{
    EXPECT_EQ(kind_of("bogus_key = 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("h_min_m = abc\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("h_min_m 22\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("seed = -1\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("zone_mode = circle\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("seed = 1\nseed = 2\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("candidates_0 = 1 2\n"), ErrorKind::ParseError);
    EXPECT_THROW(load_config("/nonexistent/uavplace.cfg"), Error);
}

TEST(Config, CanonicalTextRoundTripsAndHashes)
{
    auto c = parse_config("gamma_th_db = -6.123456789\nseed = 7\ncandidates_1 = 60 10 30; 100 50 22\n");
    const auto again = parse_config(to_text(c));
    EXPECT_EQ(to_text(again), to_text(c));
    EXPECT_EQ(config_hash(again), config_hash(c));
    c.seed = 8;
    EXPECT_NE(config_hash(again), config_hash(c));
    EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}
