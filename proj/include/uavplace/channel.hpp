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

#ifndef UAVPLACE_CHANNEL_HPP
#define UAVPLACE_CHANNEL_HPP

#include "error.hpp"
#include "geometry.hpp"
#include "random.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace uavplace
{

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Uniform linear array; spacing_ratio is element spacing over carrier wavelength
struct ArrayConfig
{
    std::size_t antennas = 6;
    double spacing_ratio = 0.5;

    void validate() const
    {
        if (antennas < 1)
            throw Error(ErrorKind::ValidationError, "antenna count must be >= 1");
        if (!(spacing_ratio > 0.0))
            throw Error(ErrorKind::ValidationError, "antenna spacing ratio must be positive");
    }
};

struct LinkParams
{
    double pathloss_exponent = 2.0;

    void validate() const
    {
        if (!(pathloss_exponent >= 0.0))
            throw Error(ErrorKind::ValidationError, "path-loss exponent must be >= 0");
    }
};

struct PathComponent
{
    Complex gain{1.0, 0.0};
    double aod = 0.0; // radians
};

inline double squared_norm(std::span<const Complex> v) noexcept
{
    double s = 0.0;
    for (const auto &x : v)
        s += std::norm(x);
    return s;
}

// h^H w
inline Complex inner(std::span<const Complex> h, std::span<const Complex> w) noexcept
{
    Complex s{0.0, 0.0};
    for (std::size_t n = 0; n < h.size(); ++n)
        s += std::conj(h[n]) * w[n];
    return s;
}

// Unit-norm ULA response, entry n = exp(-i 2 pi spacing sin(theta) n) / sqrt(N)
inline ComplexVector steering_vector(double theta, const ArrayConfig &cfg)
{
    const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.antennas));
    const double phase_step = -2.0 * std::numbers::pi * cfg.spacing_ratio * std::sin(theta);
    ComplexVector a(cfg.antennas);
    for (std::size_t n = 0; n < cfg.antennas; ++n)
        a[n] = std::polar(scale, phase_step * static_cast<double>(n));
    return a;
}

// Elevation angle of departure from the UAV toward the user, asin(dz / d), in [-pi/2, pi/2]
inline double aod(const Point3 &uav, const Point3 &user)
{
    const double d = distance(uav, user);
    if (!(d > 0.0))
        throw Error(ErrorKind::DegenerateLink, "UAV and user positions coincide");
    double s = (uav.z - user.z) / d;
    s = s > 1.0 ? 1.0 : (s < -1.0 ? -1.0 : s);
    return std::asin(s);
}

inline double pathloss_amplitude(double d, const LinkParams &params) noexcept
{
    return 1.0 / std::sqrt(1.0 + std::pow(d, params.pathloss_exponent));
}

// h = sqrt(N) * sum_p alpha_p a(theta_p) / sqrt(1 + d^gamma)
inline ComplexVector multipath_channel(std::span<const PathComponent> paths, double d, const LinkParams &params,
                                       const ArrayConfig &cfg)
{
    if (paths.empty())
        throw Error(ErrorKind::EmptyPathSet, "multipath channel needs at least one path");
    if (!(d > 0.0))
        throw Error(ErrorKind::DegenerateLink, "link distance must be positive");

    const double amp = std::sqrt(static_cast<double>(cfg.antennas)) * pathloss_amplitude(d, params);
    ComplexVector h(cfg.antennas, Complex{0.0, 0.0});
    for (const auto &p : paths)
    {
        const auto a = steering_vector(p.aod, cfg);
        for (std::size_t n = 0; n < cfg.antennas; ++n)
            h[n] += p.gain * a[n];
    }
    for (auto &x : h)
        x *= amp;
    return h;
}

// Line-of-sight channel: the single-path case; ||h||^2 = N |alpha|^2 / (1 + d^gamma)
inline ComplexVector los_channel(const Point3 &uav, const Point3 &user, Complex alpha, const LinkParams &params,
                                 const ArrayConfig &cfg)
{
    const PathComponent path{alpha, aod(uav, user)};
    return multipath_channel(std::span(&path, 1), distance(uav, user), params, cfg);
}

// Circularly symmetric complex Gaussian, unit variance
inline Complex sample_complex_gain(Rng &rng)
{
    const double s = std::sqrt(0.5);
    const double re = s * rng.normal();
    const double im = s * rng.normal();
    return {re, im};
}

} // namespace uavplace

#endif
