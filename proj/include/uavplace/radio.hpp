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

#ifndef UAVPLACE_RADIO_HPP
#define UAVPLACE_RADIO_HPP

#include "channel.hpp"
#include "combination.hpp"
#include "error.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace uavplace
{

struct Beamformer
{
    ComplexVector w; // unit norm
};

// Matched filter w = h / ||h||, so |h^H w|^2 = ||h||^2
inline Beamformer mrt_beamformer(std::span<const Complex> h)
{
    const double nrm = std::sqrt(squared_norm(h));
    if (!(nrm > 0.0))
        throw Error(ErrorKind::ZeroChannel, "cannot steer a beam toward an all-zero channel");
    Beamformer b;
    b.w.assign(h.begin(), h.end());
    for (auto &x : b.w)
        x /= nrm;
    return b;
}

inline std::vector<double> equal_power(double total_mw, std::size_t n_users)
{
    if (n_users == 0)
        throw Error(ErrorKind::InvalidArgument, "equal power split needs at least one user");
    return std::vector<double>(n_users, total_mw / static_cast<double>(n_users));
}

// Everything needed to evaluate a link budget except the UAV positions.
// Users are indexed globally; owner[k] is the region (and UAV) serving user k.
struct RadioModel
{
    ArrayConfig array;
    LinkParams link;
    double noise_mw = 0.0;
    std::size_t uavs = 0;
    std::vector<Point3> users;
    std::vector<std::size_t> owner;
    std::vector<Complex> gains;    // alpha per user
    std::vector<double> power_mw;  // p per user

    std::size_t user_count() const noexcept { return users.size(); }

    std::vector<std::size_t> users_of(std::size_t j) const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < owner.size(); ++k)
            if (owner[k] == j)
                out.push_back(k);
        return out;
    }

    void validate() const
    {
        array.validate();
        link.validate();
        if (!(noise_mw > 0.0))
            throw Error(ErrorKind::ValidationError, "noise power must be positive");
        if (owner.size() != users.size() || gains.size() != users.size() || power_mw.size() != users.size())
            throw Error(ErrorKind::ValidationError, "per-user vectors must have equal length");
        for (auto j : owner)
            if (j >= uavs)
                throw Error(ErrorKind::ValidationError, "user owner index exceeds UAV count");
    }
};

// Reference SINR: evaluates every channel and beam from scratch for one user.
inline double sinr_direct(std::span<const Point3> uav_positions, std::size_t user, const RadioModel &m)
{
    if (uav_positions.size() != m.uavs)
        throw Error(ErrorKind::InvalidArgument, "need exactly one position per UAV");
    if (user >= m.user_count())
        throw Error(ErrorKind::IndexOutOfRange, "user index out of range");

    const std::size_t j = m.owner[user];
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t l = 0; l < m.uavs; ++l)
    {
        const auto h_k = los_channel(uav_positions[l], m.users[user], m.gains[user], m.link, m.array);
        for (std::size_t i = 0; i < m.user_count(); ++i)
        {
            if (m.owner[i] != l)
                continue;
            const auto h_i = los_channel(uav_positions[l], m.users[i], m.gains[i], m.link, m.array);
            const auto beam = mrt_beamformer(h_i);
            const double g = m.power_mw[i] * std::norm(inner(h_k, beam.w));
            if (l == j && i == user)
                signal = g;
            else
                interference += g;
        }
    }
    return signal / (m.noise_mw + interference);
}

// Link-gain tables indexed by (region j, candidate q of region j, global user k).
//   signal[j,q,k] = |h^H w_k|^2 for k served by j (no power factor), 0 otherwise
//   intra[j,q,k]  = sum_{i in U_j, i != k} p_i |h_k^H w_i|^2 for k served by j, 0 otherwise
//   inter[j,q,k]  = sum_{i in U_j} p_i |h_k^H w_i|^2 for k NOT served by j, 0 otherwise
// so that SINR_k = p_k signal[j,q_j,k] / (N0 + intra[j,q_j,k] + sum_l inter[l,q_l,k]).
// Beams w_i of UAV j depend only on its own candidate, which makes the factorization exact.
struct GainTables
{
    std::size_t uavs = 0;
    std::size_t users = 0;
    std::vector<std::size_t> candidates; // per region
    std::vector<std::size_t> offset;     // first slot of region j
    std::vector<std::size_t> owner;
    std::vector<double> power_mw;
    std::vector<double> signal;
    std::vector<double> intra;
    std::vector<double> inter;

    std::size_t index(std::size_t j, std::size_t q, std::size_t k) const noexcept
    {
        return (offset[j] + q) * users + k;
    }
};

inline GainTables precompute_gain_tables(std::span<const CandidateGrid> grids, const RadioModel &m)
{
    m.validate();
    if (grids.size() != m.uavs)
        throw Error(ErrorKind::InvalidArgument, "need one candidate grid per UAV");

    GainTables t;
    t.uavs = m.uavs;
    t.users = m.user_count();
    t.owner = m.owner;
    t.power_mw = m.power_mw;
    std::size_t slots = 0;
    for (const auto &g : grids)
    {
        t.offset.push_back(slots);
        t.candidates.push_back(g.size());
        slots += g.size();
    }
    t.signal.assign(slots * t.users, 0.0);
    t.intra.assign(slots * t.users, 0.0);
    t.inter.assign(slots * t.users, 0.0);

    std::vector<ComplexVector> h(t.users);
    std::vector<ComplexVector> w(t.users);
    for (std::size_t j = 0; j < m.uavs; ++j)
    {
        const auto served = m.users_of(j);
        for (std::size_t q = 0; q < grids[j].size(); ++q)
        {
            const Point3 &pos = grids[j].points[q];
            for (std::size_t k = 0; k < t.users; ++k)
                h[k] = los_channel(pos, m.users[k], m.gains[k], m.link, m.array);
            for (auto i : served)
                w[i] = mrt_beamformer(h[i]).w;

            for (std::size_t k = 0; k < t.users; ++k)
            {
                const std::size_t idx = t.index(j, q, k);
                double leak = 0.0;
                for (auto i : served)
                {
                    const double g = std::norm(inner(h[k], w[i]));
                    if (i == k)
                        t.signal[idx] = g;
                    else
                        leak += m.power_mw[i] * g;
                }
                if (m.owner[k] == j)
                    t.intra[idx] = leak;
                else
                    t.inter[idx] = leak;
            }
        }
    }
    return t;
}

// SINR of user k for the combination whose per-region candidate choice is `digits`
inline double assembled_sinr(const GainTables &t, std::span<const std::size_t> digits, std::size_t k,
                             double noise_mw) noexcept
{
    // intra is zero outside the serving region, so summing it over all l adds only the serving term;
    // the accumulation order matches build_sinr_matrix bit for bit
    const std::size_t j = t.owner[k];
    double denom = noise_mw;
    for (std::size_t l = 0; l < t.uavs; ++l)
    {
        const std::size_t idx = t.index(l, digits[l], k);
        denom += t.inter[idx] + t.intra[idx];
    }
    return t.power_mw[k] * t.signal[t.index(j, digits[j], k)] / denom;
}

// Any row-addressable source of per-combination user SINRs
template <typename T>
concept SinrRows = requires(const T &s, std::size_t a, std::span<double> out) {
    { s.rows() } -> std::convertible_to<std::size_t>;
    { s.cols() } -> std::convertible_to<std::size_t>;
    s.fill_row(a, out);
};

// c x U row-major matrix of linear SINRs
class SinrMatrix
{
  public:
    SinrMatrix() = default;
    SinrMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t a, std::size_t k) const noexcept { return data_[a * cols_ + k]; }
    double &operator()(std::size_t a, std::size_t k) noexcept { return data_[a * cols_ + k]; }

    std::span<const double> row(std::size_t a) const noexcept { return {data_.data() + a * cols_, cols_}; }
    std::span<double> row(std::size_t a) noexcept { return {data_.data() + a * cols_, cols_}; }

    void fill_row(std::size_t a, std::span<double> out) const
    {
        const auto r = row(a);
        std::copy(r.begin(), r.end(), out.begin());
    }

    const std::vector<double> &data() const noexcept { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Streaming alternative to SinrMatrix: rows are assembled from the gain tables on demand
class StreamingSinrRows
{
  public:
    StreamingSinrRows(const GainTables &tables, CombinationSpace space, double noise_mw)
        : tables_(&tables), space_(std::move(space)), noise_mw_(noise_mw)
    {
    }

    std::size_t rows() const noexcept { return space_.count(); }
    std::size_t cols() const noexcept { return tables_->users; }

    void fill_row(std::size_t a, std::span<double> out) const
    {
        std::vector<std::size_t> digits(space_.regions());
        space_.to_digits(a, digits);
        for (std::size_t k = 0; k < tables_->users; ++k)
            out[k] = assembled_sinr(*tables_, digits, k, noise_mw_);
    }

  private:
    const GainTables *tables_;
    CombinationSpace space_;
    double noise_mw_;
};

inline SinrMatrix build_sinr_matrix(const CombinationSpace &space, const GainTables &t, double noise_mw)
{
    if (space.regions() != t.uavs)
        throw Error(ErrorKind::InvalidArgument, "combination space and gain tables disagree on region count");
    for (std::size_t j = 0; j < t.uavs; ++j)
        if (space.radix(j) != t.candidates[j])
            throw Error(ErrorKind::InvalidArgument, "gain tables do not cover the combination space");

    SinrMatrix S(space.count(), t.users);
    std::vector<std::size_t> digits(space.regions(), 0);
    std::vector<double> denom(t.users);
    std::size_t a = 0;
    do
    {
        for (std::size_t k = 0; k < t.users; ++k)
            denom[k] = noise_mw;
        for (std::size_t l = 0; l < t.uavs; ++l) // see assembled_sinr
        {
            const double *inter = t.inter.data() + t.index(l, digits[l], 0);
            const double *intra = t.intra.data() + t.index(l, digits[l], 0);
            for (std::size_t k = 0; k < t.users; ++k)
                denom[k] += inter[k] + intra[k];
        }
        auto r = S.row(a);
        for (std::size_t k = 0; k < t.users; ++k)
        {
            const std::size_t j = t.owner[k];
            r[k] = t.power_mw[k] * t.signal[t.index(j, digits[j], k)] / denom[k];
        }
        ++a;
    } while (space.increment(digits));
    return S;
}

} // namespace uavplace

#endif
