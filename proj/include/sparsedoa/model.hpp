// SPDX-License-Identifier: Apache-2.0
//
// sparsedoa: complex-valued sparse recovery for single-snapshot beamforming
// Copyright (C) 2026 The sparsedoa authors
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


#ifndef SPARSEDOA_MODEL_HPP
#define SPARSEDOA_MODEL_HPP

#include "common.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace sdoa
{
    inline double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

    // Unit-norm response of an n-element half-wavelength ULA to a far-field source at theta_deg:
    // a_m = exp(i*pi*m*sin(theta)) / sqrt(n), m = 0..n-1.
    inline ComplexVector steering_vector(double theta_deg, Index n)
    {
        if (!(theta_deg >= -90.0 && theta_deg < 90.0))
            throw DomainError("steering_vector: angle " + std::to_string(theta_deg) + " outside [-90, 90)");
        if (n < 1)
            throw DomainError("steering_vector: sensor count must be positive");
        const double phase = std::numbers::pi * std::sin(deg2rad(theta_deg));
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        ComplexVector a(n);
        for (Index m = 0; m < n; ++m)
            a[m] = std::polar(scale, phase * static_cast<double>(m));
        return a;
    }

    struct SteeringGrid
    {
        std::vector<double> angles_deg; // strictly increasing, over [-90, 90)
        double spacing_deg = 0.0;
        Index n_sensors = 0;
        ComplexMatrix X; // n_sensors x size(); column j = steering_vector(angles_deg[j])

        Index size() const { return static_cast<Index>(angles_deg.size()); }
    };

    inline SteeringGrid build_grid(double spacing_deg, Index n_sensors)
    {
        if (!(spacing_deg > 0.0) || !std::isfinite(spacing_deg))
            throw ConfigError("build_grid: spacing must be positive");
        const double count = 180.0 / spacing_deg;
        const double rounded = std::round(count);
        if (std::abs(count - rounded) > 1e-9 || rounded < 1.0)
            throw ConfigError("build_grid: spacing " + std::to_string(spacing_deg) + " does not divide 180");
        if (n_sensors < 1)
            throw ConfigError("build_grid: sensor count must be positive");

        SteeringGrid grid;
        grid.spacing_deg = spacing_deg;
        grid.n_sensors = n_sensors;
        const auto p = static_cast<Index>(rounded);
        grid.angles_deg.resize(static_cast<std::size_t>(p));
        grid.X.resize(n_sensors, p);
        for (Index j = 0; j < p; ++j)
        {
            grid.angles_deg[static_cast<std::size_t>(j)] = -90.0 + static_cast<double>(j) * spacing_deg;
            grid.X.col(j) = steering_vector(grid.angles_deg[static_cast<std::size_t>(j)], n_sensors);
        }
        return grid;
    }

    struct Scenario
    {
        std::string label;
        std::vector<double> doas_deg;   // source directions, possibly off-grid
        std::vector<double> magnitudes; // |s_k| in (0, 1]
        double grid_spacing_deg = 1.0;
        Index n_sensors = 0;

        Index sources() const { return static_cast<Index>(doas_deg.size()); }

        void validate() const
        {
            if (doas_deg.empty())
                throw ConfigError("scenario '" + label + "': no sources");
            if (doas_deg.size() != magnitudes.size())
                throw ConfigError("scenario '" + label + "': doas_deg and magnitudes differ in length");
            if (sources() >= n_sensors)
                throw ConfigError("scenario '" + label + "': need fewer sources than sensors");
            for (std::size_t k = 0; k < doas_deg.size(); ++k)
            {
                if (!(doas_deg[k] >= -90.0 && doas_deg[k] < 90.0))
                    throw ConfigError("scenario '" + label + "': DoA outside [-90, 90)");
                if (!(magnitudes[k] > 0.0 && magnitudes[k] <= 1.0))
                    throw ConfigError("scenario '" + label + "': magnitude outside (0, 1]");
                for (std::size_t l = 0; l < k; ++l)
                    if (doas_deg[l] == doas_deg[k])
                        throw ConfigError("scenario '" + label + "': repeated DoA");
            }
            (void)build_grid(grid_spacing_deg, n_sensors).size();
        }

        double average_power() const
        {
            double sum = 0.0;
            for (double m : magnitudes)
                sum += m * m;
            return sum / static_cast<double>(magnitudes.size());
        }
    };

    // The seven simulation set-ups of the single-snapshot study.
    inline Scenario preset(int id)
    {
        switch (id)
        {
        case 1: return {"setup-1", {-5, 3, 6}, {0.9, 1, 1}, 1.0, 40};
        case 2: return {"setup-2", {-6, 2}, {0.9, 1}, 1.0, 40};
        case 3: return {"setup-3", {44, 52}, {0.9, 1}, 1.0, 40};
        case 4: return {"setup-4", {43, 44, 52}, {0.8, 0.7, 1}, 1.0, 40};
        case 5: return {"setup-5", {-8.7, -3.8, -3.5, 9.7}, {0.9, 0.1, 1, 0.4}, 1.0, 40};
        case 6: return {"setup-6", {-48.5, -46.4, -31.5, -22}, {0.8, 1, 0.9, 0.4}, 2.0, 30};
        case 7: return {"setup-7", {6, 8, 14, 18}, {0.7, 1, 0.6, 0.7}, 2.0, 30};
        default: throw ConfigError("unknown preset " + std::to_string(id) + " (expected 1..7)");
        }
    }

    inline SteeringGrid build_grid(const Scenario &sc) { return build_grid(sc.grid_spacing_deg, sc.n_sensors); }

    namespace detail
    {
        inline bool on_grid(double a, double b) { return std::abs(a - b) <= 1e-9; }
    }

    // Maximal basis coherence: largest |a(theta_k)^H a(v)| over sources k and grid angles v != theta_k.
    inline double mbc(const Scenario &sc, const SteeringGrid &grid)
    {
        if (grid.n_sensors != sc.n_sensors)
            throw DimensionError("mbc: grid built for a different sensor count");
        double best = 0.0;
        for (double theta : sc.doas_deg)
        {
            const ComplexVector a = steering_vector(theta, sc.n_sensors);
            const RealVector corr = (grid.X.adjoint() * a).cwiseAbs();
            for (Index j = 0; j < grid.size(); ++j)
                if (!detail::on_grid(grid.angles_deg[static_cast<std::size_t>(j)], theta))
                    best = std::max(best, corr[j]);
        }
        return best;
    }

    // Grid index nearest to each source, returned in source order. Sources closest to a grid point
    // claim first; a source whose nearest point is taken moves to its next-nearest free point.
    // Exact midpoint ties go to the smaller angle.
    inline IndexSet nearest_grid_support(const Scenario &sc, const SteeringGrid &grid)
    {
        const auto K = sc.doas_deg.size();
        if (static_cast<Index>(K) > grid.size())
            throw DimensionError("nearest_grid_support: more sources than grid points");

        auto ranked = [&](double theta) {
            std::vector<Index> order(static_cast<std::size_t>(grid.size()));
            for (Index j = 0; j < grid.size(); ++j)
                order[static_cast<std::size_t>(j)] = j;
            std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
                return std::abs(grid.angles_deg[static_cast<std::size_t>(a)] - theta) <
                       std::abs(grid.angles_deg[static_cast<std::size_t>(b)] - theta);
            });
            return order; // stable: equal distances keep increasing-angle order
        };

        std::vector<std::size_t> claim(K);
        for (std::size_t k = 0; k < K; ++k)
            claim[k] = k;
        std::vector<double> dist(K);
        std::vector<std::vector<Index>> prefs(K);
        for (std::size_t k = 0; k < K; ++k)
        {
            prefs[k] = ranked(sc.doas_deg[k]);
            dist[k] = std::abs(grid.angles_deg[static_cast<std::size_t>(prefs[k].front())] - sc.doas_deg[k]);
        }
        std::stable_sort(claim.begin(), claim.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

        IndexSet support(K, -1);
        std::vector<bool> taken(static_cast<std::size_t>(grid.size()), false);
        for (std::size_t k : claim)
        {
            for (Index j : prefs[k])
            {
                if (!taken[static_cast<std::size_t>(j)])
                {
                    taken[static_cast<std::size_t>(j)] = true;
                    support[k] = j;
                    break;
                }
            }
        }
        return support;
    }

    // splitmix64 finalizer; used to derive independent per-trial streams from one master seed.
    inline std::uint64_t mix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index)
    {
        return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
    }

    using Rng = std::mt19937_64;

    inline constexpr double kNoiseless = std::numeric_limits<double>::infinity();

    // sigma^2 such that 10 log10(sigma_s^2 / sigma^2) = snr_db, sigma_s^2 the average source power.
    inline double noise_variance(const Scenario &sc, double snr_db)
    {
        if (std::isnan(snr_db) || snr_db == -kNoiseless)
            throw DomainError("noise_variance: SNR must be finite or +inf");
        if (snr_db == kNoiseless)
            return 0.0;
        return sc.average_power() * std::pow(10.0, -snr_db / 10.0);
    }

    struct Snapshot
    {
        ComplexVector y;
        IndexSet support;   // nearest grid index per source, source order
        ComplexVector s;    // source amplitudes, source order
        double noise_variance = 0.0;
    };

    // y = A(theta) s + e with random source phases and circular Gaussian noise e ~ CN(0, sigma^2 I).
    // Draw order is fixed (K phases, then n noise pairs) so equal seeds give equal snapshots,
    // and the same seed at different SNRs differs only in the noise scale.
    inline Snapshot generate_snapshot(const Scenario &sc, const SteeringGrid &grid, double snr_db, Rng &rng)
    {
        if (grid.n_sensors != sc.n_sensors)
            throw DimensionError("generate_snapshot: grid built for a different sensor count");
        const Index K = sc.sources();
        const Index n = sc.n_sensors;

        Snapshot out;
        out.noise_variance = noise_variance(sc, snr_db);
        out.support = nearest_grid_support(sc, grid);
        out.s.resize(K);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
        for (Index k = 0; k < K; ++k)
            out.s[k] = std::polar(sc.magnitudes[static_cast<std::size_t>(k)], phase(rng));

        out.y = ComplexVector::Zero(n);
        for (Index k = 0; k < K; ++k)
            out.y += steering_vector(sc.doas_deg[static_cast<std::size_t>(k)], n) * out.s[k];

        std::normal_distribution<double> normal(0.0, 1.0);
        const double sd = std::sqrt(out.noise_variance / 2.0);
        for (Index i = 0; i < n; ++i)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            out.y[i] += cplx(sd * re, sd * im);
        }
        return out;
    }

} // namespace sdoa

#endif
