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


#include "oracles.hpp"

#include <sparsedoa/model.hpp>
#include <sparsedoa/saen.hpp>

#include <catch_amalgamated.hpp>

using namespace sdoa;

namespace
{
    const LarsOptions kPredictor{PathMode::predictor};

    bool subset(const IndexSet &small, const IndexSet &big) { return contains_all(big, small); }
} // namespace

TEST_CASE("adaptive weights")
{
    ComplexVector b(5);
    b << cplx(2.0), cplx(0.0), cplx(0.0, -0.5), cplx(4.0), cplx(1.0);
    const WeightVector w = adaptive_weights(b, {0, 1, 2});
    CHECK(w[0] == 0.5);
    CHECK(std::isinf(w[1])); // zero inside the support
    CHECK(w[2] == 2.0);
    CHECK(std::isinf(w[3])); // outside the support
    CHECK(std::isinf(w[4]));
    CHECK_THROWS_AS(adaptive_weights(b, {7}), DimensionError);
}

TEST_CASE("orthonormal design, noiseless: SAEN recovers support and amplitudes")
{
    std::mt19937_64 rng(41);
    for (auto mode : {PathMode::exact, PathMode::predictor})
    {
        const ComplexMatrix X = oracle::random_orthonormal(30, 20, rng);
        ComplexVector s = ComplexVector::Zero(20);
        s[3] = cplx(1.0, 0.5);
        s[11] = cplx(-0.7, 0.2);
        const ComplexVector y = X * s;
        const SaenTrace t = saen(y, X, AlphaGrid::standard(), 2, LarsOptions{mode});
        CHECK(t.final.active_set == IndexSet{3, 11});
        CHECK((t.final.beta - s).norm() < 1e-10);
        CHECK(t.final.debiased);
    }
}

TEST_CASE("stage supports are nested and stage weights finite exactly on them")
{
    const Scenario sc = preset(1);
    const SteeringGrid g = build_grid(sc);
    for (std::uint64_t trial = 0; trial < 8; ++trial)
    {
        Rng rng(stream_seed(11, trial));
        const Snapshot snap = generate_snapshot(sc, g, 20.0, rng);
        const SaenTrace t = saen(snap.y, g.X, AlphaGrid::standard(), 3, kPredictor);
        CHECK(t.stage_supports[0].size() == 9);
        CHECK(t.stage_supports[1].size() == 6);
        CHECK(t.stage_supports[2].size() == 3);
        CHECK(subset(t.stage_supports[1], t.stage_supports[0]));
        CHECK(subset(t.stage_supports[2], t.stage_supports[1]));
        for (int s = 0; s < 2; ++s)
            for (Index j = 0; j < g.size(); ++j)
            {
                const bool in = std::find(t.stage_supports[s].begin(), t.stage_supports[s].end(), j) !=
                                t.stage_supports[s].end();
                if (!in)
                    CHECK(std::isinf(t.stage_weights[s][j]));
            }
    }
}

TEST_CASE("SAEN is deterministic")
{
    const Scenario sc = preset(4);
    const SteeringGrid g = build_grid(sc);
    Rng rng(stream_seed(12, 0));
    const Snapshot snap = generate_snapshot(sc, g, 20.0, rng);
    const SaenTrace a = saen(snap.y, g.X, AlphaGrid::standard(), 3, kPredictor);
    const SaenTrace b = saen(snap.y, g.X, AlphaGrid::standard(), 3, kPredictor);
    CHECK(a.final.beta == b.final.beta);
    CHECK(a.stage_supports == b.stage_supports);
}

TEST_CASE("SAEN preconditions")
{
    std::mt19937_64 rng(42);
    const ComplexMatrix X = oracle::random_complex(9, 20, rng);
    const ComplexVector y = oracle::random_complex(9, rng);
    CHECK_THROWS_AS(saen(y, X, AlphaGrid::standard(), 3), DomainError); // 3K = 9 = n
    CHECK_THROWS_AS(saen(y, X, AlphaGrid::standard(), 0), DomainError);
    CHECK_NOTHROW(saen(y, X, AlphaGrid::standard(), 2, kPredictor));
}

TEST_CASE("AEN variants")
{
    const Scenario sc = preset(1);
    const SteeringGrid g = build_grid(sc);
    Rng rng(stream_seed(13, 0));
    const Snapshot snap = generate_snapshot(sc, g, 20.0, rng);
    for (AenKind kind : {AenKind::lse, AenKind::n, AenKind::three_k})
    {
        IndexSet init;
        const WenSolution s = aen_variant(snap.y, g.X, AlphaGrid::standard(), 3, kind, kPredictor, &init);
        CHECK(s.active_set.size() == 3);
        CHECK(s.debiased);
        switch (kind)
        {
        case AenKind::lse: CHECK(init.size() == 180); break;
        case AenKind::n: CHECK(init.size() == 40); break;
        case AenKind::three_k: CHECK(init.size() == 9); break;
        }
        CHECK(subset(s.active_set, init));
    }

    // AEN(3K) final stage coincides with SAEN skipping stage 2
    const SaenTrace t = saen(snap.y, g.X, AlphaGrid::standard(), 3, kPredictor);
    IndexSet init;
    aen_variant(snap.y, g.X, AlphaGrid::standard(), 3, AenKind::three_k, kPredictor, &init);
    CHECK(init == t.stage_supports[0]);

    std::mt19937_64 r(43);
    const ComplexMatrix tall = oracle::random_complex(30, 20, r);
    CHECK_THROWS_AS(aen_variant(oracle::random_complex(30, r), tall, AlphaGrid::standard(), 2, AenKind::n),
                    DomainError);
}
