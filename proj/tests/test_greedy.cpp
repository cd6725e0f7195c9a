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

#include <sparsedoa/greedy.hpp>
#include <sparsedoa/model.hpp>

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace sdoa;

TEST_CASE("OMP on an orthonormal design picks the K largest correlations")
{
    std::mt19937_64 rng(51);
    const ComplexMatrix X = oracle::random_orthonormal(20, 15, rng);
    const ComplexVector y = oracle::random_complex(20, rng);
    const ComplexVector c = X.adjoint() * y;
    IndexSet order(15);
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return std::abs(c[a]) > std::abs(c[b]); });
    const GreedyResult r = omp(y, X, 4);
    CHECK(r.support == sorted(IndexSet(order.begin(), order.begin() + 4)));
    for (Index j : r.support)
        CHECK(std::abs(r.beta[j] - c[j]) < 1e-12);
}

TEST_CASE("OMP never repeats an index and its residual does not grow")
{
    std::mt19937_64 rng(52);
    for (int rep = 0; rep < 10; ++rep)
    {
        const ComplexMatrix X = oracle::random_complex(20, 50, rng);
        const ComplexVector y = oracle::random_complex(20, rng);
        const GreedyResult r = omp(y, X, 8);
        IndexSet sel = r.selection;
        std::sort(sel.begin(), sel.end());
        CHECK(std::adjacent_find(sel.begin(), sel.end()) == sel.end());
        REQUIRE(r.residual_norms.size() == 8);
        double prev = y.norm();
        for (double v : r.residual_norms)
        {
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
        // LS refit on the selected support
        const ComplexMatrix XS = select_columns(X, r.support);
        const ComplexVector ls = oracle::normal_equations(XS, y);
        for (std::size_t a = 0; a < r.support.size(); ++a)
            CHECK(std::abs(r.beta[r.support[a]] - ls[static_cast<Index>(a)]) < 1e-9);
    }
}

TEST_CASE("correlation ties go to the lowest index")
{
    ComplexMatrix X = ComplexMatrix::Zero(4, 3);
    X(0, 0) = 1.0;
    X(0, 1) = 1.0; // duplicate of column 0
    X(1, 2) = 1.0;
    ComplexVector y = ComplexVector::Zero(4);
    y[0] = 2.0;
    y[1] = 1.0;
    CHECK(omp(y, X, 1).support == IndexSet{0});
    CHECK(cosamp(y, X, 1).support == IndexSet{0});
}

TEST_CASE("CoSaMP on an orthonormal noiseless design")
{
    std::mt19937_64 rng(53);
    const ComplexMatrix X = oracle::random_orthonormal(30, 20, rng);
    ComplexVector s = ComplexVector::Zero(20);
    s[2] = cplx(1.0, -1.0);
    s[9] = cplx(0.4, 0.0);
    s[17] = cplx(0.0, 0.8);
    const ComplexVector y = X * s;
    const GreedyResult r = cosamp(y, X, 3);
    CHECK(r.support == IndexSet{2, 9, 17});
    CHECK((r.beta - s).norm() < 1e-12);
    // exact after the first pass; the second pass only confirms the support
    CHECK(r.residual_norms.front() < 1e-12);
    CHECK(r.converged);
    CHECK(r.iterations == 2);
}

TEST_CASE("CoSaMP returns exactly K indices and is deterministic")
{
    const Scenario sc = preset(4);
    const SteeringGrid g = build_grid(sc);
    for (std::uint64_t t = 0; t < 10; ++t)
    {
        Rng rng(stream_seed(3, t));
        const Snapshot snap = generate_snapshot(sc, g, 20.0, rng);
        const GreedyResult a = cosamp(snap.y, g.X, 3);
        const GreedyResult b = cosamp(snap.y, g.X, 3);
        CHECK(a.support.size() == 3);
        CHECK(a.support == b.support);
        CHECK(a.beta == b.beta);
        CHECK(a.iterations <= 50);
    }
    Rng rng(1);
    const Snapshot snap = generate_snapshot(sc, g, 20.0, rng);
    CHECK(cosamp(snap.y, g.X, 3, 1).iterations == 1);
    CHECK_THROWS_AS(cosamp(snap.y, g.X, 3, 0), DomainError);
}

TEST_CASE("greedy argument checks")
{
    std::mt19937_64 rng(54);
    const ComplexMatrix X = oracle::random_complex(5, 10, rng);
    const ComplexVector y = oracle::random_complex(5, rng);
    CHECK_THROWS_AS(omp(y, X, 5), DomainError);
    CHECK_THROWS_AS(omp(y, X, 0), DomainError);
    CHECK_THROWS_AS(cosamp(ComplexVector::Ones(4), X, 2), DimensionError);
}
