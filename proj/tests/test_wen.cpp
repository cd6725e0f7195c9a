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
#include <sparsedoa/wen.hpp>

#include <catch_amalgamated.hpp>

using namespace sdoa;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("alpha grid validation")
{
    const AlphaGrid g = AlphaGrid::standard();
    REQUIRE(g.size() == 20);
    CHECK(g.values().front() == 1.0);
    CHECK_THAT(g.values().back(), WithinAbs(0.05, 1e-15));
    CHECK(AlphaGrid::lasso().size() == 1);
    CHECK_NOTHROW(AlphaGrid({1.0, 0.5, 0.01}));
    CHECK_THROWS_AS(AlphaGrid({0.9, 0.5}), ConfigError);
    CHECK_THROWS_AS(AlphaGrid({1.0, 0.5, 0.5}), ConfigError);
    CHECK_THROWS_AS(AlphaGrid({1.0, 0.5, 0.7}), ConfigError);
    CHECK_THROWS_AS(AlphaGrid({1.0, 0.0}), ConfigError);
    CHECK_THROWS_AS(AlphaGrid(std::vector<double>{}), ConfigError);
}

TEST_CASE("augmented design shape")
{
    const ComplexMatrix X = build_grid(1.0, 40).X;
    const AugmentedDesign a = augment(X, 0.3);
    CHECK(a.X.rows() == 220);
    CHECK(a.X.cols() == 180);
    CHECK_THAT(a.X(40 + 7, 7).real(), WithinAbs(std::sqrt(0.3), 1e-15));
    const AugmentedDesign z = augment(X, 0.0);
    CHECK(z.X.bottomRows(180).isZero());
    const ComplexVector ya = z.response(ComplexVector::Ones(40));
    CHECK(ya.size() == 220);
    CHECK(ya.tail(180).isZero());
    CHECK_THROWS_AS(augment(X, -1.0), DomainError);
    CHECK_THROWS_AS(a.response(ComplexVector::Ones(39)), DimensionError);
}

TEST_CASE("EN objective equals the augmented Lasso objective")
{
    std::mt19937_64 rng(31);
    const ComplexMatrix X = oracle::random_complex(10, 20, rng);
    const ComplexVector y = oracle::random_complex(10, rng);
    const double lambda = 0.3, alpha = 0.5;
    const AugmentedDesign a = augment(X, lambda * (1 - alpha));
    const ComplexVector ya = a.response(y);
    for (int rep = 0; rep < 100; ++rep)
    {
        const ComplexVector b = oracle::random_complex(20, rng);
        CHECK_THAT(en_objective(y, X, b, lambda, alpha),
                   WithinAbs(lasso_objective(ya, a.X, b, lambda * alpha), 1e-10));
    }
}

TEST_CASE("alpha = 1 alone reproduces the weighted Lasso K-th knot")
{
    std::mt19937_64 rng(32);
    const ComplexMatrix X = oracle::random_complex(12, 30, rng);
    const ComplexVector y = oracle::random_complex(12, rng);
    WeightVector w(30);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (Index j = 0; j < 30; ++j)
        w[j] = u(rng);
    const KnotPath P = c_lars_wlasso(y, X, w, 4);
    const WenSolution s = c_pw_wen(y, X, w, AlphaGrid::lasso(), 4, false);
    CHECK(s.alpha_selected == 1.0);
    CHECK(s.lambda_K == P.knots.back());
    CHECK(s.beta == P.solutions.back());
    CHECK(s.active_set == sorted(P.active_sets.back()));
    CHECK_FALSE(s.debiased);
}

TEST_CASE("per-alpha solutions match the proximal EN oracle")
{
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 6; ++rep)
    {
        const ComplexMatrix X = oracle::random_complex(10, 30, rng);
        const ComplexVector y = oracle::random_complex(10, rng);
        const bool weighted = rep % 2 == 1;
        WeightVector w = WeightVector::Ones(30);
        if (weighted)
        {
            std::uniform_real_distribution<double> u(0.5, 2.0);
            for (Index j = 0; j < 30; ++j)
                w[j] = u(rng);
        }
        const WenSolution s = c_pw_wen(y, X, w, AlphaGrid({1.0, 0.9, 0.5}), 3, false);
        for (const AlphaRecord &rec : s.path)
        {
            REQUIRE_FALSE(rec.stalled);
            REQUIRE(rec.lambdas.size() == 3);
            CHECK_THAT(rec.lambdas.back() * rec.alpha, WithinRel(rec.gamma_K, 1e-12));
            // transformed problem: l1 weights w, ridge eta * w^2
            const oracle::RVec ridge = rec.eta_K * w.array().square();
            const auto ref = oracle::prox_gradient(y, X, w, ridge, rec.gamma_K);
            REQUIRE(ref.stationarity < 1e-9);
            CHECK(oracle::relative_error(rec.beta, ref.beta) < 1e-6);
        }
    }
}

TEST_CASE("alpha selection minimises the least-squares RSS")
{
    std::mt19937_64 rng(34);
    const ComplexMatrix X = oracle::random_complex(15, 40, rng);
    const ComplexVector y = oracle::random_complex(15, rng);
    const WenSolution s = c_pw_wen(y, X, AlphaGrid::standard(), 4, true);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &rec : s.path)
    {
        if (rec.stalled)
            continue;
        CHECK(rec.active.size() == 4);
        CHECK(rec.rss >= 0.0);
        // RSS recomputed with the normal-equations oracle
        const ComplexMatrix XA = select_columns(X, rec.active);
        CHECK_THAT(rec.rss, WithinAbs((y - XA * oracle::normal_equations(XA, y)).squaredNorm(), 1e-10));
        best = std::min(best, rec.rss);
    }
    CHECK_THAT(s.rss, WithinAbs(best, 1e-12 * y.squaredNorm()));
    CHECK(s.active_set.size() == 4);
    CHECK(s.debiased);

    // debiased coefficients solve the least-squares problem on the active set
    const ComplexMatrix XA = select_columns(X, s.active_set);
    const ComplexVector ls = oracle::normal_equations(XA, y);
    for (std::size_t a = 0; a < s.active_set.size(); ++a)
        CHECK(std::abs(s.beta[s.active_set[a]] - ls[static_cast<Index>(a)]) < 1e-10);
    for (Index j = 0; j < 40; ++j)
        if (std::find(s.active_set.begin(), s.active_set.end(), j) == s.active_set.end())
            CHECK(s.beta[j] == cplx(0.0));
}

TEST_CASE("debias off returns the knot solution of the selected alpha")
{
    std::mt19937_64 rng(35);
    const ComplexMatrix X = oracle::random_complex(15, 40, rng);
    const ComplexVector y = oracle::random_complex(15, rng);
    const WenSolution s = c_pw_wen(y, X, AlphaGrid::standard(), 3, false);
    const auto it = std::find_if(s.path.begin(), s.path.end(), [&](const AlphaRecord &r) { return r.alpha == s.alpha_selected; });
    REQUIRE(it != s.path.end());
    CHECK(s.beta == it->beta);
}

TEST_CASE("orthonormal design: debiased solution is X_A^H y")
{
    std::mt19937_64 rng(36);
    const ComplexMatrix X = oracle::random_orthonormal(20, 12, rng);
    const ComplexVector y = oracle::random_complex(20, rng);
    const WenSolution s = c_pw_wen(y, X, AlphaGrid({1.0, 0.7, 0.3}), 4, true);
    const ComplexVector c = X.adjoint() * y;
    for (Index j : s.active_set)
        CHECK(std::abs(s.beta[j] - c[j]) < 1e-12);
}

TEST_CASE("every alpha stalling is an error")
{
    std::mt19937_64 rng(37);
    const ComplexMatrix X = oracle::random_complex(8, 20, rng);
    CHECK_THROWS_AS(c_pw_wen(ComplexVector::Zero(8), X, AlphaGrid::standard(), 2, true), StallError);
    CHECK_THROWS_AS(c_pw_wen(ComplexVector::Ones(8), X, AlphaGrid::standard(), 0, true), DomainError);
}

TEST_CASE("predictor mode on a CBF snapshot")
{
    const Scenario sc = preset(2);
    const SteeringGrid g = build_grid(sc);
    Rng rng(stream_seed(5, 0));
    const Snapshot snap = generate_snapshot(sc, g, 20.0, rng);
    const WenSolution s = c_pw_wen(snap.y, g.X, AlphaGrid::standard(), 2, true, LarsOptions{PathMode::predictor});
    CHECK(s.active_set.size() == 2);
    CHECK(s.path.size() == 20);
}
