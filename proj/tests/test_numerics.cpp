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

#include <sparsedoa/numerics.hpp>

#include <catch_amalgamated.hpp>

using namespace sdoa;
using Catch::Matchers::WithinAbs;

TEST_CASE("hermitian inner product conjugates the left argument")
{
    ComplexVector a(2), b(2);
    a << cplx(0, 1), cplx(2, 0);
    b << cplx(1, 0), cplx(0, 1);
    // conj(i)*1 + 2*i = -i + 2i = i
    const cplx v = hermitian_inner(a, b);
    CHECK_THAT(v.real(), WithinAbs(0.0, 1e-15));
    CHECK_THAT(v.imag(), WithinAbs(1.0, 1e-15));
    CHECK_THROWS_AS(hermitian_inner(a, ComplexVector(3)), DimensionError);
}

TEST_CASE("least squares agrees with the normal equations on full-rank systems")
{
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep)
    {
        const ComplexMatrix X = oracle::random_complex(20, 6, rng);
        const ComplexVector y = oracle::random_complex(20, rng);
        const ComplexVector b = least_squares(X, y);
        CHECK(oracle::relative_error(b, oracle::normal_equations(X, y)) < 1e-10);
        // residual orthogonal to the columns
        CHECK((X.adjoint() * (y - X * b)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK_THAT(residual_sum_of_squares(X, y), WithinAbs((y - X * b).squaredNorm(), 1e-10));
    }
}

TEST_CASE("least squares returns the minimum-norm solution when columns repeat")
{
    std::mt19937_64 rng(6);
    const ComplexVector x = oracle::random_complex(8, rng);
    ComplexMatrix X(8, 2);
    X.col(0) = x;
    X.col(1) = x;
    const ComplexVector b = least_squares(X, x);
    CHECK(std::abs(b[0] - cplx(0.5)) < 1e-12);
    CHECK(std::abs(b[1] - cplx(0.5)) < 1e-12);
    CHECK(residual_sum_of_squares(X, x) < 1e-20);
}

TEST_CASE("underdetermined least squares is X^H (X X^H)^-1 y")
{
    std::mt19937_64 rng(7);
    const ComplexMatrix X = oracle::random_complex(6, 15, rng);
    const ComplexVector y = oracle::random_complex(6, rng);
    const ComplexMatrix XXh = X * X.adjoint();
    const ComplexVector ref = X.adjoint() * XXh.ldlt().solve(y);
    CHECK(oracle::relative_error(least_squares(X, y), ref) < 1e-10);
}

TEST_CASE("least squares edge cases")
{
    const ComplexVector y = ComplexVector::Ones(4);
    CHECK(least_squares(ComplexMatrix(4, 0), y).size() == 0);
    CHECK_THAT(residual_sum_of_squares(ComplexMatrix(4, 0), y), WithinAbs(4.0, 1e-15));
    CHECK_THROWS_AS(least_squares(ComplexMatrix::Ones(3, 2), y), DimensionError);
}

TEST_CASE("column selection keeps the requested order")
{
    ComplexMatrix X(2, 3);
    X << 1, 2, 3, 4, 5, 6;
    const ComplexMatrix S = select_columns(X, {2, 0});
    CHECK(S(0, 0) == cplx(3));
    CHECK(S(1, 1) == cplx(4));
    std::mt19937_64 rng(8);
    const ComplexMatrix Z = oracle::random_complex(10, 5, rng);
    const ComplexVector y = oracle::random_complex(10, rng);
    const ComplexVector on = least_squares_on(Z, {4, 1}, y);
    ComplexMatrix Z2(10, 2);
    Z2.col(0) = Z.col(4);
    Z2.col(1) = Z.col(1);
    CHECK(oracle::relative_error(on, oracle::normal_equations(Z2, y)) < 1e-10);
}

TEST_CASE("column normalisation round trip")
{
    std::mt19937_64 rng(9);
    const ComplexMatrix X = oracle::random_complex(7, 4, rng) * 3.0;
    const NormalizedColumns nc = normalize_columns(X);
    for (Index j = 0; j < 4; ++j)
        CHECK_THAT(nc.X.col(j).norm(), WithinAbs(1.0, 1e-14));
    CHECK((rescale_columns(nc.X, nc.scales) - X).cwiseAbs().maxCoeff() < 1e-13);

    ComplexMatrix bad = X;
    bad.col(2).setZero();
    CHECK_THROWS_AS(normalize_columns(bad), DomainError);
}
