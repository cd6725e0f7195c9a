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


// Knots of the complex weighted-Lasso homotopy on a small random problem, in both path modes,
// with the worst KKT violation at each knot.

#include <sparsedoa/lars.hpp>

#include <cstdio>
#include <random>

namespace
{
    // max over active |<x_j, r>| - lambda w_j phase mismatch, and inactive excess
    double kkt_gap(const sdoa::ComplexVector &y, const sdoa::ComplexMatrix &X, const sdoa::WeightVector &w,
                   const sdoa::ComplexVector &beta, double lambda)
    {
        const sdoa::ComplexVector c = X.adjoint() * (y - X * beta);
        double worst = 0.0;
        for (sdoa::Index j = 0; j < X.cols(); ++j)
        {
            if (beta[j] != sdoa::cplx(0.0))
                worst = std::max(worst, std::abs(c[j] - lambda * w[j] * beta[j] / std::abs(beta[j])));
            else
                worst = std::max(worst, std::abs(c[j]) - lambda * w[j]);
        }
        return worst / lambda;
    }
} // namespace

int main()
{
    const sdoa::Index n = 12;
    const sdoa::Index p = 30;
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0.0, 1.0);
    sdoa::ComplexMatrix X(n, p);
    for (sdoa::Index i = 0; i < n; ++i)
        for (sdoa::Index j = 0; j < p; ++j)
            X(i, j) = sdoa::cplx(g(rng), g(rng));
    sdoa::ComplexVector y(n);
    for (sdoa::Index i = 0; i < n; ++i)
        y[i] = sdoa::cplx(g(rng), g(rng));
    sdoa::WeightVector w(p);
    for (sdoa::Index j = 0; j < p; ++j)
        w[j] = 0.5 + std::abs(g(rng));

    const int K = 6;
    for (auto mode : {sdoa::PathMode::exact, sdoa::PathMode::predictor})
    {
        const sdoa::KnotPath P = sdoa::c_lars_wlasso(y, X, w, K, sdoa::LarsOptions{mode});
        std::printf("%s mode\n   k      lambda_k   entering   relative KKT gap\n",
                    mode == sdoa::PathMode::exact ? "exact" : "predictor");
        for (std::size_t k = 1; k < P.knots.size(); ++k)
            std::printf("%4zu  %12.6f  %9ld  %16.3e\n", k, P.knots[k], static_cast<long>(P.active_sets[k].back()),
                        kkt_gap(y, X, w, P.solutions[k], P.knots[k]));
    }
    return 0;
}
