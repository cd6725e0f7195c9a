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


#ifndef SPARSEDOA_GREEDY_HPP
#define SPARSEDOA_GREEDY_HPP

#include "numerics.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace sdoa
{
    struct GreedyResult
    {
        IndexSet support;        // sorted
        IndexSet selection;      // OMP: order of selection; CoSaMP: final support as pruned
        ComplexVector beta;      // length p, zero off the support
        std::vector<double> residual_norms; // ||y - X beta|| after each iteration
        int iterations = 0;
        bool converged = true;   // CoSaMP: support stopped changing before max_iter
    };

    namespace detail
    {
        inline void check_greedy(const ComplexVector &y, const ComplexMatrix &X, Index K, const char *who)
        {
            require_same_length(X.rows(), y.size(), who);
            require_finite(X, who);
            require_finite(y, who);
            if (K < 1 || K >= X.rows() || K > X.cols())
                throw DomainError(std::string(who) + ": need 1 <= K < n and K <= p");
        }

        // Indices of the `count` largest |u_j|, larger first, ties to the lower index.
        inline IndexSet largest(const RealVector &mag, Index count)
        {
            IndexSet idx(static_cast<std::size_t>(mag.size()));
            std::iota(idx.begin(), idx.end(), Index{0});
            count = std::min<Index>(count, mag.size());
            std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) { return mag[a] > mag[b]; });
            idx.resize(static_cast<std::size_t>(count));
            return idx;
        }

        inline ComplexVector scatter(const ComplexVector &coef, const IndexSet &cols, Index p)
        {
            ComplexVector out = ComplexVector::Zero(p);
            for (std::size_t a = 0; a < cols.size(); ++a)
                out[cols[a]] = coef[static_cast<Index>(a)];
            return out;
        }
    } // namespace detail

    // Orthogonal matching pursuit: K rounds of max-|correlation| selection with a least-squares refit.
    inline GreedyResult omp(const ComplexVector &y, const ComplexMatrix &X, Index K)
    {
        detail::check_greedy(y, X, K, "omp");
        const Index p = X.cols();
        GreedyResult out;
        std::vector<char> taken(static_cast<std::size_t>(p), 0);
        ComplexVector r = y;
        ComplexVector coef;
        for (Index t = 0; t < K; ++t)
        {
            const ComplexVector c = X.adjoint() * r;
            Index pick = -1;
            double best = -1.0;
            for (Index j = 0; j < p; ++j)
            {
                if (taken[static_cast<std::size_t>(j)])
                    continue;
                const double m = std::abs(c[j]);
                if (m > best)
                {
                    best = m;
                    pick = j;
                }
            }
            taken[static_cast<std::size_t>(pick)] = 1;
            out.selection.push_back(pick);
            const ComplexMatrix XS = select_columns(X, out.selection);
            coef = least_squares(XS, y);
            r = y - XS * coef;
            out.residual_norms.push_back(r.norm());
            ++out.iterations;
        }
        out.support = sorted(out.selection);
        out.beta = detail::scatter(coef, out.selection, p);
        return out;
    }

    // CoSaMP: merge the 2K strongest residual correlations with the current support, fit by least
    // squares, prune to the K largest. Stops when the support repeats or after max_iter rounds.
    // No residual-based stop, so a diverging run is returned as it is.
    inline GreedyResult cosamp(const ComplexVector &y, const ComplexMatrix &X, Index K, int max_iter = 50)
    {
        detail::check_greedy(y, X, K, "cosamp");
        if (max_iter < 1)
            throw DomainError("cosamp: max_iter must be at least 1");
        const Index p = X.cols();
        GreedyResult out;
        out.converged = false;
        out.beta = ComplexVector::Zero(p);
        ComplexVector r = y;
        IndexSet support;
        for (int it = 0; it < max_iter; ++it)
        {
            const ComplexVector u = X.adjoint() * r;
            IndexSet merged = detail::largest(u.cwiseAbs(), 2 * K);
            merged.insert(merged.end(), support.begin(), support.end());
            merged = sorted(merged);
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

            const ComplexVector b = least_squares_on(X, merged, y);
            const IndexSet keep = detail::largest(b.cwiseAbs(), K);
            IndexSet next;
            ComplexVector coef(K);
            for (std::size_t a = 0; a < keep.size(); ++a)
            {
                next.push_back(merged[static_cast<std::size_t>(keep[a])]);
                coef[static_cast<Index>(a)] = b[keep[a]];
            }
            out.selection = next;
            out.beta = detail::scatter(coef, next, p);
            r = y - X * out.beta;
            out.residual_norms.push_back(r.norm());
            ++out.iterations;

            next = sorted(next);
            const bool same = next == support;
            support = std::move(next);
            if (same)
            {
                out.converged = true;
                break;
            }
        }
        out.support = support;
        return out;
    }

} // namespace sdoa

#endif
