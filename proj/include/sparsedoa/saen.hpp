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


#ifndef SPARSEDOA_SAEN_HPP
#define SPARSEDOA_SAEN_HPP

#include "wen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace sdoa
{
    // w_j = 1/|beta_j| on the support, infinity elsewhere and for exact zeros.
    inline WeightVector adaptive_weights(const ComplexVector &beta, const IndexSet &support)
    {
        WeightVector w = WeightVector::Constant(beta.size(), std::numeric_limits<double>::infinity());
        for (Index j : support)
        {
            if (j < 0 || j >= beta.size())
                throw DimensionError("adaptive_weights: support index out of range");
            const double m = std::abs(beta[j]);
            if (m > 0.0)
                w[j] = 1.0 / m;
        }
        return w;
    }

    namespace detail
    {
        inline Index count_finite(const WeightVector &w)
        {
            return static_cast<Index>(w.array().isFinite().count());
        }

        // Least-squares fit on a support, packaged as a stage result. Used when y is fit exactly.
        inline WenSolution support_fit(const ComplexVector &y, const ComplexMatrix &X, const IndexSet &support,
                                       const std::string &note)
        {
            WenSolution s;
            s.active_set = sorted(support);
            s.beta = ComplexVector::Zero(X.cols());
            const ComplexVector b = least_squares_on(X, s.active_set, y);
            for (std::size_t a = 0; a < s.active_set.size(); ++a)
                s.beta[s.active_set[a]] = b[static_cast<Index>(a)];
            s.rss = (y - X * s.beta).squaredNorm();
            s.debiased = true;
            s.warnings.push_back(note);
            return s;
        }

        // The homotopy also stops early when y lies exactly in the span of the active columns plus the
        // one entering at the last knot: the final segment then runs down to lambda = 0. Returns that
        // support when its least-squares residual vanishes, an empty set otherwise.
        inline IndexSet exact_fit_support(const ComplexVector &y, const ComplexMatrix &X, const WeightVector &w,
                                          Index reached, const LarsOptions &opt)
        {
            const KnotPath P = c_lars_wlasso(y, X, w, reached + 1, opt);
            if (P.next_entering < 0 || P.active_sets.empty())
                return {};
            IndexSet A = P.active_sets.back();
            A.push_back(P.next_entering);
            const double rss = residual_sum_of_squares(select_columns(X, A), y);
            return rss <= 1e-20 * y.squaredNorm() ? sorted(A) : IndexSet{};
        }

        // One c-PW-WEN stage aiming at `target` knots. A stall caused by an exact fit returns that fit;
        // any other stall that still reaches at least `least` knots is retried at the reached depth.
        // Anything shorter is reported against `stage`.
        inline WenSolution wen_stage(const ComplexVector &y, const ComplexMatrix &X, const WeightVector &w,
                                     const AlphaGrid &alphas, Index target, Index least, bool debias,
                                     const LarsOptions &opt, const std::string &stage)
        {
            try
            {
                return c_pw_wen(y, X, w, alphas, target, debias, opt);
            }
            catch (const StallError &e)
            {
                if (e.reached() + 1 >= least && e.reached() < target)
                {
                    const IndexSet A = exact_fit_support(y, X, w, e.reached(), opt);
                    if (!A.empty())
                        return support_fit(y, X, A,
                                           stage + ": path ends in an exact fit on " + std::to_string(A.size()) +
                                               " columns");
                }
                if (e.reached() >= least && e.reached() < target)
                {
                    WenSolution s = c_pw_wen(y, X, w, alphas, e.reached(), debias, opt);
                    s.warnings.push_back(stage + ": stalled, continued with " + std::to_string(e.reached()) +
                                         " instead of " + std::to_string(target) + " components");
                    return s;
                }
                throw StallError(stage + ": " + e.what(), e.reached());
            }
            catch (const DomainError &e)
            {
                throw DomainError(stage + ": " + e.what());
            }
        }
    } // namespace detail

    struct SaenTrace
    {
        std::array<IndexSet, 3> stage_supports; // sizes 3K, 2K, K unless a stage stalled
        std::array<WeightVector, 2> stage_weights;
        WenSolution final;
        std::vector<std::string> warnings;
    };

    // Sequential adaptive elastic net: c-PW-WEN at 3K with unit weights, then at 2K and K with weights
    // 1/|beta| from the previous stage (infinite off its support). The last stage is debiased.
    inline SaenTrace saen(const ComplexVector &y, const ComplexMatrix &X, const AlphaGrid &alphas, Index K,
                          const LarsOptions &opt = {})
    {
        if (K < 1)
            throw DomainError("saen: K must be positive");
        if (3 * K >= std::min(X.rows(), X.cols()))
            throw DomainError("saen: 3K = " + std::to_string(3 * K) + " must be below min(n, p) = " +
                              std::to_string(std::min(X.rows(), X.cols())));

        SaenTrace trace;
        const WenSolution init = detail::wen_stage(y, X, WeightVector::Ones(X.cols()), alphas, 3 * K, K, false,
                                                   opt, "SAEN stage 1");
        trace.stage_supports[0] = init.active_set;
        trace.stage_weights[0] = adaptive_weights(init.beta, init.active_set);

        // later stages must stay strictly below the number of columns carried over
        Index carried = detail::count_finite(trace.stage_weights[0]);
        WenSolution mid;
        if (carried > K + 1)
        {
            const Index k2 = std::min(2 * K, carried - 1);
            mid = detail::wen_stage(y, X, trace.stage_weights[0], alphas, k2, K, false, opt, "SAEN stage 2");
            trace.stage_supports[1] = mid.active_set;
            trace.stage_weights[1] = adaptive_weights(mid.beta, mid.active_set);
        }
        else
        {
            if (carried < K)
                throw StallError("SAEN stage 2: only " + std::to_string(carried) + " usable columns after stage 1",
                                 carried);
            mid.warnings.push_back("SAEN stage 2: skipped, stage 1 kept " + std::to_string(carried) + " columns");
            trace.stage_supports[1] = trace.stage_supports[0];
            trace.stage_weights[1] = trace.stage_weights[0];
        }

        carried = detail::count_finite(trace.stage_weights[1]);
        if (carried > K)
            trace.final = detail::wen_stage(y, X, trace.stage_weights[1], alphas, K, K, true, opt, "SAEN stage 3");
        else if (carried == K)
            trace.final = detail::support_fit(y, X, trace.stage_supports[1],
                                              "SAEN stage 3: exact fit on " + std::to_string(K) +
                                                  " columns, least-squares coefficients");
        else
            throw StallError("SAEN stage 3: only " + std::to_string(carried) + " usable columns after stage 2",
                             carried);
        trace.stage_supports[2] = trace.final.active_set;

        for (const WenSolution *s : std::array<const WenSolution *, 3>{&init, &mid, &trace.final})
            trace.warnings.insert(trace.warnings.end(), s->warnings.begin(), s->warnings.end());
        return trace;
    }

    enum class AenKind
    {
        lse,      // weights from the minimum-norm least-squares fit
        n,        // weights from an n-sparse EN solution
        three_k,  // weights from SAEN's first stage, then straight to K
    };

    // One-shot adaptive EN: a single weighting followed by a debiased K-sparse c-PW-WEN solve.
    // The initial support (empty for lse) is returned through `initial_support` when given.
    inline WenSolution aen_variant(const ComplexVector &y, const ComplexMatrix &X, const AlphaGrid &alphas,
                                   Index K, AenKind kind, const LarsOptions &opt = {},
                                   IndexSet *initial_support = nullptr)
    {
        if (K < 1)
            throw DomainError("aen_variant: K must be positive");
        const Index n = X.rows();
        const Index p = X.cols();
        WeightVector w;
        IndexSet init_support;
        switch (kind)
        {
        case AenKind::lse:
        {
            const ComplexVector b = least_squares(X, y);
            init_support.resize(static_cast<std::size_t>(p));
            for (Index j = 0; j < p; ++j)
                init_support[static_cast<std::size_t>(j)] = j;
            w = adaptive_weights(b, init_support);
            break;
        }
        case AenKind::n:
        {
            if (n >= p)
                throw DomainError("AEN(n) needs more columns than measurements");
            const WenSolution s = detail::wen_stage(y, X, WeightVector::Ones(p), alphas, n, K, false, opt,
                                                    "AEN(n) initial stage");
            init_support = s.active_set;
            w = adaptive_weights(s.beta, s.active_set);
            break;
        }
        case AenKind::three_k:
        {
            if (3 * K >= std::min(n, p))
                throw DomainError("AEN(3K): 3K must be below min(n, p)");
            const WenSolution s = detail::wen_stage(y, X, WeightVector::Ones(p), alphas, 3 * K, K, false,
                                                    opt, "AEN(3K) initial stage");
            init_support = s.active_set;
            w = adaptive_weights(s.beta, s.active_set);
            break;
        }
        }
        const Index carried = detail::count_finite(w);
        if (carried == K && kind != AenKind::lse)
        {
            if (initial_support != nullptr)
                *initial_support = init_support;
            return detail::support_fit(y, X, init_support, "adaptive EN: exact fit on the initial support");
        }
        if (carried <= K)
            throw StallError("adaptive EN: only " + std::to_string(carried) + " usable columns for K = " +
                                 std::to_string(K),
                             carried);
        if (initial_support != nullptr)
            *initial_support = std::move(init_support);
        return detail::wen_stage(y, X, w, alphas, K, K, true, opt, "adaptive EN final stage");
    }

} // namespace sdoa

#endif
