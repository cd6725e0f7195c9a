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


#ifndef SPARSEDOA_WEN_HPP
#define SPARSEDOA_WEN_HPP

#include "lars.hpp"
#include "numerics.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace sdoa
{
    // EN mixing values, stored decreasing: 1 = alpha_1 > alpha_2 > ... > alpha_m > 0.
    class AlphaGrid
    {
    public:
        explicit AlphaGrid(std::vector<double> values) : values_(std::move(values))
        {
            if (values_.empty() || values_.front() != 1.0)
                throw ConfigError("alpha grid must start at exactly 1");
            for (std::size_t i = 1; i < values_.size(); ++i)
                if (!(values_[i] < values_[i - 1]) || !(values_[i] > 0.0))
                    throw ConfigError("alpha grid must be strictly decreasing inside (0, 1]");
        }

        // {1.00, 0.95, ..., 0.05}
        static AlphaGrid standard()
        {
            std::vector<double> v;
            for (int i = 20; i >= 1; --i)
                v.push_back(i / 20.0);
            return AlphaGrid(std::move(v));
        }

        static AlphaGrid lasso() { return AlphaGrid({1.0}); }

        const std::vector<double> &values() const { return values_; }
        std::size_t size() const { return values_.size(); }

    private:
        std::vector<double> values_;
    };

    struct AugmentedDesign
    {
        ComplexMatrix X; // [X; sqrt(eta) I_p], (n + p) x p
        Index original_rows = 0;

        // [y; 0_p]
        ComplexVector response(const ComplexVector &y) const
        {
            require_same_length(y.size(), original_rows, "augmented response");
            ComplexVector ya = ComplexVector::Zero(X.rows());
            ya.head(original_rows) = y;
            return ya;
        }
    };

    // With gamma = lambda*alpha and eta = lambda*(1 - alpha), the EN objective on (y, X) equals
    // the Lasso objective with penalty gamma on ([y; 0], [X; sqrt(eta) I]).
    inline AugmentedDesign augment(const ComplexMatrix &X, double eta)
    {
        if (!(eta >= 0.0))
            throw DomainError("augment: eta must be nonnegative");
        const Index n = X.rows();
        const Index p = X.cols();
        AugmentedDesign out;
        out.original_rows = n;
        out.X = ComplexMatrix::Zero(n + p, p);
        out.X.topRows(n) = X;
        out.X.bottomRows(p).diagonal().setConstant(std::sqrt(eta));
        return out;
    }

    // 1/2 ||y - X b||^2 + lambda * sum_j (alpha |b_j| + (1 - alpha)/2 |b_j|^2)
    inline double en_objective(const ComplexVector &y, const ComplexMatrix &X, const ComplexVector &beta,
                               double lambda, double alpha)
    {
        const double fit = 0.5 * (y - X * beta).squaredNorm();
        return fit + lambda * (alpha * beta.cwiseAbs().sum() + 0.5 * (1.0 - alpha) * beta.squaredNorm());
    }

    inline double lasso_objective(const ComplexVector &y, const ComplexMatrix &X, const ComplexVector &beta,
                                  double gamma)
    {
        return 0.5 * (y - X * beta).squaredNorm() + gamma * beta.cwiseAbs().sum();
    }

    // Result of the homotopy at one alpha of the grid.
    struct AlphaRecord
    {
        double alpha = 1.0;
        std::vector<double> lambdas; // lambda_k(alpha), k = 1..reached
        bool stalled = false;
        double gamma_K = std::numeric_limits<double>::quiet_NaN(); // l1 level of the K-th knot
        double eta_K = std::numeric_limits<double>::quiet_NaN();   // ridge level used for the K-th knot
        ComplexVector beta;   // knot solution at lambda_K
        IndexSet active;      // A_K in entry order
        double rss = std::numeric_limits<double>::quiet_NaN();
        std::string note;
    };

    struct WenSolution
    {
        ComplexVector beta;
        IndexSet active_set; // sorted, K indices
        double alpha_selected = std::numeric_limits<double>::quiet_NaN();
        double lambda_K = std::numeric_limits<double>::quiet_NaN();
        double rss = std::numeric_limits<double>::quiet_NaN();
        bool debiased = false;
        std::vector<AlphaRecord> path;
        std::vector<std::string> warnings;
    };

    // ||y - X_A X_A^+ y||^2
    inline double debiased_rss(const ComplexVector &y, const ComplexMatrix &X, const IndexSet &active)
    {
        return residual_sum_of_squares(select_columns(X, active), y);
    }

    // K-sparse weighted elastic net over an alpha grid.
    //
    // alpha_1 = 1 is the weighted Lasso path. For each following alpha_i and k = 1..K the homotopy
    // runs on the augmented design with ridge eta_k = lambda_k(alpha_{i-1}) * (1 - alpha_i) and its
    // k-th knot gamma_k gives lambda_k(alpha_i) = gamma_k / alpha_i. Each alpha's K-sparse active set
    // is scored by the RSS of its least-squares refit; the smallest RSS wins (ties: larger alpha).
    // The weight transform X diag(w)^{-1} is applied before augmentation.
    inline WenSolution c_pw_wen(const ComplexVector &y, const ComplexMatrix &X, const WeightVector &w,
                                const AlphaGrid &alphas, Index K, bool debias, const LarsOptions &opt = {})
    {
        if (K < 1)
            throw DomainError("c_pw_wen: K must be positive");
        const WeightedDesign design(y, X, &w);

        WenSolution out;
        out.path.reserve(alphas.size());
        Index best_reach = 0;
        for (std::size_t i = 0; i < alphas.size(); ++i)
        {
            AlphaRecord rec;
            rec.alpha = alphas.values()[i];
            if (i == 0)
            {
                const KnotPath P = design.to_original(detail::lars_path(design.view(), K, opt));
                for (Index k = 1; k <= P.reached(); ++k)
                    rec.lambdas.push_back(P.knots[static_cast<std::size_t>(k)]);
                if (!P.complete())
                {
                    rec.stalled = true;
                    rec.note = P.diagnostics;
                }
                else
                {
                    rec.gamma_K = P.knots.back();
                    rec.eta_K = 0.0;
                    rec.beta = P.solutions.back();
                    rec.active = P.active_sets.back();
                }
            }
            else
            {
                const std::vector<double> &prev = out.path.back().lambdas;
                if (prev.empty())
                {
                    rec.stalled = true;
                    rec.note = "previous alpha produced no knots";
                }
                for (Index k = 1; k <= K && !rec.stalled; ++k)
                {
                    // A previous path that stopped early lends its last knot.
                    const double lam_prev = static_cast<std::size_t>(k) <= prev.size()
                                                ? prev[static_cast<std::size_t>(k - 1)]
                                                : prev.back();
                    const double eta = lam_prev * (1.0 - rec.alpha);
                    KnotPath P = detail::lars_path(design.view(eta), k, opt);
                    if (!P.complete())
                    {
                        rec.stalled = true;
                        rec.note = "knot " + std::to_string(k) + ": " + P.diagnostics;
                        break;
                    }
                    rec.lambdas.push_back(P.knots.back() / rec.alpha);
                    if (k == K)
                    {
                        P = design.to_original(std::move(P));
                        rec.gamma_K = P.knots.back();
                        rec.eta_K = eta;
                        rec.beta = P.solutions.back();
                        rec.active = P.active_sets.back();
                    }
                }
            }
            best_reach = std::max(best_reach, static_cast<Index>(rec.lambdas.size()));
            if (rec.stalled)
                out.warnings.push_back("alpha " + std::to_string(rec.alpha) + " skipped: " + rec.note);
            else
                rec.rss = debiased_rss(y, X, rec.active);
            out.path.push_back(std::move(rec));
        }

        // RSS differences below this are rounding noise and count as ties.
        const double tie = 1e-12 * y.squaredNorm();
        const AlphaRecord *best = nullptr;
        for (const auto &rec : out.path)
            if (!rec.stalled && (best == nullptr || rec.rss < best->rss - tie))
                best = &rec;
        if (best == nullptr)
        {
            std::string msg = "c_pw_wen: every alpha stalled before knot " + std::to_string(K);
            for (const auto &wmsg : out.warnings)
                msg += "; " + wmsg;
            throw StallError(msg, best_reach);
        }

        out.alpha_selected = best->alpha;
        out.lambda_K = best->lambdas.back();
        out.rss = best->rss;
        out.active_set = sorted(best->active);
        out.beta = best->beta;
        if (debias)
        {
            const ComplexVector ls = least_squares_on(X, out.active_set, y);
            out.beta.setZero();
            for (std::size_t a = 0; a < out.active_set.size(); ++a)
                out.beta[out.active_set[a]] = ls[static_cast<Index>(a)];
            out.debiased = true;
        }
        return out;
    }

    inline WenSolution c_pw_wen(const ComplexVector &y, const ComplexMatrix &X, const AlphaGrid &alphas, Index K,
                                bool debias, const LarsOptions &opt = {})
    {
        return c_pw_wen(y, X, WeightVector::Ones(X.cols()), alphas, K, debias, opt);
    }

} // namespace sdoa

#endif
