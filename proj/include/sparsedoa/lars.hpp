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


#ifndef SPARSEDOA_LARS_HPP
#define SPARSEDOA_LARS_HPP

// Complex-valued LARS homotopy for the weighted Lasso
//
//     minimize  1/2 ||y - X b||^2 + lambda * sum_j w_j |b_j|
//
// The path starts at lambda_0 = max_j |<x_j, y>| / w_j with b = 0 and admits one column per knot.
// Between knots the coefficients move along the equiangular direction
// delta = (1/lambda) (X_A^H X_A)^{-1} X_A^H r, and the next knot is the smallest positive root of
// |c_l - gamma b_l| = lambda - gamma over inactive columns l (see next_knot()).
//
// Complex paths are not piecewise linear, so in PathMode::exact each predicted knot is refined:
// the restricted Lasso on the active set is solved exactly (Newton on the stationarity equations)
// and the knot is moved to the root of max_l |<x_l, r(lambda)>| - lambda. PathMode::predictor
// keeps the linear step only.

#include "common.hpp"
#include "numerics.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sdoa
{
    enum class PathMode
    {
        exact,
        predictor
    };

    struct LarsOptions
    {
        PathMode mode = PathMode::exact;
        double root_floor = 1e-12; // gamma must exceed root_floor * lambda_prev
        double knot_floor = 1e-12; // knots at or below knot_floor * lambda_0 count as a stall
    };

    struct KnotPath
    {
        std::vector<double> knots;            // lambda_0 > lambda_1 > ... > lambda_K > 0
        std::vector<ComplexVector> solutions; // coefficients at each knot, original coordinates
        std::vector<IndexSet> active_sets;    // active_sets[k] holds k indices in entry order
        Index next_entering = -1;             // column that becomes active at the last knot
        Index requested = 0;
        bool truncated = false;       // no admissible knot before reaching `requested`
        bool ill_conditioned = false; // an active Gram matrix needed regularization
        Index corrector_fallbacks = 0; // exact mode: knots taken with the linear step (first failure onwards)
        std::string diagnostics;

        Index reached() const { return knots.empty() ? 0 : static_cast<Index>(knots.size()) - 1; }
        bool complete() const { return !truncated && !knots.empty() && reached() == requested; }
    };

    // Step length gamma >= 0 at which candidate l becomes equicorrelated, i.e. the admissible root of
    // A g^2 + B g + C = 0 with A = |b|^2 - 1, B = 2 lambda - 2 Re(c conj(b)), C = |c|^2 - lambda^2.
    // Both roots positive: the smaller one; otherwise max(root)_+. No real root gives 0.
    inline double candidate_step(cplx c, cplx b, double lambda_prev)
    {
        const double A = std::norm(b) - 1.0;
        const double B = 2.0 * lambda_prev - 2.0 * std::real(c * std::conj(b));
        const double C = std::norm(c) - lambda_prev * lambda_prev;

        if (std::abs(A) <= 1e-14)
        {
            if (B == 0.0)
                return 0.0;
            return std::max(-C / B, 0.0);
        }
        double disc = B * B - 4.0 * A * C;
        if (disc < 0.0)
        {
            if (disc < -1e-12 * B * B)
                return 0.0;
            disc = 0.0;
        }
        // sign-aware form avoids cancellation when B^2 >> |4AC|
        const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
        if (q == 0.0)
            return 0.0;
        const double r1 = q / A;
        const double r2 = C / q;
        if (r1 > 0.0 && r2 > 0.0)
            return std::min(r1, r2);
        return std::max(std::max(r1, r2), 0.0);
    }

    struct KnotStep
    {
        double gamma = 0.0;
        Index entering = -1;
        bool stalled = true;
    };

    // Smallest admissible step over `candidates`; c and b are indexed by column.
    // Ties go to the lowest column index.
    inline KnotStep next_knot(const ComplexVector &c, const ComplexVector &b, double lambda_prev,
                              const IndexSet &candidates, double root_floor = 1e-12)
    {
        require_same_length(c.size(), b.size(), "next_knot");
        if (!(lambda_prev > 0.0))
            throw DomainError("next_knot: lambda_prev must be positive");
        KnotStep best;
        best.gamma = std::numeric_limits<double>::infinity();
        for (Index l : sorted(candidates))
        {
            const double g = candidate_step(c[l], b[l], lambda_prev);
            if (!(g > root_floor * lambda_prev))
                continue;
            if (g < best.gamma)
            {
                best.gamma = g;
                best.entering = l;
                best.stalled = false;
            }
        }
        if (best.stalled)
            best.gamma = 0.0;
        return best;
    }

    namespace detail
    {
        // Gram-matrix view of a Lasso problem. `ridge` adds eta * I to the Gram matrix, which is the
        // augmented design [X; sqrt(eta) I] with response [y; 0].
        struct GramView
        {
            const ComplexMatrix &G;   // X^H X
            const ComplexVector &xty; // X^H y
            double ridge = 0.0;
            Index rows = 0;

            Index p() const { return G.cols(); }
        };

        struct CorrectorFailure
        {
            std::string reason;
        };

        // Damped Newton on the realified stationarity equations G b - q + lam b/|b| = 0 of
        //     min 1/2 b^H G b - Re(q^H b) + lam * sum |b_j|,
        // valid while every b_j is nonzero. False if a coefficient collapses or no descent step exists.
        inline bool newton_restricted(const ComplexMatrix &G, const ComplexVector &q, double lam,
                                      ComplexVector &beta, double tol)
        {
            const Index k = beta.size();
            if ((beta.array() == cplx(0.0)).any())
                return false;
            auto objective = [&](const ComplexVector &b) {
                return 0.5 * std::real(b.dot(G * b)) - std::real(q.dot(b)) + lam * b.cwiseAbs().sum();
            };
            auto residual = [&](const ComplexVector &b) {
                ComplexVector F = G * b - q;
                for (Index j = 0; j < k; ++j)
                    F[j] += lam * b[j] / std::abs(b[j]);
                return F;
            };

            Eigen::MatrixXd J(2 * k, 2 * k);
            Eigen::VectorXd rhs(2 * k);
            ComplexVector F = residual(beta);
            for (int it = 0; it < 60; ++it)
            {
                if (F.cwiseAbs().maxCoeff() <= tol)
                    return true;

                J.topLeftCorner(k, k) = G.real();
                J.topRightCorner(k, k) = -G.imag();
                J.bottomLeftCorner(k, k) = G.imag();
                J.bottomRightCorner(k, k) = G.real();
                for (Index j = 0; j < k; ++j)
                {
                    const double r = std::abs(beta[j]);
                    const double ux = beta[j].real() / r;
                    const double uy = beta[j].imag() / r;
                    const double s = lam / r;
                    J(j, j) += s * (1.0 - ux * ux);
                    J(j, k + j) -= s * ux * uy;
                    J(k + j, j) -= s * ux * uy;
                    J(k + j, k + j) += s * (1.0 - uy * uy);
                    rhs[j] = -F[j].real();
                    rhs[k + j] = -F[j].imag();
                }
                Eigen::VectorXd d;
                Eigen::LLT<Eigen::MatrixXd> llt(J);
                if (llt.info() == Eigen::Success)
                    d = llt.solve(rhs);
                else
                    d = J.ldlt().solve(rhs);
                ComplexVector step(k);
                for (Index j = 0; j < k; ++j)
                    step[j] = cplx(d[j], d[k + j]);

                const double f0 = objective(beta);
                const double F0 = F.norm();
                double t = 1.0;
                bool accepted = false;
                for (int ls = 0; ls < 40; ++ls, t *= 0.5)
                {
                    ComplexVector trial = beta + t * step;
                    if ((trial.array() == cplx(0.0)).any())
                        continue;
                    ComplexVector Ft = residual(trial);
                    if (objective(trial) <= f0 || Ft.norm() < F0)
                    {
                        beta = std::move(trial);
                        F = std::move(Ft);
                        accepted = true;
                        break;
                    }
                }
                if (!accepted || beta.cwiseAbs().minCoeff() <= 1e-13 * beta.cwiseAbs().maxCoeff())
                    return false;
            }
            return F.cwiseAbs().maxCoeff() <= tol;
        }

        // Cyclic coordinate descent with the exact complex soft-threshold update.
        inline void coordinate_sweeps(const ComplexMatrix &G, const ComplexVector &q, double lam,
                                      ComplexVector &beta, int sweeps)
        {
            const Index k = beta.size();
            for (int s = 0; s < sweeps; ++s)
            {
                for (Index j = 0; j < k; ++j)
                {
                    const double gjj = G(j, j).real();
                    const cplx z = q[j] - (G.row(j) * beta).value() + gjj * beta[j];
                    const double m = std::abs(z);
                    beta[j] = m > lam ? z * ((1.0 - lam / m) / gjj) : cplx(0.0);
                }
            }
        }

        // Exact solution of the Lasso restricted to the active columns, all coefficients nonzero.
        // Newton from the warm start; if that fails, coordinate descent moves the iterate into the
        // right basin (fixing phases of small coefficients) before Newton is retried. A coefficient
        // that coordinate descent leaves at zero means the restricted solution has a smaller support.
        inline bool restricted_lasso(const ComplexMatrix &G, const ComplexVector &q, double lam,
                                     ComplexVector &beta, double tol)
        {
            ComplexVector trial = beta;
            if (newton_restricted(G, q, lam, trial, tol))
            {
                beta = std::move(trial);
                return true;
            }
            trial = beta;
            coordinate_sweeps(G, q, lam, trial, 200);
            if ((trial.array() == cplx(0.0)).any())
                return false;
            if (!newton_restricted(G, q, lam, trial, tol))
                return false;
            beta = std::move(trial);
            return true;
        }

        class Homotopy
        {
        public:
            Homotopy(const GramView &g, const LarsOptions &opt)
                : g_(g), opt_(opt), p_(g.p()), is_active_(static_cast<std::size_t>(g.p()), 0) {}

            KnotPath run(Index K)
            {
                KnotPath path;
                path.requested = K;
                if (K < 0)
                    throw DomainError("c_lars_wlasso: negative target sparsity");
                if (K >= p_)
                    throw DomainError("c_lars_wlasso: target sparsity " + std::to_string(K) +
                                      " must be below the number of candidate columns (" + std::to_string(p_) + ")");
                const Index rank_bound = g_.ridge > 0.0 ? p_ : g_.rows;
                if (K > rank_bound)
                    throw DomainError("c_lars_wlasso: target sparsity " + std::to_string(K) +
                                      " exceeds the number of measurements (" + std::to_string(rank_bound) + ")");

                beta_ = ComplexVector(0);
                c_ = g_.xty;
                Index j1 = -1;
                lambda0_ = 0.0;
                for (Index j = 0; j < p_; ++j)
                {
                    if (std::abs(c_[j]) > lambda0_)
                    {
                        lambda0_ = std::abs(c_[j]);
                        j1 = j;
                    }
                }
                if (!(lambda0_ > 0.0))
                {
                    path.truncated = true;
                    path.diagnostics = "response is orthogonal to every column";
                    return path;
                }
                double lambda = lambda0_;
                record(path, lambda);
                if (K == 0)
                {
                    path.next_entering = j1;
                    return path;
                }
                activate(j1);

                for (Index k = 1; k <= K; ++k)
                {
                    const Index kA = static_cast<Index>(active_.size());
                    ComplexVector cA(kA);
                    for (Index a = 0; a < kA; ++a)
                        cA[a] = c_[active_[static_cast<std::size_t>(a)]];
                    const ComplexVector delta = direction(ComplexVector(cA / lambda), path);

                    ComplexVector b = ComplexVector::Zero(p_);
                    for (Index a = 0; a < kA; ++a)
                        b += g_.G.col(active_[static_cast<std::size_t>(a)]) * delta[a];

                    const KnotStep step = next_knot(c_, b, lambda, inactive(), opt_.root_floor);
                    if (step.stalled || !(lambda - step.gamma > opt_.knot_floor * lambda0_))
                    {
                        stall(path, k, step.stalled ? "no admissible step" : "next knot is not positive");
                        return path;
                    }

                    double lambda_next = lambda - step.gamma;
                    ComplexVector beta_next = beta_ + step.gamma * delta;
                    Index entering = step.entering;
                    bool corrected = false;

                    if (opt_.mode == PathMode::exact && path.corrector_fallbacks == 0)
                    {
                        try
                        {
                            auto refined = refine(active_gram(), lambda, delta, lambda_next);
                            if (!refined)
                            {
                                stall(path, k, "no exact knot above zero");
                                return path;
                            }
                            lambda_next = refined->lambda;
                            beta_next = std::move(refined->beta);
                            entering = refined->entering;
                            corrected = true;
                        }
                        catch (const CorrectorFailure &f)
                        {
                            ++path.corrector_fallbacks;
                            if (path.diagnostics.empty())
                                path.diagnostics = "knot " + std::to_string(k) + ": " + f.reason;
                        }
                    }
                    else if (opt_.mode == PathMode::exact)
                    {
                        // off the exact path since an earlier fallback; correcting from here would
                        // start from a state that is not a Lasso solution
                        ++path.corrector_fallbacks;
                    }

                    lambda = lambda_next;
                    beta_ = std::move(beta_next);
                    if (corrected)
                        c_ = correlations(beta_);
                    else
                    {
                        // linear predictor: c moves along -(G + ridge I) delta
                        for (Index a = 0; a < kA; ++a)
                            b[active_[static_cast<std::size_t>(a)]] += g_.ridge * delta[a];
                        c_ -= step.gamma * b;
                    }
                    record(path, lambda);
                    if (k == K)
                    {
                        path.next_entering = entering;
                        break;
                    }
                    activate(entering);
                }
                return path;
            }

        private:
            struct Refined
            {
                double lambda;
                ComplexVector beta;
                Index entering;
            };

            struct Probe
            {
                double h = 0.0;
                Index argmax = -1;
                ComplexVector beta;
            };

            void record(KnotPath &path, double lambda) const
            {
                path.knots.push_back(lambda);
                ComplexVector full = ComplexVector::Zero(p_);
                for (std::size_t a = 0; a < active_.size(); ++a)
                    full[active_[a]] = beta_[static_cast<Index>(a)];
                path.solutions.push_back(std::move(full));
                path.active_sets.push_back(active_);
            }

            void stall(KnotPath &path, Index k, const std::string &why) const
            {
                path.truncated = true;
                path.diagnostics = "stalled before knot " + std::to_string(k) + ": " + why;
                // the column activated at the last recorded knot
                if (!path.active_sets.empty() && active_.size() > path.active_sets.back().size())
                    path.next_entering = active_.back();
            }

            void activate(Index j)
            {
                if (factor_ok_)
                    extend_factor(j);
                active_.push_back(j);
                is_active_[static_cast<std::size_t>(j)] = 1;
                beta_.conservativeResize(beta_.size() + 1);
                beta_[beta_.size() - 1] = cplx(0.0);
            }

            IndexSet inactive() const
            {
                IndexSet out;
                out.reserve(static_cast<std::size_t>(p_));
                for (Index j = 0; j < p_; ++j)
                    if (!is_active_[static_cast<std::size_t>(j)])
                        out.push_back(j);
                return out;
            }

            ComplexMatrix active_gram() const
            {
                const auto kA = static_cast<Index>(active_.size());
                ComplexMatrix Gaa(kA, kA);
                for (Index a = 0; a < kA; ++a)
                    for (Index b = 0; b < kA; ++b)
                        Gaa(a, b) = g_.G(active_[static_cast<std::size_t>(a)], active_[static_cast<std::size_t>(b)]);
                Gaa.diagonal().array() += g_.ridge;
                return Gaa;
            }

            // Append column j to the Cholesky factor L of the active Gram matrix (ridge included).
            // A pivot that is numerically zero next to the existing ones disables the factor.
            void extend_factor(Index j)
            {
                const Index k = L_.rows();
                ComplexVector g(k);
                for (Index a = 0; a < k; ++a)
                    g[a] = g_.G(active_[static_cast<std::size_t>(a)], j);
                const double gjj = g_.G(j, j).real() + g_.ridge;
                ComplexVector l = g;
                if (k > 0)
                    L_.triangularView<Eigen::Lower>().solveInPlace(l);
                const double d2 = gjj - l.squaredNorm();
                const double top = k > 0 ? L_.diagonal().real().maxCoeff() : std::sqrt(std::max(gjj, 0.0));
                if (!(d2 > 1e-13 * top * top))
                {
                    factor_ok_ = false;
                    return;
                }
                L_.conservativeResize(k + 1, k + 1);
                L_.col(k).setZero();
                L_.row(k).head(k) = l.adjoint();
                L_(k, k) = std::sqrt(d2);
            }

            // Solve (G_AA + ridge I) delta = rhs.
            ComplexVector direction(const ComplexVector &rhs, KnotPath &path) const
            {
                if (factor_ok_)
                {
                    ComplexVector z = rhs;
                    L_.triangularView<Eigen::Lower>().solveInPlace(z);
                    L_.adjoint().triangularView<Eigen::Upper>().solveInPlace(z);
                    return z;
                }
                path.ill_conditioned = true;
                ComplexMatrix Gaa = active_gram();
                const double shift = 1e-10 * std::max(Gaa.diagonal().real().mean(), 1e-300);
                Gaa.diagonal().array() += shift;
                return Gaa.llt().solve(rhs);
            }

            // X^H (y - X b) for the augmented design, with b on the active columns.
            ComplexVector correlations(const ComplexVector &beta_active) const
            {
                ComplexVector c = g_.xty;
                for (std::size_t a = 0; a < active_.size(); ++a)
                {
                    c -= g_.G.col(active_[a]) * beta_active[static_cast<Index>(a)];
                    c[active_[a]] -= g_.ridge * beta_active[static_cast<Index>(a)];
                }
                return c;
            }

            // max over inactive l of |<x_l, r(lambda)>| - lambda, with r from the exact restricted solution.
            // Empty when the restricted solution loses a coefficient at this lambda.
            std::optional<Probe> probe(const ComplexMatrix &Gaa, const ComplexVector &q, double lambda_prev,
                                       const ComplexVector &delta, double lambda) const
            {
                Probe pr;
                pr.beta = beta_ + (lambda_prev - lambda) * delta;
                const double tol = 1e-12 * std::max(lambda0_, q.cwiseAbs().maxCoeff());
                if (!restricted_lasso(Gaa, q, lambda, pr.beta, tol))
                    return std::nullopt;
                const ComplexVector c = correlations(pr.beta);
                pr.h = -std::numeric_limits<double>::infinity();
                for (Index j = 0; j < p_; ++j)
                {
                    if (is_active_[static_cast<std::size_t>(j)])
                        continue;
                    const double v = std::abs(c[j]);
                    if (v - lambda > pr.h)
                    {
                        pr.h = v - lambda;
                        pr.argmax = j;
                    }
                }
                return pr;
            }

            // Probe at `lambda`, moving halfway back toward `upper` while the restricted solve fails.
            std::pair<double, Probe> probe_toward(const ComplexMatrix &Gaa, const ComplexVector &q, double lambda_prev,
                                                  const ComplexVector &delta, double lambda, double upper) const
            {
                for (int attempt = 0; attempt < 60; ++attempt)
                {
                    if (auto pr = probe(Gaa, q, lambda_prev, delta, lambda))
                        return {lambda, std::move(*pr)};
                    lambda = 0.5 * (lambda + upper);
                }
                throw CorrectorFailure{"active coefficient collapses toward zero"};
            }

            std::optional<Refined> refine(const ComplexMatrix &Gaa, double lambda_prev, const ComplexVector &delta,
                                          double lambda_hat) const
            {
                ComplexVector q(static_cast<Index>(active_.size()));
                for (std::size_t a = 0; a < active_.size(); ++a)
                    q[static_cast<Index>(a)] = g_.xty[active_[a]];

                double h_hi = -std::numeric_limits<double>::infinity();
                for (Index j = 0; j < p_; ++j)
                    if (!is_active_[static_cast<std::size_t>(j)])
                        h_hi = std::max(h_hi, std::abs(c_[j]) - lambda_prev);
                if (!(h_hi < 0.0))
                    throw CorrectorFailure{"an inactive column is already equicorrelated"};

                const double floor = opt_.knot_floor * lambda0_;
                double hi = lambda_prev;
                double fhi = h_hi;
                auto [lo, first] = probe_toward(Gaa, q, lambda_prev, delta, lambda_hat, hi);
                double flo = first.h;
                double gap = std::max(lambda_prev - lo, 1e-6 * lambda_prev);
                for (int expand = 0; flo < 0.0; ++expand)
                {
                    hi = lo;
                    fhi = flo;
                    if (hi <= floor)
                        return std::nullopt;
                    auto [next, pr] = probe_toward(Gaa, q, lambda_prev, delta, std::max(hi - gap, 0.5 * floor), hi);
                    if (expand > 200 || hi - next <= 1e-13 * lambda_prev)
                        throw CorrectorFailure{"restricted path drops a coefficient before the next knot"};
                    gap = 2.0 * (hi - next);
                    lo = next;
                    flo = pr.h;
                }
                if (flo == 0.0)
                    hi = lo;
                else
                {
                    auto fn = [&](double lam) {
                        auto pr = probe(Gaa, q, lambda_prev, delta, lam);
                        if (!pr)
                            throw CorrectorFailure{"active coefficient collapses inside the knot bracket"};
                        return pr->h;
                    };
                    std::uintmax_t iters = 100;
                    const auto bracket = boost::math::tools::toms748_solve(
                        fn, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(46), iters);
                    hi = bracket.second; // keep the side where inactive correlations stay below lambda
                }
                if (!(hi > floor))
                    return std::nullopt;
                auto at = probe(Gaa, q, lambda_prev, delta, hi);
                if (!at)
                    throw CorrectorFailure{"active coefficient collapses at the knot"};
                return Refined{hi, std::move(at->beta), at->argmax};
            }

            const GramView &g_;
            LarsOptions opt_;
            Index p_;
            double lambda0_ = 0.0;
            IndexSet active_;
            std::vector<char> is_active_;
            ComplexVector beta_;
            ComplexVector c_;
            ComplexMatrix L_;
            bool factor_ok_ = true;
        };

        inline KnotPath lars_path(const GramView &g, Index K, const LarsOptions &opt)
        {
            return Homotopy(g, opt).run(K);
        }
    } // namespace detail

    // Design after the weight transform X <- X diag(w)^{-1}, with infinite-weight columns removed.
    // Holds the Gram matrix so several homotopies (e.g. different ridge levels) can share it.
    class WeightedDesign
    {
    public:
        WeightedDesign(const ComplexVector &y, const ComplexMatrix &X, const WeightVector *w)
            : p_(X.cols()), rows_(X.rows())
        {
            require_same_length(X.rows(), y.size(), "c_lars_wlasso: rows of X vs y");
            require_finite(X, "c_lars_wlasso: X");
            require_finite(y, "c_lars_wlasso: y");
            if (w != nullptr)
            {
                validate_weights(*w, p_);
                for (Index j = 0; j < p_; ++j)
                {
                    if (!std::isfinite((*w)[j]))
                        continue;
                    if ((*w)[j] == 0.0)
                        throw DomainError("c_lars_wlasso: zero weight on column " + std::to_string(j) +
                                          " (unpenalized columns are not supported)");
                    columns_.push_back(j);
                }
                weights_.resize(static_cast<Index>(columns_.size()));
                Xw_.resize(rows_, static_cast<Index>(columns_.size()));
                for (std::size_t k = 0; k < columns_.size(); ++k)
                {
                    weights_[static_cast<Index>(k)] = (*w)[columns_[k]];
                    Xw_.col(static_cast<Index>(k)) = X.col(columns_[k]) / weights_[static_cast<Index>(k)];
                }
            }
            else
            {
                columns_.resize(static_cast<std::size_t>(p_));
                for (Index j = 0; j < p_; ++j)
                    columns_[static_cast<std::size_t>(j)] = j;
                Xw_ = X;
            }
            G_ = Xw_.adjoint() * Xw_;
            xty_ = Xw_.adjoint() * y;
        }

        detail::GramView view(double ridge = 0.0) const { return {G_, xty_, ridge, rows_}; }

        Index candidates() const { return static_cast<Index>(columns_.size()); }
        const ComplexMatrix &transformed() const { return Xw_; }

        // Scatter coefficients indexed by candidate position back to length p, undoing the weight scaling.
        ComplexVector to_original(const ComplexVector &candidate) const
        {
            ComplexVector out = ComplexVector::Zero(p_);
            const bool weighted = weights_.size() > 0;
            for (std::size_t k = 0; k < columns_.size(); ++k)
            {
                const cplx v = candidate[static_cast<Index>(k)];
                out[columns_[k]] = weighted ? v / weights_[static_cast<Index>(k)] : v;
            }
            return out;
        }

        IndexSet to_original(const IndexSet &local) const
        {
            IndexSet out;
            out.reserve(local.size());
            for (Index j : local)
                out.push_back(columns_[static_cast<std::size_t>(j)]);
            return out;
        }

        // Map a path computed on view() back to original indexing and scaling.
        KnotPath to_original(KnotPath path) const
        {
            for (auto &s : path.solutions)
                s = to_original(s);
            for (auto &a : path.active_sets)
                a = to_original(a);
            if (path.next_entering >= 0)
                path.next_entering = columns_[static_cast<std::size_t>(path.next_entering)];
            return path;
        }

    private:
        Index p_;
        Index rows_;
        IndexSet columns_;
        RealVector weights_;
        ComplexMatrix Xw_;
        ComplexMatrix G_;
        ComplexVector xty_;
    };

    // Weighted Lasso knots lambda_0..lambda_K with solutions in the coordinates of X.
    inline KnotPath c_lars_wlasso(const ComplexVector &y, const ComplexMatrix &X, const WeightVector &w, Index K,
                                  const LarsOptions &opt = {})
    {
        const WeightedDesign design(y, X, &w);
        return design.to_original(detail::lars_path(design.view(), K, opt));
    }

    // Unit-weight Lasso path (no transform applied).
    inline KnotPath c_lars_wlasso(const ComplexVector &y, const ComplexMatrix &X, Index K, const LarsOptions &opt = {})
    {
        const WeightedDesign design(y, X, nullptr);
        return design.to_original(detail::lars_path(design.view(), K, opt));
    }

} // namespace sdoa

#endif
