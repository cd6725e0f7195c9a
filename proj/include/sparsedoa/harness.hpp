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


#ifndef SPARSEDOA_HARNESS_HPP
#define SPARSEDOA_HARNESS_HPP

#include "greedy.hpp"
#include "model.hpp"
#include "saen.hpp"
#include "scenario_io.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace sdoa
{
    enum class Method
    {
        saen,
        aen_lse,
        aen_n,
        aen_3k,
        en,
        lasso,
        omp,
        cosamp,
    };

    inline constexpr std::array<Method, 8> kAllMethods{Method::saen, Method::aen_lse, Method::aen_n, Method::aen_3k,
                                                       Method::en,   Method::lasso,   Method::omp,   Method::cosamp};

    inline std::string_view method_name(Method m)
    {
        switch (m)
        {
        case Method::saen: return "saen";
        case Method::aen_lse: return "aen_lse";
        case Method::aen_n: return "aen_n";
        case Method::aen_3k: return "aen_3k";
        case Method::en: return "en";
        case Method::lasso: return "lasso";
        case Method::omp: return "omp";
        case Method::cosamp: return "cosamp";
        }
        return "?";
    }

    inline Method parse_method(std::string_view name)
    {
        for (Method m : kAllMethods)
            if (method_name(m) == name)
                return m;
        throw ConfigError("unknown method '" + std::string(name) +
                          "' (expected saen, aen_lse, aen_n, aen_3k, en, lasso, omp, cosamp)");
    }

    inline std::string_view mode_name(PathMode m) { return m == PathMode::exact ? "exact" : "predictor"; }

    inline PathMode parse_mode(std::string_view name)
    {
        if (name == "exact")
            return PathMode::exact;
        if (name == "predictor")
            return PathMode::predictor;
        throw ConfigError("unknown path mode '" + std::string(name) + "' (expected exact or predictor)");
    }

    struct ExperimentConfig
    {
        Scenario scenario;
        std::vector<double> snr_db{20.0};
        int trials = 1000;
        std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
        std::uint64_t master_seed = 0;
        AlphaGrid alphas = AlphaGrid::standard();
        // The Monte-Carlo tables are produced by the plain predictor homotopy.
        PathMode mode = PathMode::predictor;
        int cosamp_max_iter = 50;
        bool per_trial = false;
        unsigned threads = 0; // 0: hardware concurrency; never affects results

        void validate() const
        {
            scenario.validate();
            if (trials < 1)
                throw ConfigError("trials must be at least 1");
            if (methods.empty())
                throw ConfigError("at least one method is required");
            if (snr_db.empty())
                throw ConfigError("at least one SNR value is required");
            for (double s : snr_db)
                if (std::isnan(s))
                    throw ConfigError("SNR must be a number");
            if (cosamp_max_iter < 1)
                throw ConfigError("cosamp max_iter must be at least 1");
        }
    };

    // 1 iff the found support equals the true one.
    inline int per_indicator(const IndexSet &truth, const IndexSet &found)
    {
        if (truth.size() != found.size())
            throw DimensionError("per_indicator: support sizes differ (" + std::to_string(truth.size()) + " vs " +
                                 std::to_string(found.size()) + ")");
        return same_set(truth, found) ? 1 : 0;
    }

    // sqrt(mean ||s - s_hat||^2); NaN for an empty list.
    inline double rmse(const std::vector<std::pair<ComplexVector, ComplexVector>> &trials)
    {
        if (trials.empty())
            return std::numeric_limits<double>::quiet_NaN();
        double acc = 0.0;
        for (const auto &[s, s_hat] : trials)
        {
            require_same_length(s.size(), s_hat.size(), "rmse");
            acc += (s - s_hat).squaredNorm();
        }
        return std::sqrt(acc / static_cast<double>(trials.size()));
    }

    struct MethodOutcome
    {
        bool failed = false;
        std::string error;
        IndexSet support;      // sorted
        int recovered = 0;
        double sq_error = 0.0; // ||s - s_hat||^2 with s_hat the LS fit on the found support
        double wall_ms = 0.0;
    };

    struct TrialRecord
    {
        std::uint64_t seed = 0;
        IndexSet truth; // sorted
        std::optional<int> ub_hit;
        std::vector<MethodOutcome> outcomes; // config.methods order
    };

    struct MethodMetrics
    {
        Method method = Method::saen;
        double per = 0.0;
        double rmse = std::numeric_limits<double>::quiet_NaN();
        int recovered = 0;
        int failed = 0;
        int trials = 0;
        double wall_ms = 0.0;
        std::vector<std::string> errors; // distinct messages, first occurrence order, at most 5
    };

    struct SnrPoint
    {
        double snr_db = 0.0;
        std::optional<double> ub; // present when saen ran
        int trial_count = 0;
        std::vector<MethodMetrics> methods;
        std::vector<TrialRecord> trials; // filled only with per_trial
    };

    struct ExperimentResult
    {
        ExperimentConfig config;
        std::vector<SnrPoint> points;

        bool all_failed() const
        {
            for (const auto &pt : points)
                for (const auto &m : pt.methods)
                    if (m.failed < m.trials)
                        return false;
            return true;
        }
    };

    // The snapshot that trial `trial` of an experiment with this master seed sees.
    inline Snapshot trial_snapshot(const Scenario &sc, const SteeringGrid &grid, double snr_db,
                                   std::uint64_t master_seed, std::uint64_t trial)
    {
        Rng rng(stream_seed(master_seed, trial));
        return generate_snapshot(sc, grid, snr_db, rng);
    }

    namespace detail
    {
        struct Estimate
        {
            IndexSet support;
            std::optional<IndexSet> initial; // SAEN stage-1 support
        };

        inline Estimate run_method(Method m, const ComplexVector &y, const SteeringGrid &grid, Index K,
                                   const ExperimentConfig &cfg)
        {
            const LarsOptions opt{cfg.mode};
            const ComplexMatrix &X = grid.X;
            switch (m)
            {
            case Method::saen:
            {
                SaenTrace t = saen(y, X, cfg.alphas, K, opt);
                return {t.final.active_set, t.stage_supports[0]};
            }
            case Method::aen_lse: return {aen_variant(y, X, cfg.alphas, K, AenKind::lse, opt).active_set, {}};
            case Method::aen_n: return {aen_variant(y, X, cfg.alphas, K, AenKind::n, opt).active_set, {}};
            case Method::aen_3k: return {aen_variant(y, X, cfg.alphas, K, AenKind::three_k, opt).active_set, {}};
            case Method::en: return {c_pw_wen(y, X, cfg.alphas, K, true, opt).active_set, {}};
            case Method::lasso: return {c_pw_wen(y, X, AlphaGrid::lasso(), K, true, opt).active_set, {}};
            case Method::omp: return {omp(y, X, K).support, {}};
            case Method::cosamp: return {cosamp(y, X, K, cfg.cosamp_max_iter).support, {}};
            }
            throw ConfigError("unhandled method");
        }

        inline TrialRecord run_trial(const ExperimentConfig &cfg, const SteeringGrid &grid, double snr_db,
                                     std::uint64_t trial)
        {
            const std::uint64_t seed = stream_seed(cfg.master_seed, trial);
            const Snapshot snap = trial_snapshot(cfg.scenario, grid, snr_db, cfg.master_seed, trial);
            const Index K = cfg.scenario.sources();

            // source amplitudes in grid-index order
            std::vector<std::pair<Index, cplx>> order;
            for (Index k = 0; k < K; ++k)
                order.emplace_back(snap.support[static_cast<std::size_t>(k)], snap.s[k]);
            std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
            ComplexVector s_true(K);
            TrialRecord rec;
            rec.seed = seed;
            for (Index k = 0; k < K; ++k)
            {
                rec.truth.push_back(order[static_cast<std::size_t>(k)].first);
                s_true[k] = order[static_cast<std::size_t>(k)].second;
            }

            for (Method m : cfg.methods)
            {
                MethodOutcome out;
                const auto t0 = std::chrono::steady_clock::now();
                try
                {
                    Estimate est = run_method(m, snap.y, grid, K, cfg);
                    out.support = sorted(std::move(est.support));
                    out.recovered = per_indicator(rec.truth, out.support);
                    const ComplexVector s_hat = least_squares_on(grid.X, out.support, snap.y);
                    out.sq_error = (s_true - s_hat).squaredNorm();
                    if (est.initial)
                        rec.ub_hit = contains_all(*est.initial, rec.truth) ? 1 : 0;
                }
                catch (const std::exception &e)
                {
                    out = MethodOutcome{};
                    out.failed = true;
                    out.error = std::string(method_name(m)) + ": " + e.what();
                }
                out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                rec.outcomes.push_back(std::move(out));
            }
            return rec;
        }

        // Aggregation runs over trials in index order, so the sums do not depend on scheduling.
        inline SnrPoint aggregate(const ExperimentConfig &cfg, double snr_db, std::vector<TrialRecord> trials)
        {
            SnrPoint pt;
            pt.snr_db = snr_db;
            pt.trial_count = static_cast<int>(trials.size());
            int ub_hits = 0;
            for (const auto &t : trials)
                ub_hits += t.ub_hit.value_or(0);
            const bool saen_ran = std::find(cfg.methods.begin(), cfg.methods.end(), Method::saen) != cfg.methods.end();
            if (saen_ran)
                pt.ub = static_cast<double>(ub_hits) / static_cast<double>(pt.trial_count);

            for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi)
            {
                MethodMetrics mm;
                mm.method = cfg.methods[mi];
                mm.trials = pt.trial_count;
                double sq = 0.0;
                for (const auto &t : trials)
                {
                    const MethodOutcome &o = t.outcomes[mi];
                    mm.wall_ms += o.wall_ms;
                    if (o.failed)
                    {
                        ++mm.failed;
                        if (mm.errors.size() < 5 &&
                            std::find(mm.errors.begin(), mm.errors.end(), o.error) == mm.errors.end())
                            mm.errors.push_back(o.error);
                        continue;
                    }
                    mm.recovered += o.recovered;
                    sq += o.sq_error;
                }
                mm.per = static_cast<double>(mm.recovered) / static_cast<double>(mm.trials);
                const int used = mm.trials - mm.failed;
                if (used > 0)
                    mm.rmse = std::sqrt(sq / static_cast<double>(used));
                pt.methods.push_back(std::move(mm));
            }
            if (cfg.per_trial)
                pt.trials = std::move(trials);
            return pt;
        }
    } // namespace detail

    // Monte-Carlo run. Trial t uses seed stream_seed(master_seed, t) at every SNR point, so a sweep
    // sees the same source phases and noise directions at each level. All methods share the snapshot.
    inline ExperimentResult run_experiment(const ExperimentConfig &cfg)
    {
        cfg.validate();
        const SteeringGrid grid = build_grid(cfg.scenario);

        unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.trials));

        ExperimentResult result;
        result.config = cfg;
        for (double snr : cfg.snr_db)
        {
            std::vector<TrialRecord> trials(static_cast<std::size_t>(cfg.trials));
            std::atomic<int> next{0};
            auto work = [&]() {
                for (int t = next++; t < cfg.trials; t = next++)
                    trials[static_cast<std::size_t>(t)] =
                        detail::run_trial(cfg, grid, snr, static_cast<std::uint64_t>(t));
            };
            if (workers <= 1)
                work();
            else
            {
                std::vector<std::thread> pool;
                for (unsigned i = 0; i < workers; ++i)
                    pool.emplace_back(work);
                for (auto &th : pool)
                    th.join();
            }
            result.points.push_back(detail::aggregate(cfg, snr, std::move(trials)));
        }
        return result;
    }

    namespace detail
    {
        inline nlohmann::ordered_json number_or_null(double v)
        {
            if (std::isfinite(v))
                return v;
            return nullptr;
        }
    } // namespace detail

    // Result document. Wall-clock timings are left out so equal configurations give equal bytes.
    inline nlohmann::ordered_json to_json(const ExperimentResult &r)
    {
        using nlohmann::ordered_json;
        const ExperimentConfig &cfg = r.config;
        ordered_json doc;
        nlohmann::json sc = cfg.scenario;
        doc["scenario"] = ordered_json::parse(sc.dump());
        doc["trials"] = cfg.trials;
        doc["master_seed"] = cfg.master_seed;
        doc["path_mode"] = mode_name(cfg.mode);
        doc["alpha_grid"] = cfg.alphas.values();
        doc["cosamp_max_iter"] = cfg.cosamp_max_iter;
        ordered_json names = ordered_json::array();
        for (Method m : cfg.methods)
            names.push_back(method_name(m));
        doc["methods"] = names;

        ordered_json points = ordered_json::array();
        for (const auto &pt : r.points)
        {
            ordered_json jp;
            jp["snr_db"] = detail::number_or_null(pt.snr_db);
            if (std::isinf(pt.snr_db))
                jp["noiseless"] = true;
            jp["trial_count"] = pt.trial_count;
            jp["ub"] = pt.ub ? ordered_json(*pt.ub) : ordered_json(nullptr);
            ordered_json jm = ordered_json::object();
            for (const auto &m : pt.methods)
            {
                ordered_json e;
                e["per"] = m.per;
                e["rmse"] = detail::number_or_null(m.rmse);
                e["recovered"] = m.recovered;
                e["failed"] = m.failed;
                e["errors"] = m.errors;
                jm[std::string(method_name(m.method))] = e;
            }
            jp["methods"] = jm;
            if (cfg.per_trial)
            {
                ordered_json jt = ordered_json::array();
                for (std::size_t t = 0; t < pt.trials.size(); ++t)
                {
                    const TrialRecord &tr = pt.trials[t];
                    ordered_json e;
                    e["trial"] = t;
                    e["seed"] = tr.seed;
                    e["truth"] = tr.truth;
                    e["ub_hit"] = tr.ub_hit ? ordered_json(*tr.ub_hit) : ordered_json(nullptr);
                    ordered_json per_method = ordered_json::object();
                    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi)
                    {
                        const MethodOutcome &o = tr.outcomes[mi];
                        ordered_json om;
                        if (o.failed)
                            om["error"] = o.error;
                        else
                        {
                            om["support"] = o.support;
                            om["recovered"] = o.recovered;
                            om["sq_error"] = o.sq_error;
                        }
                        per_method[std::string(method_name(cfg.methods[mi]))] = om;
                    }
                    e["methods"] = per_method;
                    jt.push_back(e);
                }
                jp["per_trial"] = jt;
            }
            points.push_back(jp);
        }
        doc["results"] = points;
        return doc;
    }

    // One row per method and SNR point: method,snr_db,per,rmse,ub,wall_ms,trials,failed
    inline std::string to_csv(const ExperimentResult &r)
    {
        std::ostringstream os;
        os << std::setprecision(10);
        os << "method,snr_db,per,rmse,ub,wall_ms,trials,failed\n";
        for (const auto &pt : r.points)
            for (const auto &m : pt.methods)
            {
                os << method_name(m.method) << ',' << pt.snr_db << ',' << m.per << ',';
                if (std::isfinite(m.rmse))
                    os << m.rmse;
                os << ',';
                if (pt.ub)
                    os << *pt.ub;
                os << ',' << std::fixed << std::setprecision(3) << m.wall_ms << std::defaultfloat
                   << std::setprecision(10) << ',' << m.trials << ',' << m.failed << '\n';
            }
        return os.str();
    }

} // namespace sdoa

#endif
