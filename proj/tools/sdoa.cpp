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


// sdoa: command line front end.
//
//   sdoa run  --setup 1 --snr 20 --trials 200 --seed 7 --methods saen,lasso --out results.json
//   sdoa mbc  --setup 5
//   sdoa path --setup 2 --snr 20 --seed 7
//
// Exit codes: 0 success, 1 configuration error, 2 every method failed in every trial.

#include <sparsedoa/harness.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    constexpr int kConfigError = 1;
    constexpr int kAllFailed = 2;

    std::vector<std::string> split_csv(const std::string &text)
    {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            const auto b = item.find_first_not_of(" \t");
            const auto e = item.find_last_not_of(" \t");
            if (b != std::string::npos)
                out.push_back(item.substr(b, e - b + 1));
        }
        return out;
    }

    double parse_number(const std::string &s, const char *what)
    {
        if (s == "inf" || s == "noiseless")
            return sdoa::kNoiseless;
        try
        {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return v;
        }
        catch (const std::exception &)
        {
            throw sdoa::ConfigError(std::string("cannot read ") + what + " value '" + s + "'");
        }
    }

    std::vector<double> parse_numbers(const std::string &text, const char *what)
    {
        std::vector<double> out;
        for (const auto &s : split_csv(text))
            out.push_back(parse_number(s, what));
        if (out.empty())
            throw sdoa::ConfigError(std::string("empty ") + what + " list");
        return out;
    }

    void write_file(const std::filesystem::path &path, const std::string &text)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw sdoa::ConfigError("cannot write " + path.string());
        f << text;
        if (!f)
            throw sdoa::ConfigError("write failed for " + path.string());
    }

    struct RunArgs
    {
        std::string setup;
        std::string snr = "20";
        int trials = 1000;
        std::uint64_t seed = 0;
        std::string methods = "saen,aen_lse,aen_n,aen_3k,en,lasso,omp,cosamp";
        std::string alpha_grid;
        std::string mode = "predictor";
        bool per_trial = false;
        unsigned threads = 0;
        int cosamp_max_iter = 50;
        std::string out;
    };

    sdoa::AlphaGrid alpha_grid_from(const std::string &text)
    {
        if (text.empty())
            return sdoa::AlphaGrid::standard();
        return sdoa::AlphaGrid(parse_numbers(text, "alpha"));
    }

    int cmd_run(const RunArgs &a)
    {
        sdoa::ExperimentConfig cfg;
        cfg.scenario = sdoa::resolve_scenario(a.setup);
        cfg.snr_db = parse_numbers(a.snr, "SNR");
        cfg.trials = a.trials;
        cfg.master_seed = a.seed;
        cfg.methods.clear();
        for (const auto &m : split_csv(a.methods))
            cfg.methods.push_back(sdoa::parse_method(m));
        cfg.alphas = alpha_grid_from(a.alpha_grid);
        cfg.mode = sdoa::parse_mode(a.mode);
        cfg.per_trial = a.per_trial;
        cfg.threads = a.threads;
        cfg.cosamp_max_iter = a.cosamp_max_iter;
        cfg.validate();

        const sdoa::ExperimentResult result = sdoa::run_experiment(cfg);
        const std::string json = sdoa::to_json(result).dump(2) + "\n";
        const std::string csv = sdoa::to_csv(result);
        if (a.out.empty())
            std::cout << json;
        else
        {
            std::filesystem::path json_path(a.out);
            std::filesystem::path csv_path = json_path;
            csv_path.replace_extension(".csv");
            write_file(json_path, json);
            write_file(csv_path, csv);
            std::cout << csv;
        }
        if (result.all_failed())
        {
            std::cerr << "sdoa: every method failed in every trial\n";
            return kAllFailed;
        }
        return 0;
    }

    int cmd_mbc(const std::string &setup)
    {
        std::vector<sdoa::Scenario> list;
        if (setup.empty())
            for (int id = 1; id <= 7; ++id)
                list.push_back(sdoa::preset(id));
        else
            list.push_back(sdoa::resolve_scenario(setup));
        std::cout << "setup,n,grid_deg,K,mbc\n";
        for (const auto &sc : list)
        {
            const auto grid = sdoa::build_grid(sc);
            std::cout << sc.label << ',' << sc.n_sensors << ',' << sc.grid_spacing_deg << ',' << sc.sources() << ','
                      << std::fixed << std::setprecision(4) << sdoa::mbc(sc, grid) << std::defaultfloat << '\n';
        }
        return 0;
    }

    struct PathArgs
    {
        std::string setup;
        double snr = 20.0;
        std::uint64_t seed = 0;
        std::uint64_t trial = 0;
        int knots = 0;
        std::string alpha_grid;
        std::string mode = "predictor";
        std::string out;
    };

    int cmd_path(const PathArgs &a)
    {
        const sdoa::Scenario sc = sdoa::resolve_scenario(a.setup);
        const sdoa::SteeringGrid grid = sdoa::build_grid(sc);
        const sdoa::Snapshot snap = sdoa::trial_snapshot(sc, grid, a.snr, a.seed, a.trial);
        const sdoa::Index K = sc.sources();
        const sdoa::Index depth = a.knots > 0 ? a.knots : 3 * K;
        const sdoa::LarsOptions opt{sdoa::parse_mode(a.mode)};
        const sdoa::AlphaGrid alphas = alpha_grid_from(a.alpha_grid);

        auto angles = [&](const sdoa::IndexSet &idx) {
            std::vector<double> out;
            for (sdoa::Index j : idx)
                out.push_back(grid.angles_deg[static_cast<std::size_t>(j)]);
            return out;
        };

        nlohmann::ordered_json doc;
        doc["setup"] = sc.label;
        doc["snr_db"] = a.snr;
        doc["seed"] = a.seed;
        doc["trial"] = a.trial;
        doc["path_mode"] = a.mode;
        doc["truth"] = {{"support", snap.support}, {"angles_deg", angles(snap.support)}};

        const sdoa::KnotPath P = sdoa::c_lars_wlasso(snap.y, grid.X, depth, opt);
        nlohmann::ordered_json knots = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < P.knots.size(); ++k)
        {
            const auto &A = P.active_sets[k];
            std::vector<double> mags;
            for (sdoa::Index j : A)
                mags.push_back(std::abs(P.solutions[k][j]));
            knots.push_back({{"k", k},
                             {"lambda", P.knots[k]},
                             {"active", A},
                             {"angles_deg", angles(A)},
                             {"magnitudes", mags}});
        }
        doc["lasso"] = {{"knots", knots}, {"truncated", P.truncated}, {"diagnostics", P.diagnostics}};

        nlohmann::ordered_json wen = nlohmann::ordered_json::array();
        try
        {
            const sdoa::WenSolution W = sdoa::c_pw_wen(snap.y, grid.X, alphas, depth, false, opt);
            for (const auto &rec : W.path)
            {
                nlohmann::ordered_json e;
                e["alpha"] = rec.alpha;
                e["lambdas"] = rec.lambdas;
                e["stalled"] = rec.stalled;
                if (!rec.stalled)
                {
                    e["active"] = sdoa::sorted(rec.active);
                    e["rss"] = rec.rss;
                }
                wen.push_back(e);
            }
            doc["wen"] = {{"alpha_selected", W.alpha_selected}, {"alphas", wen}};
        }
        catch (const sdoa::StallError &e)
        {
            doc["wen"] = {{"error", e.what()}};
        }

        const std::string text = doc.dump(2) + "\n";
        if (a.out.empty())
            std::cout << text;
        else
            write_file(a.out, text);
        return 0;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"sdoa: sparse single-snapshot DoA recovery experiments"};
    app.require_subcommand(1);

    RunArgs run;
    auto *run_cmd = app.add_subcommand("run", "Monte-Carlo experiment over one or more SNR values");
    run_cmd->add_option("--setup", run.setup, "Preset 1-7 or path to a scenario JSON file")->required();
    run_cmd->add_option("--snr", run.snr, "SNR in dB, comma separated for a sweep ('inf' for noiseless)");
    run_cmd->add_option("--trials", run.trials, "Monte-Carlo trials per SNR point")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", run.seed, "Master seed");
    run_cmd->add_option("--methods", run.methods, "Comma separated subset of saen,aen_lse,aen_n,aen_3k,en,lasso,omp,cosamp");
    run_cmd->add_option("--alpha-grid", run.alpha_grid, "Comma separated alpha values, first must be 1");
    run_cmd->add_option("--mode", run.mode, "Homotopy mode: predictor (default) or exact");
    run_cmd->add_flag("--per-trial", run.per_trial, "Include per-trial records in the JSON");
    run_cmd->add_option("--threads", run.threads, "Worker threads (0: all cores); results do not depend on it");
    run_cmd->add_option("--cosamp-max-iter", run.cosamp_max_iter, "CoSaMP iteration cap")->check(CLI::PositiveNumber);
    run_cmd->add_option("--out", run.out, "JSON output path; a .csv summary is written next to it");

    std::string mbc_setup;
    auto *mbc_cmd = app.add_subcommand("mbc", "Maximal basis coherence of a set-up (all presets by default)");
    mbc_cmd->add_option("--setup", mbc_setup, "Preset 1-7 or path to a scenario JSON file");

    PathArgs path;
    auto *path_cmd = app.add_subcommand("path", "Dump the knot paths of one trial as JSON");
    path_cmd->add_option("--setup", path.setup, "Preset 1-7 or path to a scenario JSON file")->required();
    path_cmd->add_option("--snr", path.snr, "SNR in dB");
    path_cmd->add_option("--seed", path.seed, "Master seed");
    path_cmd->add_option("--trial", path.trial, "Trial index under that seed");
    path_cmd->add_option("--knots", path.knots, "Path depth (default 3K)");
    path_cmd->add_option("--alpha-grid", path.alpha_grid, "Comma separated alpha values, first must be 1");
    path_cmd->add_option("--mode", path.mode, "Homotopy mode: predictor (default) or exact");
    path_cmd->add_option("--out", path.out, "Output path (default stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kConfigError;
    }

    try
    {
        if (*run_cmd)
            return cmd_run(run);
        if (*mbc_cmd)
            return cmd_mbc(mbc_setup);
        if (*path_cmd)
            return cmd_path(path);
    }
    catch (const sdoa::ConfigError &e)
    {
        std::cerr << "sdoa: " << e.what() << '\n';
        return kConfigError;
    }
    catch (const sdoa::Error &e)
    {
        std::cerr << "sdoa: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}
