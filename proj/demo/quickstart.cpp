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


// One snapshot of set-up 3 (two oblique sources at 44 and 52 degrees), solved with SAEN,
// the Lasso and OMP. Prints the grid angles each method picks.

#include <sparsedoa/greedy.hpp>
#include <sparsedoa/model.hpp>
#include <sparsedoa/saen.hpp>

#include <iostream>

namespace
{
    void show(const char *name, const sdoa::IndexSet &support, const sdoa::SteeringGrid &grid,
              const sdoa::IndexSet &truth)
    {
        std::cout << name << ':';
        for (sdoa::Index j : support)
            std::cout << ' ' << grid.angles_deg[static_cast<std::size_t>(j)];
        std::cout << (sdoa::same_set(support, truth) ? "  (exact)" : "  (missed)") << '\n';
    }
} // namespace

int main()
{
    const sdoa::Scenario sc = sdoa::preset(3);
    const sdoa::SteeringGrid grid = sdoa::build_grid(sc);
    sdoa::Rng rng(sdoa::stream_seed(2024, 0));
    const sdoa::Snapshot snap = sdoa::generate_snapshot(sc, grid, 20.0, rng);
    const sdoa::Index K = sc.sources();

    std::cout << sc.label << ", n = " << sc.n_sensors << ", MBC = " << sdoa::mbc(sc, grid) << '\n';
    show("truth", sdoa::sorted(snap.support), grid, snap.support);

    const sdoa::LarsOptions opt{sdoa::PathMode::predictor};
    const sdoa::SaenTrace trace = sdoa::saen(snap.y, grid.X, sdoa::AlphaGrid::standard(), K, opt);
    show("saen stage 1", trace.stage_supports[0], grid, snap.support);
    show("saen", trace.final.active_set, grid, snap.support);
    std::cout << "  selected alpha " << trace.final.alpha_selected << ", debiased amplitudes:";
    for (sdoa::Index j : trace.final.active_set)
        std::cout << ' ' << std::abs(trace.final.beta[j]);
    std::cout << '\n';

    const sdoa::WenSolution lasso = sdoa::c_pw_wen(snap.y, grid.X, sdoa::AlphaGrid::lasso(), K, true, opt);
    show("lasso", lasso.active_set, grid, snap.support);
    show("omp", sdoa::omp(snap.y, grid.X, K).support, grid, snap.support);
    return 0;
}
