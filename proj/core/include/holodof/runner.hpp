// SPDX-License-Identifier: Apache-2.0
//
// holodof - plane-wave synthesis of spatially-stationary fading fields
//           and spatial degrees-of-freedom analysis
// Copyright (C) 2026 the holodof authors
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

#ifndef HOLODOF_RUNNER_HPP
#define HOLODOF_RUNNER_HPP

#include "holodof/config.hpp"
#include "holodof/lattice.hpp"
#include "holodof/spectrum.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <string>

namespace holodof
{
    inline constexpr const char *version_string = "0.1.0";

    struct SpectrumSummary
    {
        Eigen::VectorXd eigenvalues; // descending
        double eff_dof_trace = 0.0;  // trace-fraction policy
        double eff_dof_floor = 0.0;  // relative-floor policy
    };

    struct RunTimings
    {
        double lattice_s = 0.0;
        double synthesis_s = 0.0;
        double eig_s = 0.0;
        double total_s = 0.0;
    };

    // Everything a run produced. The config echo makes the report
    // re-runnable on its own; timings are informational and excluded from
    // determinism comparisons.
    struct RunReport
    {
        ScenarioConfig config;
        std::string version;

        int grid_nx = 1, grid_ny = 1, grid_nz = 1;
        int grid_n = 0;
        int ensemble_m = 0;
        bool low_m_warning = false;

        std::size_t mode_count = 0;
        int zero_gamma_modes = 0;
        double variance_sum_plus = 0.0;
        double variance_sum_minus = 0.0;
        double variance_sum = 0.0; // respects half_spaces

        double eta_theory = 0.0;

        SpectrumSummary spectrum;
        std::optional<SpectrumSummary> baseline;

        RunTimings timings;
    };

    // lattice → ensemble → Gram eigen-spectrum → effective DoF, plus the
    // i.i.d. baseline when configured.
    RunReport run_scenario(const ScenarioConfig &config, int workers = 1);

    std::string report_to_json(const RunReport &report, bool include_timings = true);

    // Writes eigenvalues.csv, report.json and (when the baseline ran)
    // baseline_eigenvalues.csv into outdir. Files are written to a temporary
    // name and renamed into place; existing outputs are refused unless
    // `force`. On failure every file already emitted by this call is
    // removed.
    void emit_results(const RunReport &report, const std::filesystem::path &outdir, bool force = false);

} // namespace holodof

#endif // HOLODOF_RUNNER_HPP
