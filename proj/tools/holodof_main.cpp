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

#include "holodof/dof.hpp"
#include "holodof/errors.hpp"
#include "holodof/lattice.hpp"
#include "holodof/runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace
{
    // exit codes: 0 success, 2 configuration error, 3 numerical failure
    constexpr int exit_config_error = 2;
    constexpr int exit_numerical_error = 3;

    holodof::ScenarioConfig load_with_overrides(const std::string &path, const CLI::Option *seed_opt,
                                                std::uint64_t seed)
    {
        holodof::ScenarioConfig cfg = holodof::load_config(path);
        if (seed_opt->count() > 0)
            cfg.seed = seed;
        return cfg;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"holodof: plane-wave synthesis of spatially-stationary fading fields\n"
                 "and Monte Carlo eigen-analysis of their spatial degrees of freedom"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool force = false;
    int workers = 1;

    auto *run = app.add_subcommand("run", "run a scenario and write eigenvalues.csv + report.json");
    run->add_option("config", config_path, "scenario TOML file")->required();
    run->add_option("--out", out_dir, "output directory")->required();
    auto *seed_opt = run->add_option("--seed", seed, "override the scenario seed");
    run->add_flag("--force", force, "overwrite existing result files");
    run->add_option("--workers", workers, "parallel workers for ensemble synthesis")
        ->envname("HOLODOF_WORKERS")
        ->check(CLI::PositiveNumber);

    auto *dof = app.add_subcommand("dof", "print the closed-form DoF of a scenario");
    dof->add_option("config", config_path, "scenario TOML file")->required();

    auto *lattice = app.add_subcommand("lattice", "dump the wavenumber mode set as CSV");
    lattice->add_option("config", config_path, "scenario TOML file")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (run->parsed())
        {
            const holodof::ScenarioConfig cfg = load_with_overrides(config_path, seed_opt, seed);
            const holodof::RunReport report = holodof::run_scenario(cfg, workers);
            holodof::emit_results(report, out_dir, force);
            if (report.low_m_warning)
                std::fprintf(stderr,
                             "warning: M = %d is below 10N = %d; the eigenvalue tail will be noisy\n",
                             report.ensemble_m, 10 * report.grid_n);
            std::printf("%s: N=%d M=%d modes=%zu eta_theory=%.6g eff_dof(tau=%g)=%g eff_dof(rho=%g)=%g\n",
                        cfg.name.empty() ? "scenario" : cfg.name.c_str(), report.grid_n,
                        report.ensemble_m, report.mode_count, report.eta_theory, cfg.tau,
                        report.spectrum.eff_dof_trace, cfg.rho, report.spectrum.eff_dof_floor);
            return 0;
        }

        if (dof->parsed())
        {
            const holodof::ScenarioConfig cfg = holodof::load_config(config_path);
            const double eta = holodof::theoretical_dof(
                cfg.aperture(),
                cfg.dim == 1 ? holodof::Dimensionality::Linear
                             : (cfg.dim == 2 ? holodof::Dimensionality::Planar
                                             : holodof::Dimensionality::Volumetric),
                cfg.half_spaces);
            std::printf("%.12g\n", eta);
            return 0;
        }

        if (lattice->parsed())
        {
            const holodof::ScenarioConfig cfg = holodof::load_config(config_path);
            const holodof::Aperture ap = cfg.aperture();
            const holodof::WavenumberLattice lat =
                holodof::build_lattice(ap, holodof::SpectralFactor::isotropic(ap.wavenumber()));
            std::printf("ell,m,gamma,var_plus,var_minus\n");
            for (const auto &mode : lat.modes)
                std::printf("%d,%d,%.15g,%.15g,%.15g\n", mode.ell, mode.m, mode.gamma,
                            mode.var_plus, mode.var_minus);
            return 0;
        }
    }
    catch (const holodof::config_error &e)
    {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return exit_config_error;
    }
    catch (const holodof::numerical_error &e)
    {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return exit_numerical_error;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
