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

#include "holodof/runner.hpp"
#include "holodof/dof.hpp"
#include "holodof/ensemble.hpp"
#include "holodof/errors.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <vector>

namespace holodof
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        double seconds_since(Clock::time_point start)
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }

        SpectrumSummary summarize(const EigenSpectrum &spec, const ScenarioConfig &cfg)
        {
            SpectrumSummary s;
            s.eigenvalues = spec.values;
            s.eff_dof_trace = effective_dof(spec, TraceFraction{cfg.tau});
            s.eff_dof_floor = effective_dof(spec, RelativeFloor{cfg.rho});
            return s;
        }

        Dimensionality dim_of(int dim)
        {
            switch (dim)
            {
            case 1: return Dimensionality::Linear;
            case 2: return Dimensionality::Planar;
            default: return Dimensionality::Volumetric;
            }
        }
    } // namespace

    RunReport run_scenario(const ScenarioConfig &config, int workers)
    {
        const auto t_start = Clock::now();
        RunReport report;
        report.config = config;
        report.version = version_string;

        const Aperture ap = config.aperture();
        const SpatialGrid grid = config.grid();
        report.grid_nx = grid.nx;
        report.grid_ny = grid.ny;
        report.grid_nz = grid.nz;
        report.grid_n = grid.size();

        report.eta_theory = theoretical_dof(ap, dim_of(config.dim), config.half_spaces);

        const auto t_lattice = Clock::now();
        WavenumberLattice lattice = build_lattice(ap, SpectralFactor::isotropic(ap.wavenumber()));
        report.mode_count = lattice.size();
        for (const auto &mode : lattice.modes)
            if (mode.on_circle)
                ++report.zero_gamma_modes;
        report.variance_sum_plus = lattice.variance_sum(Branch::Plus);
        report.variance_sum_minus = lattice.variance_sum(Branch::Minus);
        report.variance_sum = lattice.total_variance(config.half_spaces);
        report.timings.lattice_s = seconds_since(t_lattice);

        const auto t_synth = Clock::now();
        const int m = config.ensemble_size();
        report.ensemble_m = m;
        ChannelEnsemble ensemble =
            build_ensemble(lattice, grid, m, config.seed, config.half_spaces, workers);
        report.low_m_warning = ensemble.low_m_warning;
        report.timings.synthesis_s = seconds_since(t_synth);

        const auto t_eig = Clock::now();
        report.spectrum = summarize(gram_spectrum(ensemble), config);
        if (config.baseline)
        {
            const Eigen::MatrixXcd base = iid_baseline_ensemble(grid.size(), m, config.seed, workers);
            report.baseline = summarize(gram_spectrum(base), config);
        }
        report.timings.eig_s = seconds_since(t_eig);
        report.timings.total_s = seconds_since(t_start);
        return report;
    }

    namespace
    {
        nlohmann::json spectrum_json(const SpectrumSummary &s, const ScenarioConfig &cfg)
        {
            nlohmann::json j;
            j["effective_dof"] = {
                {"trace_fraction", {{"tau", cfg.tau}, {"value", s.eff_dof_trace}}},
                {"relative_floor", {{"rho", cfg.rho}, {"value", s.eff_dof_floor}}},
            };
            std::vector<double> ev(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
            j["eigenvalues"] = ev;
            return j;
        }
    } // namespace

    std::string report_to_json(const RunReport &report, bool include_timings)
    {
        const ScenarioConfig &cfg = report.config;
        nlohmann::json j;
        j["version"] = report.version;
        j["config"] = {
            {"name", cfg.name},
            {"dim", cfg.dim},
            {"Lx", cfg.lx},
            {"Ly", cfg.ly},
            {"Lz", cfg.lz},
            {"lambda", cfg.lambda},
            {"delta", cfg.delta},
            {"M_factor", cfg.m_factor},
            {"seed", cfg.seed},
            {"half_spaces", cfg.half_spaces},
            {"baseline", cfg.baseline},
            {"tau", cfg.tau},
            {"rho", cfg.rho},
        };
        j["grid"] = {
            {"N", report.grid_n},
            {"Nx", report.grid_nx},
            {"Ny", report.grid_ny},
            {"Nz", report.grid_nz},
            {"spacing_m", cfg.delta * cfg.lambda},
        };
        j["lattice"] = {
            {"mode_count", report.mode_count},
            {"zero_gamma_modes", report.zero_gamma_modes},
            {"variance_sum_plus", report.variance_sum_plus},
            {"variance_sum_minus", report.variance_sum_minus},
            {"variance_sum", report.variance_sum},
        };
        j["ensemble"] = {
            {"M", report.ensemble_m},
            {"low_m_warning", report.low_m_warning},
        };
        j["eta_theory"] = report.eta_theory;
        j["spectrum"] = spectrum_json(report.spectrum, cfg);
        if (report.baseline)
            j["baseline"] = spectrum_json(*report.baseline, cfg);
        if (include_timings)
            j["timings"] = {
                {"lattice_s", report.timings.lattice_s},
                {"synthesis_s", report.timings.synthesis_s},
                {"eig_s", report.timings.eig_s},
                {"total_s", report.timings.total_s},
            };
        return j.dump(2) + "\n";
    }

    namespace
    {
        void write_atomic(const std::filesystem::path &target, const std::string &content)
        {
            const std::filesystem::path tmp = target.string() + ".tmp";
            {
                std::ofstream out(tmp, std::ios::binary);
                if (!out)
                    throw std::runtime_error("cannot write " + tmp.string());
                out << content;
                if (!out.flush())
                    throw std::runtime_error("write failed for " + tmp.string());
            }
            std::filesystem::rename(tmp, target);
        }

        std::string eigenvalues_csv(const Eigen::VectorXd &values)
        {
            std::string out = "index,eigenvalue\n";
            char buf[64];
            for (Eigen::Index i = 0; i < values.size(); ++i)
            {
                std::snprintf(buf, sizeof(buf), "%lld,%.17g\n",
                              static_cast<long long>(i + 1), values(i));
                out += buf;
            }
            return out;
        }
    } // namespace

    void emit_results(const RunReport &report, const std::filesystem::path &outdir, bool force)
    {
        std::filesystem::create_directories(outdir);

        std::vector<std::pair<std::filesystem::path, std::string>> files;
        files.emplace_back(outdir / "eigenvalues.csv", eigenvalues_csv(report.spectrum.eigenvalues));
        files.emplace_back(outdir / "report.json", report_to_json(report));
        if (report.baseline)
            files.emplace_back(outdir / "baseline_eigenvalues.csv",
                               eigenvalues_csv(report.baseline->eigenvalues));

        if (!force)
            for (const auto &[path, content] : files)
                if (std::filesystem::exists(path))
                    throw std::runtime_error("refusing to overwrite " + path.string() +
                                             " (pass --force to replace existing results)");

        std::vector<std::filesystem::path> written;
        try
        {
            for (const auto &[path, content] : files)
            {
                write_atomic(path, content);
                written.push_back(path);
            }
        }
        catch (...)
        {
            std::error_code ec;
            for (const auto &path : written)
                std::filesystem::remove(path, ec);
            throw;
        }
    }

} // namespace holodof
