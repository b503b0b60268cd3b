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

#ifndef HOLODOF_CONFIG_HPP
#define HOLODOF_CONFIG_HPP

#include "holodof/grid.hpp"
#include "holodof/spectral.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace holodof
{
    // One simulation scenario. Aperture lengths and the grid spacing are in
    // units of λ; `lambda` is the carrier wavelength in metres.
    //
    // TOML keys: dim, Lx, Ly, Lz, lambda, seed (required per dimensionality)
    // and delta, M_factor, half_spaces, baseline, tau, rho, name (optional).
    // Unknown keys are rejected.
    struct ScenarioConfig
    {
        std::string name;
        int dim = 0;
        double lx = 0.0, ly = 0.0, lz = 0.0; // units of λ
        double lambda = 0.0;                 // [m]
        double delta = 0.25;                 // grid spacing, units of λ
        double m_factor = 10.0;              // M/N
        std::uint64_t seed = 0;
        int half_spaces = 2;
        bool baseline = false;
        double tau = 0.95;
        double rho = 0.01;

        Aperture aperture() const;
        SpatialGrid grid() const;
        int ensemble_size() const; // M = round(M_factor · N)
    };

    // Parses and validates inline TOML text. Throws config_error with
    // line/field diagnostics.
    ScenarioConfig parse_config(std::string_view toml_text);

    // Reads the file and parses; the path is prefixed to error messages.
    ScenarioConfig load_config(const std::filesystem::path &path);

} // namespace holodof

#endif // HOLODOF_CONFIG_HPP
