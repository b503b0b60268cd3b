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

#ifndef HOLODOF_ENSEMBLE_HPP
#define HOLODOF_ENSEMBLE_HPP

#include "holodof/grid.hpp"
#include "holodof/lattice.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace holodof
{
    // N×M matrix of field realizations: column j is the field sampled on the
    // grid for the stream (master_seed, field domain, j).
    struct ChannelEnsemble
    {
        Eigen::MatrixXcd matrix; // N rows (spatial samples) × M columns
        std::uint64_t master_seed = 0;
        int half_spaces = 2;
        bool low_m_warning = false; // M < 10N: spectra usable but noisy
    };

    // Builds the ensemble. M must be at least 4N (rejected below); M < 10N
    // sets low_m_warning. Columns are produced in fixed 64-column blocks so
    // the result is byte-identical for every worker count.
    ChannelEnsemble build_ensemble(const WavenumberLattice &lattice, const SpatialGrid &grid,
                                   int m_realizations, std::uint64_t master_seed,
                                   int half_spaces = 2, int workers = 1);

    // n×M i.i.d. Rayleigh baseline; columns use the disjoint baseline stream
    // domain, so enabling it never perturbs the main ensemble.
    Eigen::MatrixXcd iid_baseline_ensemble(int n, int m_realizations, std::uint64_t master_seed,
                                           int workers = 1);

} // namespace holodof

#endif // HOLODOF_ENSEMBLE_HPP
