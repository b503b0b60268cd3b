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

#ifndef HOLODOF_SPECTRUM_HPP
#define HOLODOF_SPECTRUM_HPP

#include "holodof/ensemble.hpp"

#include <Eigen/Dense>

namespace holodof
{
    // Eigenvalues of the per-realization Gram matrix (1/M)·H·Hᴴ, sorted
    // nonincreasing, clamped at zero (values below −ε_mach·trace would
    // indicate solver failure and throw instead).
    struct EigenSpectrum
    {
        Eigen::VectorXd values;
        double trace = 0.0;
    };

    EigenSpectrum gram_spectrum(const ChannelEnsemble &ensemble);
    EigenSpectrum gram_spectrum(const Eigen::MatrixXcd &h_matrix);

    // Effective-DoF read-off policies. The paper reads DoF off eigenvalue
    // plots by eye; these two counts are this artifact's numeric stand-ins
    // and reports always carry both.
    struct TraceFraction
    {
        double tau = 0.95; // smallest k with Σ_{i<=k} λ_i >= τ·trace
    };
    struct RelativeFloor
    {
        double rho = 0.01; // count of λ_i >= ρ·λ_1
    };

    double effective_dof(const EigenSpectrum &spectrum, TraceFraction policy);
    double effective_dof(const EigenSpectrum &spectrum, RelativeFloor policy);

} // namespace holodof

#endif // HOLODOF_SPECTRUM_HPP
