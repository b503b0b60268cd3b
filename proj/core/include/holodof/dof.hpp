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

#ifndef HOLODOF_DOF_HPP
#define HOLODOF_DOF_HPP

#include "holodof/spectral.hpp"

#include <Eigen/Dense>

#include <vector>

namespace holodof
{
    // Closed-form average spatial DoF of an isotropic channel over the
    // aperture:
    //   linear      2 L_x / λ
    //   planar      π L_x L_y / λ²
    //   volumetric  2π L_x L_y / λ²   (both half-spaces; π L_x L_y / λ² when
    //                                  only one contributes)
    // Never a function of L_z. Throws std::invalid_argument when the
    // dimensionality does not match the aperture.
    double theoretical_dof(const Aperture &ap, Dimensionality dim, int half_spaces = 2);

    // z-direction steering of one lattice mode over the sample vector z:
    // A = [e^{jγz}, e^{−jγz}], N_z × 2.
    struct SteeringMatrix
    {
        double gamma = 0.0;
        std::vector<double> z_samples;

        SteeringMatrix(double gamma_lm, std::vector<double> z);

        Eigen::MatrixXcd matrix() const;

        // Numerical rank with tolerance 1e-10·‖A‖ (spectral norm): 2 when
        // γ > 0, N_z >= 2 and the sampling is non-degenerate, else 1.
        int rank() const;

        // True when every pairwise z-spacing is a multiple of π/γ, which
        // collapses the two columns onto one direction even though γ > 0.
        bool degenerate_sampling() const;
    };

    // Convenience wrapper over SteeringMatrix::rank. Throws on empty z.
    int steering_rank(double gamma_lm, const std::vector<double> &z_samples);

} // namespace holodof

#endif // HOLODOF_DOF_HPP
