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

#ifndef HOLODOF_SYNTHESIS_HPP
#define HOLODOF_SYNTHESIS_HPP

#include "holodof/grid.hpp"
#include "holodof/lattice.hpp"
#include "holodof/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace holodof
{
    // One realization of the per-mode Gaussian coefficients, in lattice
    // order. The stream provenance makes the draw re-derivable.
    struct ModeCoefficients
    {
        std::vector<std::complex<double>> plus;
        std::vector<std::complex<double>> minus;
        std::uint64_t master_seed = 0;
        std::uint64_t realization = 0;
    };

    // Draw one coefficient per mode and branch from an already-derived
    // stream: H⁺ then H⁻ per mode, two uniforms per draw, always consumed.
    // Requires lattice variances; a zero variance yields exactly zero.
    ModeCoefficients draw_coefficients(const WavenumberLattice &lattice, GaussianStream &stream);

    // Derives the stream for (master, field domain, index) and draws. With
    // half_spaces = 1 the down-going coefficients are forced to zero (the
    // draws are still consumed so the stream layout does not shift).
    ModeCoefficients draw_realization(const WavenumberLattice &lattice, std::uint64_t master_seed,
                                      std::uint64_t index, int half_spaces = 2);

    // Fourier basis over the xy-plane of the grid: (nx·ny) × |modes| matrix
    // with entries e^{j2π(ℓx/L_x + m y/L_y)}. Rows follow the grid's
    // flattened xy order.
    Eigen::MatrixXcd planar_basis(const WavenumberLattice &lattice, const SpatialGrid &grid);

    // h(x_i) = Σ_ℓ (H⁺_ℓ + H⁻_ℓ) e^{j2πℓx_i/L_x} on a linear grid.
    Eigen::VectorXcd synthesize_1d(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                   const SpatialGrid &grid);

    // h(x_i, y_i) = Σ_{(ℓ,m)} (H⁺ + H⁻) e^{j2π(ℓx/L_x + m y/L_y)} at z = 0.
    Eigen::VectorXcd synthesize_2d(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                   const SpatialGrid &grid);

    // Per z-plane, coefficients combine as H⁺e^{jγz} + H⁻e^{−jγz} and the
    // planar synthesis is applied; plane z = 0 equals synthesize_2d exactly.
    Eigen::VectorXcd synthesize_3d(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                   const SpatialGrid &grid);

    // Direct evaluation of the series at one (possibly off-grid) point;
    // reference path for tests and the periodicity property.
    std::complex<double> evaluate_series(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                         double x, double y, double z);

    // n independent unit-variance circularly-symmetric complex Gaussians.
    Eigen::VectorXcd iid_rayleigh(int n, GaussianStream &stream);

} // namespace holodof

#endif // HOLODOF_SYNTHESIS_HPP
