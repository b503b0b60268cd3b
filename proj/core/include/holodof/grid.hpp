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

#ifndef HOLODOF_GRID_HPP
#define HOLODOF_GRID_HPP

#include "holodof/spectral.hpp"

#include <array>

namespace holodof
{
    // Uniform sample grid over the aperture, anchored at the corner (0,0,0).
    // Points along an occupied axis sit at {0, Δ, …, (N_i−1)Δ} with
    // N_i = round(L_i/Δ): endpoint-exclusive, so an aperture of length 16λ at
    // Δ = λ/4 carries 64 samples. Unoccupied axes have a single layer at 0.
    //
    // Flattened index: i = ix + nx·(iy + ny·iz)  (x fastest, z slowest).
    struct SpatialGrid
    {
        double spacing = 0.0; // Δ [m]
        int nx = 1, ny = 1, nz = 1;

        int size() const { return nx * ny * nz; }
        Dimensionality dimensionality() const
        {
            if (ny == 1 && nz == 1)
                return Dimensionality::Linear;
            return nz == 1 ? Dimensionality::Planar : Dimensionality::Volumetric;
        }

        std::array<double, 3> point(int flat) const
        {
            const int ix = flat % nx;
            const int iy = (flat / nx) % ny;
            const int iz = flat / (nx * ny);
            return {ix * spacing, iy * spacing, iz * spacing};
        }

        // delta in metres; throws std::invalid_argument for delta <= 0
        static SpatialGrid regular(const Aperture &ap, double delta);
    };

} // namespace holodof

#endif // HOLODOF_GRID_HPP
