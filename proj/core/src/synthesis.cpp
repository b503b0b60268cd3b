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

#include "holodof/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holodof
{
    ModeCoefficients draw_coefficients(const WavenumberLattice &lattice, GaussianStream &stream)
    {
        if (!lattice.variances_computed)
            throw std::logic_error("lattice variances must be computed before drawing coefficients");
        ModeCoefficients c;
        c.plus.reserve(lattice.size());
        c.minus.reserve(lattice.size());
        for (const auto &mode : lattice.modes)
        {
            c.plus.push_back(stream.complex_gaussian(mode.var_plus));
            c.minus.push_back(stream.complex_gaussian(mode.var_minus));
        }
        return c;
    }

    ModeCoefficients draw_realization(const WavenumberLattice &lattice, std::uint64_t master_seed,
                                      std::uint64_t index, int half_spaces)
    {
        GaussianStream stream(master_seed, stream_domain::field, index);
        ModeCoefficients c = draw_coefficients(lattice, stream);
        if (half_spaces == 1)
            std::fill(c.minus.begin(), c.minus.end(), std::complex<double>(0.0, 0.0));
        c.master_seed = master_seed;
        c.realization = index;
        return c;
    }

    Eigen::MatrixXcd planar_basis(const WavenumberLattice &lattice, const SpatialGrid &grid)
    {
        const auto &ap = lattice.aperture;
        const int nxy = grid.nx * grid.ny;
        const auto K = static_cast<Eigen::Index>(lattice.size());
        Eigen::MatrixXcd phi(nxy, K);
        const double two_pi = 2.0 * std::numbers::pi;
        for (Eigen::Index k = 0; k < K; ++k)
        {
            const auto &mode = lattice.modes[static_cast<std::size_t>(k)];
            const double fx = two_pi * mode.ell / ap.length_x;
            const double fy = (ap.length_y > 0.0) ? two_pi * mode.m / ap.length_y : 0.0;
            for (int iy = 0; iy < grid.ny; ++iy)
                for (int ix = 0; ix < grid.nx; ++ix)
                {
                    const double phase = fx * (ix * grid.spacing) + fy * (iy * grid.spacing);
                    phi(ix + grid.nx * iy, k) = std::polar(1.0, phase);
                }
        }
        return phi;
    }

    namespace
    {
        Eigen::VectorXcd combined_coefficients(const ModeCoefficients &coeffs,
                                               const WavenumberLattice &lattice, double z)
        {
            const auto K = static_cast<Eigen::Index>(lattice.size());
            if (static_cast<Eigen::Index>(coeffs.plus.size()) != K ||
                static_cast<Eigen::Index>(coeffs.minus.size()) != K)
                throw std::invalid_argument("coefficient count does not match the lattice");
            Eigen::VectorXcd c(K);
            for (Eigen::Index k = 0; k < K; ++k)
            {
                const double g = lattice.modes[static_cast<std::size_t>(k)].gamma;
                c(k) = coeffs.plus[static_cast<std::size_t>(k)] * std::polar(1.0, g * z) +
                       coeffs.minus[static_cast<std::size_t>(k)] * std::polar(1.0, -g * z);
            }
            return c;
        }
    } // namespace

    Eigen::VectorXcd synthesize_1d(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                   const SpatialGrid &grid)
    {
        if (lattice.dimensionality != Dimensionality::Linear)
            throw std::invalid_argument("synthesize_1d requires a linear lattice");
        if (grid.dimensionality() != Dimensionality::Linear)
            throw std::invalid_argument("synthesize_1d requires a 1D grid");
        return planar_basis(lattice, grid) * combined_coefficients(coeffs, lattice, 0.0);
    }

    Eigen::VectorXcd synthesize_2d(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                   const SpatialGrid &grid)
    {
        if (grid.nz != 1)
            throw std::invalid_argument("synthesize_2d requires a planar grid (z = 0)");
        return planar_basis(lattice, grid) * combined_coefficients(coeffs, lattice, 0.0);
    }

    Eigen::VectorXcd synthesize_3d(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                   const SpatialGrid &grid)
    {
        const int nxy = grid.nx * grid.ny;
        const Eigen::MatrixXcd phi = planar_basis(lattice, grid);
        Eigen::VectorXcd h(grid.size());
        for (int iz = 0; iz < grid.nz; ++iz)
        {
            const double z = iz * grid.spacing;
            h.segment(static_cast<Eigen::Index>(iz) * nxy, nxy) =
                phi * combined_coefficients(coeffs, lattice, z);
        }
        return h;
    }

    std::complex<double> evaluate_series(const ModeCoefficients &coeffs, const WavenumberLattice &lattice,
                                         double x, double y, double z)
    {
        const auto &ap = lattice.aperture;
        const double two_pi = 2.0 * std::numbers::pi;
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = 0; k < lattice.size(); ++k)
        {
            const auto &mode = lattice.modes[k];
            const double g = mode.gamma;
            const std::complex<double> cz =
                coeffs.plus[k] * std::polar(1.0, g * z) + coeffs.minus[k] * std::polar(1.0, -g * z);
            double phase = two_pi * mode.ell * x / ap.length_x;
            if (ap.length_y > 0.0)
                phase += two_pi * mode.m * y / ap.length_y;
            acc += cz * std::polar(1.0, phase);
        }
        return acc;
    }

    Eigen::VectorXcd iid_rayleigh(int n, GaussianStream &stream)
    {
        if (n < 1)
            throw std::invalid_argument("iid_rayleigh needs n >= 1");
        Eigen::VectorXcd v(n);
        for (int i = 0; i < n; ++i)
            v(i) = stream.complex_gaussian(1.0);
        return v;
    }

} // namespace holodof
