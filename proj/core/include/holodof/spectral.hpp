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

#ifndef HOLODOF_SPECTRAL_HPP
#define HOLODOF_SPECTRAL_HPP

#include <functional>
#include <string>

namespace holodof
{
    enum class Dimensionality
    {
        Linear,    // segment along x
        Planar,    // rectangle in the xy-plane
        Volumetric // parallelepiped
    };

    // Up-going / down-going plane-wave family relative to the z-axis.
    enum class Branch
    {
        Plus,
        Minus
    };

    // Physical observation region: a rectangular aperture of side lengths
    // length_x >= length_y >= 0, length_z >= 0 (zero lengths collapse the
    // region to a rectangle or a segment), at a fixed carrier wavelength.
    //
    // Volumetric apertures additionally require length_z < min(length_x, length_y).
    struct Aperture
    {
        double length_x;   // [m], > 0
        double length_y;   // [m], 0 for a linear aperture
        double length_z;   // [m], 0 for linear/planar apertures
        double wavelength; // [m], > 0

        Aperture(double lx, double ly, double lz, double lambda);

        static Aperture linear(double lx, double lambda) { return {lx, 0.0, 0.0, lambda}; }
        static Aperture planar(double lx, double ly, double lambda) { return {lx, ly, 0.0, lambda}; }
        static Aperture volumetric(double lx, double ly, double lz, double lambda)
        {
            return {lx, ly, lz, lambda};
        }

        double wavenumber() const; // κ = 2π/λ [rad/m]
        Dimensionality dimensionality() const;
    };

    // κ = 2π/λ. Throws std::invalid_argument for λ <= 0.
    double wavenumber(double lambda);

    // γ(k_x,k_y) = sqrt(κ² − k_x² − k_y²), the z-axis wavenumber of a
    // propagating plane wave. Defined on the closed disk k_x²+k_y² <= κ²;
    // outside it γ would be imaginary (evanescent waves), which is an error
    // here: throws std::domain_error and leaves the caller to decide whether
    // the point counts as zero spectrum.
    double gamma_z(double k_x, double k_y, double kappa);

    // 2D power spectral density of the isotropic field at z = 0:
    //   S_h(k_x,k_y) = (π/κ) / γ(k_x,k_y)   inside the open disk,
    //   0                                    outside the closed disk,
    //   +inf                                 exactly on the circle (the
    //                                        integrable singularity; callers
    //                                        integrating across the rim must
    //                                        use the polar substitution in
    //                                        quadrature.hpp).
    // Total function, never throws.
    double isotropic_psd(double k_x, double k_y, double kappa);

    // Wavenumber-domain filter shaping an isotropic field into a
    // non-isotropic one. `amplitude` is A_h(k_x, k_y, ±γ); the branch PSDs
    // become S_h^±(k) = S_h(k) · A²/(4π²/κ). The isotropic factor uses the
    // constant A = 2π/√κ so that S_h^± = S_h.
    struct SpectralFactor
    {
        std::function<double(double k_x, double k_y, Branch)> amplitude;
        std::string label;

        static SpectralFactor isotropic(double kappa);

        // Dimensionless multiplier A²/(4π²/κ) applied to the isotropic PSD;
        // identically 1 for the isotropic factor.
        double weight(double k_x, double k_y, Branch b, double kappa) const;
    };

} // namespace holodof

#endif // HOLODOF_SPECTRAL_HPP
