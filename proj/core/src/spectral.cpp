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

#include "holodof/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace holodof
{
    Aperture::Aperture(double lx, double ly, double lz, double lambda)
        : length_x(lx), length_y(ly), length_z(lz), wavelength(lambda)
    {
        if (!(lambda > 0.0))
            throw std::invalid_argument("aperture wavelength must be positive");
        if (!(lx > 0.0))
            throw std::invalid_argument("aperture length_x must be positive");
        if (ly < 0.0 || lz < 0.0)
            throw std::invalid_argument("aperture side lengths must be nonnegative");
        if (lz > 0.0 && ly == 0.0)
            throw std::invalid_argument("volumetric aperture requires length_y > 0");
        if (ly > 0.0 && lz > 0.0 && !(lz < std::min(lx, ly)))
            throw std::invalid_argument("volumetric aperture requires length_z < min(length_x, length_y)");
    }

    double Aperture::wavenumber() const { return holodof::wavenumber(wavelength); }

    Dimensionality Aperture::dimensionality() const
    {
        if (length_y == 0.0)
            return Dimensionality::Linear;
        if (length_z == 0.0)
            return Dimensionality::Planar;
        return Dimensionality::Volumetric;
    }

    double wavenumber(double lambda)
    {
        if (!(lambda > 0.0))
            throw std::invalid_argument("wavelength must be positive");
        return 2.0 * std::numbers::pi / lambda;
    }

    double gamma_z(double k_x, double k_y, double kappa)
    {
        const double rad2 = kappa * kappa - k_x * k_x - k_y * k_y;
        if (rad2 < 0.0)
            throw std::domain_error("(k_x, k_y) lies outside the propagating disk (evanescent region)");
        return std::sqrt(rad2);
    }

    double isotropic_psd(double k_x, double k_y, double kappa)
    {
        const double rad2 = kappa * kappa - k_x * k_x - k_y * k_y;
        if (rad2 < 0.0)
            return 0.0;
        if (rad2 == 0.0)
            return std::numeric_limits<double>::infinity();
        return std::numbers::pi / (kappa * std::sqrt(rad2));
    }

    SpectralFactor SpectralFactor::isotropic(double kappa)
    {
        const double a0 = 2.0 * std::numbers::pi / std::sqrt(kappa);
        return {[a0](double, double, Branch) { return a0; }, "isotropic"};
    }

    double SpectralFactor::weight(double k_x, double k_y, Branch b, double kappa) const
    {
        const double a = amplitude(k_x, k_y, b);
        return a * a * kappa / (4.0 * std::numbers::pi * std::numbers::pi);
    }

} // namespace holodof
