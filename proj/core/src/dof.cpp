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

#include "holodof/dof.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace holodof
{
    double theoretical_dof(const Aperture &ap, Dimensionality dim, int half_spaces)
    {
        if (half_spaces != 1 && half_spaces != 2)
            throw std::invalid_argument("half_spaces must be 1 or 2");
        const double lam = ap.wavelength;
        switch (dim)
        {
        case Dimensionality::Linear:
            if (ap.dimensionality() != Dimensionality::Linear)
                throw std::invalid_argument("linear DoF requested for a non-linear aperture");
            return 2.0 * ap.length_x / lam;
        case Dimensionality::Planar:
            if (ap.length_y <= 0.0)
                throw std::invalid_argument("planar DoF requested for an aperture without length_y");
            return std::numbers::pi * ap.length_x * ap.length_y / (lam * lam);
        case Dimensionality::Volumetric:
            if (ap.dimensionality() != Dimensionality::Volumetric)
                throw std::invalid_argument("volumetric DoF requested for a non-volumetric aperture");
            return (half_spaces == 2 ? 2.0 : 1.0) * std::numbers::pi * ap.length_x * ap.length_y /
                   (lam * lam);
        }
        throw std::invalid_argument("unknown dimensionality");
    }

    SteeringMatrix::SteeringMatrix(double gamma_lm, std::vector<double> z)
        : gamma(gamma_lm), z_samples(std::move(z))
    {
        if (z_samples.empty())
            throw std::invalid_argument("steering matrix needs at least one z sample");
        if (gamma < 0.0)
            throw std::invalid_argument("gamma must be nonnegative");
    }

    Eigen::MatrixXcd SteeringMatrix::matrix() const
    {
        const auto n = static_cast<Eigen::Index>(z_samples.size());
        Eigen::MatrixXcd a(n, 2);
        for (Eigen::Index i = 0; i < n; ++i)
        {
            const double phase = gamma * z_samples[static_cast<std::size_t>(i)];
            a(i, 0) = std::polar(1.0, phase);
            a(i, 1) = std::polar(1.0, -phase);
        }
        return a;
    }

    int SteeringMatrix::rank() const
    {
        const Eigen::MatrixXcd a = matrix();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
        const double norm = svd.singularValues()(0);
        int r = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-10 * norm)
                ++r;
        return r;
    }

    bool SteeringMatrix::degenerate_sampling() const
    {
        if (gamma == 0.0 || z_samples.size() < 2)
            return false;
        // columns collapse iff e^{−2jγ(z_i − z_0)} is constant, i.e. every
        // spacing is a multiple of π/γ
        const double base = z_samples.front();
        for (std::size_t i = 1; i < z_samples.size(); ++i)
        {
            const double cycles = gamma * (z_samples[i] - base) / std::numbers::pi;
            if (std::abs(cycles - std::round(cycles)) > 1e-9)
                return false;
        }
        return true;
    }

    int steering_rank(double gamma_lm, const std::vector<double> &z_samples)
    {
        return SteeringMatrix(gamma_lm, z_samples).rank();
    }

} // namespace holodof
