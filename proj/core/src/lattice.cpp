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

#include "holodof/lattice.hpp"
#include "holodof/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holodof
{
    namespace
    {
        constexpr double membership_eps = 1e-9;

        bool in_linear_band(int ell, double ratio)
        {
            // include −L/λ, exclude +L/λ; the guard keeps intended boundary
            // indices stable against dust in L/λ
            const double guard = membership_eps * std::max(1.0, ratio);
            return ell >= -ratio - guard && ell < ratio - guard;
        }
    } // namespace

    bool in_lattice(int ell, int m, const Aperture &ap)
    {
        if (ap.dimensionality() == Dimensionality::Linear)
            return m == 0 && in_linear_band(ell, ap.length_x / ap.wavelength);

        const double qx = ell * ap.wavelength / ap.length_x;
        const double qy = m * ap.wavelength / ap.length_y;
        return qx * qx + qy * qy <= 1.0 + membership_eps;
    }

    double WavenumberLattice::variance_sum(Branch b) const
    {
        double s = 0.0;
        for (const auto &mode : modes)
            s += (b == Branch::Plus) ? mode.var_plus : mode.var_minus;
        return s;
    }

    double WavenumberLattice::total_variance(int half_spaces) const
    {
        double s = variance_sum(Branch::Plus);
        if (half_spaces == 2)
            s += variance_sum(Branch::Minus);
        return s;
    }

    WavenumberLattice enumerate_lattice(const Aperture &ap)
    {
        WavenumberLattice lat{ap, ap.dimensionality(), {}, false};
        const double kappa = ap.wavenumber();

        const int lmax = static_cast<int>(std::ceil(ap.length_x / ap.wavelength)) + 1;
        const int mmax = (lat.dimensionality == Dimensionality::Linear)
                             ? 0
                             : static_cast<int>(std::ceil(ap.length_y / ap.wavelength)) + 1;

        for (int ell = -lmax; ell <= lmax; ++ell)
            for (int m = -mmax; m <= mmax; ++m)
            {
                if (!in_lattice(ell, m, ap))
                    continue;
                LatticeMode mode;
                mode.ell = ell;
                mode.m = m;
                const double kx = 2.0 * std::numbers::pi * ell / ap.length_x;
                const double ky = (lat.dimensionality == Dimensionality::Linear)
                                      ? 0.0
                                      : 2.0 * std::numbers::pi * m / ap.length_y;
                const double rad2 = kappa * kappa - kx * kx - ky * ky;
                mode.gamma = std::sqrt(std::max(0.0, rad2));
                mode.on_circle = rad2 <= kappa * kappa * 4.0 * membership_eps;
                if (mode.on_circle)
                    mode.gamma = 0.0; // snap boundary modes: the z-exponentials degenerate
                lat.modes.push_back(mode);
            }

        // (0,0) is always a member: the band and the ellipse both contain it
        std::sort(lat.modes.begin(), lat.modes.end(), [](const LatticeMode &a, const LatticeMode &b) {
            return a.ell != b.ell ? a.ell < b.ell : a.m < b.m;
        });
        return lat;
    }

    Rect mode_region(int ell, int m, const Aperture &ap)
    {
        if (ap.dimensionality() == Dimensionality::Linear)
            throw std::invalid_argument("mode_region is defined for 2D/3D apertures; use strip_region");
        const double dx = 2.0 * std::numbers::pi / ap.length_x;
        const double dy = 2.0 * std::numbers::pi / ap.length_y;
        auto interval = [](int idx, double d, double &lo, double &hi) {
            if (idx > 0)
            {
                lo = idx * d;
                hi = (idx + 1) * d;
            }
            else if (idx < 0)
            {
                lo = (idx - 1) * d;
                hi = idx * d;
            }
            else
            {
                lo = -d;
                hi = d;
            }
        };
        Rect r{};
        interval(ell, dx, r.x0, r.x1);
        interval(m, dy, r.y0, r.y1);
        return r;
    }

    void strip_region(int ell, const Aperture &ap, double &k_lo, double &k_hi)
    {
        const double d = 2.0 * std::numbers::pi / ap.length_x;
        k_lo = ell * d;
        k_hi = (ell + 1) * d;
    }

    double mode_variance(int ell, int m, const Aperture &ap, const SpectralFactor &factor,
                         Branch branch, const QuadratureOptions &opts)
    {
        if (!in_lattice(ell, m, ap))
            throw std::invalid_argument("mode (" + std::to_string(ell) + ", " + std::to_string(m) +
                                        ") is not a lattice member");
        const double kappa = ap.wavenumber();
        const double pi = std::numbers::pi;

        if (ap.dimensionality() == Dimensionality::Linear)
        {
            // strip integral of the collapsed density
            //   S₁(k_x) = (1/2π) ∫ S_h w dk_y = (1/2κ) ∫ w(k_x, c sin t) dt
            double k_lo, k_hi;
            strip_region(ell, ap, k_lo, k_hi);
            k_lo = std::max(k_lo, -kappa);
            k_hi = std::min(k_hi, kappa);
            if (k_hi <= k_lo)
                return 0.0;
            auto w = [&](double kx, double ky) { return factor.weight(kx, ky, branch, kappa); };
            auto density = [&](double kx) { return chord_integral(kx, kappa, w, opts) / (2.0 * kappa); };
            return integrate_adaptive(density, k_lo, k_hi, opts).value / (2.0 * pi);
        }

        // σ² = ∬_{region ∩ D} S_h w /(2π)² = (1/4πκ) ∬ w/γ
        const Rect region = mode_region(ell, m, ap);
        auto w = [&](double kx, double ky) { return factor.weight(kx, ky, branch, kappa); };
        return disk_rect_integral(region, kappa, w, opts) / (4.0 * pi * kappa);
    }

    void compute_variances(WavenumberLattice &lattice, const SpectralFactor &factor,
                           const QuadratureOptions &opts)
    {
        for (auto &mode : lattice.modes)
        {
            mode.var_plus = mode_variance(mode.ell, mode.m, lattice.aperture, factor, Branch::Plus, opts);
            mode.var_minus = mode_variance(mode.ell, mode.m, lattice.aperture, factor, Branch::Minus, opts);
        }
        lattice.variances_computed = true;
    }

    WavenumberLattice build_lattice(const Aperture &ap, const SpectralFactor &factor)
    {
        WavenumberLattice lat = enumerate_lattice(ap);
        compute_variances(lat, factor);
        return lat;
    }

    double cardinality_estimate(const Aperture &ap)
    {
        if (ap.dimensionality() == Dimensionality::Linear)
            throw std::invalid_argument("cardinality_estimate needs a 2D/3D aperture; a segment resolves 2·L_x/λ modes");
        return std::numbers::pi * ap.length_x * ap.length_y / (ap.wavelength * ap.wavelength);
    }

} // namespace holodof
