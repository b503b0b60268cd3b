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

#ifndef HOLODOF_LATTICE_HPP
#define HOLODOF_LATTICE_HPP

#include "holodof/quadrature.hpp"
#include "holodof/spectral.hpp"

#include <vector>

namespace holodof
{
    // One resolvable plane-wave mode. gamma is γ_{ℓm} = γ(2πℓ/L_x, 2πm/L_y);
    // var_plus / var_minus are the powers of the up-/down-going coefficients.
    struct LatticeMode
    {
        int ell = 0;
        int m = 0;
        double gamma = 0.0;
        double var_plus = 0.0;
        double var_minus = 0.0;
        bool on_circle = false; // lattice point exactly on |k| = κ (γ == 0);
                                // the two z-exponentials degenerate, steering
                                // rank drops to 1
    };

    // The finite set of plane-wave modes resolvable by an aperture: all
    // integer pairs with (ℓλ/L_x)² + (mλ/L_y)² <= 1. Linear apertures reduce
    // to the half-open index band ℓ ∈ [−L_x/λ, L_x/λ − 1], m = 0.
    struct WavenumberLattice
    {
        Aperture aperture;
        Dimensionality dimensionality;
        std::vector<LatticeMode> modes; // unique, sorted by (ell, m)
        bool variances_computed = false;

        std::size_t size() const { return modes.size(); }
        double variance_sum(Branch b) const;
        // Σ(σ²₊ + σ²₋), or Σσ²₊ only when a single half-space contributes
        double total_variance(int half_spaces = 2) const;
    };

    // Membership test of the lattice ellipse, with a relative guard of 1e-9
    // so that apertures specified in wavelength units keep their intended
    // boundary modes when L/λ picks up floating-point dust. Linear apertures
    // use the half-open convention (include −L_x/λ, exclude +L_x/λ).
    bool in_lattice(int ell, int m, const Aperture &ap);

    // Index set + γ only; variances left at zero.
    WavenumberLattice enumerate_lattice(const Aperture &ap);

    // Fills var_plus/var_minus of every mode by quadrature of the branch PSD
    // over the mode's wavenumber region.
    void compute_variances(WavenumberLattice &lattice, const SpectralFactor &factor,
                           const QuadratureOptions &opts = {});

    WavenumberLattice build_lattice(const Aperture &ap, const SpectralFactor &factor);

    // Wavenumber region owned by mode (ℓ,m) of a 2D/3D aperture. Regions
    // partition the plane by truncation toward zero, k ↦ trunc(k/δ): the
    // spacing-δ cell anchored at (2πℓ/L_x, 2πm/L_y) on its corner nearest the
    // origin (double width across index 0). Every propagating wavenumber is
    // owned by a member mode, so the member variances always account for the
    // full field power.
    Rect mode_region(int ell, int m, const Aperture &ap);

    // 1D strip owned by mode ℓ of a linear aperture: [2πℓ/L_x, 2π(ℓ+1)/L_x].
    // With the half-open index band these strips tile [−κ, κ] exactly.
    void strip_region(int ell, const Aperture &ap, double &k_lo, double &k_hi);

    // Power of one branch coefficient: the branch PSD integrated over the
    // mode's region clipped to the propagating disk, /(2π)². For linear
    // apertures this is the strip integral of the collapsed 1D density.
    // Throws std::invalid_argument when (ℓ,m) is not a member.
    double mode_variance(int ell, int m, const Aperture &ap, const SpectralFactor &factor,
                         Branch branch, const QuadratureOptions &opts = {});

    // Continuum estimate of the member count for 2D/3D apertures:
    // π L_x L_y / λ². Throws std::invalid_argument for linear apertures
    // (whose count is 2 L_x / λ).
    double cardinality_estimate(const Aperture &ap);

} // namespace holodof

#endif // HOLODOF_LATTICE_HPP
