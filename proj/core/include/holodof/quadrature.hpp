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

#ifndef HOLODOF_QUADRATURE_HPP
#define HOLODOF_QUADRATURE_HPP

#include <functional>

namespace holodof
{
    struct QuadratureOptions
    {
        double abs_tol = 1e-12; // absolute tolerance on the integral value
        int max_segments = 20000;
    };

    struct QuadratureResult
    {
        double value = 0.0;
        double error = 0.0; // achieved error estimate
        int segments = 0;
    };

    // Globally-adaptive Gauss-Kronrod 7/15 on [a, b]. Splits the segment with
    // the largest error estimate until the sum of estimates drops below
    // abs_tol. Throws numerical_error (carrying the achieved estimate) when
    // the segment budget runs out first.
    QuadratureResult integrate_adaptive(const std::function<double(double)> &f,
                                        double a, double b,
                                        const QuadratureOptions &opts = {});

    // Axis-aligned rectangle in the wavenumber plane.
    struct Rect
    {
        double x0, x1, y0, y1;
        double width() const { return x1 - x0; }
        double height() const { return y1 - y0; }
    };

    // ∬_{rect ∩ D(κ)} g(k_x,k_y) / γ(k_x,k_y) dk_x dk_y
    //
    // The 1/γ factor is singular on the circle |k| = κ. The integral is done
    // in polar coordinates with the substitution u = sqrt(κ² − r²), under
    // which r dr / γ = −du and the integrand becomes smooth; the θ sweep is
    // split at every angle where the ray-rectangle intersection changes edge
    // or crosses the circle. g must be finite on the closed disk.
    double disk_rect_integral(const Rect &rect, double kappa,
                              const std::function<double(double, double)> &g,
                              const QuadratureOptions &opts = {});

    // ∫ w(k_x, k_y) / γ dk_y over the full chord k_y² <= κ² − k_x², with the
    // substitution k_y = c sin t (c the half-chord) that removes both
    // endpoint singularities: equals ∫_{-π/2}^{π/2} w(k_x, c sin t) dt.
    // Returns 0 for |k_x| >= κ.
    double chord_integral(double k_x, double kappa,
                          const std::function<double(double, double)> &w,
                          const QuadratureOptions &opts = {});

} // namespace holodof

#endif // HOLODOF_QUADRATURE_HPP
