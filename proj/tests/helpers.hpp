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
//
// Test-only oracles, kept independent of the library code paths they check.

#ifndef HOLODOF_TESTS_HELPERS_HPP
#define HOLODOF_TESTS_HELPERS_HPP

#include "holodof/spectral.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testhelpers
{
    // Brute-force enumeration of the lattice index set over the bounding
    // box, written against the membership definition directly.
    inline std::set<std::pair<int, int>> brute_force_lattice(double lx, double ly, double lambda)
    {
        std::set<std::pair<int, int>> out;
        if (ly == 0.0)
        {
            const double ratio = lx / lambda;
            const int bound = static_cast<int>(std::ceil(ratio)) + 2;
            for (int ell = -bound; ell <= bound; ++ell)
                if (ell >= -ratio && ell < ratio)
                    out.insert({ell, 0});
            return out;
        }
        const int bx = static_cast<int>(std::ceil(lx / lambda)) + 2;
        const int by = static_cast<int>(std::ceil(ly / lambda)) + 2;
        for (int ell = -bx; ell <= bx; ++ell)
            for (int m = -by; m <= by; ++m)
            {
                const double qx = ell * lambda / lx;
                const double qy = m * lambda / ly;
                if (qx * qx + qy * qy <= 1.0)
                    out.insert({ell, m});
            }
        return out;
    }

    // Composite Simpson, the independent quadrature for test oracles.
    inline double simpson(const std::function<double(double)> &f, double a, double b, int n = 2000)
    {
        if (n % 2)
            ++n;
        const double h = (b - a) / n;
        double acc = f(a) + f(b);
        for (int i = 1; i < n; ++i)
            acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
        return acc * h / 3.0;
    }

    // Plain Monte Carlo estimate of ∬_rect f dA with its standard error.
    // Samples exactly on the singular circle |k| = κ are redrawn.
    struct McEstimate
    {
        double value;
        double std_error;
    };

    inline McEstimate mc_rect_integral(double x0, double x1, double y0, double y1, double kappa,
                                       const std::function<double(double, double)> &f,
                                       std::int64_t n_samples, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
        const double kappa2 = kappa * kappa;
        double sum = 0.0, sum2 = 0.0;
        for (std::int64_t i = 0; i < n_samples; ++i)
        {
            double x, y;
            do
            {
                x = ux(rng);
                y = uy(rng);
            } while (x * x + y * y == kappa2); // reject exact-boundary points
            const double v = f(x, y);
            sum += v;
            sum2 += v * v;
        }
        const double area = (x1 - x0) * (y1 - y0);
        const double mean = sum / static_cast<double>(n_samples);
        const double var = std::max(0.0, sum2 / static_cast<double>(n_samples) - mean * mean);
        return {area * mean, area * std::sqrt(var / static_cast<double>(n_samples))};
    }

    inline double sample_mean(const std::vector<double> &v)
    {
        double s = 0.0;
        for (double x : v)
            s += x;
        return s / static_cast<double>(v.size());
    }

    inline double sample_variance(const std::vector<double> &v)
    {
        const double m = sample_mean(v);
        double s = 0.0;
        for (double x : v)
            s += (x - m) * (x - m);
        return s / static_cast<double>(v.size() - 1);
    }

} // namespace testhelpers

#endif // HOLODOF_TESTS_HELPERS_HPP
