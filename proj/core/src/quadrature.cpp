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

#include "holodof/quadrature.hpp"
#include "holodof/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace holodof
{
    namespace
    {
        // Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
        constexpr double kron_x[8] = {
            0.991455371120812639206854697526329,
            0.949107912342758524526189684047851,
            0.864864423359769072789712788640926,
            0.741531185599394439863864773280788,
            0.586087235467691130294144838258730,
            0.405845151377397166906606412076961,
            0.207784955007898467600689403773245,
            0.000000000000000000000000000000000};
        constexpr double kron_w[8] = {
            0.022935322010529224963732008058970,
            0.063092092629978553290700663189204,
            0.104790010322250183839876322541518,
            0.140653259715525918745189590510238,
            0.169004726639267902826583426598550,
            0.190350578064785409913256402421014,
            0.204432940075298892414161999234649,
            0.209482141084727828012999174891714};
        constexpr double gauss_w[4] = {
            0.129484966168869693270611432679082,
            0.279705391489276667901467771423780,
            0.381830050505118944950369775488975,
            0.417959183673469387755102040816327};

        struct Segment
        {
            double a, b, value, error;
            bool operator<(const Segment &o) const { return error < o.error; }
        };

        Segment eval_segment(const std::function<double(double)> &f, double a, double b)
        {
            const double c = 0.5 * (a + b);
            const double h = 0.5 * (b - a);
            double kron = kron_w[7] * f(c);
            double gauss = gauss_w[3] * f(c);
            for (int i = 0; i < 7; ++i)
            {
                const double fl = f(c - h * kron_x[i]);
                const double fr = f(c + h * kron_x[i]);
                kron += kron_w[i] * (fl + fr);
                if (i % 2 == 1)
                    gauss += gauss_w[i / 2] * (fl + fr);
            }
            kron *= h;
            gauss *= h;
            double err = std::abs(kron - gauss);
            // standard QUADPACK-style sharpening of the raw difference
            if (err > 0.0)
                err = std::min(err, std::pow(200.0 * err, 1.5));
            return {a, b, kron, err};
        }
    } // namespace

    QuadratureResult integrate_adaptive(const std::function<double(double)> &f,
                                        double a, double b,
                                        const QuadratureOptions &opts)
    {
        if (a == b)
            return {0.0, 0.0, 0};

        std::priority_queue<Segment> heap;
        heap.push(eval_segment(f, a, b));
        double total_err = heap.top().error;
        double total_val = heap.top().value;
        int segments = 1;

        while (total_err > opts.abs_tol && segments < opts.max_segments)
        {
            Segment worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            if (mid <= worst.a || mid >= worst.b)
            {
                // interval no longer splittable in double precision
                heap.push(worst);
                break;
            }
            Segment left = eval_segment(f, worst.a, mid);
            Segment right = eval_segment(f, mid, worst.b);
            total_val += left.value + right.value - worst.value;
            total_err += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
            ++segments;
        }

        if (total_err > opts.abs_tol && segments >= opts.max_segments)
            throw numerical_error("adaptive quadrature did not reach the requested tolerance (achieved " +
                                      std::to_string(total_err) + ", requested " +
                                      std::to_string(opts.abs_tol) + ")",
                                  total_err);

        return {total_val, total_err, segments};
    }

    namespace
    {
        // [t0, t1] such that origin + t * (cos θ, sin θ) lies inside the
        // rectangle, or an empty range.
        bool ray_rect(double cs, double sn, const Rect &r, double &t0, double &t1)
        {
            t0 = 0.0;
            t1 = std::numeric_limits<double>::infinity();
            const double d[2] = {cs, sn};
            const double lo[2] = {r.x0, r.y0};
            const double hi[2] = {r.x1, r.y1};
            for (int a = 0; a < 2; ++a)
            {
                if (std::abs(d[a]) < 1e-300)
                {
                    if (lo[a] > 0.0 || hi[a] < 0.0)
                        return false;
                    continue;
                }
                double ta = lo[a] / d[a];
                double tb = hi[a] / d[a];
                if (ta > tb)
                    std::swap(ta, tb);
                t0 = std::max(t0, ta);
                t1 = std::min(t1, tb);
            }
            return t1 > t0;
        }

        // Map angle into a window of width 2π centred on `ref`.
        double wrap_near(double theta, double ref)
        {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            while (theta > ref + std::numbers::pi)
                theta -= two_pi;
            while (theta < ref - std::numbers::pi)
                theta += two_pi;
            return theta;
        }
    } // namespace

    double disk_rect_integral(const Rect &rect, double kappa,
                              const std::function<double(double, double)> &g,
                              const QuadratureOptions &opts)
    {
        // nearest point of the rectangle to the origin
        const double px = std::clamp(0.0, rect.x0, rect.x1);
        const double py = std::clamp(0.0, rect.y0, rect.y1);
        const double dmin = std::hypot(px, py);
        if (dmin >= kappa)
            return 0.0; // at most a zero-measure touch

        const bool around_origin = (dmin == 0.0);
        const double cx = 0.5 * (rect.x0 + rect.x1);
        const double cy = 0.5 * (rect.y0 + rect.y1);
        const double ref = around_origin ? 0.0 : std::atan2(cy, cx);

        // breakpoints: corner angles and circle/edge intersections
        std::vector<double> cuts;
        const double corners[4][2] = {{rect.x0, rect.y0}, {rect.x1, rect.y0}, {rect.x0, rect.y1}, {rect.x1, rect.y1}};
        for (auto &c : corners)
            if (c[0] != 0.0 || c[1] != 0.0)
                cuts.push_back(wrap_near(std::atan2(c[1], c[0]), ref));

        const double xs[2] = {rect.x0, rect.x1};
        const double ys[2] = {rect.y0, rect.y1};
        for (double x : xs)
            if (std::abs(x) < kappa)
            {
                const double y = std::sqrt(kappa * kappa - x * x);
                for (double s : {y, -y})
                    if (s >= rect.y0 && s <= rect.y1)
                        cuts.push_back(wrap_near(std::atan2(s, x), ref));
            }
        for (double y : ys)
            if (std::abs(y) < kappa)
            {
                const double x = std::sqrt(kappa * kappa - y * y);
                for (double s : {x, -x})
                    if (s >= rect.x0 && s <= rect.x1)
                        cuts.push_back(wrap_near(std::atan2(y, s), ref));
            }

        double sweep_lo, sweep_hi;
        if (around_origin && rect.x0 < 0.0 && rect.x1 > 0.0 && rect.y0 < 0.0 && rect.y1 > 0.0)
        {
            sweep_lo = ref - std::numbers::pi;
            sweep_hi = ref + std::numbers::pi;
        }
        else
        {
            sweep_lo = ref;
            sweep_hi = ref;
            for (double c : cuts)
            {
                sweep_lo = std::min(sweep_lo, c);
                sweep_hi = std::max(sweep_hi, c);
            }
        }
        cuts.push_back(sweep_lo);
        cuts.push_back(sweep_hi);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](double a, double b) { return std::abs(a - b) < 1e-14; }),
                   cuts.end());

        const double kappa2 = kappa * kappa;
        QuadratureOptions inner_opts = opts;
        inner_opts.abs_tol = opts.abs_tol / 8.0;

        // radial integral at fixed θ, already desingularised in u
        auto radial = [&](double theta) -> double {
            const double cs = std::cos(theta);
            const double sn = std::sin(theta);
            double t0, t1;
            if (!ray_rect(cs, sn, rect, t0, t1))
                return 0.0;
            t1 = std::min(t1, kappa);
            if (t1 <= t0)
                return 0.0;
            const double u_hi = std::sqrt(std::max(0.0, kappa2 - t0 * t0));
            const double u_lo = std::sqrt(std::max(0.0, kappa2 - t1 * t1));
            if (u_hi <= u_lo)
                return 0.0;
            auto f_u = [&](double u) {
                const double r = std::sqrt(std::max(0.0, kappa2 - u * u));
                return g(r * cs, r * sn);
            };
            return integrate_adaptive(f_u, u_lo, u_hi, inner_opts).value;
        };

        QuadratureOptions outer_opts = opts;
        outer_opts.abs_tol = opts.abs_tol / 2.0;

        double total = 0.0;
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
        {
            if (cuts[i + 1] - cuts[i] < 1e-14)
                continue;
            QuadratureOptions piece = outer_opts;
            piece.abs_tol = outer_opts.abs_tol * std::max(1e-3, (cuts[i + 1] - cuts[i]) / (sweep_hi - sweep_lo));
            // keep the outer goal above the inner quadrature's noise floor
            piece.abs_tol = std::max(piece.abs_tol, 2.0 * inner_opts.abs_tol);
            total += integrate_adaptive(radial, cuts[i], cuts[i + 1], piece).value;
        }
        return total;
    }

    double chord_integral(double k_x, double kappa,
                          const std::function<double(double, double)> &w,
                          const QuadratureOptions &opts)
    {
        const double c2 = kappa * kappa - k_x * k_x;
        if (c2 <= 0.0)
            return 0.0;
        const double c = std::sqrt(c2);
        auto f = [&](double t) { return w(k_x, c * std::sin(t)); };
        return integrate_adaptive(f, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, opts).value;
    }

} // namespace holodof
