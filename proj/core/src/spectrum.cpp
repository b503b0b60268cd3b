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

#include "holodof/spectrum.hpp"
#include "holodof/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace holodof
{
    EigenSpectrum gram_spectrum(const Eigen::MatrixXcd &h_matrix)
    {
        const auto n = h_matrix.rows();
        const auto m = h_matrix.cols();
        if (n == 0 || m == 0)
            throw std::invalid_argument("gram_spectrum needs a nonempty ensemble");

        Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(n, n);
        gram.selfadjointView<Eigen::Lower>().rankUpdate(h_matrix, 1.0 / static_cast<double>(m));
        gram = gram.selfadjointView<Eigen::Lower>(); // fill the upper triangle for residuals

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
        if (solver.info() != Eigen::Success)
            throw numerical_error("Hermitian eigensolver failed to converge on the Gram matrix "
                                  "(N = " + std::to_string(n) + ")",
                                  std::numeric_limits<double>::quiet_NaN());

        EigenSpectrum spec;
        spec.values = solver.eigenvalues().reverse(); // ascending -> descending
        spec.trace = gram.real().trace();

        const double lambda_max = std::max(spec.values(0), 0.0);
        const double eps_floor = -std::numeric_limits<double>::epsilon() * std::max(spec.trace, 0.0);

        // residual spot-check on the dominant pairs
        const int n_check = static_cast<int>(std::min<Eigen::Index>(10, n));
        for (int i = 0; i < n_check; ++i)
        {
            const Eigen::Index col = n - 1 - i; // solver stores ascending
            const Eigen::VectorXcd v = solver.eigenvectors().col(col);
            const double lambda = solver.eigenvalues()(col);
            const double residual = (gram * v - lambda * v).norm();
            if (residual > 1e-8 * std::max(lambda_max, 1e-300))
                throw numerical_error("eigenpair residual " + std::to_string(residual) +
                                          " exceeds 1e-8·λ_max = " + std::to_string(1e-8 * lambda_max) +
                                          " at index " + std::to_string(i) +
                                          " (condition estimate λ_max/λ_min = " +
                                          std::to_string(lambda_max / std::max(spec.values(n - 1),
                                                                               std::numeric_limits<double>::min())) +
                                          ")",
                                      residual);
        }

        for (Eigen::Index i = 0; i < n; ++i)
        {
            if (spec.values(i) < eps_floor * static_cast<double>(n))
                throw numerical_error("eigenvalue " + std::to_string(spec.values(i)) +
                                          " is negative beyond machine precision of the trace",
                                      spec.values(i));
            spec.values(i) = std::max(spec.values(i), 0.0);
        }
        return spec;
    }

    EigenSpectrum gram_spectrum(const ChannelEnsemble &ensemble)
    {
        return gram_spectrum(ensemble.matrix);
    }

    double effective_dof(const EigenSpectrum &spectrum, TraceFraction policy)
    {
        if (!(policy.tau > 0.0 && policy.tau < 1.0))
            throw std::invalid_argument("trace-fraction τ must lie in (0, 1)");
        const double total = spectrum.values.sum();
        if (total <= 0.0)
            return 0.0;
        double acc = 0.0;
        for (Eigen::Index i = 0; i < spectrum.values.size(); ++i)
        {
            acc += spectrum.values(i);
            if (acc >= policy.tau * total)
                return static_cast<double>(i + 1);
        }
        return static_cast<double>(spectrum.values.size());
    }

    double effective_dof(const EigenSpectrum &spectrum, RelativeFloor policy)
    {
        if (!(policy.rho > 0.0 && policy.rho < 1.0))
            throw std::invalid_argument("relative floor ρ must lie in (0, 1)");
        if (spectrum.values.size() == 0 || spectrum.values(0) <= 0.0)
            return 0.0;
        const double floor = policy.rho * spectrum.values(0);
        double count = 0.0;
        for (Eigen::Index i = 0; i < spectrum.values.size(); ++i)
            if (spectrum.values(i) >= floor)
                count += 1.0;
        return count;
    }

} // namespace holodof
