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

#include "holodof/ensemble.hpp"
#include "holodof/synthesis.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace holodof
{
    namespace
    {
        // Fixed block width: per-block GEMM shapes never depend on the
        // worker count, which keeps results byte-identical under any
        // parallel schedule.
        constexpr int block_width = 64;

        void run_blocks(int n_blocks, int workers, const std::function<void(int)> &work)
        {
            workers = std::max(1, workers);
            if (workers == 1 || n_blocks <= 1)
            {
                for (int b = 0; b < n_blocks; ++b)
                    work(b);
                return;
            }
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            const int n_threads = std::min(workers, n_blocks);
            pool.reserve(static_cast<std::size_t>(n_threads));
            for (int t = 0; t < n_threads; ++t)
                pool.emplace_back([&] {
                    for (int b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1))
                        work(b);
                });
            for (auto &th : pool)
                th.join();
        }
    } // namespace

    ChannelEnsemble build_ensemble(const WavenumberLattice &lattice, const SpatialGrid &grid,
                                   int m_realizations, std::uint64_t master_seed,
                                   int half_spaces, int workers)
    {
        if (!lattice.variances_computed)
            throw std::logic_error("lattice variances must be computed before building an ensemble");
        if (half_spaces != 1 && half_spaces != 2)
            throw std::invalid_argument("half_spaces must be 1 or 2");
        const int n = grid.size();
        if (m_realizations < 4 * n)
            throw std::invalid_argument("ensemble needs M >= 4N for a usable spectrum (requested M = " +
                                        std::to_string(m_realizations) + ", N = " + std::to_string(n) + ")");

        ChannelEnsemble ens;
        ens.master_seed = master_seed;
        ens.half_spaces = half_spaces;
        ens.low_m_warning = m_realizations < 10 * n;
        ens.matrix.resize(n, m_realizations);

        const Eigen::MatrixXcd phi = planar_basis(lattice, grid);
        const auto K = static_cast<Eigen::Index>(lattice.size());
        const int nxy = grid.nx * grid.ny;
        const int nz = grid.nz;

        const int n_blocks = (m_realizations + block_width - 1) / block_width;
        run_blocks(n_blocks, workers, [&](int b) {
            const int j0 = b * block_width;
            const int cols = std::min(block_width, m_realizations - j0);
            // per-z-plane combined coefficients for all columns of the block
            Eigen::MatrixXcd cz(K, static_cast<Eigen::Index>(cols) * nz);
            for (int c = 0; c < cols; ++c)
            {
                const ModeCoefficients mc =
                    draw_realization(lattice, master_seed, static_cast<std::uint64_t>(j0 + c), half_spaces);
                for (int iz = 0; iz < nz; ++iz)
                {
                    const double z = iz * grid.spacing;
                    auto col = cz.col(static_cast<Eigen::Index>(c) * nz + iz);
                    for (Eigen::Index k = 0; k < K; ++k)
                    {
                        const double g = lattice.modes[static_cast<std::size_t>(k)].gamma;
                        col(k) = mc.plus[static_cast<std::size_t>(k)] * std::polar(1.0, g * z) +
                                 mc.minus[static_cast<std::size_t>(k)] * std::polar(1.0, -g * z);
                    }
                }
            }
            const Eigen::MatrixXcd planes = phi * cz; // nxy × (cols·nz)
            for (int c = 0; c < cols; ++c)
                for (int iz = 0; iz < nz; ++iz)
                    ens.matrix.col(j0 + c).segment(static_cast<Eigen::Index>(iz) * nxy, nxy) =
                        planes.col(static_cast<Eigen::Index>(c) * nz + iz);
        });

        return ens;
    }

    Eigen::MatrixXcd iid_baseline_ensemble(int n, int m_realizations, std::uint64_t master_seed,
                                           int workers)
    {
        if (n < 1 || m_realizations < 1)
            throw std::invalid_argument("baseline ensemble needs n >= 1 and M >= 1");
        Eigen::MatrixXcd h(n, m_realizations);
        const int n_blocks = (m_realizations + block_width - 1) / block_width;
        run_blocks(n_blocks, workers, [&](int b) {
            const int j0 = b * block_width;
            const int cols = std::min(block_width, m_realizations - j0);
            for (int c = 0; c < cols; ++c)
            {
                GaussianStream stream(master_seed, stream_domain::iid_baseline,
                                      static_cast<std::uint64_t>(j0 + c));
                h.col(j0 + c) = iid_rayleigh(n, stream);
            }
        });
        return h;
    }

} // namespace holodof
