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
#include "holodof/ensemble.hpp"
#include "holodof/spectrum.hpp"
#include "holodof/synthesis.hpp"

#include <benchmark/benchmark.h>

using namespace holodof;

namespace
{
    WavenumberLattice planar_lattice(double side)
    {
        const Aperture ap = Aperture::planar(side, side, 1.0);
        return build_lattice(ap, SpectralFactor::isotropic(ap.wavenumber()));
    }
} // namespace

static void BM_EnumerateLattice(benchmark::State &state)
{
    const Aperture ap = Aperture::planar(static_cast<double>(state.range(0)),
                                         static_cast<double>(state.range(0)), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_lattice(ap));
}
BENCHMARK(BM_EnumerateLattice)->Arg(8)->Arg(16)->Arg(32);

static void BM_ModeVariances(benchmark::State &state)
{
    const Aperture ap = Aperture::planar(static_cast<double>(state.range(0)),
                                         static_cast<double>(state.range(0)), 1.0);
    const SpectralFactor iso = SpectralFactor::isotropic(ap.wavenumber());
    for (auto _ : state)
    {
        WavenumberLattice lat = enumerate_lattice(ap);
        compute_variances(lat, iso);
        benchmark::DoNotOptimize(lat.total_variance());
    }
}
BENCHMARK(BM_ModeVariances)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Synthesize2D(benchmark::State &state)
{
    const WavenumberLattice lat = planar_lattice(8.0);
    const SpatialGrid grid = SpatialGrid::regular(lat.aperture, 0.25);
    const ModeCoefficients coeffs = draw_realization(lat, 42, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize_2d(coeffs, lat, grid));
}
BENCHMARK(BM_Synthesize2D)->Unit(benchmark::kMicrosecond);

static void BM_BuildEnsemble(benchmark::State &state)
{
    const WavenumberLattice lat = planar_lattice(4.0);
    const SpatialGrid grid = SpatialGrid::regular(lat.aperture, 0.25);
    const int m = 4 * grid.size();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_ensemble(lat, grid, m, 42));
    state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_BuildEnsemble)->Unit(benchmark::kMillisecond);

static void BM_GramSpectrum(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const Eigen::MatrixXcd h = iid_baseline_ensemble(n, 4 * n, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(gram_spectrum(h));
}
BENCHMARK(BM_GramSpectrum)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_SteeringRank(benchmark::State &state)
{
    const std::vector<double> z = {0.0, 0.25, 0.5, 0.75};
    for (auto _ : state)
        benchmark::DoNotOptimize(steering_rank(3.1, z));
}
BENCHMARK(BM_SteeringRank);

BENCHMARK_MAIN();
