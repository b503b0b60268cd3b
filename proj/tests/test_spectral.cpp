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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holodof/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace holodof;
namespace pi_ns = std::numbers;

TEST_CASE("wavenumber definition")
{
    CHECK(wavenumber(1.0) == doctest::Approx(2.0 * pi_ns::pi).epsilon(1e-15));
    CHECK(wavenumber(0.1) == doctest::Approx(62.831853071795864).epsilon(1e-15));
    CHECK(wavenumber(2.0 * pi_ns::pi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(wavenumber(0.0), std::invalid_argument);
    CHECK_THROWS_AS(wavenumber(-1.0), std::invalid_argument);
}

TEST_CASE("gamma_z on the propagating disk")
{
    const double kappa = wavenumber(0.25);
    CHECK(gamma_z(0.0, 0.0, kappa) == kappa);
    CHECK(gamma_z(kappa, 0.0, kappa) == 0.0);
    CHECK(gamma_z(kappa / 2, kappa / 2, kappa) == doctest::Approx(kappa / std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_z(1.5 * kappa, 0.0, kappa), std::domain_error);
}

TEST_CASE("dispersion relation holds exactly across the disk")
{
    const double kappa = wavenumber(0.03);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i)
    {
        const double kx = u(rng) * kappa;
        const double ky = u(rng) * kappa;
        if (kx * kx + ky * ky > kappa * kappa)
            continue;
        const double g = gamma_z(kx, ky, kappa);
        CHECK(g >= 0.0);
        CHECK(g <= kappa);
        CHECK(g * g + kx * kx + ky * ky == doctest::Approx(kappa * kappa).epsilon(1e-12));
    }
}

TEST_CASE("isotropic PSD values and support")
{
    const double kappa = wavenumber(0.5);
    CHECK(isotropic_psd(0.0, 0.0, kappa) ==
          doctest::Approx(pi_ns::pi / (kappa * kappa)).epsilon(1e-15));
    CHECK(isotropic_psd(2.0 * kappa, 0.0, kappa) == 0.0);
    // 3-4-5 point: γ = 0.8κ
    CHECK(isotropic_psd(0.6 * kappa, 0.0, kappa) ==
          doctest::Approx(1.25 * pi_ns::pi / (kappa * kappa)).epsilon(1e-12));
    CHECK(std::isinf(isotropic_psd(kappa, 0.0, kappa)));
}

TEST_CASE("isotropic PSD is radially symmetric")
{
    const double kappa = wavenumber(1.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(0.0, 0.999), uphi(0.0, 2.0 * pi_ns::pi);
    for (int i = 0; i < 500; ++i)
    {
        const double r = ur(rng) * kappa;
        const double p1 = uphi(rng), p2 = uphi(rng);
        const double a = isotropic_psd(r * std::cos(p1), r * std::sin(p1), kappa);
        const double b = isotropic_psd(r * std::cos(p2), r * std::sin(p2), kappa);
        CHECK(a == doctest::Approx(b).epsilon(1e-9));
    }
}

TEST_CASE("aperture validation")
{
    CHECK_NOTHROW(Aperture::linear(1.0, 0.1));
    CHECK_NOTHROW(Aperture::planar(1.0, 0.5, 0.1));
    CHECK_NOTHROW(Aperture::volumetric(1.0, 0.8, 0.2, 0.1));

    CHECK_THROWS_AS(Aperture(0.0, 0.0, 0.0, 0.1), std::invalid_argument);  // no length
    CHECK_THROWS_AS(Aperture(1.0, 0.0, 0.0, 0.0), std::invalid_argument);  // no wavelength
    CHECK_THROWS_AS(Aperture(1.0, -0.5, 0.0, 0.1), std::invalid_argument); // negative side
    CHECK_THROWS_AS(Aperture(1.0, 0.0, 0.2, 0.1), std::invalid_argument);  // z without y
    CHECK_THROWS_AS(Aperture(1.0, 0.5, 0.5, 0.1), std::invalid_argument);  // Lz == min
    CHECK_THROWS_AS(Aperture(1.0, 0.5, 0.7, 0.1), std::invalid_argument);  // Lz > min

    CHECK(Aperture::linear(1.0, 0.1).dimensionality() == Dimensionality::Linear);
    CHECK(Aperture::planar(1.0, 1.0, 0.1).dimensionality() == Dimensionality::Planar);
    CHECK(Aperture::volumetric(1.0, 1.0, 0.1, 0.1).dimensionality() == Dimensionality::Volumetric);
    CHECK(Aperture::linear(1.0, 0.1).wavenumber() == doctest::Approx(62.831853071795864));
}

TEST_CASE("isotropic spectral factor has unit weight")
{
    const double kappa = wavenumber(0.2);
    const SpectralFactor f = SpectralFactor::isotropic(kappa);
    CHECK(f.label == "isotropic");
    for (double r : {0.0, 0.3, 0.9})
    {
        CHECK(f.weight(r * kappa, 0.0, Branch::Plus, kappa) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(f.weight(0.0, r * kappa, Branch::Minus, kappa) == doctest::Approx(1.0).epsilon(1e-14));
    }
}
