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

#ifndef HOLODOF_RNG_HPP
#define HOLODOF_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace holodof
{
    // Reproducibility contract
    // ------------------------
    // All randomness derives from one master seed. A stream is addressed by
    // (master, domain, index):
    //
    //   key          = mix(mix(mix(master) ^ domain·C) ^ index·C)
    //   stream state = four successive SplitMix64 outputs from key
    //
    // with mix the SplitMix64 finaliser and C its odd increment constant.
    // Domains keep unrelated consumers (field realizations, the i.i.d.
    // baseline) in disjoint namespaces: changing one can never perturb the
    // other. Within a realization, draws are consumed in lattice order,
    // H⁺ then H⁻ per mode, two uniforms per complex draw, always consumed
    // even when the variance is zero — so the consumption pattern is
    // independent of the variance values and of the worker schedule.

    struct SplitMix64
    {
        std::uint64_t state;

        static constexpr std::uint64_t increment = 0x9e3779b97f4a7c15ull;

        static std::uint64_t mix(std::uint64_t z)
        {
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        }

        std::uint64_t next()
        {
            state += increment;
            return mix(state);
        }
    };

    // xoshiro256** (Blackman & Vigna), the stream engine.
    class Xoshiro256ss
    {
    public:
        explicit Xoshiro256ss(std::uint64_t key)
        {
            SplitMix64 sm{key};
            for (auto &word : s_)
                word = sm.next();
        }

        std::uint64_t next()
        {
            const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
            const std::uint64_t t = s_[1] << 17;
            s_[2] ^= s_[0];
            s_[3] ^= s_[1];
            s_[1] ^= s_[2];
            s_[0] ^= s_[3];
            s_[2] ^= t;
            s_[3] = rotl(s_[3], 45);
            return result;
        }

    private:
        static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
        std::uint64_t s_[4];
    };

    namespace stream_domain
    {
        inline constexpr std::uint64_t field = 0;        // ensemble realizations
        inline constexpr std::uint64_t iid_baseline = 1; // i.i.d. Rayleigh companion
        inline constexpr std::uint64_t scratch = 1000;   // tests, ad-hoc draws
    } // namespace stream_domain

    inline std::uint64_t derive_stream_key(std::uint64_t master, std::uint64_t domain, std::uint64_t index)
    {
        std::uint64_t k = SplitMix64::mix(master);
        k = SplitMix64::mix(k ^ (domain * SplitMix64::increment));
        k = SplitMix64::mix(k ^ (index * SplitMix64::increment));
        return k;
    }

    // Gaussian draws on top of one derived stream.
    class GaussianStream
    {
    public:
        GaussianStream(std::uint64_t master, std::uint64_t domain, std::uint64_t index)
            : engine_(derive_stream_key(master, domain, index)) {}

        // uniform on (0, 1], 53-bit resolution; never 0, so log is safe
        double uniform_open01()
        {
            return static_cast<double>((engine_.next() >> 11) + 1) * 0x1.0p-53;
        }

        // circularly-symmetric complex Gaussian, E|z|² = variance.
        // Box–Muller; consumes exactly two uniforms regardless of variance,
        // and a zero variance yields exactly zero.
        std::complex<double> complex_gaussian(double variance)
        {
            const double u1 = uniform_open01();
            const double u2 = uniform_open01();
            const double r = std::sqrt(-std::log(u1) * variance);
            const double phi = 2.0 * std::numbers::pi * u2;
            return {r * std::cos(phi), r * std::sin(phi)};
        }

    private:
        Xoshiro256ss engine_;
    };

} // namespace holodof

#endif // HOLODOF_RNG_HPP
