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

#include "holodof/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace holodof
{
    SpatialGrid SpatialGrid::regular(const Aperture &ap, double delta)
    {
        if (!(delta > 0.0))
            throw std::invalid_argument("grid spacing must be positive");
        auto count = [delta](double length) {
            if (length <= 0.0)
                return 1;
            return std::max(1, static_cast<int>(std::llround(length / delta)));
        };
        SpatialGrid g;
        g.spacing = delta;
        g.nx = count(ap.length_x);
        g.ny = count(ap.length_y);
        g.nz = count(ap.length_z);
        return g;
    }

} // namespace holodof
