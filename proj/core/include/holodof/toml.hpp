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

#ifndef HOLODOF_TOML_HPP
#define HOLODOF_TOML_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace holodof::toml
{
    // Flat TOML subset: bare keys, scalar values (string, integer, float,
    // boolean), full-line and trailing comments. Tables, arrays, dates and
    // dotted keys are rejected — scenario files are flat by design.
    struct Value
    {
        enum class Kind
        {
            String,
            Integer,
            Float,
            Boolean
        };

        Kind kind = Kind::String;
        std::string str;
        std::int64_t integer = 0;
        double real = 0.0;
        bool boolean = false;
        int line = 0;

        // integers promote to double; anything else is a type error
        double as_number() const;
    };

    using Table = std::map<std::string, Value>;

    // Throws config_error with the offending line on any syntax problem,
    // unsupported construct, or duplicate key.
    Table parse(std::string_view text);

} // namespace holodof::toml

#endif // HOLODOF_TOML_HPP
