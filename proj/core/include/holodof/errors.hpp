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

#ifndef HOLODOF_ERRORS_HPP
#define HOLODOF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holodof
{
    // Raised when an iterative numerical routine (quadrature, eigensolver
    // verification) cannot reach its requested tolerance. Carries the error
    // estimate that was actually achieved so callers can decide whether the
    // partial result is still usable.
    class numerical_error : public std::runtime_error
    {
    public:
        numerical_error(const std::string &what, double achieved)
            : std::runtime_error(what), achieved_(achieved) {}

        double achieved_error() const noexcept { return achieved_; }

    private:
        double achieved_;
    };

    // Raised for malformed or out-of-range scenario configuration. The line
    // number refers to the TOML source (0 when not applicable) and the field
    // names the offending key when known.
    class config_error : public std::runtime_error
    {
    public:
        explicit config_error(const std::string &what, int line = 0, std::string field = {})
            : std::runtime_error(format(what, line, field)), line_(line), field_(std::move(field)) {}

        int line() const noexcept { return line_; }
        const std::string &field() const noexcept { return field_; }

    private:
        static std::string format(const std::string &what, int line, const std::string &field)
        {
            std::string msg = what;
            if (!field.empty())
                msg += " (key '" + field + "')";
            if (line > 0)
                msg += " at line " + std::to_string(line);
            return msg;
        }

        int line_;
        std::string field_;
    };

} // namespace holodof

#endif // HOLODOF_ERRORS_HPP
