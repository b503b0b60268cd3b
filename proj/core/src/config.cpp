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

#include "holodof/config.hpp"
#include "holodof/errors.hpp"
#include "holodof/toml.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace holodof
{
    Aperture ScenarioConfig::aperture() const
    {
        return {lx * lambda, ly * lambda, lz * lambda, lambda};
    }

    SpatialGrid ScenarioConfig::grid() const
    {
        return SpatialGrid::regular(aperture(), delta * lambda);
    }

    int ScenarioConfig::ensemble_size() const
    {
        return static_cast<int>(std::llround(m_factor * grid().size()));
    }

    namespace
    {
        const toml::Value *find(const toml::Table &t, const std::string &key)
        {
            auto it = t.find(key);
            return it == t.end() ? nullptr : &it->second;
        }

        double require_number(const toml::Table &t, const std::string &key)
        {
            const toml::Value *v = find(t, key);
            if (!v)
                throw config_error("missing required key", 0, key);
            return v->as_number();
        }
    } // namespace

    ScenarioConfig parse_config(std::string_view toml_text)
    {
        const toml::Table table = toml::parse(toml_text);

        static const std::set<std::string> known = {
            "name", "dim", "Lx", "Ly", "Lz", "lambda", "delta",
            "M_factor", "seed", "half_spaces", "baseline", "tau", "rho"};
        for (const auto &[key, value] : table)
            if (!known.count(key))
                throw config_error("unknown key", value.line, key);

        ScenarioConfig cfg;

        if (const auto *v = find(table, "name"))
        {
            if (v->kind != toml::Value::Kind::String)
                throw config_error("name must be a string", v->line, "name");
            cfg.name = v->str;
        }

        {
            const toml::Value *v = find(table, "dim");
            if (!v)
                throw config_error("missing required key", 0, "dim");
            if (v->kind != toml::Value::Kind::Integer || v->integer < 1 || v->integer > 3)
                throw config_error("dim must be 1, 2 or 3", v->line, "dim");
            cfg.dim = static_cast<int>(v->integer);
        }

        cfg.lx = require_number(table, "Lx");
        cfg.lambda = require_number(table, "lambda");

        {
            const toml::Value *v = find(table, "seed");
            if (!v)
                throw config_error("missing required key", 0, "seed");
            if (v->kind != toml::Value::Kind::Integer || v->integer < 0)
                throw config_error("seed must be a nonnegative integer", v->line, "seed");
            cfg.seed = static_cast<std::uint64_t>(v->integer);
        }

        if (const auto *v = find(table, "Ly"))
            cfg.ly = v->as_number();
        if (const auto *v = find(table, "Lz"))
            cfg.lz = v->as_number();
        if (const auto *v = find(table, "delta"))
            cfg.delta = v->as_number();
        if (const auto *v = find(table, "M_factor"))
            cfg.m_factor = v->as_number();
        if (const auto *v = find(table, "tau"))
            cfg.tau = v->as_number();
        if (const auto *v = find(table, "rho"))
            cfg.rho = v->as_number();
        if (const auto *v = find(table, "half_spaces"))
        {
            if (v->kind != toml::Value::Kind::Integer || (v->integer != 1 && v->integer != 2))
                throw config_error("half_spaces must be 1 or 2", v->line, "half_spaces");
            cfg.half_spaces = static_cast<int>(v->integer);
        }
        if (const auto *v = find(table, "baseline"))
        {
            if (v->kind != toml::Value::Kind::Boolean)
                throw config_error("baseline must be true or false", v->line, "baseline");
            cfg.baseline = v->boolean;
        }

        // range validation
        auto line_of = [&](const char *key) {
            const toml::Value *v = find(table, key);
            return v ? v->line : 0;
        };
        if (!(cfg.lambda > 0.0))
            throw config_error("lambda must be positive", line_of("lambda"), "lambda");
        if (!(cfg.lx > 0.0))
            throw config_error("Lx must be positive", line_of("Lx"), "Lx");
        if (cfg.dim == 1)
        {
            if (cfg.ly != 0.0 || cfg.lz != 0.0)
                throw config_error("a 1D scenario must not set Ly or Lz", line_of("Ly"), "Ly");
        }
        else if (!(cfg.ly > 0.0))
            throw config_error("Ly must be positive for dim >= 2", line_of("Ly"), "Ly");
        if (cfg.dim == 2 && cfg.lz != 0.0)
            throw config_error("a 2D scenario must not set Lz", line_of("Lz"), "Lz");
        if (cfg.dim == 3)
        {
            if (!(cfg.lz > 0.0))
                throw config_error("Lz must be positive for dim = 3", line_of("Lz"), "Lz");
            if (!(cfg.lz < std::min(cfg.lx, cfg.ly)))
                throw config_error("Lz must be smaller than min(Lx, Ly)", line_of("Lz"), "Lz");
        }
        if (!(cfg.delta > 0.0))
            throw config_error("delta must be positive", line_of("delta"), "delta");
        if (!(cfg.m_factor >= 4.0))
            throw config_error("M_factor must be at least 4: the eigen-analysis needs an ensemble of "
                               "M >= 4N realizations",
                               line_of("M_factor"), "M_factor");
        if (!(cfg.tau > 0.0 && cfg.tau < 1.0))
            throw config_error("tau must lie in (0, 1)", line_of("tau"), "tau");
        if (!(cfg.rho > 0.0 && cfg.rho < 1.0))
            throw config_error("rho must lie in (0, 1)", line_of("rho"), "rho");

        return cfg;
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("cannot open config file " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        try
        {
            ScenarioConfig cfg = parse_config(buf.str());
            if (cfg.name.empty())
                cfg.name = path.stem().string();
            return cfg;
        }
        catch (const config_error &e)
        {
            throw config_error(path.string() + ": " + e.what());
        }
    }

} // namespace holodof
