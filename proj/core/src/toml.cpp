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

#include "holodof/toml.hpp"
#include "holodof/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace holodof::toml
{
    double Value::as_number() const
    {
        if (kind == Kind::Float)
            return real;
        if (kind == Kind::Integer)
            return static_cast<double>(integer);
        throw config_error("expected a numeric value", line);
    }

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        bool valid_key(std::string_view k)
        {
            if (k.empty())
                return false;
            for (char c : k)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
                    return false;
            return true;
        }

        Value parse_string(std::string_view raw, int line)
        {
            Value v;
            v.kind = Value::Kind::String;
            v.line = line;
            for (std::size_t i = 1; i + 1 <= raw.size(); ++i)
            {
                const char c = raw[i];
                if (c == '"')
                {
                    if (i + 1 != raw.size())
                        throw config_error("unexpected characters after closing quote", line);
                    return v;
                }
                if (c == '\\')
                {
                    if (i + 1 >= raw.size())
                        throw config_error("dangling escape in string", line);
                    const char e = raw[++i];
                    switch (e)
                    {
                    case '"': v.str += '"'; break;
                    case '\\': v.str += '\\'; break;
                    case 'n': v.str += '\n'; break;
                    case 't': v.str += '\t'; break;
                    default:
                        throw config_error(std::string("unsupported escape '\\") + e + "'", line);
                    }
                    continue;
                }
                v.str += c;
            }
            throw config_error("unterminated string", line);
        }

        Value parse_scalar(std::string_view raw, int line)
        {
            if (raw.empty())
                throw config_error("missing value", line);
            if (raw.front() == '"')
                return parse_string(raw, line);
            if (raw == "true" || raw == "false")
            {
                Value v;
                v.kind = Value::Kind::Boolean;
                v.boolean = (raw == "true");
                v.line = line;
                return v;
            }
            if (raw.front() == '[' || raw.front() == '{')
                throw config_error("arrays and inline tables are not supported here", line);

            // numbers; TOML underscores allowed between digits
            std::string cleaned;
            cleaned.reserve(raw.size());
            for (std::size_t i = 0; i < raw.size(); ++i)
            {
                if (raw[i] == '_')
                {
                    const bool digit_before = i > 0 && std::isdigit(static_cast<unsigned char>(raw[i - 1]));
                    const bool digit_after =
                        i + 1 < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i + 1]));
                    if (!digit_before || !digit_after)
                        throw config_error("misplaced underscore in number", line);
                    continue;
                }
                cleaned += raw[i];
            }

            const bool looks_float = cleaned.find_first_of(".eE") != std::string::npos &&
                                     cleaned.find_first_of("0123456789") != std::string::npos;
            Value v;
            v.line = line;
            if (!looks_float)
            {
                std::int64_t out = 0;
                const auto *first = cleaned.data();
                const auto *last = cleaned.data() + cleaned.size();
                auto [ptr, ec] = std::from_chars(first, last, out);
                if (ec == std::errc() && ptr == last)
                {
                    v.kind = Value::Kind::Integer;
                    v.integer = out;
                    return v;
                }
            }
            {
                char *end = nullptr;
                const double out = std::strtod(cleaned.c_str(), &end);
                if (end == cleaned.c_str() + cleaned.size() && !cleaned.empty())
                {
                    v.kind = Value::Kind::Float;
                    v.real = out;
                    return v;
                }
            }
            throw config_error("cannot parse value '" + std::string(raw) + "'", line);
        }

        // strips a trailing comment that is not inside a string literal
        std::string_view strip_comment(std::string_view s)
        {
            bool in_string = false;
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                const char c = s[i];
                if (c == '"' && (i == 0 || s[i - 1] != '\\'))
                    in_string = !in_string;
                else if (c == '#' && !in_string)
                    return s.substr(0, i);
            }
            return s;
        }
    } // namespace

    Table parse(std::string_view text)
    {
        Table out;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const std::size_t eol = text.find('\n', pos);
            std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                                   : eol - pos);
            pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
            ++line_no;

            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            line = trim(strip_comment(line));
            if (line.empty())
                continue;
            if (line.front() == '[')
                throw config_error("table headers are not supported; scenario files are flat", line_no);

            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw config_error("expected 'key = value'", line_no);

            const std::string key{trim(line.substr(0, eq))};
            if (!valid_key(key))
                throw config_error("invalid key '" + key + "'", line_no);
            if (out.count(key))
                throw config_error("duplicate key", line_no, key);

            out.emplace(key, parse_scalar(trim(line.substr(eq + 1)), line_no));
        }
        return out;
    }

} // namespace holodof::toml
