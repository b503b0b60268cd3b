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

#include "holodof/config.hpp"
#include "holodof/errors.hpp"
#include "holodof/runner.hpp"
#include "holodof/toml.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace holodof;
namespace fs = std::filesystem;

namespace
{
    fs::path fresh_dir(const std::string &tag)
    {
        const fs::path dir = fs::temp_directory_path() / ("holodof_test_" + tag);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    const char *small_scenario = R"(
dim = 1
Lx = 8.0
lambda = 0.1
seed = 7
M_factor = 6.0
baseline = true
)";
} // namespace

TEST_CASE("toml: scalars, comments, underscores, escapes")
{
    const auto t = toml::parse(R"(
# full-line comment
name = "fig two"      # trailing comment
count = 1_024
ratio = 2.5e-1
flag = true
negative = -3
text = "a\"b\\c\nd"
)");
    CHECK(t.at("name").str == "fig two");
    CHECK(t.at("count").integer == 1024);
    CHECK(t.at("ratio").real == doctest::Approx(0.25));
    CHECK(t.at("flag").boolean == true);
    CHECK(t.at("negative").integer == -3);
    CHECK(t.at("text").str == "a\"b\\c\nd");
    CHECK(t.at("count").line == 4);
}

TEST_CASE("toml: rejected constructs carry line numbers")
{
    auto line_of = [](const char *text) {
        try
        {
            toml::parse(text);
        }
        catch (const config_error &e)
        {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("a = 1\na = 2\n") == 2);           // duplicate
    CHECK(line_of("[table]\n") == 1);                // table header
    CHECK(line_of("a = [1, 2]\n") == 1);             // array
    CHECK(line_of("\nnot a key value\n") == 2);      // no '='
    CHECK(line_of("a = \"unterminated\n") == 1);     // bad string
    CHECK(line_of("a = 1__0\n") == 1);               // bad underscore
    CHECK(line_of("bad key = 1\n") == 1);            // space in key
    CHECK(line_of("a = \"x\\q\"\n") == 1);           // bad escape
    CHECK(line_of("a = zzz\n") == 1);                // unparseable value
}

TEST_CASE("config: minimal scenario gets the documented defaults")
{
    const ScenarioConfig cfg = parse_config("dim = 1\nLx = 16\nlambda = 0.1\nseed = 7\n");
    CHECK(cfg.dim == 1);
    CHECK(cfg.lx == 16.0);
    CHECK(cfg.lambda == 0.1);
    CHECK(cfg.seed == 7);
    CHECK(cfg.delta == 0.25);
    CHECK(cfg.m_factor == 10.0);
    CHECK(cfg.half_spaces == 2);
    CHECK(cfg.baseline == false);
    CHECK(cfg.tau == 0.95);
    CHECK(cfg.rho == 0.01);
    CHECK(cfg.grid().size() == 64);
    CHECK(cfg.ensemble_size() == 640);
}

TEST_CASE("config: validation failures carry field diagnostics")
{
    auto field_of = [](const std::string &text) {
        try
        {
            parse_config(text);
        }
        catch (const config_error &e)
        {
            return e.field();
        }
        return std::string("no-error");
    };

    // the volumetric assumption L_z < min(L_x, L_y)
    CHECK(field_of("dim = 3\nLx = 4\nLy = 4\nLz = 4\nlambda = 1\nseed = 1\n") == "Lz");
    CHECK(field_of("dim = 3\nLx = 4\nLy = 2\nLz = 3\nlambda = 1\nseed = 1\n") == "Lz");
    // M >= 4N
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\nseed = 1\nM_factor = 2\n") == "M_factor");
    // unknown keys are rejected
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\nseed = 1\nLx_extra = 2\n") == "Lx_extra");
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\n") == "seed");
    CHECK(field_of("Lx = 4\nlambda = 1\nseed = 1\n") == "dim");
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\nseed = -3\n") == "seed");
    CHECK(field_of("dim = 4\nLx = 4\nlambda = 1\nseed = 1\n") == "dim");
    CHECK(field_of("dim = 1\nLx = 4\nLy = 2\nlambda = 1\nseed = 1\n") == "Ly");
    CHECK(field_of("dim = 2\nLx = 4\nlambda = 1\nseed = 1\n") == "Ly");
    CHECK(field_of("dim = 2\nLx = 4\nLy = 4\nLz = 1\nlambda = 1\nseed = 1\n") == "Lz");
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 0\nseed = 1\n") == "lambda");
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\nseed = 1\ntau = 1.0\n") == "tau");
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\nseed = 1\nrho = 0\n") == "rho");
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\nseed = 1\ndelta = 0\n") == "delta");
    CHECK(field_of("dim = 1\nLx = 4\nlambda = 1\nseed = 1\nhalf_spaces = 3\n") == "half_spaces");

    const std::string m_msg = []() {
        try
        {
            parse_config("dim = 1\nLx = 4\nlambda = 1\nseed = 1\nM_factor = 2\n");
        }
        catch (const config_error &e)
        {
            return std::string(e.what());
        }
        return std::string();
    }();
    CHECK(m_msg.find("4N") != std::string::npos);
}

TEST_CASE("config: grid counts follow the endpoint-exclusive convention")
{
    const ScenarioConfig c2 = parse_config("dim = 2\nLx = 8\nLy = 8\nlambda = 0.1\nseed = 1\n");
    CHECK(c2.grid().nx == 32);
    CHECK(c2.grid().ny == 32);
    CHECK(c2.grid().nz == 1);
    CHECK(c2.grid().size() == 1024);

    const ScenarioConfig c3 =
        parse_config("dim = 3\nLx = 4\nLy = 4\nLz = 1\nlambda = 0.1\nseed = 1\n");
    CHECK(c3.grid().nz == 4);
    CHECK(c3.grid().size() == 1024);
}

TEST_CASE("load_config: file errors and name defaulting")
{
    CHECK_THROWS_AS(load_config("/nonexistent/holodof.toml"), config_error);
    const fs::path dir = fresh_dir("cfg");
    const fs::path p = dir / "myscenario.toml";
    std::ofstream(p) << small_scenario;
    const ScenarioConfig cfg = load_config(p);
    CHECK(cfg.name == "myscenario");
}

TEST_CASE("run_scenario: report is consistent with the pipeline")
{
    const ScenarioConfig cfg = parse_config(small_scenario);
    const RunReport r = run_scenario(cfg);
    CHECK(r.grid_n == 32);
    CHECK(r.ensemble_m == 192);
    CHECK(r.mode_count == 16);
    CHECK(r.eta_theory == doctest::Approx(16.0));
    CHECK(r.spectrum.eigenvalues.size() == r.grid_n);
    CHECK(r.variance_sum == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.baseline.has_value());
    CHECK(r.baseline->eigenvalues.size() == r.grid_n);
    // nonincreasing spectrum
    for (Eigen::Index i = 1; i < r.spectrum.eigenvalues.size(); ++i)
        CHECK(r.spectrum.eigenvalues(i) <= r.spectrum.eigenvalues(i - 1));
    CHECK(r.low_m_warning); // 6 < 10
    CHECK(r.version == version_string);
}

TEST_CASE("half_spaces = 1 halves the reported power budget")
{
    ScenarioConfig cfg = parse_config(small_scenario);
    cfg.half_spaces = 1;
    const RunReport r = run_scenario(cfg);
    CHECK(r.variance_sum == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(r.variance_sum_plus == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("emit: files, formats, and the overwrite guard")
{
    const ScenarioConfig cfg = parse_config(small_scenario);
    const RunReport r = run_scenario(cfg);
    const fs::path dir = fresh_dir("emit");

    emit_results(r, dir);
    CHECK(fs::exists(dir / "eigenvalues.csv"));
    CHECK(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "baseline_eigenvalues.csv"));

    const std::string csv = slurp(dir / "eigenvalues.csv");
    CHECK(csv.rfind("index,eigenvalue\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos); // LF endings

    // parse-back equals the in-memory spectrum to full precision
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line); // header
    Eigen::Index idx = 0;
    while (std::getline(lines, line))
    {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stoll(line.substr(0, comma)) == idx + 1);
        CHECK(std::strtod(line.c_str() + comma + 1, nullptr) == r.spectrum.eigenvalues(idx));
        ++idx;
    }
    CHECK(idx == r.spectrum.eigenvalues.size());

    // refuses to overwrite without force, and --force succeeds
    CHECK_THROWS_WITH_AS(emit_results(r, dir), doctest::Contains("refusing to overwrite"),
                         std::runtime_error);
    CHECK_NOTHROW(emit_results(r, dir, true));
}

TEST_CASE("emit: refusal leaves no partial outputs")
{
    const ScenarioConfig cfg = parse_config(small_scenario);
    const RunReport r = run_scenario(cfg);
    const fs::path dir = fresh_dir("partial");
    std::ofstream(dir / "report.json") << "{}";
    CHECK_THROWS_AS(emit_results(r, dir), std::runtime_error);
    CHECK(!fs::exists(dir / "eigenvalues.csv"));
    CHECK(!fs::exists(dir / "baseline_eigenvalues.csv"));
}

TEST_CASE("determinism: reports and files are identical across runs and workers")
{
    const ScenarioConfig cfg = parse_config(small_scenario);
    const RunReport a = run_scenario(cfg, 1);
    const RunReport b = run_scenario(cfg, 8);
    CHECK((a.spectrum.eigenvalues - b.spectrum.eigenvalues).norm() == 0.0);
    CHECK(report_to_json(a, false) == report_to_json(b, false));

    const fs::path da = fresh_dir("det_a"), db = fresh_dir("det_b");
    emit_results(a, da);
    emit_results(b, db);
    CHECK(slurp(da / "eigenvalues.csv") == slurp(db / "eigenvalues.csv"));
    CHECK(slurp(da / "baseline_eigenvalues.csv") == slurp(db / "baseline_eigenvalues.csv"));
}

TEST_CASE("the baseline and main ensembles live in disjoint stream namespaces")
{
    ScenarioConfig with = parse_config(small_scenario);
    ScenarioConfig without = with;
    without.baseline = false;
    const RunReport a = run_scenario(with);
    const RunReport b = run_scenario(without);
    CHECK((a.spectrum.eigenvalues - b.spectrum.eigenvalues).norm() == 0.0);
    CHECK(!b.baseline.has_value());
}

TEST_CASE("the config echo is re-runnable on its own")
{
    const ScenarioConfig cfg = parse_config(small_scenario);
    const RunReport first = run_scenario(cfg);
    const std::string j = report_to_json(first, false);

    // round-trip the echo through a fresh TOML document
    const auto echo_pos = j.find("\"config\"");
    REQUIRE(echo_pos != std::string::npos);
    auto grab = [&j, echo_pos](const char *key) {
        const std::string needle = std::string("\"") + key + "\": ";
        const auto pos = j.find(needle, echo_pos);
        REQUIRE(pos != std::string::npos);
        const auto start = pos + needle.size();
        return j.substr(start, j.find_first_of(",\n", start) - start);
    };
    std::ostringstream toml;
    toml << "dim = " << grab("dim") << "\nLx = " << grab("Lx") << "\nlambda = " << grab("lambda")
         << "\nseed = " << grab("seed") << "\ndelta = " << grab("delta")
         << "\nM_factor = " << grab("M_factor") << "\nhalf_spaces = " << grab("half_spaces")
         << "\nbaseline = " << grab("baseline") << "\ntau = " << grab("tau")
         << "\nrho = " << grab("rho") << "\n";

    const RunReport second = run_scenario(parse_config(toml.str()));
    CHECK((first.spectrum.eigenvalues - second.spectrum.eigenvalues).norm() == 0.0);
}

TEST_CASE("report JSON carries the config echo and both policies")
{
    const ScenarioConfig cfg = parse_config(small_scenario);
    const RunReport r = run_scenario(cfg);
    const std::string j = report_to_json(r);
    for (const char *needle :
         {"\"config\"", "\"M_factor\"", "\"seed\"", "\"eta_theory\"", "\"trace_fraction\"",
          "\"relative_floor\"", "\"variance_sum\"", "\"eigenvalues\"", "\"timings\"", "\"baseline\""})
        CHECK(j.find(needle) != std::string::npos);
    CHECK(report_to_json(r, false).find("timings") == std::string::npos);
}
