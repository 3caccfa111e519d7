// SPDX-License-Identifier: Apache-2.0
//
// astars-noma: link-level analysis of active STAR-surface assisted NOMA downlinks
// Copyright (C) 2026 The astars-noma authors
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

#include "astars/config_io.hpp"
#include "astars/error.hpp"
#include "astars/report.hpp"
#include "astars/sweep.hpp"

#include <catch_amalgamated.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace astars;
using namespace astars::cli;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace
{
    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::filesystem::path scratch(const std::string &name)
    {
        auto p = std::filesystem::temp_directory_path() / ("astars_test_cli_" + name);
        std::filesystem::remove_all(p);
        return p;
    }

    double cell(const std::string &line, int column)
    {
        std::string field;
        std::istringstream in(line);
        for (int i = 0; i <= column; ++i)
            std::getline(in, field, ',');
        double v = 0.0;
        std::from_chars(field.data(), field.data() + field.size(), v);
        return v;
    }

    std::vector<std::string> lines(const std::string &text)
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        for (std::string l; std::getline(in, l);)
            out.push_back(l);
        return out;
    }

    int run_cli(const std::string &args)
    {
        const char *exe = std::getenv("ASTARS_CLI");
        if (!exe)
            return -1;
        const int status = std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
}

TEST_CASE("empty config gives the reference defaults", "[cli][config]")
{
    const auto c = parse_config_text("");
    CHECK_THAT(c.rician_kappa, WithinRel(0.31622776601683794, 1e-15));
    CHECK(c.num_elements == 10);
    CHECK(c.a_r == 0.3);
}

TEST_CASE("dB keys are converted on load", "[cli][config]")
{
    const auto c = parse_config_text("kappa_db = -5\n# comment\nsigma_s2_dbm = -30   # trailing\neta0_db=-20\n");
    CHECK_THAT(c.rician_kappa, WithinRel(0.31623, 1e-5));
    CHECK_THAT(c.noise_sigma_s2, WithinRel(1e-6, 1e-12));
    CHECK_THAT(c.path_eta0, WithinRel(1e-2, 1e-12));
}

TEST_CASE("config errors name the key and constraint", "[cli][config]")
{
    CHECK_THROWS_WITH(parse_config_text("beta_r = 0.8\nbeta_t = 0.3\n"), ContainsSubstring("beta_r+beta_t <= 1 violated"));
    CHECK_THROWS_WITH(parse_config_text("bogus = 1\n"), ContainsSubstring("unknown key 'bogus'"));
    CHECK_THROWS_WITH(parse_config_text("a_r = 0.2\na_r = 0.3\n", "x.cfg"), ContainsSubstring("x.cfg:2"));
    CHECK_THROWS_AS(parse_config_text("a_r = 0.9\na_t = 0.1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("num_elements = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("lambda\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("/nonexistent/astars.cfg"), IoError);
}

TEST_CASE("formatted config parses back to the same values", "[cli][config][property]")
{
    auto c = parse_config_text("kappa_db = 3\nlambda = 7\nnum_elements = 4\nsigma_s2_dbm = -55\nmean_noise_mode = true\n");
    const auto text = format_config(c);
    CHECK_THAT(text, ContainsSubstring("kappa_db = 3\n"));
    const auto back = parse_config_text(text);
    CHECK(format_config(back) == text);
    CHECK_THAT(back.rician_kappa, WithinRel(c.rician_kappa, 1e-14));
    CHECK(back.mean_noise_mode);
}

TEST_CASE("shortest round-trip doubles", "[cli][csv]")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(20.0) == "20");
    CHECK(format_double(1e-23) == "1e-23");
    for (double v : {1.0 / 3.0, 2.718281828459045, 6.02214076e23})
    {
        const auto s = format_double(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
}

TEST_CASE("CSV schema", "[cli][csv]")
{
    CsvRow r;
    r.axis_name = "q_tot_dbm";
    r.axis_value = "10";
    r.metric = "outage_r";
    r.mode = "psic";
    r.scheme = "astars_noma";
    r.flag = "infeasible_budget";
    const auto text = csv_text({r});
    CHECK(text == std::string("axis_name,axis_value,metric,mode,scheme,analytic,mc_mean,mc_ci95,trials,flag\n") +
                      "q_tot_dbm,10,outage_r,psic,astars_noma,,,,,infeasible_budget\n");
}

TEST_CASE("linear grid keeps the endpoint", "[cli][sweep]")
{
    const auto g = linear_grid(0.0, 50.0, 2.5);
    REQUIRE(g.size() == 21);
    CHECK(g.back() == 50.0);
    CHECK(g[3] == 7.5);
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0.0), ConfigError);
}

TEST_CASE("outage sweep structure", "[cli][sweep]")
{
    const model::NetworkConfig cfg;
    SweepSpec spec;
    spec.name = "t";
    spec.values = linear_grid(0.0, 50.0, 5.0);
    spec.metrics = {"outage_r"};
    spec.modes = {analytic::SicMode::psic, analytic::SicMode::ipsic};
    const auto dir = scratch("sweep");
    const auto files = run_sweep(cfg, spec, dir, {});
    REQUIRE(files.size() == 1);
    const auto rows = lines(slurp(files[0]));
    REQUIRE(rows.size() == 1 + 22);
    CHECK(rows[0] == csv_header);
    for (std::size_t i = 1; i + 1 < rows.size(); i += 2)
    {
        const double psic = cell(rows[i], 5);
        const double ipsic = cell(rows[i + 1], 5);
        CHECK(ipsic >= psic);
        if (i > 2)
            CHECK(psic <= cell(rows[i - 2], 5));
    }
    // identical inputs give identical bytes
    const auto again = run_sweep(cfg, spec, scratch("sweep2"), {});
    CHECK(slurp(files[0]) == slurp(again[0]));
}

TEST_CASE("infeasible budget points are flagged, not dropped", "[cli][sweep]")
{
    const model::NetworkConfig cfg;
    SweepSpec spec;
    spec.values = {-30.0, 10.0};
    spec.metrics = {"outage_t"};
    const auto groups = sweep_rows(cfg, spec, {});
    REQUIRE(groups.size() == 1);
    REQUIRE(groups[0].second.size() == 2);
    CHECK(groups[0].second[0].flag == "infeasible_budget");
    CHECK_FALSE(groups[0].second[0].analytic.has_value());
    CHECK(groups[0].second[1].analytic.has_value());
}

TEST_CASE("sweep spec validation", "[cli][sweep]")
{
    SweepSpec spec;
    spec.metrics = {"outage_r"};
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec.values = {1.0};
    CHECK_NOTHROW(spec.validate());
    spec.metrics = {"latency"};
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    CHECK(is_known_metric("rate_r_bound"));
    CHECK(parse_axis("beta_r|a_r") == Axis::beta_r_a_r);
    CHECK_THROWS_AS(parse_axis("time"), ConfigError);
}

TEST_CASE("figure presets are valid", "[cli][figures]")
{
    const auto ids = figure_ids();
    CHECK(ids.size() >= 10);
    for (const auto &id : ids)
    {
        INFO(id);
        const auto spec = figure_preset(id);
        REQUIRE(spec.has_value());
        CHECK_NOTHROW(spec->validate());
        CHECK(spec->range_approximated);
    }
    CHECK_FALSE(figure_preset("fig99").has_value());
}

TEST_CASE("every figure preset evaluates analytically", "[cli][figures][slow]")
{
    const model::NetworkConfig cfg;
    for (const auto &id : figure_ids())
    {
        INFO(id);
        const auto groups = sweep_rows(cfg, *figure_preset(id), {});
        CHECK_FALSE(groups.empty());
        for (const auto &[metric, rows] : groups)
            for (const auto &row : rows)
                if (row.analytic && metric.rfind("outage", 0) == 0)
                {
                    CHECK(*row.analytic >= 0.0);
                    CHECK(*row.analytic <= 1.0);
                }
    }
}

TEST_CASE("svg plot is self-contained", "[cli][svg]")
{
    const auto svg = svg_plot({"t", "x", "y", true}, {{"a", {{1.0, 0.5}, {2.0, 0.01}}, false}});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("command-line exit codes", "[cli][exe]")
{
    if (!std::getenv("ASTARS_CLI"))
        SKIP("ASTARS_CLI not set");
    const auto dir = scratch("exe");
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "bad.cfg") << "a_r = 0.9\na_t = 0.1\n";
        std::ofstream(dir / "ok.cfg") << "num_elements = 4\n";
    }
    CHECK(run_cli("show-config") == 0);
    CHECK(run_cli("show-config --config " + (dir / "ok.cfg").string()) == 0);
    CHECK(run_cli("validate --config " + (dir / "bad.cfg").string()) == 1);
    CHECK(run_cli("figure fig99") == 1);
    CHECK(run_cli("--no-such-flag") == 1);
    CHECK(run_cli("show-config --config " + (dir / "missing.cfg").string()) == 3);
    std::ofstream(dir / "blocker") << "x";
    CHECK(run_cli("sweep --analytic-only --values 10,20 --out " + (dir / "blocker" / "sub").string()) == 3);
    CHECK(run_cli("sweep --analytic-only --values 10,20 --metrics rate_t --out " + (dir / "ok").string()) == 0);
    CHECK(std::filesystem::exists(dir / "ok" / "sweep_rate_t.csv"));
}
