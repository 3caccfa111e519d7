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
#include "astars/sweep.hpp"
#include "astars/validation.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using namespace astars;

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_config = 1,
        exit_gate = 2,
        exit_io = 3
    };

    double parse_number(const std::string &text)
    {
        double v = 0.0;
        const char *end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc() || ptr != end)
            throw ConfigError("not a number: '" + text + "'");
        return v;
    }

    std::vector<std::string> split(const std::string &text, char sep)
    {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (start <= text.size())
        {
            const auto pos = text.find(sep, start);
            const auto piece = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
            if (!piece.empty())
                out.push_back(piece);
            if (pos == std::string::npos)
                break;
            start = pos + 1;
        }
        return out;
    }

    // Either start:step:stop or a comma separated list.
    std::vector<double> parse_values(const std::string &text)
    {
        const auto range = split(text, ':');
        if (range.size() == 3 && text.find(',') == std::string::npos)
            return cli::linear_grid(parse_number(range[0]), parse_number(range[2]), parse_number(range[1]));
        std::vector<double> out;
        for (const auto &v : split(text, ','))
            out.push_back(parse_number(v));
        if (out.empty())
            throw ConfigError("empty value list");
        return out;
    }

    analytic::SicMode parse_mode(const std::string &tag)
    {
        if (tag == "psic")
            return analytic::SicMode::psic;
        if (tag == "ipsic")
            return analytic::SicMode::ipsic;
        throw ConfigError("unknown SIC mode '" + tag + "' (expected psic or ipsic)");
    }

    struct Common
    {
        std::string config_path;
        std::string out_dir = "out";
        std::uint64_t trials = 0;
        std::uint64_t seed = 0;
        bool large_scale = false;
        bool no_plots = false;
        bool svg = false;
        unsigned workers = 0;
    };

    model::NetworkConfig load_config(const Common &c)
    {
        model::NetworkConfig cfg = c.config_path.empty() ? model::NetworkConfig{} : cli::parse_config(c.config_path);
        cfg.validate();
        return cfg;
    }

    cli::RunOptions run_options(const Common &c, const model::NetworkConfig &cfg, bool plots_by_default)
    {
        cli::RunOptions o;
        o.trials = c.trials ? c.trials : (c.large_scale ? 1000000 : cfg.mc_trials);
        o.seed = c.seed ? c.seed : cfg.seed;
        o.workers = c.workers;
        o.plots = (plots_by_default || c.svg) && !c.no_plots;
        return o;
    }

    void print_files(const std::vector<std::filesystem::path> &files)
    {
        for (const auto &f : files)
            std::cout << f.string() << "\n";
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Outage, ergodic-rate and throughput analysis of active STAR-surface assisted NOMA downlinks"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--config", common.config_path, "key = value configuration file");
    app.add_option("--out", common.out_dir, "output directory")->capture_default_str();
    app.add_option("--trials", common.trials, "Monte Carlo trials per point (0 keeps the config value)");
    app.add_option("--seed", common.seed, "Monte Carlo seed (0 keeps the config value)");
    app.add_flag("--paper-scale", common.large_scale, "use 1e6 Monte Carlo trials");
    app.add_flag("--no-plots", common.no_plots, "skip SVG output");
    app.add_flag("--svg", common.svg, "write an SVG plot next to each CSV");
    app.add_option("--workers", common.workers, "worker threads (0: hardware concurrency)");

    auto *sweep = app.add_subcommand("sweep", "run a custom sweep");
    std::string axis = "q_tot_dbm";
    std::string values = "0:2.5:50";
    std::string a_r_values = "0.1,0.2,0.3,0.4";
    std::string metrics = "outage_r";
    std::string modes = "psic";
    std::string schemes = "astars_noma";
    std::string name = "sweep";
    double at_q_dbm = 20.0;
    double at_ps_dbm = 0.0;
    bool analytic_only = false;
    sweep->add_option("--axis", axis, "q_tot_dbm, ps_dbm, num_elements, amp_lambda or beta_r|a_r")->capture_default_str();
    sweep->add_option("--values", values, "start:step:stop or comma list")->capture_default_str();
    sweep->add_option("--a-r-values", a_r_values, "a_r values for the beta_r|a_r grid")->capture_default_str();
    sweep->add_option("--metrics", metrics, "comma separated metric tags")->capture_default_str();
    sweep->add_option("--modes", modes, "comma separated SIC modes")->capture_default_str();
    sweep->add_option("--schemes", schemes, "astars_noma, astars_oma, pstars_noma")->capture_default_str();
    sweep->add_option("--name", name, "output file prefix")->capture_default_str();
    auto *at_q = sweep->add_option("--at-q-dbm", at_q_dbm, "fixed Q_tot for non-power axes")->capture_default_str();
    auto *at_ps = sweep->add_option("--at-ps-dbm", at_ps_dbm, "fixed P_s for non-power axes");
    at_q->excludes(at_ps);
    sweep->add_flag("--analytic-only", analytic_only, "skip Monte Carlo columns");

    auto *validate = app.add_subcommand("validate", "analytic vs Monte Carlo agreement and slope gates");
    std::string grid = "10,20,30,40";
    validate->add_option("--grid", grid, "Q_tot values in dBm")->capture_default_str();

    auto *figure = app.add_subcommand("figure", "preset figure sweep");
    std::string figure_id;
    figure->add_option("id", figure_id, "figure id, or 'list'")->required();

    auto *show = app.add_subcommand("show-config", "print the effective configuration");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        if (*show)
        {
            std::cout << cli::format_config(load_config(common));
            return exit_ok;
        }

        if (*figure)
        {
            if (figure_id == "list")
            {
                for (const auto &id : cli::figure_ids())
                    std::cout << id << "\n";
                return exit_ok;
            }
            const auto spec = cli::figure_preset(figure_id);
            if (!spec)
                throw ConfigError("unknown figure id '" + figure_id + "'");
            const auto cfg = load_config(common);
            print_files(cli::run_sweep(cfg, *spec, common.out_dir, run_options(common, cfg, true)));
            return exit_ok;
        }

        if (*sweep)
        {
            const auto cfg = load_config(common);
            cli::SweepSpec spec;
            spec.name = name;
            spec.title = name;
            spec.axis = cli::parse_axis(axis);
            spec.values = parse_values(values);
            if (spec.axis == cli::Axis::beta_r_a_r)
                spec.secondary_values = parse_values(a_r_values);
            spec.metrics = split(metrics, ',');
            spec.modes.clear();
            for (const auto &m : split(modes, ','))
                spec.modes.push_back(parse_mode(m));
            spec.schemes.clear();
            for (const auto &s : split(schemes, ','))
                spec.schemes.push_back(montecarlo::parse_scheme(s));
            if (at_ps->count() > 0)
                spec.fixed = {false, at_ps_dbm};
            else
                spec.fixed = {true, at_q_dbm};
            spec.validate();
            auto options = run_options(common, cfg, false);
            if (analytic_only)
                options.trials = 0;
            print_files(cli::run_sweep(cfg, spec, common.out_dir, options));
            return exit_ok;
        }

        if (*validate)
        {
            const auto cfg = load_config(common);
            const auto q = parse_values(grid);
            const auto report = cli::validate(cfg, q, common.out_dir, run_options(common, cfg, false));
            std::cout << cli::format_gate_table(report.batch.gates);
            print_files(report.files);
            return report.passed() ? exit_ok : exit_gate;
        }
    }
    catch (const IoError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const NumericIntegrityError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_gate;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
    return exit_ok;
}
