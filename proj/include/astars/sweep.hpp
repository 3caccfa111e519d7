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

#pragma once

#include "astars/analytic.hpp"
#include "astars/montecarlo.hpp"
#include "astars/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace astars::cli
{
    enum class Axis
    {
        q_tot_dbm,
        ps_dbm,
        num_elements,
        amp_lambda,
        beta_r_a_r
    };

    std::string_view to_string(Axis axis);
    Axis parse_axis(std::string_view tag);

    // Metric tags accepted in a sweep: the closed-form metrics (see analytic::MetricKind) plus
    // outage_r_asym, outage_t_asym, outage_r_floor, rate_r_ceiling, rate_r_bound, rate_t_ceiling.
    bool is_known_metric(std::string_view tag);

    // Named set of config overrides, e.g. {"L=3", {{"num_elements", "3"}}}.
    struct Variant
    {
        std::string label;
        std::vector<std::pair<std::string, std::string>> settings;
    };

    struct OperatingPoint
    {
        bool is_budget = true; // true: Q_tot in dBm, false: P_s in dBm
        double dbm = 20.0;
    };

    struct SweepSpec
    {
        std::string name = "sweep";
        std::string title;
        Axis axis = Axis::q_tot_dbm;
        std::vector<double> values;           // axis values (beta_r for the grid axis)
        std::vector<double> secondary_values; // a_r values for the grid axis
        std::vector<std::string> metrics;
        std::vector<analytic::SicMode> modes{analytic::SicMode::psic};
        std::vector<montecarlo::Scheme> schemes{montecarlo::Scheme::astars_noma};
        std::vector<Variant> variants;
        OperatingPoint fixed;
        bool range_approximated = false;

        void validate() const;
    };

    struct RunOptions
    {
        std::uint64_t trials = 0; // 0 disables Monte Carlo columns
        std::uint64_t seed = 1;
        unsigned workers = 0;
        bool plots = false;
    };

    // start:step:stop inclusive, with the endpoint kept when it lies within rounding of the grid.
    std::vector<double> linear_grid(double start, double stop, double step);

    // Rows grouped by metric, in spec order; each group is one CSV file.
    std::vector<std::pair<std::string, std::vector<CsvRow>>> sweep_rows(const model::NetworkConfig &cfg, const SweepSpec &spec,
                                                                         const RunOptions &options);

    // Writes <out>/<name>_<metric>.csv (and .svg when plots are requested); returns the written paths.
    std::vector<std::filesystem::path> run_sweep(const model::NetworkConfig &cfg, const SweepSpec &spec,
                                                 const std::filesystem::path &out_dir, const RunOptions &options);

    // Preset sweeps for the figure ids fig2a ... fig8b.
    std::vector<std::string> figure_ids();
    std::optional<SweepSpec> figure_preset(std::string_view id);
}
