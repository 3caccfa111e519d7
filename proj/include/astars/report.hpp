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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace astars::cli
{
    inline constexpr const char *csv_header = "axis_name,axis_value,metric,mode,scheme,analytic,mc_mean,mc_ci95,trials,flag";

    struct CsvRow
    {
        std::string axis_name;
        std::string axis_value;
        std::string metric;
        std::string mode;
        std::string scheme;
        std::optional<double> analytic;
        std::optional<double> mc_mean;
        std::optional<double> mc_ci95;
        std::optional<std::uint64_t> trials;
        std::string flag;
    };

    // Shortest decimal that round-trips to the same double.
    std::string format_double(double value);

    std::string csv_text(const std::vector<CsvRow> &rows);
    void write_text_file(const std::filesystem::path &path, const std::string &text);

    struct PlotSeries
    {
        std::string label;
        std::vector<std::pair<double, double>> points;
        bool markers_only = false;
    };

    struct PlotSpec
    {
        std::string title;
        std::string x_label;
        std::string y_label;
        bool log_y = false;
    };

    std::string svg_plot(const PlotSpec &spec, const std::vector<PlotSeries> &series);
}
