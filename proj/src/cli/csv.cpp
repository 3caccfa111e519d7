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

#include "astars/report.hpp"
#include "astars/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

namespace astars::cli
{
    std::string format_double(double value)
    {
        if (std::isnan(value))
            return "nan";
        std::array<char, 64> buf{};
        const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
        if (ec != std::errc())
            throw NumericIntegrityError("format_double: conversion failed");
        return std::string(buf.data(), ptr);
    }

    std::string csv_text(const std::vector<CsvRow> &rows)
    {
        std::string out = csv_header;
        out += '\n';
        auto opt = [](const std::optional<double> &v) { return v ? format_double(*v) : std::string(); };
        for (const auto &r : rows)
        {
            out += r.axis_name + ',' + r.axis_value + ',' + r.metric + ',' + r.mode + ',' + r.scheme + ',' + opt(r.analytic) + ',' +
                   opt(r.mc_mean) + ',' + opt(r.mc_ci95) + ',' + (r.trials ? std::to_string(*r.trials) : std::string()) + ',' + r.flag +
                   '\n';
        }
        return out;
    }

    void write_text_file(const std::filesystem::path &path, const std::string &text)
    {
        std::error_code ec;
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open " + path.string() + " for writing");
        out << text;
        out.close();
        if (!out)
            throw IoError("failed writing " + path.string());
    }
}
