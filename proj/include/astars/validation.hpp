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

#include "astars/model.hpp"
#include "astars/report.hpp"
#include "astars/sweep.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace astars::cli
{
    struct GateResult
    {
        std::string name;
        double observed = 0.0;
        double tolerance = 0.0;
        bool pass = false;
        std::string detail;
    };

    struct GateBatch
    {
        std::vector<GateResult> gates;
        std::vector<CsvRow> rows;

        bool passed() const;
        void append(GateBatch other);
    };

    namespace gates
    {
        // |analytic - MC| <= max(0.02, 3 CI half-widths) for outage_r (both SIC modes) and outage_t.
        GateBatch outage_agreement(const model::NetworkConfig &cfg, std::span<const double> q_tot_dbm, const RunOptions &options);

        // |analytic - MC| <= max(3 % relative, 3 CI half-widths) for rate_r (both SIC modes) and rate_t.
        GateBatch rate_agreement(const model::NetworkConfig &cfg, std::span<const double> q_tot_dbm, const RunOptions &options);

        // High-SNR P_s sweep used by all slope gates: 20 to 70 dBm in 2.5 dB steps.
        std::vector<double> high_snr_ps_dbm();

        // Diversity order L +- 5 % of the closed-form outage_r (perfect SIC) and outage_t, plus the high-SNR expressions.
        GateBatch diversity(const model::NetworkConfig &cfg, std::span<const int> element_counts);

        // Imperfect-SIC outage slope 0 +- 0.05 and floor agreement within 5 % at the top of the sweep.
        GateBatch error_floor(const model::NetworkConfig &cfg);

        // Multiplexing gains 1 +- 5 % (perfect SIC) and 0 +- 0.05 (imperfect SIC, user t); Jensen dominance to 1e-9.
        GateBatch multiplexing(const model::NetworkConfig &cfg);

        // Transmission-side rate ceiling log2(1 + a_t/a_r) within 1e-3 at the top of the sweep.
        GateBatch rate_ceiling(const model::NetworkConfig &cfg);
    }

    struct ValidationReport
    {
        GateBatch batch;
        std::vector<std::filesystem::path> files;

        bool passed() const { return batch.passed(); }
    };

    std::string format_gate_table(const std::vector<GateResult> &gates);

    // Full agreement and slope suite; writes validate_*.csv and validate_report.txt into out_dir.
    ValidationReport validate(const model::NetworkConfig &cfg, std::span<const double> q_tot_dbm, const std::filesystem::path &out_dir,
                              const RunOptions &options);
}
