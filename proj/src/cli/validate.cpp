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

#include "astars/validation.hpp"
#include "astars/error.hpp"

#include <algorithm>
#include <sstream>

namespace astars::cli
{
    std::string format_gate_table(const std::vector<GateResult> &gates)
    {
        std::size_t width = 4;
        for (const auto &g : gates)
            width = std::max(width, g.name.size());
        std::ostringstream o;
        o << std::left;
        o.width(int(width));
        o << "gate" << "  " << "verdict  observed / tolerance  detail\n";
        for (const auto &g : gates)
        {
            o.width(int(width));
            o << g.name << "  " << (g.pass ? "PASS   " : "FAIL   ") << "  " << format_double(g.observed) << " / " << format_double(g.tolerance) << "  "
              << g.detail << "\n";
        }
        return o.str();
    }

    ValidationReport validate(const model::NetworkConfig &cfg, std::span<const double> q_tot_dbm, const std::filesystem::path &out_dir,
                              const RunOptions &options)
    {
        cfg.validate();
        if (q_tot_dbm.empty())
            throw ConfigError("validate: empty power grid");
        if (options.trials == 0)
            throw ConfigError("validate: Monte Carlo trials must be positive");

        GateBatch agreement = gates::outage_agreement(cfg, q_tot_dbm, options);
        agreement.append(gates::rate_agreement(cfg, q_tot_dbm, options));

        const int counts[] = {2, 4};
        GateBatch slopes = gates::diversity(cfg, counts);
        slopes.append(gates::error_floor(cfg));
        slopes.append(gates::multiplexing(cfg));
        slopes.append(gates::rate_ceiling(cfg));

        ValidationReport report;
        const auto agreement_csv = out_dir / "validate_agreement.csv";
        const auto slopes_csv = out_dir / "validate_slopes.csv";
        const auto report_txt = out_dir / "validate_report.txt";
        write_text_file(agreement_csv, csv_text(agreement.rows));
        write_text_file(slopes_csv, csv_text(slopes.rows));
        report.batch.append(std::move(agreement));
        report.batch.append(std::move(slopes));

        std::string text = format_gate_table(report.batch.gates);
        const auto failed = std::count_if(report.batch.gates.begin(), report.batch.gates.end(), [](const GateResult &g) { return !g.pass; });
        text += "\n" + std::to_string(report.batch.gates.size() - failed) + " of " + std::to_string(report.batch.gates.size()) + " gates passed\n";
        write_text_file(report_txt, text);
        report.files = {agreement_csv, slopes_csv, report_txt};
        return report;
    }
}
