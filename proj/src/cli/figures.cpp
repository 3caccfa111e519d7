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

#include "astars/sweep.hpp"

namespace astars::cli
{
    namespace
    {
        using analytic::SicMode;
        using montecarlo::Scheme;

        const std::vector<SicMode> both_modes{SicMode::psic, SicMode::ipsic};

        std::vector<double> budget_grid() { return linear_grid(0.0, 50.0, 2.5); }

        SweepSpec base(std::string name, std::string title)
        {
            SweepSpec s;
            s.name = std::move(name);
            s.title = std::move(title);
            s.axis = Axis::q_tot_dbm;
            s.values = budget_grid();
            s.modes = both_modes;
            s.range_approximated = true;
            return s;
        }

        const Variant rate_split{"a_r=0.2", {{"a_r", "0.2"}, {"a_t", "0.8"}}};
    }

    std::vector<std::string> figure_ids()
    {
        return {"fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b", "fig6", "fig8a", "fig8b"};
    }

    std::optional<SweepSpec> figure_preset(std::string_view id)
    {
        if (id == "fig2a")
        {
            auto s = base("fig2a", "Outage probability versus power budget");
            s.metrics = {"outage_r", "outage_t", "outage_r_asym", "outage_t_asym", "outage_r_floor"};
            return s;
        }
        if (id == "fig2b")
        {
            auto s = base("fig2b", "Outage probability versus transmit power for several element counts");
            s.axis = Axis::ps_dbm;
            s.metrics = {"outage_r", "outage_t"};
            s.variants = {{"L=5", {{"num_elements", "5"}}}, {"L=10", {{"num_elements", "10"}}}, {"L=15", {{"num_elements", "15"}}}};
            return s;
        }
        if (id == "fig3a")
        {
            auto s = base("fig3a", "Outage probability versus number of elements");
            s.axis = Axis::num_elements;
            s.values = linear_grid(1.0, 20.0, 1.0);
            s.fixed = {true, 20.0};
            s.metrics = {"outage_r", "outage_t", "outage_system"};
            s.schemes = {Scheme::astars_noma, Scheme::pstars_noma};
            s.variants = {{"lambda=10", {{"lambda", "10"}, {"sigma_s2_dbm", "-30"}}}};
            return s;
        }
        if (id == "fig3b")
        {
            auto s = base("fig3b", "System outage probability versus power budget");
            s.metrics = {"outage_system"};
            s.schemes = {Scheme::astars_noma, Scheme::pstars_noma, Scheme::astars_oma};
            return s;
        }
        if (id == "fig4a")
        {
            auto s = base("fig4a", "System outage probability versus beta_r and a_r");
            s.axis = Axis::beta_r_a_r;
            s.values = linear_grid(0.1, 0.9, 0.1);
            s.secondary_values = {0.1, 0.2, 0.3, 0.4};
            s.fixed = {false, 20.0};
            s.metrics = {"outage_system"};
            return s;
        }
        if (id == "fig4b")
        {
            auto s = base("fig4b", "System outage probability versus amplification factor");
            s.axis = Axis::amp_lambda;
            s.values = linear_grid(2.0, 20.0, 1.0);
            s.fixed = {false, 25.0};
            s.metrics = {"outage_system"};
            s.variants = {{"D=35", {{"sigma_s2_dbm", "-50"}}}, {"D=25", {{"sigma_s2_dbm", "-50"}, {"radius_d", "25"}}}};
            return s;
        }
        if (id == "fig5a")
        {
            auto s = base("fig5a", "Ergodic data rate versus power budget");
            s.metrics = {"rate_r", "rate_t", "rate_r_ceiling", "rate_r_bound", "rate_t_ceiling"};
            s.schemes = {Scheme::astars_noma, Scheme::pstars_noma};
            s.variants = {{"lambda=5", {{"a_r", "0.2"}, {"a_t", "0.8"}}}, {"lambda=10", {{"a_r", "0.2"}, {"a_t", "0.8"}, {"lambda", "10"}}}};
            return s;
        }
        if (id == "fig5b")
        {
            auto s = base("fig5b", "Ergodic data rate versus power budget, NOMA and OMA");
            s.metrics = {"rate_r", "rate_t"};
            s.schemes = {Scheme::astars_noma, Scheme::astars_oma};
            s.variants = {rate_split};
            return s;
        }
        if (id == "fig6")
        {
            auto s = base("fig6", "Ergodic data rate versus power budget for several path-loss exponents");
            s.metrics = {"rate_r", "rate_t"};
            s.variants = {{"alpha=2", {{"a_r", "0.2"}, {"a_t", "0.8"}, {"alpha", "2"}}},
                          {"alpha=2.5", {{"a_r", "0.2"}, {"a_t", "0.8"}, {"alpha", "2.5"}}},
                          {"alpha=3", {{"a_r", "0.2"}, {"a_t", "0.8"}, {"alpha", "3"}}}};
            return s;
        }
        if (id == "fig8a")
        {
            auto s = base("fig8a", "Delay-limited system throughput versus power budget");
            s.metrics = {"throughput_limited"};
            s.schemes = {Scheme::astars_noma, Scheme::astars_oma, Scheme::pstars_noma};
            return s;
        }
        if (id == "fig8b")
        {
            auto s = base("fig8b", "Delay-tolerant system throughput versus power budget");
            s.metrics = {"throughput_tolerant"};
            s.schemes = {Scheme::astars_noma, Scheme::astars_oma, Scheme::pstars_noma};
            s.variants = {rate_split};
            return s;
        }
        return std::nullopt;
    }
}
