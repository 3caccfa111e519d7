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

#include <string_view>

namespace astars::analytic
{
    enum class SicMode
    {
        psic,
        ipsic
    };

    enum class MetricKind
    {
        outage_r,
        outage_t,
        outage_system,
        rate_r,
        rate_t,
        throughput_limited,
        throughput_tolerant
    };

    struct MetricPoint
    {
        double ps_watts = 0.0;
        double value = 0.0;
        MetricKind kind = MetricKind::outage_r;
    };

    std::string_view to_string(SicMode mode);
    std::string_view to_string(MetricKind kind);
    bool is_probability(MetricKind kind);

    // Outage probability of the reflection-side user, including the failure to decode the other user's signal first.
    double outage_r(const model::NetworkConfig &cfg, SicMode mode, double ps);

    // Outage probability of the transmission-side user.
    double outage_t(const model::NetworkConfig &cfg, double ps);

    double combine_system_outage(double p_r, double p_t);
    double system_outage(const model::NetworkConfig &cfg, SicMode mode, double ps);

    double ergodic_rate_r(const model::NetworkConfig &cfg, SicMode mode, double ps);
    double ergodic_rate_t(const model::NetworkConfig &cfg, double ps);

    double combine_delay_limited(double p_r, double p_t, double rate_r, double rate_t);
    double throughput_delay_limited(const model::NetworkConfig &cfg, SicMode mode, double ps);
    double throughput_delay_tolerant(const model::NetworkConfig &cfg, SicMode mode, double ps);

    // Dispatches on the metric tag; mode is ignored for user-t metrics.
    MetricPoint evaluate(const model::NetworkConfig &cfg, MetricKind kind, SicMode mode, double ps);
}
