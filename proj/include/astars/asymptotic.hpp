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

#include <span>
#include <utility>
#include <vector>

namespace astars::asymptotic
{
    struct SlopeFit
    {
        double slope = 0.0;
        double intercept = 0.0;
        double r_squared = 0.0;
        int points_used = 0;
    };

    enum class FitScale
    {
        loglog,   // returns -d ln(value) / d ln(ps), the diversity order
        semilogx  // returns d value / d log2(ps), the multiplexing gain
    };

    // Leading small-x term (C/Lambda)^L x^L / (2L)! of the cascade CDF, with C = 2F1(2, 1/2; 5/2; z_cap).
    double high_snr_cascade_cdf(double kappa, int L, double x, double z_cap);

    // ps-independent outage floor of the reflection-side user under imperfect SIC (ps -> inf limit).
    double outage_floor_r_ipsic(const model::NetworkConfig &cfg);

    // High-SNR outage expressions; scale exactly as ps^{-L}.
    double outage_asym_r_psic(const model::NetworkConfig &cfg, double ps);
    double outage_asym_t(const model::NetworkConfig &cfg, double ps);

    // ps-independent ergodic-rate ceiling of the reflection-side user under imperfect SIC.
    double ergodic_asym_r_ipsic(const model::NetworkConfig &cfg);

    // Jensen upper bound log2(1 + E[gamma_r]) on the perfect-SIC ergodic rate.
    double ergodic_bound_r_psic(const model::NetworkConfig &cfg, double ps);

    // ps -> inf limit of the transmission-side ergodic rate, approximating log2(1 + a_t/a_r).
    double ergodic_asym_t(const model::NetworkConfig &cfg);

    SlopeFit fit_order(std::span<const std::pair<double, double>> points, FitScale scale);

    // Points whose ps lies within the top decade of the sweep.
    std::vector<std::pair<double, double>> top_decade(std::span<const std::pair<double, double>> points);
}
