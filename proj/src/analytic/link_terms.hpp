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
#include "astars/numerics.hpp"

#include <memory>

namespace astars::detail
{
    // Rules are built once per size and shared read-only between threads.
    std::shared_ptr<const numerics::QuadratureRule> laguerre_rule(int K);
    std::shared_ptr<const numerics::QuadratureRule> chebyshev_rule(int U);

    // Per-configuration constants shared by the closed-form and high-SNR evaluators.
    struct LinkTerms
    {
        model::GammaApprox fit;
        double zeta = 0.0;
        double gamma_hat_r = 0.0;
        double gamma_hat_t = 0.0;
        double ds_alpha = 0.0;      // d_s^alpha
        double surface_noise = 0.0; // zeta sigma_s^2 / eta0
        double sic_factor = 0.0;    // gamma_hat_t / (a_t - gamma_hat_t a_r)
        bool t_decodable = true;    // a_t > gamma_hat_t a_r

        explicit LinkTerms(const model::NetworkConfig &cfg);
    };

    // Distance node chi_u = (x_u + 1) D / 2 and its weight pi (x_u + 1) sqrt(1 - x_u^2) / (2U).
    struct DistanceNode
    {
        double chi;
        double weight;
    };
    std::vector<DistanceNode> distance_nodes(const numerics::QuadratureRule &cheb, double D);

    // Cascade-gain threshold of the reflection-side user at distance chi with residual interference power y (W):
    // the union of the SIC step (decode x_t) and own-signal decoding.
    double threshold_r(const model::NetworkConfig &cfg, const LinkTerms &t, double chi, double y, double ps);

    // Own-signal part only, with unit target SINR; the ergodic-rate scale is sqrt of this over q.
    double own_signal_threshold_r(const model::NetworkConfig &cfg, const LinkTerms &t, double chi, double y, double ps);

    double threshold_t(const model::NetworkConfig &cfg, const LinkTerms &t, double chi, double ps);
}
