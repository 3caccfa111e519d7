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
#include <random>
#include <utility>

namespace astars::model
{
    using RandomStream = std::mt19937_64;

    double db_to_linear(double db);
    double linear_to_db(double linear);
    double dbm_to_watts(double dbm);
    double watts_to_dbm(double watts);

    // All physical and numerical parameters; every field is in linear units.
    // Default-constructed values are the reference scenario.
    struct NetworkConfig
    {
        double rician_kappa = 0.31622776601683794; // -5 dB
        double amp_lambda = 5.0;
        int num_elements = 10;
        double radius_d = 35.0;  // m
        double dist_bs = 50.0;   // m
        double beta_r = 0.7;
        double beta_t = 0.3;
        double a_r = 0.3;
        double a_t = 0.7;
        double noise_sigma_s2 = 1e-10;  // W, -70 dBm
        double noise_sigma_02 = 1e-12;  // W, -90 dBm
        double noise_sigma_re2 = 1e-12; // W, -90 dBm
        double path_alpha = 2.0;
        double path_eta0 = 1e-3; // -30 dB
        double target_rate_r = 1.0;
        double target_rate_t = 1.0;
        int quad_k = 200;
        int quad_u = 200;
        int quad_q = 200;
        int cheb_n = 200;
        std::uint64_t mc_trials = 100000;
        std::uint64_t seed = 20240601;
        double pc_watts = 1e-5; // -20 dBm
        double pd_watts = 1e-5; // -20 dBm
        double hyp2f1_z_cap = 1.0 - 1e-3;
        bool mean_noise_mode = false;

        // Throws ConfigError naming the offending key and constraint.
        void validate() const;

        double target_sinr_r() const;
        double target_sinr_t() const;
    };

    struct GammaApprox
    {
        double p = 1.0; // shape
        double q = 1.0; // scale
    };

    struct Moments
    {
        double mean = 0.0;
        double variance = 0.0;
    };

    // Mean and variance of |h_s^l| |h_phi^l| for two independent unit-power Rician gains.
    Moments element_moments(double kappa);

    // Moment-matched law of sqrt(X) for the squared cascade gain X = (sum_l |h_s^l h_phi^l|)^2.
    GammaApprox gamma_fit(double kappa, int L);

    // F_X(x) = P(p, sqrt(x)/q).
    double cascade_cdf(const GammaApprox &g, double x);

    // zeta = L (L kappa + 1) / (kappa + 1), the mean power of sum_l h_phi^l.
    double noise_power_factor(double kappa, int L);

    // Density 2x/D^2 of the distance of a user placed uniformly in a disk of radius D.
    double distance_pdf(double x, double D);

    // Inverse-CDF draw D sqrt(u).
    double sample_distance(RandomStream &rng, double D);
}
