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
#include "astars/model.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace astars::montecarlo
{
    using analytic::MetricKind;
    using analytic::SicMode;
    using model::RandomStream;

    enum class Scheme
    {
        astars_noma,
        astars_oma,
        pstars_noma
    };

    std::string_view to_string(Scheme scheme);
    Scheme parse_scheme(std::string_view tag);

    struct TrialDraw
    {
        std::vector<std::complex<double>> h_s;
        std::vector<std::complex<double>> h_r;
        std::vector<std::complex<double>> h_t;
        std::vector<std::complex<double>> n_s;
        double h_re_sq = 0.0;
        double d_r = 0.0;
        double d_t = 0.0;
    };

    struct SinrSet
    {
        double r_to_t = 0.0;
        double r_psic = 0.0;
        double r_ipsic = 0.0;
        double t = 0.0;
    };

    struct Estimate
    {
        double mean = 0.0;
        std::uint64_t trials = 0;
        double ci95_halfwidth = 0.0;
        MetricKind kind = MetricKind::outage_r;
    };

    // Independent random stream for trial `trial` under `seed`.
    RandomStream trial_stream(std::uint64_t seed, std::uint64_t trial);

    TrialDraw draw_trial(RandomStream &rng, const model::NetworkConfig &cfg);

    // SINRs of the active surface. A passive surface is modelled by amp_lambda = 1 and noise_sigma_s2 = 0.
    SinrSet sinr_set(const TrialDraw &trial, const model::NetworkConfig &cfg, double ps);

    // Configuration seen by the passive-surface baseline.
    model::NetworkConfig passive_view(const model::NetworkConfig &cfg);

    // Transmit power left by a total budget; throws ConfigError when the budget is infeasible.
    double budget_to_ps(double q_tot, const model::NetworkConfig &cfg, bool active);
    double scheme_ps(double q_tot, const model::NetworkConfig &cfg, Scheme scheme);

    struct SimulationOptions
    {
        std::uint64_t trials = 100000;
        std::uint64_t seed = 1;
        unsigned workers = 0; // 0 selects the hardware concurrency
    };

    // All metric estimates at one transmit power.
    struct PointEstimates
    {
        double ps = 0.0;
        std::array<std::array<Estimate, 2>, 7> values{};

        const Estimate &get(MetricKind kind, SicMode mode) const { return values[std::size_t(kind)][std::size_t(mode)]; }
    };

    // Monte Carlo over the exact signal model; the same channel draws serve every power in `ps`.
    // Results are bit-identical for any worker count.
    std::vector<PointEstimates> simulate(const model::NetworkConfig &cfg, Scheme scheme, std::span<const double> ps,
                                         const SimulationOptions &options);

    struct OutageEstimates
    {
        Estimate user_r, user_t, system;
    };

    struct ErgodicEstimates
    {
        Estimate user_r, user_t, sum;
    };

    OutageEstimates estimate_outage(const model::NetworkConfig &cfg, SicMode mode, double ps, std::uint64_t trials, std::uint64_t seed);
    ErgodicEstimates estimate_ergodic(const model::NetworkConfig &cfg, SicMode mode, double ps, std::uint64_t trials, std::uint64_t seed);
    PointEstimates baseline_estimate(const model::NetworkConfig &cfg, Scheme scheme, double ps, std::uint64_t trials, std::uint64_t seed);

    // Samples of (sum_l |h_s^l| |h_phi^l|)^2 drawn from the same per-trial streams.
    std::vector<double> sample_cascade_gain(double kappa, int L, std::uint64_t samples, std::uint64_t seed, unsigned workers = 0);
}
