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

#include "astars/model.hpp"
#include "astars/error.hpp"
#include "astars/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace astars::model
{
    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
    double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
    double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1e3); }

    Moments element_moments(double kappa)
    {
        if (!(kappa >= 0.0))
            throw DomainError("element_moments: kappa must be nonnegative");
        const double lh = numerics::laguerre_half(-kappa);
        const double m1 = std::numbers::pi / (4.0 * (kappa + 1.0)) * lh * lh; // E|h| for one gain, squared
        Moments out;
        out.mean = m1;
        out.variance = 1.0 - m1 * m1;
        if (!(out.variance > 0.0) || !std::isfinite(out.mean))
            throw DomainError("element_moments: kappa too large for moment matching");
        return out;
    }

    GammaApprox gamma_fit(double kappa, int L)
    {
        if (L < 1)
            throw DomainError("gamma_fit: L must be >= 1");
        const Moments m = element_moments(kappa);
        return {L * m.mean * m.mean / m.variance, m.variance / m.mean};
    }

    double cascade_cdf(const GammaApprox &g, double x)
    {
        if (!(x >= 0.0))
            throw DomainError("cascade_cdf: x must be nonnegative");
        return numerics::regularized_lower_gamma(g.p, std::sqrt(x) / g.q);
    }

    double noise_power_factor(double kappa, int L)
    {
        if (!(kappa >= 0.0) || L < 1)
            throw DomainError("noise_power_factor: requires kappa >= 0 and L >= 1");
        if (std::isinf(kappa))
            return double(L) * L;
        return L * (L * kappa + 1.0) / (kappa + 1.0);
    }

    double distance_pdf(double x, double D)
    {
        if (!(x >= 0.0) || x > D)
            return 0.0;
        return 2.0 * x / (D * D);
    }

    double sample_distance(RandomStream &rng, double D)
    {
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        // 1 - u lies in (0, 1], which keeps the distance strictly positive
        return D * std::sqrt(1.0 - uniform(rng));
    }
}
