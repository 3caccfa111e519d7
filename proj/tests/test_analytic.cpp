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

#include "astars/analytic.hpp"
#include "astars/error.hpp"

#include <catch_amalgamated.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

using namespace astars;
using namespace astars::analytic;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    constexpr double inf = std::numeric_limits<double>::infinity();

    // Independent restatement of the link model for the quadrature oracle.
    struct Oracle
    {
        model::NetworkConfig c;
        double p, q, zeta, gr, gt, sic;

        explicit Oracle(const model::NetworkConfig &cfg) : c(cfg)
        {
            const double k = c.rician_kappa;
            const double L = c.num_elements;
            const double h = k / 2.0;
            const double lhalf = std::exp(-h) * ((1.0 + k) * std::cyl_bessel_i(0.0, h) + k * std::cyl_bessel_i(1.0, h));
            const double m = std::numbers::pi / (4.0 * (k + 1.0)) * lhalf * lhalf;
            const double v = 1.0 - m * m;
            p = L * m * m / v;
            q = v / m;
            zeta = L * (L * k + 1.0) / (k + 1.0);
            gr = std::exp2(c.target_rate_r) - 1.0;
            gt = std::exp2(c.target_rate_t) - 1.0;
            sic = gt / (c.a_t - gt * c.a_r);
        }

        double cdf(double x) const { return x <= 0.0 ? 0.0 : boost::math::gamma_p(p, std::sqrt(x) / q); }
        double pdf_d(double d) const { return 2.0 * d / (c.radius_d * c.radius_d); }
        double surface() const { return zeta * c.noise_sigma_s2 / c.path_eta0; }
        double user_noise(double d, double beta) const
        {
            return std::pow(d, c.path_alpha) * c.noise_sigma_02 / (c.path_eta0 * c.path_eta0 * beta * c.amp_lambda);
        }
        double ds() const { return std::pow(c.dist_bs, c.path_alpha); }

        // Threshold on X for a unit SINR target at user r, with residual power y.
        double base_r(double d, double y, double ps) const
        {
            return ds() / (c.a_r * ps) * (surface() + user_noise(d, c.beta_r) + std::pow(d, c.path_alpha) * y * ps / (c.path_eta0 * c.path_eta0 * c.beta_r * c.amp_lambda));
        }
        double threshold_r(double d, double y, double ps) const
        {
            const double sic_term = sic * ds() / ps * (surface() + user_noise(d, c.beta_r));
            return std::max(gr * base_r(d, y, ps), sic_term);
        }
        double noise_t(double d, double ps) const { return ds() / ps * (surface() + user_noise(d, c.beta_t)); }

        double outage_r_psic(double ps) const
        {
            return GK::integrate([&](double d) { return pdf_d(d) * cdf(threshold_r(d, 0.0, ps)); }, 0.0, c.radius_d, 12, 1e-12);
        }
        double outage_r_ipsic(double ps) const
        {
            auto over_y = [&](double d)
            {
                return GK::integrate([&](double t) { return std::exp(-t) * cdf(threshold_r(d, t * c.noise_sigma_re2, ps)); }, 0.0, inf, 12, 1e-12);
            };
            return GK::integrate([&](double d) { return pdf_d(d) * over_y(d); }, 0.0, c.radius_d, 12, 1e-11);
        }
        double outage_t(double ps) const
        {
            return GK::integrate([&](double d) { return pdf_d(d) * cdf(sic * noise_t(d, ps)); }, 0.0, c.radius_d, 12, 1e-12);
        }
        double rate_r_psic(double ps) const
        {
            auto inner = [&](double d)
            {
                const double T = base_r(d, 0.0, ps);
                return GK::integrate([&](double s) { return (1.0 - cdf(T * s)) / (1.0 + s); }, 0.0, inf, 15, 1e-12);
            };
            return GK::integrate([&](double d) { return pdf_d(d) * inner(d); }, 0.0, c.radius_d, 12, 1e-11) / std::numbers::ln2;
        }
        double rate_t(double ps) const
        {
            const double top = c.a_t / c.a_r;
            auto inner = [&](double d)
            {
                const double N = noise_t(d, ps);
                return GK::integrate([&](double s) { return (1.0 - cdf(s * N / (c.a_t - s * c.a_r))) / (1.0 + s); }, 0.0, top, 15, 1e-12);
            };
            return GK::integrate([&](double d) { return pdf_d(d) * inner(d); }, 0.0, c.radius_d, 12, 1e-11) / std::numbers::ln2;
        }
    };

    model::NetworkConfig fine(model::NetworkConfig c, int n)
    {
        c.quad_k = n;
        c.quad_u = n;
        c.quad_q = n;
        c.cheb_n = n;
        return c;
    }

    const double ps_grid[] = {0.01, 0.1, 1.0, 10.0};
}

TEST_CASE("outage closed forms match direct integration", "[analytic][oracle]")
{
    const model::NetworkConfig cfg;
    const Oracle o(cfg);
    const auto c = fine(cfg, 2000);
    for (double ps : ps_grid)
    {
        INFO("ps=" << ps);
        CHECK_THAT(outage_r(c, SicMode::psic, ps), WithinAbs(o.outage_r_psic(ps), 1e-6));
        CHECK_THAT(outage_t(c, ps), WithinAbs(o.outage_t(ps), 1e-6));
        CHECK_THAT(outage_r(cfg, SicMode::psic, ps), WithinAbs(o.outage_r_psic(ps), 1e-4));
        CHECK_THAT(outage_t(cfg, ps), WithinAbs(o.outage_t(ps), 1e-4));
    }
}

TEST_CASE("imperfect-SIC outage matches direct integration", "[analytic][oracle]")
{
    model::NetworkConfig cfg;
    cfg.quad_u = 2000;
    const Oracle o(cfg);
    for (double ps : {0.01, 1.0})
    {
        INFO("ps=" << ps);
        CHECK_THAT(outage_r(cfg, SicMode::ipsic, ps), WithinAbs(o.outage_r_ipsic(ps), 1e-6));
    }
}

TEST_CASE("ergodic rates match direct integration", "[analytic][oracle]")
{
    model::NetworkConfig cfg;
    cfg.a_r = 0.2;
    cfg.a_t = 0.8;
    const Oracle o(cfg);
    const auto c = fine(cfg, 2000);
    for (double ps : ps_grid)
    {
        INFO("ps=" << ps);
        CHECK_THAT(ergodic_rate_r(c, SicMode::psic, ps), WithinRel(o.rate_r_psic(ps), 1e-6));
        CHECK_THAT(ergodic_rate_t(c, ps), WithinRel(o.rate_t(ps), 1e-6));
        CHECK_THAT(ergodic_rate_r(cfg, SicMode::psic, ps), WithinRel(o.rate_r_psic(ps), 1e-4));
        CHECK_THAT(ergodic_rate_t(cfg, ps), WithinRel(o.rate_t(ps), 1e-4));
    }
}

TEST_CASE("outage properties over power", "[analytic][property]")
{
    const model::NetworkConfig cfg;
    double prev_p = 1.0, prev_i = 1.0, prev_t = 1.0;
    for (double dbm = 0.0; dbm <= 60.0; dbm += 5.0)
    {
        const double ps = model::dbm_to_watts(dbm);
        const double p = outage_r(cfg, SicMode::psic, ps);
        const double i = outage_r(cfg, SicMode::ipsic, ps);
        const double t = outage_t(cfg, ps);
        INFO("ps_dbm=" << dbm);
        CHECK(p >= 0.0);
        CHECK(i <= 1.0);
        CHECK(i >= p);
        CHECK(p <= prev_p);
        CHECK(i <= prev_i);
        CHECK(t <= prev_t);
        const double sys = system_outage(cfg, SicMode::ipsic, ps);
        CHECK(sys >= std::max(i, t) - 1e-15);
        CHECK(sys <= 1.0);
        prev_p = p;
        prev_i = i;
        prev_t = t;
    }
}

TEST_CASE("infeasible power split gives certain outage", "[analytic]")
{
    model::NetworkConfig cfg;
    cfg.target_rate_t = 2.0; // 3 * a_r > a_t
    CHECK(outage_t(cfg, 1.0) == 1.0);
    CHECK(outage_r(cfg, SicMode::psic, 1.0) == 1.0);
}

TEST_CASE("rate properties over power", "[analytic][property]")
{
    model::NetworkConfig cfg;
    cfg.quad_q = 60;
    cfg.quad_k = 40;
    const double ceiling = std::log2(1.0 + cfg.a_t / cfg.a_r);
    double prev = 0.0;
    for (double dbm = 0.0; dbm <= 60.0; dbm += 10.0)
    {
        const double ps = model::dbm_to_watts(dbm);
        const double rp = ergodic_rate_r(cfg, SicMode::psic, ps);
        const double ri = ergodic_rate_r(cfg, SicMode::ipsic, ps);
        const double rt = ergodic_rate_t(cfg, ps);
        INFO("ps_dbm=" << dbm);
        CHECK(rp > prev);
        CHECK(ri <= rp);
        CHECK(rt >= 0.0);
        CHECK(rt <= ceiling + 1e-3);
        CHECK_THAT(throughput_delay_tolerant(cfg, SicMode::psic, ps), WithinRel(rp + rt, 1e-12));
        const double tl = throughput_delay_limited(cfg, SicMode::psic, ps);
        CHECK(tl >= 0.0);
        CHECK(tl <= cfg.target_rate_r + cfg.target_rate_t);
        prev = rp;
    }
}

TEST_CASE("combinators", "[analytic]")
{
    CHECK(combine_system_outage(0.0, 0.0) == 0.0);
    CHECK_THAT(combine_system_outage(0.1, 0.2), WithinRel(0.28, 1e-14));
    CHECK_THAT(combine_delay_limited(0.1, 0.2, 1.0, 1.0), WithinRel(1.7, 1e-14));
}

TEST_CASE("evaluate dispatches on the metric tag", "[analytic]")
{
    const model::NetworkConfig cfg;
    const double ps = 0.05;
    CHECK(evaluate(cfg, MetricKind::outage_r, SicMode::ipsic, ps).value == outage_r(cfg, SicMode::ipsic, ps));
    CHECK(evaluate(cfg, MetricKind::outage_t, SicMode::ipsic, ps).value == outage_t(cfg, ps));
    CHECK(evaluate(cfg, MetricKind::rate_t, SicMode::psic, ps).value == ergodic_rate_t(cfg, ps));
    CHECK(is_probability(MetricKind::outage_system));
    CHECK_FALSE(is_probability(MetricKind::rate_r));
    CHECK(to_string(MetricKind::throughput_tolerant) == "throughput_tolerant");
    CHECK(to_string(SicMode::ipsic) == "ipsic");
}

TEST_CASE("invalid power is rejected", "[analytic]")
{
    const model::NetworkConfig cfg;
    CHECK_THROWS_AS(outage_r(cfg, SicMode::psic, 0.0), DomainError);
    CHECK_THROWS_AS(outage_t(cfg, -1.0), DomainError);
    CHECK_THROWS_AS(ergodic_rate_r(cfg, SicMode::psic, std::numeric_limits<double>::quiet_NaN()), DomainError);
}
