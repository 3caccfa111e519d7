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
#include "analytic/link_terms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace astars::analytic
{
    namespace
    {
        constexpr double range_slack = 1e-9;

        void require_power(double ps, const char *what)
        {
            if (!(ps > 0.0) || !std::isfinite(ps))
                throw DomainError(std::string(what) + ": transmit power must be positive and finite");
        }

        double checked_probability(double value, const char *what)
        {
            if (!(value >= -range_slack && value <= 1.0 + range_slack))
                throw NumericIntegrityError(std::string(what) + ": probability " + std::to_string(value) + " outside [0,1]");
            return std::clamp(value, 0.0, 1.0);
        }

        double cdf_at(const model::GammaApprox &g, double threshold)
        {
            return numerics::regularized_lower_gamma(g.p, std::sqrt(threshold) / g.q);
        }
    }

    std::string_view to_string(SicMode mode)
    {
        return mode == SicMode::psic ? "psic" : "ipsic";
    }

    std::string_view to_string(MetricKind kind)
    {
        switch (kind)
        {
        case MetricKind::outage_r: return "outage_r";
        case MetricKind::outage_t: return "outage_t";
        case MetricKind::outage_system: return "outage_system";
        case MetricKind::rate_r: return "rate_r";
        case MetricKind::rate_t: return "rate_t";
        case MetricKind::throughput_limited: return "throughput_limited";
        case MetricKind::throughput_tolerant: return "throughput_tolerant";
        }
        return "unknown";
    }

    bool is_probability(MetricKind kind)
    {
        return kind == MetricKind::outage_r || kind == MetricKind::outage_t || kind == MetricKind::outage_system;
    }

    double outage_r(const model::NetworkConfig &cfg, SicMode mode, double ps)
    {
        require_power(ps, "outage_r");
        const detail::LinkTerms terms(cfg);
        if (!terms.t_decodable)
            return 1.0;
        if (cfg.a_r <= 0.0 && terms.gamma_hat_r > 0.0)
            return 1.0;

        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        const auto dist = detail::distance_nodes(*cheb, cfg.radius_d);
        double total = 0.0;
        if (mode == SicMode::psic)
        {
            for (const auto &d : dist)
                total += d.weight * cdf_at(terms.fit, detail::threshold_r(cfg, terms, d.chi, 0.0, ps));
        }
        else
        {
            const auto lag = detail::laguerre_rule(cfg.quad_k);
            for (std::size_t k = 0; k < lag->size(); ++k)
            {
                const double weight = lag->weights[k];
                if (weight == 0.0)
                    continue;
                const double y = lag->nodes[k] * cfg.noise_sigma_re2;
                double inner = 0.0;
                for (const auto &d : dist)
                    inner += d.weight * cdf_at(terms.fit, detail::threshold_r(cfg, terms, d.chi, y, ps));
                total += weight * inner;
            }
        }
        return checked_probability(total, "outage_r");
    }

    double outage_t(const model::NetworkConfig &cfg, double ps)
    {
        require_power(ps, "outage_t");
        const detail::LinkTerms terms(cfg);
        if (!terms.t_decodable)
            return 1.0;
        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        double total = 0.0;
        for (const auto &d : detail::distance_nodes(*cheb, cfg.radius_d))
            total += d.weight * cdf_at(terms.fit, detail::threshold_t(cfg, terms, d.chi, ps));
        return checked_probability(total, "outage_t");
    }

    double combine_system_outage(double p_r, double p_t)
    {
        return 1.0 - (1.0 - p_r) * (1.0 - p_t);
    }

    double system_outage(const model::NetworkConfig &cfg, SicMode mode, double ps)
    {
        return checked_probability(combine_system_outage(outage_r(cfg, mode, ps), outage_t(cfg, ps)), "system_outage");
    }

    double ergodic_rate_r(const model::NetworkConfig &cfg, SicMode mode, double ps)
    {
        require_power(ps, "ergodic_rate_r");
        if (cfg.a_r <= 0.0)
            return 0.0;
        const detail::LinkTerms terms(cfg);
        const double p = terms.fit.p;
        const double q2 = terms.fit.q * terms.fit.q;

        // Laguerre weights folded with t^{p-1}/Gamma(p), combined in log space
        const auto lq = detail::laguerre_rule(cfg.quad_q);
        std::vector<double> wq, xq2;
        for (std::size_t j = 0; j < lq->size(); ++j)
        {
            const double x = lq->nodes[j];
            const double w = std::exp(lq->log_weights[j] + (p - 1.0) * std::log(x) - std::lgamma(p));
            if (w == 0.0)
                continue;
            wq.push_back(w);
            xq2.push_back(x * x);
        }
        auto inner = [&](double theta2)
        {
            double s = 0.0;
            for (std::size_t j = 0; j < wq.size(); ++j)
                s += wq[j] * std::log1p(xq2[j] / theta2);
            return s;
        };

        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        const auto dist = detail::distance_nodes(*cheb, cfg.radius_d);
        double total = 0.0;
        if (mode == SicMode::psic)
        {
            for (const auto &d : dist)
                total += d.weight * inner(detail::own_signal_threshold_r(cfg, terms, d.chi, 0.0, ps) / q2);
        }
        else
        {
            const auto lag = detail::laguerre_rule(cfg.quad_k);
            for (std::size_t k = 0; k < lag->size(); ++k)
            {
                const double weight = lag->weights[k];
                if (weight == 0.0)
                    continue;
                const double y = lag->nodes[k] * cfg.noise_sigma_re2;
                double s = 0.0;
                for (const auto &d : dist)
                    s += d.weight * inner(detail::own_signal_threshold_r(cfg, terms, d.chi, y, ps) / q2);
                total += weight * s;
            }
        }
        const double rate = total / std::numbers::ln2;
        if (!(rate >= 0.0))
            throw NumericIntegrityError("ergodic_rate_r: negative or undefined rate");
        return rate;
    }

    double ergodic_rate_t(const model::NetworkConfig &cfg, double ps)
    {
        require_power(ps, "ergodic_rate_t");
        if (!(cfg.a_r > 0.0))
            throw DomainError("ergodic_rate_t: requires a_r > 0");
        const detail::LinkTerms terms(cfg);
        const double eta0 = cfg.path_eta0;
        const auto outer = detail::chebyshev_rule(cfg.cheb_n);
        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        const auto dist = detail::distance_nodes(*cheb, cfg.radius_d);

        std::vector<double> noise(dist.size());
        for (std::size_t u = 0; u < dist.size(); ++u)
            noise[u] = std::pow(dist[u].chi, cfg.path_alpha) * cfg.noise_sigma_02 / (eta0 * eta0 * cfg.beta_t * cfg.amp_lambda) + terms.surface_noise;

        double sum = 0.0;
        for (std::size_t n = 0; n < outer->size(); ++n)
        {
            const double x = outer->nodes[n];
            const double y = (x + 1.0) * cfg.a_t / (2.0 * cfg.a_r);
            const double scale = y * terms.ds_alpha / (ps * (cfg.a_t - y * cfg.a_r));
            double cdf = 0.0;
            for (std::size_t u = 0; u < dist.size(); ++u)
                cdf += dist[u].weight * cdf_at(terms.fit, scale * noise[u]);
            sum += std::sqrt(1.0 - x * x) / (1.0 + y) * (1.0 - cdf);
        }
        const double rate = std::numbers::pi * cfg.a_t / (2.0 * outer->size() * cfg.a_r * std::numbers::ln2) * sum;
        const double ceiling = std::log2(1.0 + cfg.a_t / cfg.a_r);
        // The outer rule integrates a sqrt(1 - x^2) factor, so its error decays like 1/N^2.
        const double slack = 10.0 * ceiling / (double(outer->size()) * double(outer->size()));
        if (!(rate >= 0.0) || rate > ceiling + slack)
            throw NumericIntegrityError("ergodic_rate_t: rate " + std::to_string(rate) + " outside [0, log2(1 + a_t/a_r)]");
        return rate;
    }

    double combine_delay_limited(double p_r, double p_t, double rate_r, double rate_t)
    {
        return (1.0 - p_r) * rate_r + (1.0 - p_t) * rate_t;
    }

    double throughput_delay_limited(const model::NetworkConfig &cfg, SicMode mode, double ps)
    {
        return combine_delay_limited(outage_r(cfg, mode, ps), outage_t(cfg, ps), cfg.target_rate_r, cfg.target_rate_t);
    }

    double throughput_delay_tolerant(const model::NetworkConfig &cfg, SicMode mode, double ps)
    {
        return ergodic_rate_r(cfg, mode, ps) + ergodic_rate_t(cfg, ps);
    }

    MetricPoint evaluate(const model::NetworkConfig &cfg, MetricKind kind, SicMode mode, double ps)
    {
        double value = 0.0;
        switch (kind)
        {
        case MetricKind::outage_r: value = outage_r(cfg, mode, ps); break;
        case MetricKind::outage_t: value = outage_t(cfg, ps); break;
        case MetricKind::outage_system: value = system_outage(cfg, mode, ps); break;
        case MetricKind::rate_r: value = ergodic_rate_r(cfg, mode, ps); break;
        case MetricKind::rate_t: value = ergodic_rate_t(cfg, ps); break;
        case MetricKind::throughput_limited: value = throughput_delay_limited(cfg, mode, ps); break;
        case MetricKind::throughput_tolerant: value = throughput_delay_tolerant(cfg, mode, ps); break;
        }
        return {ps, value, kind};
    }
}
