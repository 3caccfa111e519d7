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

#include "astars/asymptotic.hpp"
#include "astars/error.hpp"
#include "astars/numerics.hpp"
#include "analytic/link_terms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace astars::asymptotic
{
    namespace
    {
        // ln of the coefficient (C/Lambda)^L / (2L)! multiplying x^L
        double log_leading_coefficient(double kappa, int L, double z_cap)
        {
            const double c = numerics::hyp2f1_series(2.0, 0.5, 2.5, z_cap);
            const double log_lambda = std::log(3.0 / 16.0) + 2.0 * kappa - 2.0 * std::log1p(kappa);
            return L * (std::log(c) - log_lambda) - std::lgamma(2.0 * L + 1.0);
        }

        double leading_term(double log_coefficient, int L, double x)
        {
            if (x == 0.0)
                return 0.0;
            return std::exp(log_coefficient + L * std::log(x));
        }

        double checked_regime(double value, const char *what)
        {
            if (!(value <= 1.0))
                throw OutOfRegimeError(std::string(what) + ": high-SNR expression exceeds 1 (" + std::to_string(value) + ")");
            return value;
        }

        std::vector<double> folded_gamma_weights(const numerics::QuadratureRule &rule, double p, std::vector<double> &x2)
        {
            std::vector<double> w;
            for (std::size_t j = 0; j < rule.size(); ++j)
            {
                const double x = rule.nodes[j];
                const double v = std::exp(rule.log_weights[j] + (p - 1.0) * std::log(x) - std::lgamma(p));
                if (v == 0.0)
                    continue;
                w.push_back(v);
                x2.push_back(x * x);
            }
            return w;
        }
    }

    double high_snr_cascade_cdf(double kappa, int L, double x, double z_cap)
    {
        if (!(kappa >= 0.0) || L < 1 || !(x >= 0.0))
            throw DomainError("high_snr_cascade_cdf: requires kappa >= 0, L >= 1, x >= 0");
        return checked_regime(leading_term(log_leading_coefficient(kappa, L, z_cap), L, x), "high_snr_cascade_cdf");
    }

    double outage_asym_r_psic(const model::NetworkConfig &cfg, double ps)
    {
        if (!(ps > 0.0))
            throw DomainError("outage_asym_r_psic: transmit power must be positive");
        const detail::LinkTerms terms(cfg);
        if (!terms.t_decodable || !(cfg.a_r > 0.0))
            throw OutOfRegimeError("outage_asym_r_psic: outage is certain, no high-SNR slope");
        const int L = cfg.num_elements;
        const double logc = log_leading_coefficient(cfg.rician_kappa, L, cfg.hyp2f1_z_cap);
        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        double total = 0.0;
        for (const auto &d : detail::distance_nodes(*cheb, cfg.radius_d))
            total += d.weight * leading_term(logc, L, detail::threshold_r(cfg, terms, d.chi, 0.0, ps));
        return checked_regime(total, "outage_asym_r_psic");
    }

    double outage_asym_t(const model::NetworkConfig &cfg, double ps)
    {
        if (!(ps > 0.0))
            throw DomainError("outage_asym_t: transmit power must be positive");
        const detail::LinkTerms terms(cfg);
        if (!terms.t_decodable)
            throw OutOfRegimeError("outage_asym_t: a_t <= gamma_t a_r, outage is certain");
        const int L = cfg.num_elements;
        const double logc = log_leading_coefficient(cfg.rician_kappa, L, cfg.hyp2f1_z_cap);
        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        double total = 0.0;
        for (const auto &d : detail::distance_nodes(*cheb, cfg.radius_d))
            total += d.weight * leading_term(logc, L, detail::threshold_t(cfg, terms, d.chi, ps));
        return checked_regime(total, "outage_asym_t");
    }

    double outage_floor_r_ipsic(const model::NetworkConfig &cfg)
    {
        const detail::LinkTerms terms(cfg);
        if (!terms.t_decodable)
            return 1.0;
        if (terms.gamma_hat_r == 0.0)
            return 0.0;
        if (!(cfg.a_r > 0.0))
            return 1.0;
        const double eta0 = cfg.path_eta0;
        const double scale = terms.gamma_hat_r * terms.ds_alpha * cfg.noise_sigma_re2 /
                             (cfg.a_r * eta0 * eta0 * cfg.beta_r * cfg.amp_lambda);
        const auto lag = detail::laguerre_rule(cfg.quad_k);
        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        const auto dist = detail::distance_nodes(*cheb, cfg.radius_d);
        double total = 0.0;
        for (std::size_t k = 0; k < lag->size(); ++k)
        {
            if (lag->weights[k] == 0.0)
                continue;
            double inner = 0.0;
            for (const auto &d : dist)
            {
                const double x = scale * std::pow(d.chi, cfg.path_alpha) * lag->nodes[k];
                inner += d.weight * numerics::regularized_lower_gamma(terms.fit.p, std::sqrt(x) / terms.fit.q);
            }
            total += lag->weights[k] * inner;
        }
        // Laguerre weights sum to 1 only up to rounding
        return std::min(total, 1.0);
    }

    double ergodic_asym_r_ipsic(const model::NetworkConfig &cfg)
    {
        if (!(cfg.a_r > 0.0))
            return 0.0;
        const detail::LinkTerms terms(cfg);
        const double eta0 = cfg.path_eta0;
        const double q2 = terms.fit.q * terms.fit.q;
        std::vector<double> xq2;
        const auto wq = folded_gamma_weights(*detail::laguerre_rule(cfg.quad_q), terms.fit.p, xq2);
        const auto lag = detail::laguerre_rule(cfg.quad_k);
        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        const auto dist = detail::distance_nodes(*cheb, cfg.radius_d);
        const double scale = terms.ds_alpha * cfg.noise_sigma_re2 / (q2 * cfg.a_r * eta0 * eta0 * cfg.beta_r * cfg.amp_lambda);

        double total = 0.0;
        for (std::size_t k = 0; k < lag->size(); ++k)
        {
            if (lag->weights[k] == 0.0)
                continue;
            double s = 0.0;
            for (const auto &d : dist)
            {
                const double theta2 = scale * std::pow(d.chi, cfg.path_alpha) * lag->nodes[k];
                double inner = 0.0;
                for (std::size_t j = 0; j < wq.size(); ++j)
                    inner += wq[j] * std::log1p(xq2[j] / theta2);
                s += d.weight * inner;
            }
            total += lag->weights[k] * s;
        }
        return total / std::numbers::ln2;
    }

    double ergodic_bound_r_psic(const model::NetworkConfig &cfg, double ps)
    {
        if (!(ps > 0.0))
            throw DomainError("ergodic_bound_r_psic: transmit power must be positive");
        const detail::LinkTerms terms(cfg);
        const model::Moments m = model::element_moments(cfg.rician_kappa);
        const int L = cfg.num_elements;
        const double mean_x = L * m.variance + double(L) * L * m.mean * m.mean;
        const double eta0 = cfg.path_eta0;
        const double lb = cfg.amp_lambda * cfg.beta_r;

        // E_d[1 / (lambda beta eta0 zeta sigma_s^2 + d^alpha sigma_0^2)] over the distance law
        const auto cheb = detail::chebyshev_rule(cfg.quad_u);
        double inv_noise = 0.0;
        for (const auto &d : detail::distance_nodes(*cheb, cfg.radius_d))
            inv_noise += d.weight / (lb * eta0 * terms.zeta * cfg.noise_sigma_s2 + std::pow(d.chi, cfg.path_alpha) * cfg.noise_sigma_02);

        const double mean_sinr = cfg.a_r * lb * eta0 * eta0 * ps * mean_x / terms.ds_alpha * inv_noise;
        return std::log2(1.0 + mean_sinr);
    }

    double ergodic_asym_t(const model::NetworkConfig &cfg)
    {
        if (!(cfg.a_r > 0.0))
            throw DomainError("ergodic_asym_t: requires a_r > 0");
        const auto outer = detail::chebyshev_rule(cfg.cheb_n);
        double sum = 0.0;
        for (double x : outer->nodes)
        {
            const double y = (x + 1.0) * cfg.a_t / (2.0 * cfg.a_r);
            sum += std::sqrt(1.0 - x * x) / (1.0 + y);
        }
        return std::numbers::pi * cfg.a_t / (2.0 * outer->size() * cfg.a_r * std::numbers::ln2) * sum;
    }

    SlopeFit fit_order(std::span<const std::pair<double, double>> points, FitScale scale)
    {
        if (points.size() < 3)
            throw DomainError("fit_order: at least 3 points are required");
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            const auto [ps, value] = points[i];
            if (!(ps > 0.0) || (i > 0 && !(ps > points[i - 1].first)))
                throw DomainError("fit_order: ps must be positive and strictly increasing");
            if (scale == FitScale::loglog)
            {
                if (!(value > 0.0))
                    throw DomainError("fit_order: log-log fit needs positive values");
                xs.push_back(std::log(ps));
                ys.push_back(std::log(value));
            }
            else
            {
                xs.push_back(std::log2(ps));
                ys.push_back(value);
            }
        }
        const double n = double(xs.size());
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            mx += xs[i];
            my += ys[i];
        }
        mx /= n;
        my /= n;
        double sxx = 0.0, sxy = 0.0, syy = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
            syy += (ys[i] - my) * (ys[i] - my);
        }
        const double b = sxy / sxx;
        SlopeFit fit;
        fit.intercept = my - b * mx;
        fit.slope = (scale == FitScale::loglog) ? -b : b;
        fit.points_used = int(xs.size());
        if (syy == 0.0)
            fit.r_squared = 1.0;
        else
        {
            double ss_res = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i)
            {
                const double r = ys[i] - (fit.intercept + b * xs[i]);
                ss_res += r * r;
            }
            fit.r_squared = std::min(1.0, std::max(0.0, 1.0 - ss_res / syy));
        }
        return fit;
    }

    std::vector<std::pair<double, double>> top_decade(std::span<const std::pair<double, double>> points)
    {
        std::vector<std::pair<double, double>> out;
        if (points.empty())
            return out;
        const double cutoff = points.back().first / 10.0 * (1.0 - 1e-9);
        for (const auto &p : points)
            if (p.first >= cutoff)
                out.push_back(p);
        return out;
    }
}
