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

#include "analytic/link_terms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace astars::detail
{
    namespace
    {
        template <class Builder>
        std::shared_ptr<const numerics::QuadratureRule> cached(std::map<int, std::shared_ptr<const numerics::QuadratureRule>> &cache,
                                                               std::mutex &mutex, int size, Builder build)
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = cache.find(size);
            if (it != cache.end())
                return it->second;
            auto rule = std::make_shared<const numerics::QuadratureRule>(build(size));
            cache.emplace(size, rule);
            return rule;
        }
    }

    std::shared_ptr<const numerics::QuadratureRule> laguerre_rule(int K)
    {
        static std::mutex mutex;
        static std::map<int, std::shared_ptr<const numerics::QuadratureRule>> cache;
        return cached(cache, mutex, K, numerics::gauss_laguerre_rule);
    }

    std::shared_ptr<const numerics::QuadratureRule> chebyshev_rule(int U)
    {
        static std::mutex mutex;
        static std::map<int, std::shared_ptr<const numerics::QuadratureRule>> cache;
        return cached(cache, mutex, U, numerics::gauss_chebyshev_nodes);
    }

    LinkTerms::LinkTerms(const model::NetworkConfig &cfg)
    {
        fit = model::gamma_fit(cfg.rician_kappa, cfg.num_elements);
        zeta = model::noise_power_factor(cfg.rician_kappa, cfg.num_elements);
        gamma_hat_r = cfg.target_sinr_r();
        gamma_hat_t = cfg.target_sinr_t();
        ds_alpha = std::pow(cfg.dist_bs, cfg.path_alpha);
        surface_noise = zeta * cfg.noise_sigma_s2 / cfg.path_eta0;
        t_decodable = cfg.a_t > gamma_hat_t * cfg.a_r;
        sic_factor = t_decodable ? gamma_hat_t / (cfg.a_t - gamma_hat_t * cfg.a_r) : std::numeric_limits<double>::infinity();
    }

    std::vector<DistanceNode> distance_nodes(const numerics::QuadratureRule &cheb, double D)
    {
        std::vector<DistanceNode> out;
        out.reserve(cheb.size());
        double total = 0.0;
        for (std::size_t u = 0; u < cheb.size(); ++u)
        {
            const double x = cheb.nodes[u];
            out.push_back({(x + 1.0) * D / 2.0, cheb.weights[u] * (x + 1.0) * std::sqrt(1.0 - x * x) / 2.0});
            total += out.back().weight;
        }
        // The raw weights sum to 1 + O(1/U^2); normalizing keeps averaged probabilities inside [0, 1].
        for (auto &node : out)
            node.weight /= total;
        return out;
    }

    double own_signal_threshold_r(const model::NetworkConfig &cfg, const LinkTerms &t, double chi, double y, double ps)
    {
        const double eta0 = cfg.path_eta0;
        const double chi_alpha = std::pow(chi, cfg.path_alpha);
        return t.ds_alpha / (cfg.a_r * ps) *
               (t.surface_noise + chi_alpha * (y * ps + cfg.noise_sigma_02) / (eta0 * eta0 * cfg.beta_r * cfg.amp_lambda));
    }

    double threshold_r(const model::NetworkConfig &cfg, const LinkTerms &t, double chi, double y, double ps)
    {
        const double eta0 = cfg.path_eta0;
        const double chi_alpha = std::pow(chi, cfg.path_alpha);
        const double own = (t.gamma_hat_r == 0.0) ? 0.0 : t.gamma_hat_r * own_signal_threshold_r(cfg, t, chi, y, ps);
        const double sic = t.sic_factor * t.ds_alpha / ps *
                           (t.surface_noise + chi_alpha * cfg.noise_sigma_02 / (eta0 * eta0 * cfg.beta_r * cfg.amp_lambda));
        return std::max(own, sic);
    }

    double threshold_t(const model::NetworkConfig &cfg, const LinkTerms &t, double chi, double ps)
    {
        const double eta0 = cfg.path_eta0;
        const double chi_alpha = std::pow(chi, cfg.path_alpha);
        return t.sic_factor * t.ds_alpha / ps *
               (t.surface_noise + chi_alpha * cfg.noise_sigma_02 / (eta0 * eta0 * cfg.beta_t * cfg.amp_lambda));
    }
}
