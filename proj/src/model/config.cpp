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

#include <cmath>
#include <string>

namespace astars::model
{
    namespace
    {
        void require(bool ok, const std::string &key, const std::string &constraint)
        {
            if (!ok)
                throw ConfigError(key + ": constraint " + constraint + " violated");
        }
    }

    void NetworkConfig::validate() const
    {
        require(std::isfinite(rician_kappa) && rician_kappa >= 0.0, "kappa_db", "kappa >= 0");
        require(std::isfinite(amp_lambda) && amp_lambda > 1.0, "lambda", "lambda > 1");
        require(num_elements >= 1, "num_elements", "L >= 1");
        require(std::isfinite(radius_d) && radius_d > 0.0, "radius_d", "D > 0");
        require(std::isfinite(dist_bs) && dist_bs > 0.0, "dist_bs", "d_s > 0");
        require(beta_r > 0.0, "beta_r", "beta_r > 0");
        require(beta_t > 0.0, "beta_t", "beta_t > 0");
        require(beta_r + beta_t <= 1.0 + 1e-12, "beta_r+beta_t", "beta_r+beta_t <= 1");
        require(a_r >= 0.0 && a_t > 0.0, "a_r", "a_r >= 0 and a_t > 0");
        require(std::abs(a_r + a_t - 1.0) <= 1e-9, "a_r+a_t", "a_r+a_t = 1");
        require(a_r <= a_t, "a_r", "a_r <= a_t");
        require(noise_sigma_s2 > 0.0, "sigma_s2_dbm", "noise power > 0");
        require(noise_sigma_02 > 0.0, "sigma_02_dbm", "noise power > 0");
        require(noise_sigma_re2 > 0.0, "sigma_re2_dbm", "noise power > 0");
        require(std::isfinite(path_alpha) && path_alpha >= 2.0, "alpha", "alpha >= 2");
        require(path_eta0 > 0.0 && std::isfinite(path_eta0), "eta0_db", "eta0 > 0");
        require(target_rate_r >= 0.0, "rate_r", "rate_r >= 0");
        require(target_rate_t >= 0.0, "rate_t", "rate_t >= 0");
        require(quad_k >= 1 && quad_k <= 2000, "quad_k", "1 <= quad_k <= 2000");
        require(quad_u >= 1 && quad_u <= 10000, "quad_u", "1 <= quad_u <= 10000");
        require(quad_q >= 1 && quad_q <= 2000, "quad_q", "1 <= quad_q <= 2000");
        require(cheb_n >= 1 && cheb_n <= 10000, "cheb_n", "1 <= cheb_n <= 10000");
        require(mc_trials >= 1, "mc_trials", "mc_trials >= 1");
        require(pc_watts >= 0.0, "pc_dbm", "finite power");
        require(pd_watts >= 0.0, "pd_dbm", "finite power");
        require(hyp2f1_z_cap > 0.0 && hyp2f1_z_cap < 1.0, "hyp2f1_z_cap", "0 < hyp2f1_z_cap < 1");
    }

    double NetworkConfig::target_sinr_r() const { return std::exp2(target_rate_r) - 1.0; }
    double NetworkConfig::target_sinr_t() const { return std::exp2(target_rate_t) - 1.0; }
}
