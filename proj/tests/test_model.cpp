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

#include "astars/error.hpp"
#include "astars/model.hpp"

#include <catch_amalgamated.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <limits>

using namespace astars;
using namespace astars::model;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    // k-th raw moment of a unit-power Rician amplitude by direct integration of its density.
    double rician_moment(double kappa, int k)
    {
        auto f = [=](double r)
        {
            const double s = 2.0 * r * std::sqrt(kappa * (kappa + 1.0));
            return std::pow(r, k) * 2.0 * (kappa + 1.0) * r * std::exp(-kappa - (kappa + 1.0) * r * r) *
                   boost::math::cyl_bessel_i(0, s);
        };
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 12.0, 15, 1e-13);
    }
}

TEST_CASE("unit conversions", "[model]")
{
    CHECK_THAT(db_to_linear(-5.0), WithinRel(0.31622776601683794, 1e-15));
    CHECK_THAT(dbm_to_watts(-90.0), WithinRel(1e-12, 1e-14));
    CHECK_THAT(dbm_to_watts(30.0), WithinRel(1.0, 1e-15));
    CHECK_THAT(watts_to_dbm(dbm_to_watts(17.5)), WithinAbs(17.5, 1e-12));
    CHECK_THAT(linear_to_db(db_to_linear(-30.0)), WithinAbs(-30.0, 1e-12));
}

TEST_CASE("default configuration is the reference scenario", "[model][config]")
{
    const NetworkConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK_THAT(c.rician_kappa, WithinRel(0.31622776601683794, 1e-15));
    CHECK(c.amp_lambda == 5.0);
    CHECK(c.num_elements == 10);
    CHECK(c.radius_d == 35.0);
    CHECK(c.dist_bs == 50.0);
    CHECK(c.beta_r == 0.7);
    CHECK(c.a_t == 0.7);
    CHECK_THAT(c.noise_sigma_s2, WithinRel(1e-10, 1e-12));
    CHECK_THAT(c.noise_sigma_02, WithinRel(1e-12, 1e-12));
    CHECK_THAT(c.path_eta0, WithinRel(1e-3, 1e-12));
    CHECK(c.target_sinr_r() == 1.0);
}

TEST_CASE("configuration invariants name the key", "[model][config]")
{
    NetworkConfig c;
    c.beta_r = 0.8;
    CHECK_THROWS_WITH(c.validate(), Catch::Matchers::ContainsSubstring("beta_r+beta_t <= 1 violated"));
    c = NetworkConfig{};
    c.a_r = 0.9;
    c.a_t = 0.1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = NetworkConfig{};
    c.num_elements = 0;
    CHECK_THROWS_WITH(c.validate(), Catch::Matchers::ContainsSubstring("num_elements"));
    c = NetworkConfig{};
    c.amp_lambda = 0.5;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("element moments match the Rician density", "[model][fit]")
{
    for (double kappa : {0.0, 0.31622776601683794, 3.0, 10.0})
    {
        INFO("kappa=" << kappa);
        const double e1 = rician_moment(kappa, 1);
        const double e2 = rician_moment(kappa, 2);
        REQUIRE_THAT(e2, WithinRel(1.0, 1e-10));
        const auto m = element_moments(kappa);
        CHECK_THAT(m.mean, WithinRel(e1 * e1, 1e-10));
        CHECK_THAT(m.variance, WithinRel(1.0 - e1 * e1 * e1 * e1, 1e-9));
    }
}

TEST_CASE("Gamma fit reproduces the amplitude moments", "[model][fit][property]")
{
    for (double kappa : {0.0, 0.316, 2.0})
        for (int L : {1, 4, 10, 30})
        {
            const auto m = element_moments(kappa);
            const auto g = gamma_fit(kappa, L);
            CHECK_THAT(g.p * g.q, WithinRel(L * m.mean, 1e-13));
            CHECK_THAT(g.p * g.q * g.q, WithinRel(L * m.variance, 1e-13));
        }
    const auto g = gamma_fit(0.31622776601683794, 10);
    CHECK_THAT(g.p, WithinRel(16.8437, 1e-5));
    CHECK_THAT(g.q, WithinRel(0.470283, 1e-5));
}

TEST_CASE("cascade CDF is a distribution function", "[model][fit][property]")
{
    const auto g = gamma_fit(0.316, 10);
    CHECK(cascade_cdf(g, 0.0) == 0.0);
    double prev = 0.0;
    for (double x = 1.0; x < 400.0; x *= 1.3)
    {
        const double v = cascade_cdf(g, x);
        CHECK(v >= prev);
        CHECK(v <= 1.0);
        prev = v;
    }
    CHECK(prev > 0.999);
}

TEST_CASE("surface noise factor", "[model]")
{
    CHECK_THAT(noise_power_factor(0.0, 10), WithinRel(10.0, 1e-15));
    CHECK_THAT(noise_power_factor(1.0, 4), WithinRel(4.0 * 5.0 / 2.0, 1e-15));
    CHECK_THAT(noise_power_factor(std::numeric_limits<double>::infinity(), 7), WithinRel(49.0, 1e-15));
}

TEST_CASE("distance law", "[model][distance]")
{
    const double D = 35.0;
    const double mass = boost::math::quadrature::gauss_kronrod<double, 31>::integrate([&](double x) { return distance_pdf(x, D); }, 0.0, D);
    CHECK_THAT(mass, WithinRel(1.0, 1e-13));
    CHECK(distance_pdf(-1.0, D) == 0.0);
    CHECK(distance_pdf(D + 1.0, D) == 0.0);

    RandomStream rng(7);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const double d = sample_distance(rng, D);
        REQUIRE(d > 0.0);
        REQUIRE(d <= D);
        sum += d;
    }
    CHECK_THAT(sum / n, WithinAbs(2.0 * D / 3.0, 0.05));
}
