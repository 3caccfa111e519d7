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
#include "astars/numerics.hpp"

#include <catch_amalgamated.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

using namespace astars;
using namespace astars::numerics;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    // Direct quadrature of t^{a-1} e^{-t} on [0, x].
    double gamma_integral(double a, double x)
    {
        auto f = [a](double t) { return std::exp((a - 1.0) * std::log(t) - t); };
        boost::math::quadrature::tanh_sinh<double> ts;
        return ts.integrate(f, 0.0, x);
    }
}

TEST_CASE("incomplete gamma matches direct integration", "[numerics][gamma]")
{
    for (double a : {0.5, 1.0, 2.5, 7.0, 16.84})
        for (double x : {0.1, 1.0, 4.0, 12.0})
        {
            INFO("a=" << a << " x=" << x);
            CHECK_THAT(lower_incomplete_gamma(a, x), WithinRel(gamma_integral(a, x), 1e-10));
        }
}

TEST_CASE("regularized gamma against Boost", "[numerics][gamma]")
{
    for (double a : {0.3, 1.0, 3.0, 16.84, 60.0, 170.0})
        for (double x : {1e-3, 0.5, 2.0, 10.0, 50.0, 200.0})
        {
            INFO("a=" << a << " x=" << x);
            CHECK_THAT(regularized_lower_gamma(a, x), WithinAbs(boost::math::gamma_p(a, x), 1e-13));
        }
}

TEST_CASE("regularized gamma edge cases", "[numerics][gamma]")
{
    CHECK(regularized_lower_gamma(2.0, 0.0) == 0.0);
    CHECK(regularized_lower_gamma(2.0, std::numeric_limits<double>::infinity()) == 1.0);
    CHECK_THROWS_AS(regularized_lower_gamma(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(regularized_lower_gamma(1.0, -1.0), DomainError);
}

TEST_CASE("regularized gamma is a monotone CDF", "[numerics][gamma][property]")
{
    for (double a : {0.7, 5.0, 40.0})
    {
        double prev = 0.0;
        for (double x = 0.0; x < 4.0 * a + 20.0; x += 0.25)
        {
            const double v = regularized_lower_gamma(a, x);
            CHECK(v >= prev);
            CHECK(v <= 1.0);
            prev = v;
        }
    }
}

TEST_CASE("Bessel K half-integer closed forms", "[numerics][bessel]")
{
    for (double x : {0.05, 0.5, 1.0, 1.9, 2.1, 5.0, 20.0})
    {
        const double k12 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
        CHECK_THAT(bessel_k(0.5, x), WithinRel(k12, 1e-10));
        CHECK_THAT(bessel_k(1.5, x), WithinRel(k12 * (1.0 + 1.0 / x), 1e-10));
        CHECK_THAT(bessel_k(2.5, x), WithinRel(k12 * (1.0 + 3.0 / x + 3.0 / (x * x)), 1e-10));
    }
}

TEST_CASE("Bessel K against Boost", "[numerics][bessel]")
{
    for (double nu : {0.0, 0.3, 1.0, 2.7, 6.0})
        for (double x : {0.01, 0.7, 1.99, 2.0, 3.3, 15.0, 60.0})
        {
            INFO("nu=" << nu << " x=" << x);
            CHECK_THAT(bessel_k(nu, x), WithinRel(boost::math::cyl_bessel_k(nu, x), 1e-11));
        }
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), DomainError);
}

TEST_CASE("scaled Bessel I against Boost", "[numerics][bessel]")
{
    for (double x : {0.0, 0.1, 1.0, 10.0, 49.0, 51.0, 300.0})
    {
        INFO("x=" << x);
        CHECK_THAT(bessel_i0e(x), WithinRel(std::exp(-x) * boost::math::cyl_bessel_i(0, x), 1e-12));
        CHECK_THAT(bessel_i1e(x), WithinAbs(std::exp(-x) * boost::math::cyl_bessel_i(1, x), 1e-14));
    }
}

TEST_CASE("Laguerre polynomial of order one half", "[numerics][laguerre]")
{
    // L_{1/2}(x) = e^{x/2} [(1 - x) I0(-x/2) - x I1(-x/2)]; at x = 0 it is 1.
    CHECK_THAT(laguerre_half(0.0), WithinAbs(1.0, 1e-15));
    for (double x : {-0.1, -1.0, -5.0})
    {
        const double h = -x / 2.0;
        const double ref = std::exp(x / 2.0) * ((1.0 - x) * boost::math::cyl_bessel_i(0, h) - x * boost::math::cyl_bessel_i(1, h));
        CHECK_THAT(laguerre_half(x), WithinRel(ref, 1e-12));
    }
}

TEST_CASE("Gauss-Laguerre integrates polynomials exactly", "[numerics][quadrature]")
{
    for (int K : {1, 3, 10, 20})
    {
        const auto rule = gauss_laguerre_rule(K);
        REQUIRE(rule.size() == std::size_t(K));
        for (int n = 0; n <= 2 * K - 1; ++n)
        {
            double s = 0.0;
            for (std::size_t j = 0; j < rule.size(); ++j)
                s += rule.weights[j] * std::pow(rule.nodes[j], n);
            INFO("K=" << K << " n=" << n);
            CHECK_THAT(s, WithinRel(std::tgamma(n + 1.0), 1e-9));
        }
    }
}

TEST_CASE("Gauss-Laguerre nodes are roots of L_K", "[numerics][quadrature]")
{
    for (int K : {5, 40, 120})
    {
        const auto rule = gauss_laguerre_rule(K);
        CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
        for (std::size_t j = 0; j < rule.size(); j += 7)
        {
            // Newton step |L_K / L_K'| with L_K' = K (L_K - L_{K-1}) / x.
            const double x = rule.nodes[j];
            const double lk = boost::math::laguerre(unsigned(K), x);
            const double dk = K * (lk - boost::math::laguerre(unsigned(K) - 1, x)) / x;
            CHECK(std::abs(lk / dk) <= 1e-10 * x);
        }
    }
}

TEST_CASE("large Gauss-Laguerre rule stays usable", "[numerics][quadrature]")
{
    const auto rule = gauss_laguerre_rule(200);
    double total = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j)
    {
        CHECK(rule.weights[j] >= 0.0);
        total += rule.weights[j];
        if (rule.weights[j] >= std::numeric_limits<double>::min())
            CHECK_THAT(rule.log_weights[j], WithinAbs(std::log(rule.weights[j]), 1e-9));
    }
    CHECK_THAT(total, WithinRel(1.0, 1e-9));
    CHECK_THROWS_AS(gauss_laguerre_rule(0), ConfigError);
    CHECK_THROWS_AS(gauss_laguerre_rule(2001), ConfigError);
}

TEST_CASE("Gauss-Chebyshev rule", "[numerics][quadrature]")
{
    const auto rule = gauss_chebyshev_nodes(64);
    CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
    // Exact for polynomial f of degree <= 2U-1 against 1/sqrt(1-x^2).
    double s = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j)
        s += rule.weights[j] * std::pow(rule.nodes[j], 4);
    CHECK_THAT(s, WithinRel(3.0 * std::numbers::pi / 8.0, 1e-13));
    CHECK_THROWS_AS(gauss_chebyshev_nodes(0), ConfigError);
}

TEST_CASE("Gauss-Laguerre expectation matches adaptive quadrature", "[numerics][quadrature]")
{
    const auto rule = gauss_laguerre_rule(80);
    auto f = [](double x) { return std::log1p(x) * std::exp(-x); };
    double s = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j)
        s += rule.weights[j] * std::log1p(rule.nodes[j]);
    const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numeric_limits<double>::infinity());
    CHECK_THAT(s, WithinRel(ref, 1e-6));
}

TEST_CASE("hypergeometric series", "[numerics][hyp2f1]")
{
    for (double z : {0.0, 0.3, 0.9, 0.999})
    {
        INFO("z=" << z);
        const double ref = boost::math::hypergeometric_pFq({2.0, 0.5}, {2.5}, z);
        CHECK_THAT(hyp2f1_series(2.0, 0.5, 2.5, z), WithinRel(ref, 1e-10));
    }
    CHECK_THROWS_AS(hyp2f1_series(2.0, 0.5, 2.5, 1.0), DomainError);
    CHECK_THROWS_AS(hyp2f1_series(2.0, 0.5, -1.0, 0.5), DomainError);
}

TEST_CASE("tridiagonal eigen solver", "[numerics][eigen]")
{
    // Jacobi matrix of the Laguerre weight for K = 3.
    const auto e = detail::symmetric_tridiagonal_eigen({1.0, 3.0, 5.0}, {1.0, 2.0});
    double trace = 0.0;
    for (double v : e.values)
        trace += v;
    CHECK_THAT(trace, WithinRel(9.0, 1e-13));
}
