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

#include "astars/numerics.hpp"
#include "astars/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace astars::numerics
{
    namespace
    {
        constexpr double eps = std::numeric_limits<double>::epsilon();
        constexpr int max_iterations = 100000;

        // Series for P(a, x), valid and fast for x < a + 1.
        double gamma_series(double a, double x)
        {
            double ap = a;
            double del = 1.0 / a;
            double sum = del;
            for (int n = 0; n < max_iterations; ++n)
            {
                ap += 1.0;
                del *= x / ap;
                sum += del;
                if (std::abs(del) < std::abs(sum) * eps)
                    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
            }
            throw NumericIntegrityError("regularized_lower_gamma: series did not converge for a=" + std::to_string(a));
        }

        // Lentz continued fraction for Q(a, x) = 1 - P(a, x), used for x >= a + 1.
        double gamma_continued_fraction(double a, double x)
        {
            constexpr double tiny = std::numeric_limits<double>::min() / eps;
            double b = x + 1.0 - a;
            double c = 1.0 / tiny;
            double d = 1.0 / b;
            double h = d;
            for (int i = 1; i < max_iterations; ++i)
            {
                const double an = -i * (i - a);
                b += 2.0;
                d = an * d + b;
                if (std::abs(d) < tiny)
                    d = tiny;
                c = b + an / c;
                if (std::abs(c) < tiny)
                    c = tiny;
                d = 1.0 / d;
                const double del = d * c;
                h *= del;
                if (std::abs(del - 1.0) < eps)
                    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
            }
            throw NumericIntegrityError("regularized_lower_gamma: continued fraction did not converge for a=" + std::to_string(a));
        }

        // gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2, |mu| <= 1/2.
        void temme_gammas(double mu, double &gam1, double &gam2, double &gampl, double &gammi)
        {
            if (std::abs(mu) >= 0.1)
            {
                gampl = 1.0 / std::tgamma(1.0 + mu);
                gammi = 1.0 / std::tgamma(1.0 - mu);
                gam1 = (gammi - gampl) / (2.0 * mu);
                gam2 = 0.5 * (gammi + gampl);
                return;
            }
            // Taylor coefficients of 1/Gamma(1+z) = sum c_k z^{k-1}
            constexpr double c2 = 0.5772156649015329, c3 = -0.6558780715202538, c4 = -0.0420026350340952,
                             c5 = 0.1665386113822915, c6 = -0.0421977345555443, c7 = -0.0096219715278770,
                             c8 = 0.0072189432466630, c9 = -0.0011651675918591, c10 = -0.0002152416741149,
                             c11 = 0.0001280502823882, c12 = -0.0000201348547807;
            const double m2 = mu * mu;
            gam1 = -(c2 + m2 * (c4 + m2 * (c6 + m2 * (c8 + m2 * (c10 + m2 * c12)))));
            gam2 = 1.0 + m2 * (c3 + m2 * (c5 + m2 * (c7 + m2 * (c9 + m2 * c11))));
            gampl = gam2 - mu * gam1;
            gammi = gam2 + mu * gam1;
        }

        // Power series of e^{-x} I_n(x) for n in {0, 1}, x >= 0.
        double scaled_bessel_i_series(int n, double x)
        {
            const double h = 0.5 * x;
            const double h2 = h * h;
            double term = (n == 0) ? 1.0 : h;
            double sum = term;
            for (int k = 1; k < max_iterations; ++k)
            {
                term *= h2 / (double(k) * double(k + n));
                sum += term;
                if (term < sum * eps)
                    break;
            }
            return sum * std::exp(-x);
        }

        // Hankel asymptotic expansion of e^{-x} I_n(x), large x.
        double scaled_bessel_i_asymptotic(int n, double x)
        {
            const double mu = 4.0 * n * n;
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                const double next = -term * (mu - odd * odd) / (k * 8.0 * x);
                if (std::abs(next) >= std::abs(term))
                    break;
                term = next;
                sum += term;
                if (std::abs(term) < eps * std::abs(sum))
                    break;
            }
            return sum / std::sqrt(2.0 * std::numbers::pi * x);
        }

        double scaled_bessel_i(int n, double x)
        {
            const double ax = std::abs(x);
            const double value = (ax <= 50.0) ? scaled_bessel_i_series(n, ax) : scaled_bessel_i_asymptotic(n, ax);
            return (n == 1 && x < 0.0) ? -value : value;
        }
    }

    double regularized_lower_gamma(double a, double x)
    {
        if (!(a > 0.0) || !(x >= 0.0))
            throw DomainError("regularized_lower_gamma: requires a > 0 and x >= 0");
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return 1.0;
        if (x < a + 1.0)
            return gamma_series(a, x);
        return 1.0 - gamma_continued_fraction(a, x);
    }

    double lower_incomplete_gamma(double a, double x)
    {
        if (!(a > 0.0) || !(x >= 0.0))
            throw DomainError("lower_incomplete_gamma: requires a > 0 and x >= 0");
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return std::tgamma(a);
        if (x < a + 1.0)
            return std::exp(std::log(gamma_series(a, x)) + std::lgamma(a));
        // Subtracting Q from 1 in the scaled domain keeps the upper tail exact
        const double upper = gamma_continued_fraction(a, x);
        return std::tgamma(a) * (1.0 - upper);
    }

    double bessel_k(double order, double x)
    {
        if (!(x > 0.0) || std::isnan(order))
            throw DomainError("bessel_k: requires x > 0");
        const double nu = std::abs(order);
        const int nl = int(nu + 0.5);
        const double mu = nu - nl;
        const double mu2 = mu * mu;
        const double xi = 1.0 / x;
        const double xi2 = 2.0 * xi;

        double rkmu = 0.0, rk1 = 0.0;
        if (x < 2.0)
        {
            // Temme's series
            const double x2 = 0.5 * x;
            const double pimu = std::numbers::pi * mu;
            const double fact = (std::abs(pimu) < eps) ? 1.0 : pimu / std::sin(pimu);
            double d = -std::log(x2);
            double e = mu * d;
            const double fact2 = (std::abs(e) < eps) ? 1.0 : std::sinh(e) / e;
            double gam1, gam2, gampl, gammi;
            temme_gammas(mu, gam1, gam2, gampl, gammi);
            double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
            double sum = ff;
            e = std::exp(e);
            double p = 0.5 * e / gampl;
            double q = 0.5 / (e * gammi);
            double c = 1.0;
            d = x2 * x2;
            double sum1 = p;
            int i = 1;
            for (; i < max_iterations; ++i)
            {
                ff = (i * ff + p + q) / (i * i - mu2);
                c *= d / i;
                p /= i - mu;
                q /= i + mu;
                const double del = c * ff;
                sum += del;
                sum1 += c * (p - i * ff);
                if (std::abs(del) < std::abs(sum) * eps)
                    break;
            }
            if (i == max_iterations)
                throw NumericIntegrityError("bessel_k: Temme series did not converge");
            rkmu = sum;
            rk1 = sum1 * xi2;
        }
        else
        {
            // Steed's continued fraction CF2
            double b = 2.0 * (1.0 + x);
            double d = 1.0 / b;
            double h = d, delh = d;
            double q1 = 0.0, q2 = 1.0;
            const double a1 = 0.25 - mu2;
            double q = a1, c = a1;
            double a = -a1;
            double s = 1.0 + q * delh;
            int i = 2;
            for (; i < max_iterations; ++i)
            {
                a -= 2.0 * (i - 1);
                c = -a * c / i;
                const double qnew = (q1 - b * q2) / a;
                q1 = q2;
                q2 = qnew;
                q += c * qnew;
                b += 2.0;
                d = 1.0 / (b + a * d);
                delh = (b * d - 1.0) * delh;
                h += delh;
                const double dels = q * delh;
                s += dels;
                if (std::abs(dels / s) < eps)
                    break;
            }
            if (i == max_iterations)
                throw NumericIntegrityError("bessel_k: continued fraction did not converge");
            h = a1 * h;
            rkmu = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
            rk1 = rkmu * (mu + x + 0.5 - h) * xi;
        }
        for (int i = 1; i <= nl; ++i)
        {
            const double next = (mu + i) * xi2 * rk1 + rkmu;
            rkmu = rk1;
            rk1 = next;
        }
        return rkmu;
    }

    double bessel_i0e(double x)
    {
        if (std::isnan(x))
            throw DomainError("bessel_i0e: NaN argument");
        return scaled_bessel_i(0, x);
    }

    double bessel_i1e(double x)
    {
        if (std::isnan(x))
            throw DomainError("bessel_i1e: NaN argument");
        return scaled_bessel_i(1, x);
    }

    double laguerre_half(double x)
    {
        // e^{x/2} I_n(-x/2) = e^{x/2 + |x|/2} * (scaled I_n at -x/2); the prefactor is 1 for x <= 0
        const double s = -0.5 * x;
        const double i0 = scaled_bessel_i(0, s);
        const double i1 = scaled_bessel_i(1, s);
        const double prefactor = std::exp(0.5 * x + std::abs(s));
        return prefactor * ((1.0 - x) * i0 - x * i1);
    }

    double hyp2f1_series(double a, double b, double c, double z)
    {
        if (!(z >= 0.0) || !(z < 1.0))
            throw DomainError("hyp2f1_series: requires 0 <= z < 1");
        if (c <= 0.0 && c == std::floor(c))
            throw DomainError("hyp2f1_series: c must not be a nonpositive integer");
        constexpr long long max_terms = 100000000LL;
        double term = 1.0;
        double sum = 1.0;
        for (long long n = 0; n < max_terms; ++n)
        {
            const double dn = double(n);
            const double ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
            term *= ratio;
            sum += term;
            if (term == 0.0)
                return sum;
            // Bound the remaining tail by a geometric series once the term ratio is below one
            const double r = std::max(std::abs(ratio), z);
            if (r < 1.0 && std::abs(term) * (r / (1.0 - r)) <= 1e-16 * std::abs(sum))
                return sum;
        }
        throw NumericIntegrityError("hyp2f1_series: series did not converge");
    }
}
