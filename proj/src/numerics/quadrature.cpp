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
#include <numeric>
#include <string>

namespace astars::numerics
{
    namespace detail
    {
        TridiagonalEigen symmetric_tridiagonal_eigen(std::vector<double> d, std::vector<double> off)
        {
            const int n = int(d.size());
            if (n == 0 || int(off.size()) != std::max(n - 1, 0))
                throw DomainError("symmetric_tridiagonal_eigen: inconsistent sizes");

            std::vector<double> e(n, 0.0);
            std::copy(off.begin(), off.end(), e.begin());
            std::vector<double> z(n, 0.0);
            z[0] = 1.0;

            constexpr double eps = std::numeric_limits<double>::epsilon();
            for (int l = 0; l < n; ++l)
            {
                int iter = 0;
                int m;
                do
                {
                    for (m = l; m < n - 1; ++m)
                    {
                        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                        if (std::abs(e[m]) <= eps * dd)
                            break;
                    }
                    if (m != l)
                    {
                        if (iter++ == 60)
                            throw NumericIntegrityError("symmetric_tridiagonal_eigen: QL iteration did not converge");
                        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                        double r = std::hypot(g, 1.0);
                        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                        double s = 1.0, c = 1.0, p = 0.0;
                        int i = m - 1;
                        bool underflow = false;
                        for (; i >= l; --i)
                        {
                            double f = s * e[i];
                            const double b = c * e[i];
                            r = std::hypot(f, g);
                            e[i + 1] = r;
                            if (r == 0.0)
                            {
                                d[i + 1] -= p;
                                e[m] = 0.0;
                                underflow = true;
                                break;
                            }
                            s = f / r;
                            c = g / r;
                            g = d[i + 1] - p;
                            r = (d[i] - g) * s + 2.0 * c * b;
                            p = s * r;
                            d[i + 1] = g + p;
                            g = c * r - b;
                            // Only the first row of the eigenvector matrix is tracked
                            f = z[i + 1];
                            z[i + 1] = s * z[i] + c * f;
                            z[i] = c * z[i] - s * f;
                        }
                        if (underflow)
                            continue;
                        d[l] -= p;
                        e[l] = g;
                        e[m] = 0.0;
                    }
                } while (m != l);
            }

            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
            TridiagonalEigen out;
            out.values.reserve(n);
            out.first_component.reserve(n);
            for (int k : order)
            {
                out.values.push_back(d[k]);
                out.first_component.push_back(z[k]);
            }
            return out;
        }
    }

    namespace
    {
        // L_{n-1}(y), L_n(y), L_{n+1}(y) up to a common factor e^{log_scale}.
        struct LaguerreTriple
        {
            double prev, value, next, log_scale;
        };

        LaguerreTriple laguerre_polynomials(int n, double y)
        {
            constexpr double big = 1e150;
            double lm1 = 1.0, l = 1.0 - y;
            double log_scale = 0.0;
            if (n == 0)
                return {0.0, 1.0, 1.0 - y, 0.0};
            for (int k = 1; k <= n; ++k)
            {
                const double lp1 = ((2.0 * k + 1.0 - y) * l - k * lm1) / (k + 1.0);
                lm1 = l;
                l = lp1;
                if (std::abs(l) > big)
                {
                    lm1 /= big;
                    l /= big;
                    log_scale += std::log(big);
                }
            }
            // after the loop: l = L_{n+1}, lm1 = L_n; recover L_{n-1} from the recurrence
            const double ln = lm1;
            const double lnm1 = ((2.0 * n + 1.0 - y) * ln - (n + 1.0) * l) / n;
            return {lnm1, ln, l, log_scale};
        }
    }

    QuadratureRule gauss_laguerre_rule(int K)
    {
        if (K < 1 || K > 2000)
            throw ConfigError("gauss_laguerre_rule: K must be in [1, 2000], got " + std::to_string(K));

        std::vector<double> diag(K), off(K - 1);
        for (int i = 0; i < K; ++i)
            diag[i] = 2.0 * i + 1.0;
        for (int i = 1; i < K; ++i)
            off[i - 1] = double(i);
        const auto eig = detail::symmetric_tridiagonal_eigen(std::move(diag), std::move(off));

        QuadratureRule rule;
        rule.kind = QuadratureKind::laguerre;
        rule.nodes.resize(K);
        rule.weights.resize(K);
        rule.log_weights.resize(K);
        for (int k = 0; k < K; ++k)
        {
            double y = eig.values[k];
            for (int it = 0; it < 3; ++it)
            {
                const auto t = laguerre_polynomials(K, y);
                const double denom = K * (t.value - t.prev);
                if (denom == 0.0)
                    break;
                const double step = y * t.value / denom;
                if (!std::isfinite(step) || std::abs(step) > 1e-3 * y)
                    break;
                y -= step;
            }
            const auto t = laguerre_polynomials(K, y);
            rule.nodes[k] = y;
            rule.log_weights[k] = std::log(y) - 2.0 * std::log(K + 1.0) - 2.0 * (std::log(std::abs(t.next)) + t.log_scale);
            rule.weights[k] = std::exp(rule.log_weights[k]);
        }
        for (int k = 1; k < K; ++k)
            if (!(rule.nodes[k] > rule.nodes[k - 1]))
                throw NumericIntegrityError("gauss_laguerre_rule: nodes not strictly increasing");
        return rule;
    }

    QuadratureRule gauss_chebyshev_nodes(int U)
    {
        if (U < 1 || U > 10000)
            throw ConfigError("gauss_chebyshev_nodes: U must be in [1, 10000], got " + std::to_string(U));
        QuadratureRule rule;
        rule.kind = QuadratureKind::chebyshev;
        rule.nodes.resize(U);
        rule.weights.assign(U, std::numbers::pi / U);
        rule.log_weights.assign(U, std::log(std::numbers::pi / U));
        // u = U, U-1, ..., 1 gives ascending cosines
        for (int j = 0; j < U; ++j)
        {
            const int u = U - j;
            rule.nodes[j] = std::cos((2.0 * u - 1.0) * std::numbers::pi / (2.0 * U));
        }
        if (U % 2 == 1)
            rule.nodes[U / 2] = 0.0;
        return rule;
    }
}
