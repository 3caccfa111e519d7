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

#pragma once

#include <cstddef>
#include <vector>

namespace astars::numerics
{
    enum class QuadratureKind
    {
        laguerre,
        chebyshev
    };

    // Nodes in strictly increasing order with matching weights.
    // Laguerre rules also carry natural-log weights, which stay finite where the weights underflow.
    struct QuadratureRule
    {
        QuadratureKind kind = QuadratureKind::chebyshev;
        std::vector<double> nodes;
        std::vector<double> weights;
        std::vector<double> log_weights;

        std::size_t size() const { return nodes.size(); }
    };

    // gamma(a, x), the unregularized lower incomplete gamma function.
    double lower_incomplete_gamma(double a, double x);

    // P(a, x) = gamma(a, x) / Gamma(a).
    double regularized_lower_gamma(double a, double x);

    // Modified Bessel function of the second kind K_nu(x), x > 0, any real order.
    double bessel_k(double order, double x);

    // Exponentially scaled modified Bessel functions e^{-|x|} I_0(x) and e^{-|x|} I_1(x).
    double bessel_i0e(double x);
    double bessel_i1e(double x);

    // Laguerre function of order 1/2: e^{x/2} [(1 - x) I_0(-x/2) - x I_1(-x/2)].
    double laguerre_half(double x);

    // Gauss-Laguerre rule for the weight e^{-t} on [0, inf), 1 <= K <= 2000.
    QuadratureRule gauss_laguerre_rule(int K);

    // Gauss-Chebyshev (first kind) nodes cos((2u-1) pi / (2U)), all weights pi/U, 1 <= U <= 10000.
    QuadratureRule gauss_chebyshev_nodes(int U);

    // Gauss hypergeometric series 2F1(a, b; c; z) for 0 <= z < 1.
    double hyp2f1_series(double a, double b, double c, double z);

    namespace detail
    {
        struct TridiagonalEigen
        {
            std::vector<double> values;          // ascending
            std::vector<double> first_component; // first row of the orthonormal eigenvectors
        };

        // Eigen-decomposition of a symmetric tridiagonal matrix by implicit QL.
        // off_diagonal[i] couples rows i and i+1 and has size n-1.
        TridiagonalEigen symmetric_tridiagonal_eigen(std::vector<double> diagonal, std::vector<double> off_diagonal);
    }
}
