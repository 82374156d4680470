/*
   Copyright 2026 The twistor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "twistor/bundles/birkhoff.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "twistor/error.hpp"
#include "twistor/exact/linalg.hpp"
#include "twistor/exact/smith.hpp"

namespace twistor {

namespace {

int column_top(const LaurentMatrix& m, std::size_t j) {
    int top = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m(i, j).is_zero()) top = std::max(top, m(i, j).max_exp());
    return top;
}

}  // namespace

BirkhoffSplit birkhoff_split(const TransitionBundle& tb) {
    const LaurentMatrix& T = tb.T;
    if (T.rows() != T.cols()) throw Error("not a vector bundle presentation");
    const std::size_t n = T.rows();
    try {
        laurent::unit_determinant(T);
    } catch (const Error&) {
        throw Error("not a vector bundle presentation");
    }

    // Column reduction: M = T P with P in GL(K[t]) until the leading
    // coefficients at t = infinity are independent.
    LaurentMatrix M = T;
    LaurentMatrix P = LaurentMatrix::identity(n);
    LaurentMatrix Pinv = LaurentMatrix::identity(n);
    std::vector<int> h(n);
    for (;;) {
        ScalarMatrix lc(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            h[j] = column_top(M, j);
            for (std::size_t i = 0; i < n; ++i) lc(i, j) = M(i, j).coeff(h[j]);
        }
        ScalarMatrix ker = linalg::kernel(lc);
        if (ker.cols() == 0) break;
        std::size_t pivot = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!ker(j, 0).is_zero() && (pivot == n || h[j] > h[pivot])) pivot = j;
        Scalar inv = ker(pivot, 0).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == pivot || ker(j, 0).is_zero()) continue;
            Laurent alpha = Laurent::monomial(h[pivot] - h[j], ker(j, 0) * inv);
            for (std::size_t i = 0; i < n; ++i) {
                M(i, pivot) += alpha * M(i, j);
                P(i, pivot) += alpha * P(i, j);
                Pinv(j, i) -= alpha * Pinv(pivot, i);
            }
        }
    }

    // Order columns by descending degree d_j = -h_j.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&h](std::size_t a, std::size_t b) { return h[a] < h[b]; });

    BirkhoffSplit out;
    LaurentMatrix Q(n, n), Pp(n, n), Ppinv(n, n);
    std::vector<int> hs(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t j = order[k];
        hs[k] = h[j];
        out.degrees.push_back(-h[j]);
        Laurent scale = Laurent::monomial(-h[j]);
        for (std::size_t i = 0; i < n; ++i) {
            Q(i, k) = M(i, j) * scale;
            Pp(i, k) = P(i, j);
            Ppinv(k, i) = Pinv(j, i);
        }
    }
    out.B = Q;
    out.Binv = laurent_from_s(pid::unimodular_inverse(to_s(Q)));
    out.A = Ppinv;
    out.Ainv = Pp;
    return out;
}

}  // namespace twistor
