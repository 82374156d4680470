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

#include "twistor/exact/linalg.hpp"

namespace twistor {

LaurentMatrix monomial_diag(const std::vector<int>& exps) {
    LaurentMatrix m(exps.size(), exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m(i, i) = Laurent::monomial(exps[i]);
    return m;
}

}  // namespace twistor

namespace twistor::linalg {

Echelon rref(const ScalarMatrix& m) {
    Echelon e{m, {}};
    ScalarMatrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(piv, row);
        Scalar inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Scalar f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

ScalarMatrix kernel(const ScalarMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    ScalarMatrix k(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free_cols[f]);
    }
    return k;
}

ScalarMatrix column_basis(const ScalarMatrix& m) {
    Echelon e = rref(m);
    ScalarMatrix out(m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, e.pivots[k]);
    return out;
}

std::optional<ScalarMatrix> solve(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows()) throw Error("solve: shape mismatch");
    Echelon e = rref(hstack(a, b));
    for (auto p : e.pivots)
        if (p >= a.cols()) return std::nullopt;
    ScalarMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
    return x;
}

ScalarMatrix inverse(const ScalarMatrix& a) {
    if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
    auto x = solve(a, ScalarMatrix::identity(a.rows()));
    if (!x || rank(a) != a.rows()) throw Error("matrix is singular");
    return *x;
}

Scalar determinant(ScalarMatrix a) {
    if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
    Scalar det(1);
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) return Scalar();
        if (piv != c) {
            a.swap_rows(piv, c);
            det = -det;
        }
        det *= a(c, c);
        Scalar inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

ScalarMatrix span_sum(const ScalarMatrix& a, const ScalarMatrix& b) { return column_basis(hstack(a, b)); }

ScalarMatrix intersect(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix ab = column_basis(a);
    ScalarMatrix bb = column_basis(b);
    // x in both iff x = A u = B v, i.e. [A | -B] (u; v) = 0.
    ScalarMatrix k = kernel(hstack(ab, -bb));
    ScalarMatrix u = k.rows_range(0, ab.cols());
    return column_basis(ab * u);
}

bool contains(const ScalarMatrix& space, const ScalarMatrix& vectors) {
    return rank(hstack(space, vectors)) == rank(space);
}

bool same_span(const ScalarMatrix& a, const ScalarMatrix& b) { return contains(a, b) && contains(b, a); }

ScalarMatrix extend_basis(const ScalarMatrix& sub, const ScalarMatrix& space) {
    ScalarMatrix base = column_basis(sub);
    Echelon e = rref(hstack(base, space));
    std::vector<std::size_t> added;
    for (auto p : e.pivots)
        if (p >= base.cols()) added.push_back(p - base.cols());
    ScalarMatrix out(space.rows(), added.size());
    for (std::size_t k = 0; k < added.size(); ++k)
        for (std::size_t i = 0; i < space.rows(); ++i) out(i, k) = space(i, added[k]);
    return out;
}

}  // namespace twistor::linalg
