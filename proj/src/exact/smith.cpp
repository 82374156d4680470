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

#include "twistor/exact/smith.hpp"

#include <limits>

#include "twistor/exact/linalg.hpp"

namespace twistor {

namespace {

// Row/column operations on D that keep U*M*V = D and the recorded inverses in sync.
struct SmithState {
    PolyMatrix D, U, Uinv, V, Vinv;

    // row_i -= q * row_k
    void row_sub(std::size_t i, std::size_t k, const Poly& q) {
        if (q.is_zero()) return;
        for (std::size_t j = 0; j < D.cols(); ++j)
            if (!D(k, j).is_zero()) D(i, j) -= q * D(k, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            if (!U(k, j).is_zero()) U(i, j) -= q * U(k, j);
        for (std::size_t r = 0; r < Uinv.rows(); ++r)
            if (!Uinv(r, i).is_zero()) Uinv(r, k) += q * Uinv(r, i);
    }
    // col_j -= q * col_k
    void col_sub(std::size_t j, std::size_t k, const Poly& q) {
        if (q.is_zero()) return;
        for (std::size_t r = 0; r < D.rows(); ++r)
            if (!D(r, k).is_zero()) D(r, j) -= q * D(r, k);
        for (std::size_t r = 0; r < V.rows(); ++r)
            if (!V(r, k).is_zero()) V(r, j) -= q * V(r, k);
        for (std::size_t c = 0; c < Vinv.cols(); ++c)
            if (!Vinv(j, c).is_zero()) Vinv(k, c) += q * Vinv(j, c);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
        Uinv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
        Vinv.swap_rows(a, b);
    }
    void scale_row(std::size_t k, const Scalar& c) {
        Scalar inv = c.inverse();
        for (std::size_t j = 0; j < D.cols(); ++j) D(k, j) *= c;
        for (std::size_t j = 0; j < U.cols(); ++j) U(k, j) *= c;
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, k) *= inv;
    }
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithState st{m, PolyMatrix::identity(rows), PolyMatrix::identity(rows), PolyMatrix::identity(cols),
                  PolyMatrix::identity(cols)};
    std::size_t k = 0;
    const std::size_t kmax = std::min(rows, cols);
    for (; k < kmax; ++k) {
        bool found = true;
        for (;;) {
            // Pivot: nonzero entry of least degree in the trailing block.
            int best = std::numeric_limits<int>::max();
            std::size_t pi = 0, pj = 0;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    const Poly& e = st.D(i, j);
                    if (!e.is_zero() && e.degree() < best) {
                        best = e.degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (best == std::numeric_limits<int>::max()) {
                found = false;
                break;
            }
            st.swap_rows(k, pi);
            st.swap_cols(k, pj);
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (st.D(i, k).is_zero()) continue;
                auto [q, r] = divmod(st.D(i, k), st.D(k, k));
                st.row_sub(i, k, q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (st.D(k, j).is_zero()) continue;
                auto [q, r] = divmod(st.D(k, j), st.D(k, k));
                st.col_sub(j, k, q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            // Divisibility of the trailing block by the pivot.
            bool divisible = true;
            for (std::size_t i = k + 1; i < rows && divisible; ++i)
                for (std::size_t j = k + 1; j < cols; ++j) {
                    if (st.D(i, j).is_zero()) continue;
                    if (!divmod(st.D(i, j), st.D(k, k)).second.is_zero()) {
                        // row_k += row_i brings the offending entry into row k.
                        st.row_sub(k, i, Poly(Scalar(-1)));
                        divisible = false;
                        break;
                    }
                }
            if (divisible) break;
        }
        if (!found) break;
        st.scale_row(k, st.D(k, k).lead().inverse());
    }
    SmithForm out;
    out.rank = k;
    for (std::size_t i = 0; i < k; ++i) out.invariants.push_back(st.D(i, i));
    out.D = std::move(st.D);
    out.U = std::move(st.U);
    out.Uinv = std::move(st.Uinv);
    out.V = std::move(st.V);
    out.Vinv = std::move(st.Vinv);
    return out;
}

namespace pid {

PolyMatrix kernel_basis(const PolyMatrix& m) {
    SmithForm s = smith_normal_form(m);
    return s.V.cols_range(s.rank, m.cols() - s.rank);
}

PolyMatrix saturation_basis(const PolyMatrix& m) {
    SmithForm s = smith_normal_form(m);
    return s.Uinv.cols_range(0, s.rank);
}

PolyMatrix left_inverse(const PolyMatrix& k) {
    SmithForm s = smith_normal_form(k);
    if (s.rank != k.cols()) throw Error("left_inverse: matrix lacks full column rank");
    for (const auto& d : s.invariants)
        if (!d.is_unit()) throw Error("left_inverse: column module is not saturated");
    return s.V * s.U.rows_range(0, k.cols());
}

PolyMatrix right_inverse(const PolyMatrix& p) {
    SmithForm s = smith_normal_form(p);
    if (s.rank != p.rows()) throw Error("right_inverse: matrix lacks full row rank");
    for (const auto& d : s.invariants)
        if (!d.is_unit()) throw Error("right_inverse: map is not surjective");
    return s.V.cols_range(0, p.rows()) * s.U;
}

std::optional<PolyMatrix> solve_left(const PolyMatrix& k, const PolyMatrix& y) {
    SmithForm s = smith_normal_form(k);
    if (s.rank != k.cols()) throw Error("solve_left: matrix lacks full column rank");
    PolyMatrix uy = s.U * y;
    for (std::size_t i = s.rank; i < uy.rows(); ++i)
        for (std::size_t j = 0; j < uy.cols(); ++j)
            if (!uy(i, j).is_zero()) return std::nullopt;
    PolyMatrix z(s.rank, y.cols());
    for (std::size_t i = 0; i < s.rank; ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            auto q = exact_div(uy(i, j), s.invariants[i]);
            if (!q) return std::nullopt;
            z(i, j) = std::move(*q);
        }
    return s.V * z;
}

bool module_contains(const PolyMatrix& g, const PolyMatrix& h) {
    SmithForm s = smith_normal_form(g);
    PolyMatrix uh = s.U * h;
    for (std::size_t i = 0; i < uh.rows(); ++i)
        for (std::size_t j = 0; j < uh.cols(); ++j) {
            if (uh(i, j).is_zero()) continue;
            if (i >= s.rank) return false;
            if (!divmod(uh(i, j), s.invariants[i]).second.is_zero()) return false;
        }
    return true;
}

bool is_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) return false;
    SmithForm s = smith_normal_form(m);
    if (s.rank != m.rows()) return false;
    for (const auto& d : s.invariants)
        if (!d.is_unit()) return false;
    return true;
}

PolyMatrix unimodular_inverse(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error("unimodular_inverse: non-square matrix");
    SmithForm s = smith_normal_form(m);
    if (s.rank != m.rows()) throw Error("unimodular_inverse: matrix is singular");
    for (const auto& d : s.invariants)
        if (!d.is_unit()) throw Error("unimodular_inverse: matrix is not unimodular");
    return s.V * s.U;
}

std::size_t generic_rank(const PolyMatrix& m) { return smith_normal_form(m).rank; }

}  // namespace pid

namespace laurent {

namespace {

int scaling_shift(const LaurentMatrix& m) {
    int shift = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) shift = std::max(shift, -m(i, j).min_exp());
    return shift;
}

PolyMatrix scaled(const LaurentMatrix& m, int shift) {
    return m.map([shift](const Laurent& x) { return x.scaled_to_t(shift); });
}

}  // namespace

ScaledSmith smith(const LaurentMatrix& m) {
    ScaledSmith out;
    out.shift = scaling_shift(m);
    out.smith = smith_normal_form(scaled(m, out.shift));
    for (const auto& d : out.smith.invariants) {
        Poly p = d.strip_x();
        if (!p.is_unit()) out.invariants.push_back(p.monic());
    }
    return out;
}

std::size_t rank(const LaurentMatrix& m) { return smith_normal_form(scaled(m, scaling_shift(m))).rank; }

bool is_invertible(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) return false;
    ScaledSmith s = smith(m);
    return s.smith.rank == m.rows() && s.invariants.empty();
}

std::optional<LaurentMatrix> solve_left(const LaurentMatrix& k, const LaurentMatrix& y) {
    if (k.rows() != y.rows()) throw Error("laurent::solve_left: shape mismatch");
    int shift = scaling_shift(k);
    SmithForm s = smith_normal_form(scaled(k, shift));
    if (s.rank != k.cols()) throw Error("laurent::solve_left: matrix lacks full column rank");
    LaurentMatrix uy = laurent_from_t(s.U) * y;
    for (std::size_t i = s.rank; i < uy.rows(); ++i)
        for (std::size_t j = 0; j < uy.cols(); ++j)
            if (!uy(i, j).is_zero()) return std::nullopt;
    LaurentMatrix z(s.rank, y.cols());
    for (std::size_t i = 0; i < s.rank; ++i) {
        Laurent d = Laurent::from_t(s.invariants[i]);
        for (std::size_t j = 0; j < y.cols(); ++j) {
            auto q = exact_div(uy(i, j), d);
            if (!q) return std::nullopt;
            z(i, j) = std::move(*q);
        }
    }
    LaurentMatrix x = laurent_from_t(s.V) * z;
    if (shift != 0)
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = x(i, j) * Laurent::monomial(shift);
    return x;
}

LaurentMatrix inverse(const LaurentMatrix& m) {
    if (!is_invertible(m)) throw Error("Laurent matrix is not invertible over K[t,1/t]");
    auto x = solve_left(m, LaurentMatrix::identity(m.rows()));
    if (!x) throw Error("Laurent matrix is not invertible over K[t,1/t]");
    return *x;
}

std::pair<Scalar, int> unit_determinant(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {Scalar(1), 0};
    int shift = scaling_shift(m);
    SmithForm s = smith_normal_form(scaled(m, shift));
    if (s.rank != n) throw Error("determinant is zero");
    int total = 0;
    for (const auto& d : s.invariants) {
        if (d.valuation() != d.degree()) throw Error("determinant is not a unit of K[t,1/t]");
        total += d.degree();
    }
    ScalarMatrix at_one = m.map([](const Laurent& x) {
        Scalar acc;
        for (int e = x.min_exp(); !x.is_zero() && e <= x.max_exp(); ++e) acc += x.coeff(e);
        return acc;
    });
    return {linalg::determinant(at_one), total - static_cast<int>(n) * shift};
}

}  // namespace laurent

}  // namespace twistor
