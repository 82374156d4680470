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

#ifndef TWISTOR_EXACT_SMITH_HPP
#define TWISTOR_EXACT_SMITH_HPP

#include <optional>
#include <vector>

#include "twistor/exact/matrix.hpp"

namespace twistor {

/// U * M * V = D with U, V unimodular over K[x], D diagonal with monic
/// invariant factors d_0 | d_1 | ... on its first `rank` diagonal entries.
struct SmithForm {
    PolyMatrix U, Uinv, V, Vinv, D;
    std::size_t rank = 0;
    std::vector<Poly> invariants;
};

SmithForm smith_normal_form(const PolyMatrix& m);

namespace pid {

/// Basis (columns) of the kernel module; always saturated.
PolyMatrix kernel_basis(const PolyMatrix& m);
/// Basis of the saturation of the column module.
PolyMatrix saturation_basis(const PolyMatrix& m);
/// L with L * K = I for a saturated full-column-rank K.
PolyMatrix left_inverse(const PolyMatrix& k);
/// R with P * R = I for a full-row-rank P whose invariant factors are units.
PolyMatrix right_inverse(const PolyMatrix& p);
/// X over K[x] with K * X = Y, for full-column-rank K.
std::optional<PolyMatrix> solve_left(const PolyMatrix& k, const PolyMatrix& y);
/// Columns of h lie in the K[x]-module generated by the columns of g.
bool module_contains(const PolyMatrix& g, const PolyMatrix& h);
/// Inverse of a unimodular matrix; throws if not unimodular.
PolyMatrix unimodular_inverse(const PolyMatrix& m);
bool is_unimodular(const PolyMatrix& m);
/// Rank over the fraction field.
std::size_t generic_rank(const PolyMatrix& m);

}  // namespace pid

/// Polynomial-ring computations on Laurent matrices: the matrix is scaled by a
/// power of t (a unit) and handled over K[t]; invariant factors are then
/// taken modulo powers of t.
namespace laurent {

struct ScaledSmith {
    int shift = 0;  ///< M * t^shift is polynomial
    SmithForm smith;
    /// Invariant factors with t-power parts removed (units dropped).
    std::vector<Poly> invariants;
};

ScaledSmith smith(const LaurentMatrix& m);
std::size_t rank(const LaurentMatrix& m);
bool is_invertible(const LaurentMatrix& m);
LaurentMatrix inverse(const LaurentMatrix& m);
/// X with K * X = Y over K[t, 1/t], for full-column-rank K.
std::optional<LaurentMatrix> solve_left(const LaurentMatrix& k, const LaurentMatrix& y);
/// Determinant when it is a unit c*t^m; returns (c, m). Throws otherwise.
std::pair<Scalar, int> unit_determinant(const LaurentMatrix& m);

}  // namespace laurent

}  // namespace twistor

#endif
