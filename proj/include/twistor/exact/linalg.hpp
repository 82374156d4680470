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

#ifndef TWISTOR_EXACT_LINALG_HPP
#define TWISTOR_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "twistor/exact/matrix.hpp"

namespace twistor::linalg {

struct Echelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
Echelon rref(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);
/// Columns form a basis of the null space.
ScalarMatrix kernel(const ScalarMatrix& m);
/// Columns form a basis of the column space (a subset of the input columns).
ScalarMatrix column_basis(const ScalarMatrix& m);
std::optional<ScalarMatrix> solve(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix inverse(const ScalarMatrix& a);
Scalar determinant(ScalarMatrix a);

/// Subspaces are represented by matrices whose columns span them.
ScalarMatrix span_sum(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix intersect(const ScalarMatrix& a, const ScalarMatrix& b);
bool contains(const ScalarMatrix& space, const ScalarMatrix& vectors);
bool same_span(const ScalarMatrix& a, const ScalarMatrix& b);
/// Extends a basis of `sub` (inside `space`) by vectors of `space` to a basis of `space`;
/// returns only the added vectors.
ScalarMatrix extend_basis(const ScalarMatrix& sub, const ScalarMatrix& space);

}  // namespace twistor::linalg

#endif
