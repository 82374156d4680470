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

#ifndef TWISTOR_MODULI_MODULI_HPP
#define TWISTOR_MODULI_MODULI_HPP

#include <map>
#include <vector>

#include "twistor/mts/mts.hpp"

namespace twistor {

/// Graded ranks b_n for n in [lo, lo + b.size()).
struct WeightVector {
    int lo = 0;
    std::vector<long> b;
    int hi() const { return lo + static_cast<int>(b.size()) - 1; }
    /// Zero outside the range.
    long at(int n) const;
    static WeightVector from_map(const std::map<int, long>& m);
};

/// Throws Error on negative entries or an all-zero vector.
void validate(const WeightVector& b);

/// dim Fr MTS(b_j..b_k) = dim Fr MTS(b_{j+1}..b_k) + sum_{i>j} (i-j-1) b_i b_j; a point for one weight.
long framed_dim(const WeightVector& b);
/// framed_dim(b) - sum_n b_n^2.
long stack_dim(const WeightVector& b);
/// sum_{u<i} ext1_dim(O(i), O(u)) b_i b_u from the bundles module.
long pairwise_ext_dim(const WeightVector& b);

struct CrosscheckReport {
    long closed_form;
    long stack;
    bool agree;
};
/// sum_{u<=i} (i-u-1) b_i b_u against stack_dim.
CrosscheckReport formula_crosscheck(const WeightVector& b);

struct ExtensionBasis {
    /// Ext^1(E', O(n)^b_n) = H^1(E'^v (x) O(n)^b_n), in the summand order of that tensor product.
    SplitBundle ext_bundle;
    std::vector<CechClass> classes;
};
/// Throws Error unless every weight of `upper` exceeds n; TheoremViolation if
/// Hom(E', O(n)^b_n) is nonzero.
ExtensionBasis extension_basis(const MixedTwistorStructure& upper, int n, std::size_t bn);

}  // namespace twistor

#endif
