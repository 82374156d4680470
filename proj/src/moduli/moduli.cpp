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

#include "twistor/moduli/moduli.hpp"

#include "twistor/error.hpp"

namespace twistor {

long WeightVector::at(int n) const {
    if (n < lo || n > hi()) return 0;
    return b[static_cast<std::size_t>(n - lo)];
}

WeightVector WeightVector::from_map(const std::map<int, long>& m) {
    if (m.empty()) throw Error("weight vector is empty");
    WeightVector out;
    out.lo = m.begin()->first;
    for (int n = out.lo; n <= m.rbegin()->first; ++n) {
        auto it = m.find(n);
        out.b.push_back(it == m.end() ? 0 : it->second);
    }
    return out;
}

void validate(const WeightVector& b) {
    bool any = false;
    for (long x : b.b) {
        if (x < 0) throw Error("weight vector has a negative entry");
        any = any || x > 0;
    }
    if (!any) throw Error("weight vector has no nonzero entry");
}

long framed_dim(const WeightVector& b) {
    validate(b);
    long dim = 0;
    // Unwind the recursion from the top weight down.
    for (int j = b.hi() - 1; j >= b.lo; --j)
        for (int i = j + 1; i <= b.hi(); ++i) dim += (i - j - 1) * b.at(i) * b.at(j);
    return dim;
}

long stack_dim(const WeightVector& b) {
    long gl = 0;
    for (long x : b.b) gl += x * x;
    return framed_dim(b) - gl;
}

long pairwise_ext_dim(const WeightVector& b) {
    validate(b);
    long sum = 0;
    for (int u = b.lo; u <= b.hi(); ++u)
        for (int i = u + 1; i <= b.hi(); ++i)
            sum += static_cast<long>(ext1_dim(SplitBundle::line(i), SplitBundle::line(u))) * b.at(i) * b.at(u);
    return sum;
}

CrosscheckReport formula_crosscheck(const WeightVector& b) {
    validate(b);
    long closed = 0;
    for (int i = b.lo; i <= b.hi(); ++i)
        for (int u = b.lo; u <= i; ++u) closed += (i - u - 1) * b.at(i) * b.at(u);
    long s = stack_dim(b);
    return {closed, s, closed == s};
}

ExtensionBasis extension_basis(const MixedTwistorStructure& upper, int n, std::size_t bn) {
    for (int w : upper.indices())
        if (w <= n) throw Error("extension_basis: tail weights must exceed " + std::to_string(n));
    SplitBundle target = SplitBundle::pure(n, bn);
    if (hom_space(upper.total(), target).dimension != 0)
        throw TheoremViolation("Hom(E', O(n)^b) is nonzero for a tail of higher weights");
    ExtensionBasis out;
    out.ext_bundle = tensor(dual(upper.total()), target);
    out.classes = cohomology(out.ext_bundle).h1_basis;
    return out;
}

}  // namespace twistor
