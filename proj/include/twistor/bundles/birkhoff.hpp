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

#ifndef TWISTOR_BUNDLES_BIRKHOFF_HPP
#define TWISTOR_BUNDLES_BIRKHOFF_HPP

#include <vector>

#include "twistor/bundles/split_bundle.hpp"

namespace twistor {

/// A bundle glued from trivial bundles on the two charts: g = T f on the
/// overlap, f in the frame over K[t], g in the frame over K[1/t].
struct TransitionBundle {
    LaurentMatrix T;
    std::size_t rank() const noexcept { return T.rows(); }
};

/// T = B * diag(t^-d) * A with A invertible over K[t] and B invertible over
/// K[1/t]. A carries chart-0 coordinates to the split frame.
struct BirkhoffSplit {
    std::vector<int> degrees;  ///< descending
    LaurentMatrix A, Ainv;
    LaurentMatrix B, Binv;
    SplitBundle bundle() const { return SplitBundle(degrees); }
};

/// Throws Error("not a vector bundle presentation") unless det T = c t^m, c != 0.
BirkhoffSplit birkhoff_split(const TransitionBundle& t);
inline BirkhoffSplit birkhoff_split(const LaurentMatrix& t) { return birkhoff_split(TransitionBundle{t}); }

}  // namespace twistor

#endif
