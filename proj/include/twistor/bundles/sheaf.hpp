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

#ifndef TWISTOR_BUNDLES_SHEAF_HPP
#define TWISTOR_BUNDLES_SHEAF_HPP

#include <vector>

#include "twistor/bundles/birkhoff.hpp"
#include "twistor/bundles/split_bundle.hpp"

namespace twistor {

/// A strict subbundle with its inclusion.
struct SubBundle {
    SplitBundle bundle;
    BundleMap incl;
};

struct ImageReport {
    SplitBundle image;
    BundleMap incl;  ///< saturation of the image, strict in the target
    BundleMap proj;  ///< source -> image with incl * proj = f
};

struct CokernelReport {
    std::vector<BinaryForm> torsion_divisors;
    SplitBundle free_part;
    BundleMap projection;  ///< target -> free part, fiberwise surjective
    int torsion_length() const;
};

/// The subbundle of E spanned by the columns of k0 over K[t] and of kinf over
/// K[1/t]. Both must be saturated bases of the same subsheaf.
SubBundle glue_subbundle(const SplitBundle& e, const PolyMatrix& k0, const PolyMatrix& kinf);

SubBundle kernel(const BundleMap& f);
CokernelReport cokernel(const BundleMap& f);
ImageReport image_saturation(const BundleMap& f);
/// Fiberwise injective everywhere on P^1.
bool is_strict_injection(const BundleMap& f);
/// Fiberwise surjective everywhere on P^1.
bool is_strict_surjection(const BundleMap& f);
bool is_isomorphism(const BundleMap& f);
/// h with incl * h = g; throws if g does not land in the subbundle.
BundleMap factor_through_injection(const BundleMap& incl, const BundleMap& g);
/// h with h * surj = g for a fiberwise surjective surj; throws if g does not
/// vanish on the kernel of surj.
BundleMap factor_through_surjection(const BundleMap& surj, const BundleMap& g);
/// Inverse of an isomorphism of split bundles.
BundleMap inverse(const BundleMap& f);
/// Dimension of the image of the fiber map at p.
std::size_t rank_at(const BundleMap& f, const Point& p);

}  // namespace twistor

#endif
