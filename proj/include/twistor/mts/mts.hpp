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

#ifndef TWISTOR_MTS_MTS_HPP
#define TWISTOR_MTS_MTS_HPP

#include <map>
#include <optional>
#include <vector>

#include "twistor/bundles/sheaf.hpp"
#include "twistor/exact/random.hpp"

namespace twistor {

/// W_index with its inclusion into the total bundle.
struct WeightStep {
    int index;
    SplitBundle bundle;
    BundleMap incl;
};

/// A bundle with an increasing chain of subbundles. Steps are listed by
/// ascending index; W_i for an unlisted i is the nearest listed step below
/// it, and zero below the first.
class MixedTwistorStructure {
   public:
    /// The zero object.
    MixedTwistorStructure() = default;
    /// Checks shapes and index order; strictness is checked by validate_mts.
    MixedTwistorStructure(SplitBundle total, std::vector<WeightStep> steps);
    /// E with the single step W_w = E.
    static MixedTwistorStructure pure(const SplitBundle& e, int w);

    const SplitBundle& total() const noexcept { return total_; }
    const std::vector<WeightStep>& steps() const noexcept { return steps_; }
    std::vector<int> indices() const;
    WeightStep at(int i) const;
    bool is_zero() const noexcept { return total_.rank() == 0; }

   private:
    SplitBundle total_;
    std::vector<WeightStep> steps_;
};

struct MtsMorphism {
    MixedTwistorStructure source;
    MixedTwistorStructure target;
    BundleMap f;
};

struct GradedPiece {
    int weight;
    SplitBundle gr;  ///< free part of W_i / W_prev
    std::vector<BinaryForm> torsion;
    bool pure;
};

struct MtsReport {
    bool valid = true;
    std::vector<GradedPiece> pieces;
    std::optional<int> first_invalid;
};

/// Throws Error("filtration not strict at i") on a non-strict step.
MtsReport validate_mts(const MixedTwistorStructure& m);
bool is_valid_mts(const MixedTwistorStructure& m);
/// Throws Error unless f maps every W_i into W'_i.
void check_filtered(const MtsMorphism& phi);
/// Induced maps W_i -> W'_i for i over the source indices.
std::vector<BundleMap> induced_maps(const MtsMorphism& phi);

MixedTwistorStructure mts_kernel(const MtsMorphism& phi);
/// Throws Error("not an MTS morphism") when the cokernel has torsion.
MixedTwistorStructure mts_cokernel(const MtsMorphism& phi);

struct ImageCoimage {
    MixedTwistorStructure image;    ///< inside the target
    MixedTwistorStructure coimage;  ///< quotient of the source
    BundleMap image_incl;           ///< image total -> target total
    BundleMap coimage_proj;         ///< source total -> coimage total
    BundleMap comparison;           ///< coimage total -> image total
};
/// Throws TheoremViolation if the comparison is not a filtered isomorphism.
ImageCoimage mts_image_coimage(const MtsMorphism& phi);

/// Fiber of an MTS at a point: subspaces W_i(p) of E(p) in the chart frame.
struct FilteredFiber {
    std::size_t dim = 0;
    std::vector<std::pair<int, ScalarMatrix>> steps;
    std::size_t dim_at(int i) const;
};
FilteredFiber fiber_functor(const MixedTwistorStructure& m, const Point& p);

MixedTwistorStructure tate_twist(const MixedTwistorStructure& m, int n);
MixedTwistorStructure direct_sum(const MixedTwistorStructure& a, const MixedTwistorStructure& b);
/// W_k(E (x) F) = sum over i + j = k of W_i E (x) W_j F.
MixedTwistorStructure tensor(const MixedTwistorStructure& a, const MixedTwistorStructure& b);
/// Nonzero graded ranks.
std::map<int, std::size_t> graded_ranks(const MixedTwistorStructure& m);

struct RandomMtsShape {
    std::size_t min_rank = 1;
    std::size_t max_rank = 4;
    int min_weight = 0;
    int max_weight = 3;
    int exponent_range = 2;
};
/// Extension of pure pieces by a random block upper-triangular transition.
MixedTwistorStructure random_mts(Rng& rng, const RandomMtsShape& shape);
/// Random element of the space of filtered maps between the totals.
MtsMorphism random_morphism(Rng& rng, const MixedTwistorStructure& s, const MixedTwistorStructure& t);

}  // namespace twistor

#endif
