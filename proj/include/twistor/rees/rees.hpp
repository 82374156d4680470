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

#ifndef TWISTOR_REES_REES_HPP
#define TWISTOR_REES_REES_HPP

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "twistor/bundles/birkhoff.hpp"
#include "twistor/mts/mts.hpp"

namespace twistor {

/// A filtration as a jump list: (index, subspace) with ascending indices and
/// subspaces given by spanning columns. For a decreasing filtration F^p is the
/// subspace at the smallest listed index >= p (zero above the last); for an
/// increasing one W_i is the subspace at the largest listed index <= i (zero
/// below the first).
using Jumps = std::vector<std::pair<int, ScalarMatrix>>;

ScalarMatrix decreasing_at(const Jumps& f, int p, std::size_t dim);
ScalarMatrix increasing_at(const Jumps& w, int i, std::size_t dim);
/// Same subspace at every index.
bool same_decreasing(const Jumps& a, const Jumps& b, std::size_t dim);

struct FilteredSpace {
    std::size_t dim = 0;
    Jumps W;
    Jumps F;
    Jumps Fprime;
};

/// Throws Error naming the offending filtration when a filtration is not
/// exhaustive, not monotone, or has vectors of the wrong length.
void validate(const FilteredSpace& v);

/// Basis adapted to a decreasing filtration: F^p = span{b_k : jumps_k >= p}.
struct AdaptedBasis {
    ScalarMatrix basis;
    std::vector<int> jumps;
};
AdaptedBasis adapted_basis(const Jumps& f, std::size_t dim);
/// Filtration induced on the subspace spanned by `sub`, in the coordinates of
/// those columns.
Jumps induced_on(const Jumps& f, const ScalarMatrix& sub);

struct ReesOutput {
    std::size_t dim = 0;
    TransitionBundle bundle;
    BirkhoffSplit split;
    SplitBundle split_type;
    AdaptedBasis frame0, frame_inf;
    /// Chart frames in V (x) K[t, 1/t]: columns generate the lattices at 0 and infinity.
    LaurentMatrix lattice0, lattice_inf;
    /// Per weight index, the transition of xi(W_i V) (filled by rees_filtered).
    std::vector<std::pair<int, LaurentMatrix>> filtration_transitions;
};

ReesOutput rees_bundle(std::size_t dim, const Jumps& f, const Jumps& fprime);
ReesOutput rees_filtered(const FilteredSpace& v);
MixedTwistorStructure rees_mts(const FilteredSpace& v);
/// Inclusion of xi(U) into xi(V) in split frames, for a subspace U spanned by `sub`.
SubBundle rees_subbundle(const ReesOutput& r, const Jumps& f, const Jumps& fprime, const ScalarMatrix& sub);
/// The map of split Rees bundles induced by a linear map preserving F and F'.
BundleMap rees_map(const ReesOutput& source, const ReesOutput& target, const ScalarMatrix& phi);

/// dim Gr_F^p Gr_F'^q Gr^W_w keyed by (w, p, q); zero entries omitted.
std::map<std::tuple<int, int, int>, std::size_t> hodge_numbers(const FilteredSpace& v);
bool is_complex_mhs(const FilteredSpace& v);

struct EquivalenceReport {
    bool mhs;
    bool mts;
    MtsReport report;
};
/// Throws TheoremViolation when the two verdicts disagree.
EquivalenceReport equivalence_check(const FilteredSpace& v);

/// F and F' read back from the lattices.
std::pair<Jumps, Jumps> rees_inverse(const ReesOutput& r);

/// Split MTS with Gr_m = O(m)^binom(m+r-1, r-1) for 0 <= m <= n.
MixedTwistorStructure jet_mts_example(int r, int n);

/// Random tri-filtered space of dimension in [1, max_dim]. With mhs set, a
/// bigraded structure moved by a random basis change and a W-lowering
/// perturbation of F'; otherwise a structure with at least one Hodge type off
/// its weight, or random flags.
FilteredSpace random_filtered_space(Rng& rng, std::size_t max_dim, bool mhs);

}  // namespace twistor

#endif
