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

#ifndef TWISTOR_COMPLEXES_COMPLEXES_HPP
#define TWISTOR_COMPLEXES_COMPLEXES_HPP

#include <map>
#include <utility>
#include <vector>

#include "twistor/bundles/birkhoff.hpp"
#include "twistor/bundles/sheaf.hpp"
#include "twistor/exact/random.hpp"
#include "twistor/mts/mts.hpp"

namespace twistor {

/// W^pre_n of every object, as inclusions indexed like the objects.
struct PreweightLevel {
    int n;
    std::vector<BundleMap> incl;
};

/// Bounded complex of split bundles M^lo -> ... -> M^hi with an increasing
/// preweight filtration by subcomplexes. Levels below the first are zero; the
/// last level is the whole complex.
class FilteredComplex {
   public:
    FilteredComplex() = default;
    /// d[j] : objects[j] -> objects[j + 1]. Throws Error on shape mismatch,
    /// d^2 != 0, or a filtration that is not strict, monotone, exhaustive and
    /// compatible with d.
    FilteredComplex(int lo, std::vector<SplitBundle> objects, std::vector<BundleMap> d,
                    std::vector<PreweightLevel> preweight);

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(objects_.size()) - 1; }
    const std::vector<SplitBundle>& objects() const noexcept { return objects_; }
    const std::vector<PreweightLevel>& preweight() const noexcept { return preweight_; }
    std::vector<int> levels() const;

    /// Zero outside [lo, hi].
    SplitBundle object(int k) const;
    BundleMap differential(int k) const;
    /// W^pre_n M^k -> M^k.
    BundleMap level(int n, int k) const;

   private:
    int lo_ = 0;
    std::vector<SplitBundle> objects_;
    std::vector<BundleMap> d_;
    std::vector<PreweightLevel> preweight_;
};

/// Single object in degree k with W^pre jumping from 0 to everything at level n.
FilteredComplex single_object(const SplitBundle& e, int k, int n);

struct SheafReport {
    SplitBundle free;
    std::vector<BinaryForm> torsion;
    int torsion_length() const;
};

struct CohomologyReport {
    /// Keyed by degree; only degrees in [lo, hi].
    std::map<int, SheafReport> sheaves;
    /// sum (-1)^i chi(H^i) == sum (-1)^i chi(M^i), torsion counted by length.
    bool euler_balanced;
};
CohomologyReport cohomology_sheaves(const FilteredComplex& c);

struct DifferentialInfo {
    bool zero;
    std::size_t generic_rank;
};

/// E_r with E_1^{p,q} = H^{p+q}(Gr_{-p}) and d_r : E_r^{p,q} -> E_r^{p+r,q-r+1}.
struct SpectralPage {
    int r;
    std::map<std::pair<int, int>, SheafReport> entries;
    std::map<std::pair<int, int>, DifferentialInfo> differentials;
    bool all_zero() const;
};
std::vector<SpectralPage> spectral_sequence(const FilteredComplex& c, int max_page);
/// Bound on the page index after which nothing changes: the number of preweight levels.
int stable_page(const FilteredComplex& c);

struct MtcCheck {
    int n, i;
    SheafReport gr;
    bool pure;
};
struct MtcReport {
    bool valid;
    std::vector<MtcCheck> checks;
};
/// H^i(Gr_n) torsion-free and pure of weight n + i for all (n, i).
MtcReport validate_mtc(const FilteredComplex& c);

struct DegenerationReport {
    bool d2_zero;
    int pages;
    /// Keyed by degree i, with W_n H^i = W^pre_{n-i} H^i.
    std::map<int, MixedTwistorStructure> cohomology;
};
/// Throws Error("not a mixed twistor complex") when validate_mtc fails and
/// TheoremViolation when some d_r with r >= 3 is nonzero or some H^i is not an MTS.
DegenerationReport degeneration_check(const FilteredComplex& c);

/// Degree-wise maps between complexes with the same degree range.
struct ComplexMap {
    FilteredComplex source, target;
    std::vector<BundleMap> f;
};
/// Throws Error unless f commutes with d and W^pre_n -> W^pre_n.
void check_complex_map(const ComplexMap& f);
/// Cone^k = A^{k+1} + B^k, d(a, b) = (-d a, f a + d b),
/// W^pre_n Cone^k = W^pre_{n+shift} A^{k+1} + W^pre_n B^k.
FilteredComplex cone(const ComplexMap& f, int shift = 0);

/// Cosimplicial family: complexes M_k with coface maps cofaces[k][j] : M_k -> M_{k+1}.
struct CosimplicialFamily {
    std::vector<FilteredComplex> levels;
    std::vector<std::vector<ComplexMap>> cofaces;
};
/// N^j = sum_{i+k=j} M_k^i, D = delta + (-1)^k d, W^pre_n N^j = sum W^pre_{n+k} M_k^i.
FilteredComplex simplicial_total(const CosimplicialFamily& fam);

struct RandomMtcShape {
    int max_length = 3;
    std::size_t max_rank = 3;
    int max_weight = 3;
};
FilteredComplex random_mtc(Rng& rng, const RandomMtcShape& shape = {});

// Chart complexes for patching.

enum class Chart { zero, infinity, overlap };

/// Free complex over K[t] (zero), K[1/t] (infinity) or K[t, 1/t] (overlap).
/// The preweight is split: levels[k][b] is the level of basis vector b in degree lo + k.
struct ChartComplex {
    Chart chart = Chart::zero;
    int lo = 0;
    std::vector<std::vector<int>> levels;
    std::vector<LaurentMatrix> d;
    int hi() const { return lo + static_cast<int>(levels.size()) - 1; }
    std::size_t rank(int k) const;
};
/// Degree-wise matrices; source and target share lo and length.
using ChartMap = std::vector<LaurentMatrix>;
void check_chart_complex(const ChartComplex& c);

struct PatchResult {
    /// Glued Gr_n H^i keyed by (n, i); zero pieces omitted.
    std::map<std::pair<int, int>, SplitBundle> pieces;
    std::map<std::pair<int, int>, BirkhoffSplit> splits;
};
/// Glues Gr H(M) and Gr H(N) along H(v) H(u)^-1 for u : P -> M, v : P -> N.
/// Throws Error("not a filtered quasiisomorphism") when H(Gr u) or H(Gr v)
/// is not invertible.
PatchResult patch(const ChartComplex& m, const ChartComplex& p, const ChartComplex& n, const ChartMap& u,
                  const ChartMap& v);
/// X^k = P^k + R^k + Q^{k-1}, d(p, r, q) = (dp, dr, a p - b r - dq).
ChartComplex cone_prime(const ChartComplex& p, const ChartComplex& r, const ChartComplex& q, const ChartMap& a,
                        const ChartMap& b);
/// Patch of M <-u- P -a-> Q <-b- R -v-> N through X = cone_prime(P, R, Q).
PatchResult patch_chain(const ChartComplex& m, const ChartComplex& p, const ChartComplex& q, const ChartComplex& r,
                        const ChartComplex& n, const ChartMap& u, const ChartMap& a, const ChartMap& b,
                        const ChartMap& v);

}  // namespace twistor

#endif
