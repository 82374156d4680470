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

#ifndef TWISTOR_REALSTRUCT_REALSTRUCT_HPP
#define TWISTOR_REALSTRUCT_REALSTRUCT_HPP

#include <string>

#include "twistor/bundles/split_bundle.hpp"

namespace twistor {

enum class RealKind { antipodal, circular };
std::string to_string(RealKind k);

/// sigma(f)(lambda, mu) = conj(f)(mu, -lambda), lying over [l:m] -> [-conj m : conj l].
/// Throws Error("conjugation requires Gaussian field") in rational mode.
BinaryForm sigma_conjugate(const BinaryForm& f, Field field);
/// tau(f)(lambda, mu) = conj(f)(mu, lambda), lying over [l:m] -> [conj m : conj l].
BinaryForm tau_conjugate(const BinaryForm& f, Field field);
BundleMap sigma_conjugate(const BundleMap& f, Field field);
/// sigma on a local section of O(d) over the overlap, in the chart-0 frame:
/// f0(t) -> (-t)^d conj(f0)(-1/t).
Laurent sigma_conjugate_local(const Laurent& f0, int d, Field field);
BundleMap tau_conjugate(const BundleMap& f, Field field);
/// The antiholomorphic involution of P^1 under the given kind.
Point conjugate_point(RealKind kind, const Point& p);

/// rho(f)_i = sum_j S_ij c(f_j) with c = sigma or tau; S may only couple
/// summands of equal degree.
struct RealStructure {
    RealKind kind = RealKind::antipodal;
    SplitBundle bundle;
    ScalarMatrix S;
};

/// Empty when the involution law rho^2 = id holds, otherwise the reason.
std::string involution_defect(const RealStructure& r);
/// Throws Error("not an antipodal structure") / ("not a circular structure").
RealStructure make_real_structure(RealKind kind, const SplitBundle& e, const ScalarMatrix& s, Field field);
/// rho applied to a section given per summand.
std::vector<BinaryForm> apply(const RealStructure& r, const std::vector<BinaryForm>& section, Field field);
/// Existence of an antipodal structure: every odd degree must occur an even number of times.
bool antipodal_exists(const SplitBundle& e);
/// Kronecker product of structures of the same kind.
RealStructure tensor(const RealStructure& a, const RealStructure& b);

/// Real points of H^0 for pure weight 0: columns v with S conj(v) = v, forming
/// a basis over the reals. The first nonzero coordinate of each is normalized to
/// have real part 1 (imaginary part 1 when purely imaginary).
struct RealSpace {
    std::size_t real_dim = 0;
    ScalarMatrix basis;
};
RealSpace weight0_real_space(const RealStructure& r, Field field);
/// Fixed real subspace of the fiber at a point fixed by the circular involution.
RealSpace circular_fiber_real_space(const RealStructure& r, const Point& p, Field field);

/// Real vector space with three complex structures, as rational matrices.
struct QuaternionicSpace {
    std::size_t dim = 0;
    ScalarMatrix I, J, K;
    /// Columns: the real basis of A in the coordinates (Re a, Im a, Re b, Im b)
    /// of sections a*lambda + b*mu per summand.
    ScalarMatrix basis;
};
/// Empty when I^2 = J^2 = K^2 = -1, IJ = K, JK = I, KI = J hold exactly.
std::string quaternion_defect(const QuaternionicSpace& q);
QuaternionicSpace quaternionic_from_weight1(const RealStructure& r, Field field);
/// Complex structure J_p on A induced by evaluation at p.
ScalarMatrix complex_structure_at(const RealStructure& r, const ScalarMatrix& basis, const Point& p);
/// The structure sum of n copies of the standard S = [[0,1],[-1,0]] on O(1)^2.
RealStructure standard_quaternionic(std::size_t copies);

/// The twistor side of a quaternionic space: the standard structure on
/// O(1)^(dim/2) together with a real isomorphism phi from q's space to the
/// fixed sections of that structure with phi X = X' phi for X = I, J, K.
struct TwistorOfQuaternionic {
    RealStructure structure;
    QuaternionicSpace recovered;
    ScalarMatrix phi;
};
TwistorOfQuaternionic twistor_from_quaternionic(const QuaternionicSpace& q, Field field);

struct TateTwistor {
    SplitBundle bundle;
    RealStructure antipodal;
    RealStructure circular;
};
/// O(2n) with S = [1] for both kinds.
TateTwistor tate_twistor(int n);

}  // namespace twistor

#endif
