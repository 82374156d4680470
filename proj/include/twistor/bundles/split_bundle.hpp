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

#ifndef TWISTOR_BUNDLES_SPLIT_BUNDLE_HPP
#define TWISTOR_BUNDLES_SPLIT_BUNDLE_HPP

#include <string>
#include <vector>

#include "twistor/exact/binary_form.hpp"
#include "twistor/exact/matrix.hpp"

namespace twistor {

/// A point [lambda : mu] of P^1.
struct Point {
    Scalar lambda;
    Scalar mu;
};

/// O(d_0) + ... + O(d_{r-1}). The order of the summands is the basis order
/// that maps refer to; equality compares multisets. Library operations that
/// produce bundles return them sorted descending.
class SplitBundle {
   public:
    SplitBundle() = default;
    explicit SplitBundle(std::vector<int> degrees) : degrees_(std::move(degrees)) {}
    static SplitBundle line(int d) { return SplitBundle({d}); }
    static SplitBundle pure(int w, std::size_t rank) { return SplitBundle(std::vector<int>(rank, w)); }

    std::size_t rank() const noexcept { return degrees_.size(); }
    int degree() const noexcept;
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int operator[](std::size_t i) const { return degrees_.at(i); }
    bool is_pure(int w) const noexcept;
    bool is_sorted() const noexcept;
    SplitBundle sorted() const;
    /// Transition diag(t^-d) under the convention O(n) <-> t^-n.
    LaurentMatrix transition() const;

    friend bool operator==(const SplitBundle& a, const SplitBundle& b);
    friend bool operator!=(const SplitBundle& a, const SplitBundle& b) { return !(a == b); }
    /// "O(1)+O(0)", or "0" for the zero bundle.
    std::string to_string() const;

   private:
    std::vector<int> degrees_;
};

SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b);
/// Summands ordered (i, j) row-major: O(a_i + b_j).
SplitBundle tensor(const SplitBundle& a, const SplitBundle& b);
SplitBundle dual(const SplitBundle& e);
SplitBundle twist(const SplitBundle& e, int n);

/// Morphism of split bundles: entry (i, j) is a form of degree
/// target[i] - source[j], forced Zero when that is negative.
class BundleMap {
   public:
    using FormMatrix = Matrix<BinaryForm>;

    BundleMap() = default;
    /// The zero map.
    BundleMap(SplitBundle source, SplitBundle target);
    /// Validates every entry degree.
    BundleMap(SplitBundle source, SplitBundle target, FormMatrix m);
    static BundleMap identity(const SplitBundle& e);
    /// Homogenizes a chart-0 matrix (entries in K[t]); throws if an entry has
    /// too large a degree to be a form of the required degree.
    static BundleMap from_chart0(const SplitBundle& source, const SplitBundle& target, const PolyMatrix& m);

    const SplitBundle& source() const noexcept { return source_; }
    const SplitBundle& target() const noexcept { return target_; }
    const FormMatrix& matrix() const noexcept { return m_; }
    const BinaryForm& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    void set(std::size_t i, std::size_t j, BinaryForm f);
    int entry_degree(std::size_t i, std::size_t j) const { return target_[i] - source_[j]; }
    bool is_zero() const { return m_.is_zero(); }

    /// Entries m(t, 1), over K[t].
    PolyMatrix chart0() const;
    /// Entries m(1, s), over K[s].
    PolyMatrix chart_inf() const;
    /// Fiber map at p, in the frame of the chart containing p.
    ScalarMatrix at(const Point& p) const;
    /// Rank over the function field.
    std::size_t rank() const;

    friend bool operator==(const BundleMap& a, const BundleMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.m_ == b.m_;
    }
    friend bool operator!=(const BundleMap& a, const BundleMap& b) { return !(a == b); }
    friend BundleMap operator+(const BundleMap& a, const BundleMap& b);
    friend BundleMap operator-(const BundleMap& a, const BundleMap& b);
    friend BundleMap operator-(const BundleMap& a);
    /// Composition a o b.
    friend BundleMap operator*(const BundleMap& a, const BundleMap& b);
    friend BundleMap operator*(const Scalar& c, const BundleMap& a);

    std::string to_string() const;

   private:
    SplitBundle source_, target_;
    FormMatrix m_;
};

BundleMap direct_sum(const BundleMap& a, const BundleMap& b);
/// [a b] : A + B -> T.
BundleMap hstack(const BundleMap& a, const BundleMap& b);
/// [a; b] : S -> A + B.
BundleMap vstack(const BundleMap& a, const BundleMap& b);
/// Kronecker product, on the summand orders of tensor().
BundleMap tensor(const BundleMap& a, const BundleMap& b);
/// Transpose map F^v -> E^v.
BundleMap dual(const BundleMap& f);
BundleMap twist(const BundleMap& f, int n);
/// Restriction to the summands `cols` of the source and `rows` of the target.
BundleMap submap(const BundleMap& f, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

struct HomSpace {
    std::size_t dimension = 0;
    std::vector<BundleMap> basis;
};
/// Elementary matrices with monomial entries.
HomSpace hom_space(const SplitBundle& e, const SplitBundle& f);

/// All form coefficients of f, entry by entry in row-major order.
std::vector<Scalar> coefficients(const BundleMap& f);
/// sum_k c_k basis_k.
BundleMap combine(const HomSpace& h, const std::vector<Scalar>& c, const SplitBundle& source,
                  const SplitBundle& target);
/// Matrix whose k-th column holds coefficients(op(basis_k)); its kernel
/// parametrizes the maps killed by op.
ScalarMatrix coefficient_matrix(const std::vector<BundleMap>& maps);

/// A Cech class t^exponent on summand `summand`, in chart-0 coordinates on the
/// overlap.
struct CechClass {
    std::size_t summand;
    int exponent;
};
struct Cohomology {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    /// Pairs (summand, form) spanning H^0.
    std::vector<std::pair<std::size_t, BinaryForm>> h0_basis;
    std::vector<CechClass> h1_basis;
};
Cohomology cohomology(const SplitBundle& e);
/// h^1(E^v (x) F).
std::size_t ext1_dim(const SplitBundle& e, const SplitBundle& f);

}  // namespace twistor

#endif
