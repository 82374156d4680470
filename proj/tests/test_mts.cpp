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

#include "doctest.h"
#include "oracles.hpp"
#include "twistor/error.hpp"
#include "twistor/mts/mts.hpp"

using namespace twistor;

namespace {

BinaryForm lam() { return BinaryForm::lambda(); }
BinaryForm mu() { return BinaryForm::mu(); }
BinaryForm one() { return BinaryForm::constant(Scalar(1)); }
SplitBundle B(std::vector<int> d) { return SplitBundle(std::move(d)); }

BundleMap map_of(const SplitBundle& s, const SplitBundle& t, std::vector<std::vector<BinaryForm>> rows) {
    BundleMap::FormMatrix m(t.rank(), s.rank());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return BundleMap(s, t, m);
}

const std::vector<Point> kPoints = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}, {Scalar(1), Scalar(0)},
                                    {Scalar(2), Scalar(3)}, {Scalar(-5), Scalar(7)}};

// O(0) + O(1) with W_0 = O(0) embedded by (lambda + mu, 1), W_1 = E.
MixedTwistorStructure two_step() {
    SplitBundle e = B({1, 0});
    BundleMap incl = map_of(B({0}), e, {{lam() + mu()}, {one()}});
    return MixedTwistorStructure(e, {{0, B({0}), incl}, {1, e, BundleMap::identity(e)}});
}

}  // namespace

TEST_CASE("validate_mts examples") {
    SplitBundle e = B({1, 1});
    MixedTwistorStructure m(e, {{0, SplitBundle(), BundleMap(SplitBundle(), e)}, {1, e, BundleMap::identity(e)}});
    MtsReport r = validate_mts(m);
    CHECK(r.valid);
    REQUIRE(r.pieces.size() == 2);
    CHECK(r.pieces[1].gr == B({1, 1}));

    MtsReport bad = validate_mts(MixedTwistorStructure::pure(B({2, 0}), 1));
    CHECK_FALSE(bad.valid);
    CHECK(bad.first_invalid == 1);
    CHECK(bad.pieces[0].gr == B({2, 0}));

    MixedTwistorStructure ext = two_step();
    r = validate_mts(ext);
    CHECK(r.valid);
    CHECK(r.pieces[1].gr == B({1}));
    // Smith-form oracle: the quotient of the inclusion has no torsion and elementary divisors 1
    auto ed = oracle::elementary_divisors(ext.steps()[0].incl.chart0());
    CHECK(ed.size() == 1);
    CHECK(ed[0].is_unit());

    SplitBundle f = B({1});
    MixedTwistorStructure nonstrict(f, {{0, B({0}), map_of(B({0}), f, {{lam()}})}, {1, f, BundleMap::identity(f)}});
    CHECK_THROWS_WITH_AS(validate_mts(nonstrict), "filtration not strict at 0", Error);
}

TEST_CASE("mts_kernel and mts_cokernel examples") {
    MixedTwistorStructure src = two_step();
    MixedTwistorStructure tgt = MixedTwistorStructure::pure(B({1}), 1);

    MixedTwistorStructure k = mts_kernel({src, tgt, BundleMap(src.total(), tgt.total())});
    CHECK(k.total() == src.total());
    CHECK(graded_ranks(k) == graded_ranks(src));
    CHECK(mts_kernel({src, src, BundleMap::identity(src.total())}).is_zero());

    // projection onto the quotient O(1): kills W_0
    BundleMap proj = map_of(src.total(), tgt.total(), {{one(), -(lam() + mu())}});
    CHECK((proj * src.steps()[0].incl).is_zero());
    k = mts_kernel({src, tgt, proj});
    CHECK(k.total() == B({0}));
    CHECK(graded_ranks(k) == std::map<int, std::size_t>{{0, 1}});

    MixedTwistorStructure c = mts_cokernel({src, tgt, BundleMap(src.total(), tgt.total())});
    CHECK(c.total() == tgt.total());
    CHECK(mts_cokernel({src, src, BundleMap::identity(src.total())}).is_zero());

    MixedTwistorStructure w0 = MixedTwistorStructure::pure(B({0}), 0);
    c = mts_cokernel({w0, src, src.steps()[0].incl});
    CHECK(c.total() == B({1}));
    CHECK(graded_ranks(c) == std::map<int, std::size_t>{{1, 1}});
    CHECK(validate_mts(c).valid);

    // lambda : O(0) -> O(1) between pure structures has torsion cokernel
    MixedTwistorStructure p1 = MixedTwistorStructure::pure(B({1}), 1);
    CHECK_THROWS_AS(mts_cokernel({w0, p1, map_of(B({0}), B({1}), {{lam()}})}), Error);
}

TEST_CASE("image equals coimage") {
    MixedTwistorStructure src = two_step();
    ImageCoimage ic = mts_image_coimage({src, src, BundleMap::identity(src.total())});
    CHECK(ic.image.total() == src.total());
    CHECK(ic.coimage.total() == src.total());
    CHECK(is_isomorphism(ic.comparison));

    ic = mts_image_coimage({src, src, BundleMap(src.total(), src.total())});
    CHECK(ic.image.is_zero());
    CHECK(ic.coimage.is_zero());

    Rng rng(4);
    int nontrivial = 0;
    for (int k = 0; k < 25; ++k) {
        RandomMtsShape shape{3, 3, 0, 2, 2};
        MixedTwistorStructure a = random_mts(rng, shape);
        MixedTwistorStructure b = random_mts(rng, shape);
        MtsMorphism phi = random_morphism(rng, a, b);
        ImageCoimage r = mts_image_coimage(phi);
        if (!phi.f.is_zero()) ++nontrivial;
        // oracle: at generic points f(W_i) = W'_i n image
        for (int i = 0; i <= 2; ++i)
            for (const auto& p : {kPoints[3], kPoints[4]}) {
                ScalarMatrix fp = phi.f.at(p);
                ScalarMatrix img = linalg::column_basis(fp);
                ScalarMatrix wi = a.at(i).incl.at(p);
                ScalarMatrix fwi = fp * wi;
                ScalarMatrix wpi = b.at(i).incl.at(p);
                CHECK(linalg::rank(fwi) == linalg::intersect(wpi, img).cols());
            }
        CHECK(r.image.total().rank() == phi.f.rank());
    }
    CHECK(nontrivial > 10);
}

TEST_CASE("fiber functor") {
    SplitBundle e = B({1, 1});
    FilteredFiber ff = fiber_functor(MixedTwistorStructure::pure(e, 1), kPoints[1]);
    CHECK(ff.dim == 2);
    CHECK(ff.dim_at(1) == 2);
    CHECK(ff.dim_at(0) == 0);

    MixedTwistorStructure m = two_step();
    ff = fiber_functor(m, kPoints[0]);
    CHECK(ff.dim_at(0) == 1);
    CHECK(ff.dim_at(1) == 2);

    // exactness on 0 -> W_0 -> E -> E/W_0 -> 0
    MixedTwistorStructure w0 = MixedTwistorStructure::pure(B({0}), 0);
    MixedTwistorStructure q = mts_cokernel({w0, m, m.steps()[0].incl});
    for (const auto& p : kPoints) {
        FilteredFiber a = fiber_functor(w0, p), b = fiber_functor(m, p), c = fiber_functor(q, p);
        for (int i = -1; i <= 2; ++i) CHECK(a.dim_at(i) + c.dim_at(i) == b.dim_at(i));
    }
}

TEST_CASE("tate twist") {
    MixedTwistorStructure t1 = MixedTwistorStructure::pure(B({2}), 2);
    MixedTwistorStructure tm1 = MixedTwistorStructure::pure(B({-2}), -2);
    MixedTwistorStructure triv = tensor(t1, tm1);
    CHECK(triv.total() == B({0}));
    CHECK(triv.indices() == std::vector<int>{0});
    CHECK(validate_mts(triv).valid);

    MixedTwistorStructure p = tate_twist(MixedTwistorStructure::pure(B({1, 1}), 1), 1);
    CHECK(p.total() == B({3, 3}));
    CHECK(p.indices() == std::vector<int>{3});
    CHECK(validate_mts(p).valid);

    MixedTwistorStructure tw = tate_twist(two_step(), -1);
    CHECK(tw.indices() == std::vector<int>{-2, -1});
    CHECK(validate_mts(tw).valid);
    // agrees with tensoring by T(-1)
    MixedTwistorStructure viat = tensor(two_step(), tm1);
    CHECK(viat.total() == tw.total());
    CHECK(graded_ranks(viat) == graded_ranks(tw));
}

TEST_CASE("random structures are valid and morphisms are filtered") {
    Rng rng(12);
    for (int k = 0; k < 30; ++k) {
        MixedTwistorStructure a = random_mts(rng, {});
        CHECK(validate_mts(a).valid);
        MixedTwistorStructure b = random_mts(rng, {});
        MtsMorphism phi = random_morphism(rng, a, b);
        CHECK_NOTHROW(check_filtered(phi));
        MixedTwistorStructure ab = direct_sum(a, b);
        CHECK(validate_mts(ab).valid);
    }
}
