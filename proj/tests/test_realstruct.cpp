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
#include "twistor/bundles/birkhoff.hpp"
#include "twistor/error.hpp"
#include "twistor/exact/random.hpp"
#include "twistor/realstruct/realstruct.hpp"

using namespace twistor;

namespace {

constexpr Field G = Field::gaussian;
BinaryForm lam() { return BinaryForm::lambda(); }
BinaryForm mu() { return BinaryForm::mu(); }
Scalar I() { return Scalar::i(); }

BinaryForm random_form(Rng& rng, int d) {
    std::vector<Scalar> c;
    for (int k = 0; k <= d; ++k) c.push_back(rng.gaussian(3));
    return BinaryForm(d, c);
}

ScalarMatrix conjm(const ScalarMatrix& m) {
    return m.map([](const Scalar& x) { return x.conj(); });
}

// Realified rank of the columns of a complex matrix.
std::size_t real_rank(const ScalarMatrix& m) {
    ScalarMatrix r(2 * m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(2 * i, j) = Scalar(m(i, j).re());
            r(2 * i + 1, j) = Scalar(m(i, j).im());
        }
    return linalg::rank(r);
}

}  // namespace

TEST_CASE("sigma and tau examples") {
    CHECK(sigma_conjugate(lam(), G) == mu());
    CHECK(sigma_conjugate(mu(), G) == -lam());
    CHECK(sigma_conjugate(sigma_conjugate(lam(), G), G) == -lam());
    BinaryForm lm = lam() * mu();
    CHECK(sigma_conjugate(lm, G) == -lm);
    CHECK(sigma_conjugate(sigma_conjugate(lm, G), G) == lm);
    CHECK(sigma_conjugate(lam() * lam() * I(), G) == mu() * mu() * (-I()));

    CHECK(tau_conjugate(lam(), G) == mu());
    CHECK(tau_conjugate(tau_conjugate(lam(), G), G) == lam());
    CHECK(tau_conjugate(lam() + mu(), G) == lam() + mu());
    CHECK(tau_conjugate(lam() * I(), G) == mu() * (-I()));

    CHECK_THROWS_WITH_AS(sigma_conjugate(lam(), Field::rational), "conjugation requires Gaussian field", Error);
    CHECK_THROWS_WITH_AS(tau_conjugate(lam(), Field::rational), "conjugation requires Gaussian field", Error);
}

TEST_CASE("sigma and tau are antilinear and match the evaluation oracle") {
    Rng rng(31);
    for (int k = 0; k < 1000; ++k) {
        int d = static_cast<int>(rng.uniform(0, 4));
        BinaryForm f = random_form(rng, d);
        Scalar c = rng.gaussian(4);
        CHECK(sigma_conjugate(f * c, G) == sigma_conjugate(f, G) * c.conj());
        CHECK(tau_conjugate(f * c, G) == tau_conjugate(f, G) * c.conj());
        if (k % 10 == 0) {
            Scalar x = rng.gaussian(3), y = rng.gaussian(3);
            CHECK(sigma_conjugate(f, G).eval(x, y) == f.eval(y.conj(), -x.conj()).conj());
            CHECK(tau_conjugate(f, G).eval(x, y) == f.eval(y.conj(), x.conj()).conj());
            if (!f.is_zero()) {
                CHECK(tau_conjugate(tau_conjugate(f, G), G) == f);
                BinaryForm s2 = sigma_conjugate(sigma_conjugate(f, G), G);
                CHECK(s2 == (d % 2 ? -f : f));
            }
        }
    }
}

TEST_CASE("sign rule sigma^2 = (-1)^d on O(d)") {
    Rng rng(2);
    for (int d = -3; d <= 3; ++d)
        for (int k = 0; k < 20; ++k) {
            Laurent f;
            for (int e = -3; e <= 3; ++e) f += Laurent::monomial(e, rng.gaussian(2));
            Laurent s2 = sigma_conjugate_local(sigma_conjugate_local(f, d, G), d, G);
            CHECK(s2 == (d % 2 != 0 ? -f : f));
        }
    // agrees with the global operation on forms
    BinaryForm f = lam() * lam() * Scalar(2) + lam() * mu() * I();
    CHECK(Laurent::from_t(sigma_conjugate(f, G).at_t()) == sigma_conjugate_local(Laurent::from_t(f.at_t()), 2, G));
}

TEST_CASE("involution laws and the odd obstruction") {
    CHECK(involution_defect(standard_quaternionic(1)).empty());
    CHECK_FALSE(antipodal_exists(SplitBundle::line(1)));
    CHECK(antipodal_exists(SplitBundle::pure(1, 2)));
    CHECK(antipodal_exists(SplitBundle::line(2)));
    // exhaustive search: no c in Q(i) with small height solves -|c|^2 = 1
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            ScalarMatrix s(1, 1);
            s(0, 0) = Scalar(mpq_class(a, 2), mpq_class(b, 3));
            CHECK_FALSE(involution_defect({RealKind::antipodal, SplitBundle::line(1), s}).empty());
            CHECK_THROWS_WITH_AS(make_real_structure(RealKind::antipodal, SplitBundle::line(1), s, G),
                                 "not an antipodal structure", Error);
        }
    ScalarMatrix bad(2, 2);
    bad(0, 1) = Scalar(1);
    bad(1, 0) = Scalar(1);
    CHECK_FALSE(involution_defect({RealKind::antipodal, SplitBundle({1, 0}), bad}).empty());
}

TEST_CASE("weight 0 real spaces") {
    RealStructure triv{RealKind::antipodal, SplitBundle::pure(0, 2), ScalarMatrix::identity(2)};
    RealSpace rs = weight0_real_space(triv, G);
    CHECK(rs.real_dim == 2);

    ScalarMatrix si(1, 1);
    si(0, 0) = I();
    RealStructure circ = make_real_structure(RealKind::circular, SplitBundle::line(0), si, G);
    rs = weight0_real_space(circ, G);
    CHECK(rs.real_dim == 1);
    // conj(x) = i x is solved by x = 1 + i
    CHECK(rs.basis(0, 0) == Scalar(mpq_class(1), mpq_class(1)));

    Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        ScalarMatrix g(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) g(i, j) = rng.gaussian(2);
        if (linalg::rank(g) < 3) continue;
        ScalarMatrix s = g * linalg::inverse(conjm(g));
        RealStructure r = make_real_structure(RealKind::antipodal, SplitBundle::pure(0, 3), s, G);
        rs = weight0_real_space(r, G);
        CHECK(rs.real_dim == 3);
        CHECK(s * conjm(rs.basis) == rs.basis);
        CHECK(real_rank(rs.basis) == 3);
    }
    CHECK_THROWS_AS(weight0_real_space(standard_quaternionic(1), G), Error);
}

TEST_CASE("quaternionic correspondence") {
    RealStructure l = standard_quaternionic(1);
    QuaternionicSpace q = quaternionic_from_weight1(l, G);
    CHECK(q.dim == 4);
    CHECK(quaternion_defect(q).empty());
    ScalarMatrix minus = -ScalarMatrix::identity(4);
    CHECK(q.I * q.I == minus);
    CHECK(q.J * q.J == minus);
    CHECK(q.K * q.K == minus);
    CHECK(q.I * q.J == q.K);
    // J at the antipode is -J
    for (const Point& p : {Point{Scalar(0), Scalar(1)}, Point{Scalar(1), Scalar(1)}, Point{I(), Scalar(1)},
                           Point{Scalar(2), Scalar(-3)}}) {
        ScalarMatrix jp = complex_structure_at(l, q.basis, p);
        ScalarMatrix jq = complex_structure_at(l, q.basis, conjugate_point(RealKind::antipodal, p));
        CHECK(jq == -jp);
        CHECK(jp * jp == minus);
    }

    QuaternionicSpace q2 = quaternionic_from_weight1(standard_quaternionic(2), G);
    CHECK(q2.dim == 8);
    CHECK(quaternion_defect(q2).empty());

    // a conjugated structure: S' = g S conj(g)^-1 with g in GL_2
    ScalarMatrix g(2, 2);
    g(0, 0) = Scalar(1);
    g(0, 1) = I();
    g(1, 0) = Scalar(2);
    g(1, 1) = Scalar(-1);
    ScalarMatrix s2 = g * l.S * linalg::inverse(conjm(g));
    RealStructure l2 = make_real_structure(RealKind::antipodal, SplitBundle::pure(1, 2), s2, G);
    CHECK(quaternion_defect(quaternionic_from_weight1(l2, G)).empty());

    CHECK_THROWS_AS(quaternionic_from_weight1({RealKind::antipodal, SplitBundle::line(1), ScalarMatrix::identity(1)}, G),
                    Error);
}

TEST_CASE("quaternionic roundtrip through the twistor bundle") {
    QuaternionicSpace q = quaternionic_from_weight1(standard_quaternionic(2), G);
    // scramble the real basis
    Rng rng(3);
    ScalarMatrix b;
    do {
        b = ScalarMatrix(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) b(i, j) = rng.scalar(2);
    } while (linalg::rank(b) < 8);
    ScalarMatrix binv = linalg::inverse(b);
    QuaternionicSpace sq{8, binv * q.I * b, binv * q.J * b, binv * q.K * b, q.basis * b};
    CHECK(quaternion_defect(sq).empty());
    TwistorOfQuaternionic tw = twistor_from_quaternionic(sq, G);
    CHECK(tw.phi * sq.I == tw.recovered.I * tw.phi);
    CHECK(tw.phi * sq.J == tw.recovered.J * tw.phi);
    CHECK(tw.phi * sq.K == tw.recovered.K * tw.phi);
    // the bundle presented through a scrambled transition still splits as O(1)^4
    LaurentMatrix t = tw.structure.bundle.transition();
    LaurentMatrix u = LaurentMatrix::identity(4), v = LaurentMatrix::identity(4);
    u(0, 2) = Laurent::monomial(-2);
    v(3, 1) = Laurent::monomial(3) + Laurent(Scalar(1));
    BirkhoffSplit s = birkhoff_split(u * t * v);
    CHECK(s.degrees == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("tate twistors") {
    TateTwistor t1 = tate_twistor(1);
    CHECK(t1.bundle == SplitBundle::line(2));
    CHECK(involution_defect(t1.antipodal).empty());
    CHECK(involution_defect(t1.circular).empty());
    CHECK(sigma_conjugate(sigma_conjugate(lam() * mu(), G), G) == lam() * mu());

    TateTwistor tm1 = tate_twistor(-1);
    RealStructure triv = tensor(t1.antipodal, tm1.antipodal);
    CHECK(triv.bundle == SplitBundle::line(0));
    CHECK(triv.S == ScalarMatrix::identity(1));
    RealStructure trivc = tensor(t1.circular, tm1.circular);
    CHECK(trivc.S == ScalarMatrix::identity(1));

    TateTwistor t2 = tate_twistor(2);
    RealSpace line = circular_fiber_real_space(t2.circular, {Scalar(1), Scalar(1)}, G);
    CHECK(line.real_dim == 1);
    CHECK(line.basis(0, 0) == Scalar(1));
    // fixed points of tau on the unit circle also work
    RealSpace li = circular_fiber_real_space(t2.circular, {I(), Scalar(1)}, G);
    CHECK(li.real_dim == 1);
    CHECK_THROWS_AS(circular_fiber_real_space(t2.circular, {Scalar(2), Scalar(1)}, G), Error);

    // tensoring pure even-weight real structures with T(n) preserves the laws
    Rng rng(5);
    for (int n = -2; n <= 2; ++n) {
        ScalarMatrix g(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) g(i, j) = rng.gaussian(2);
        if (linalg::rank(g) < 2) continue;
        ScalarMatrix s = g * linalg::inverse(conjm(g));
        for (RealKind kind : {RealKind::antipodal, RealKind::circular}) {
            RealStructure r = make_real_structure(kind, SplitBundle::pure(2, 2), s, G);
            TateTwistor t = tate_twistor(n);
            RealStructure tr = tensor(r, kind == RealKind::antipodal ? t.antipodal : t.circular);
            CHECK(involution_defect(tr).empty());
            CHECK(tr.bundle == SplitBundle::pure(2 + 2 * n, 2));
        }
    }
}
