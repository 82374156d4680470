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

#include "twistor/realstruct/realstruct.hpp"

#include <map>

#include "twistor/error.hpp"
#include "twistor/exact/linalg.hpp"

namespace twistor {

namespace {

void require_gaussian(Field field) {
    if (field != Field::gaussian) throw Error("conjugation requires Gaussian field");
}

ScalarMatrix conj(const ScalarMatrix& m) {
    return m.map([](const Scalar& x) { return x.conj(); });
}

// Columns v, spanning over R, with s * conj(v) = v.
RealSpace fixed_points(const ScalarMatrix& s) {
    const std::size_t n = s.rows();
    // v = x + i y; s conj(v) = (P x + Q y) + i (Q x - P y) with s = P + i Q.
    ScalarMatrix sys(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar p(s(i, j).re()), q(s(i, j).im());
            sys(i, j) = p;
            sys(i, n + j) = q;
            sys(n + i, j) = q;
            sys(n + i, n + j) = -p;
        }
    for (std::size_t i = 0; i < 2 * n; ++i) sys(i, i) -= Scalar(1);
    ScalarMatrix ker = linalg::kernel(sys);
    RealSpace out;
    out.real_dim = ker.cols();
    out.basis = ScalarMatrix(n, ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) out.basis(i, c) = Scalar(ker(i, c).re(), ker(n + i, c).re());
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar& v = out.basis(i, c);
            if (v.is_zero()) continue;
            Scalar scale(sgn(v.re()) != 0 ? mpq_class(1 / v.re()) : mpq_class(1 / v.im()));
            for (std::size_t k = 0; k < n; ++k) out.basis(k, c) *= scale;
            break;
        }
    }
    return out;
}

// Realified coordinates of a section (a_j lambda + b_j mu)_j of O(1)^r.
constexpr std::size_t kCoords = 4;

std::vector<std::pair<Scalar, Scalar>> from_real(const ScalarMatrix& x, std::size_t col, std::size_t r) {
    std::vector<std::pair<Scalar, Scalar>> ab(r);
    for (std::size_t j = 0; j < r; ++j) {
        ab[j].first = Scalar(x(kCoords * j, col).re(), x(kCoords * j + 1, col).re());
        ab[j].second = Scalar(x(kCoords * j + 2, col).re(), x(kCoords * j + 3, col).re());
    }
    return ab;
}

ScalarMatrix realify_multiply_i(std::size_t r) {
    ScalarMatrix m(2 * r, 2 * r);
    for (std::size_t j = 0; j < r; ++j) {
        m(2 * j, 2 * j + 1) = Scalar(-1);
        m(2 * j + 1, 2 * j) = Scalar(1);
    }
    return m;
}

}  // namespace

std::string to_string(RealKind k) { return k == RealKind::antipodal ? "antipodal" : "circular"; }

BinaryForm sigma_conjugate(const BinaryForm& f, Field field) {
    require_gaussian(field);
    if (f.is_zero()) return f;
    const int d = f.degree();
    std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        Scalar x = f.coeff(d - j).conj();
        c[static_cast<std::size_t>(j)] = (j % 2) ? -x : x;
    }
    return BinaryForm(d, c);
}

BinaryForm tau_conjugate(const BinaryForm& f, Field field) {
    require_gaussian(field);
    if (f.is_zero()) return f;
    const int d = f.degree();
    std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(j)] = f.coeff(d - j).conj();
    return BinaryForm(d, c);
}

BundleMap sigma_conjugate(const BundleMap& f, Field field) {
    return BundleMap(f.source(), f.target(),
                     f.matrix().map([field](const BinaryForm& x) { return sigma_conjugate(x, field); }));
}

Laurent sigma_conjugate_local(const Laurent& f0, int d, Field field) {
    require_gaussian(field);
    Laurent out;
    if (f0.is_zero()) return out;
    for (int e = f0.min_exp(); e <= f0.max_exp(); ++e) {
        const Scalar& c = f0.coeff(e);
        if (c.is_zero()) continue;
        // (-t)^d * conj(c) * (-1/t)^e
        Scalar x = c.conj();
        if ((d + e) % 2 != 0) x = -x;
        out += Laurent::monomial(d - e, x);
    }
    return out;
}

BundleMap tau_conjugate(const BundleMap& f, Field field) {
    return BundleMap(f.source(), f.target(),
                     f.matrix().map([field](const BinaryForm& x) { return tau_conjugate(x, field); }));
}

Point conjugate_point(RealKind kind, const Point& p) {
    if (kind == RealKind::antipodal) return {-p.mu.conj(), p.lambda.conj()};
    return {p.mu.conj(), p.lambda.conj()};
}

std::string involution_defect(const RealStructure& r) {
    const std::size_t n = r.bundle.rank();
    if (r.S.rows() != n || r.S.cols() != n) return "structure matrix has the wrong size";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!r.S(i, j).is_zero() && r.bundle[i] != r.bundle[j])
                return "structure matrix couples summands of different degree";
    ScalarMatrix sq = r.S * conj(r.S);
    if (r.kind == RealKind::antipodal)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r.bundle[j] % 2 != 0) sq(i, j) = -sq(i, j);
    if (sq != ScalarMatrix::identity(n)) return "involution law fails";
    return {};
}

RealStructure make_real_structure(RealKind kind, const SplitBundle& e, const ScalarMatrix& s, Field field) {
    require_gaussian(field);
    RealStructure r{kind, e, s};
    if (!involution_defect(r).empty())
        throw Error(kind == RealKind::antipodal ? "not an antipodal structure" : "not a circular structure");
    return r;
}

std::vector<BinaryForm> apply(const RealStructure& r, const std::vector<BinaryForm>& section, Field field) {
    if (section.size() != r.bundle.rank()) throw Error("section has the wrong number of components");
    std::vector<BinaryForm> c;
    for (const auto& f : section)
        c.push_back(r.kind == RealKind::antipodal ? sigma_conjugate(f, field) : tau_conjugate(f, field));
    std::vector<BinaryForm> out(section.size());
    for (std::size_t i = 0; i < section.size(); ++i)
        for (std::size_t j = 0; j < section.size(); ++j)
            if (!r.S(i, j).is_zero()) out[i] += c[j] * r.S(i, j);
    return out;
}

bool antipodal_exists(const SplitBundle& e) {
    std::map<int, std::size_t> mult;
    for (int d : e.degrees()) ++mult[d];
    for (const auto& [d, m] : mult)
        if (d % 2 != 0 && m % 2 != 0) return false;
    return true;
}

RealStructure tensor(const RealStructure& a, const RealStructure& b) {
    if (a.kind != b.kind) throw Error("tensor of real structures of different kinds");
    const std::size_t n = a.S.rows(), m = b.S.rows();
    ScalarMatrix s(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) s(i * m + k, j * m + l) = a.S(i, j) * b.S(k, l);
    return {a.kind, tensor(a.bundle, b.bundle), s};
}

RealSpace weight0_real_space(const RealStructure& r, Field field) {
    require_gaussian(field);
    if (!r.bundle.is_pure(0)) throw Error("weight-0 real space needs a pure weight 0 bundle");
    if (!involution_defect(r).empty()) throw Error("not a real structure");
    return fixed_points(r.S);
}

RealSpace circular_fiber_real_space(const RealStructure& r, const Point& p, Field field) {
    require_gaussian(field);
    if (r.kind != RealKind::circular) throw Error("fiber real space needs a circular structure");
    if (!involution_defect(r).empty()) throw Error("not a circular structure");
    if (p.mu.is_zero()) throw Error("point is not fixed by the circular involution");
    Scalar t0 = p.lambda / p.mu;
    if (t0.norm() != 1) throw Error("point is not fixed by the circular involution");
    ScalarMatrix s = r.S;
    for (std::size_t j = 0; j < s.cols(); ++j) {
        Scalar pw(1);
        int d = r.bundle[j];
        for (int k = 0; k < std::abs(d); ++k) pw *= t0;
        if (d < 0) pw = pw.inverse();
        for (std::size_t i = 0; i < s.rows(); ++i) s(i, j) *= pw;
    }
    return fixed_points(s);
}

std::string quaternion_defect(const QuaternionicSpace& q) {
    ScalarMatrix minus = -ScalarMatrix::identity(q.dim);
    if (q.I * q.I != minus) return "I^2 != -1";
    if (q.J * q.J != minus) return "J^2 != -1";
    if (q.K * q.K != minus) return "K^2 != -1";
    if (q.I * q.J != q.K) return "IJ != K";
    if (q.J * q.K != q.I) return "JK != I";
    if (q.K * q.I != q.J) return "KI != J";
    return {};
}

ScalarMatrix complex_structure_at(const RealStructure& r, const ScalarMatrix& basis, const Point& p) {
    const std::size_t n = r.bundle.rank();
    if (p.lambda.is_zero() && p.mu.is_zero()) throw Error("[0:0] is not a point of P^1");
    // value_j = a_j * u + b_j * v with (u, v) = (t0, 1) or (1, 0)
    Scalar u = p.mu.is_zero() ? Scalar(1) : p.lambda / p.mu;
    Scalar v = p.mu.is_zero() ? Scalar(0) : Scalar(1);
    ScalarMatrix ev(2 * n, kCoords * n);
    for (std::size_t j = 0; j < n; ++j) {
        Scalar ur(u.re()), ui(u.im()), vr(v.re()), vi(v.im());
        ev(2 * j, kCoords * j) = ur;
        ev(2 * j, kCoords * j + 1) = -ui;
        ev(2 * j, kCoords * j + 2) = vr;
        ev(2 * j, kCoords * j + 3) = -vi;
        ev(2 * j + 1, kCoords * j) = ui;
        ev(2 * j + 1, kCoords * j + 1) = ur;
        ev(2 * j + 1, kCoords * j + 2) = vi;
        ev(2 * j + 1, kCoords * j + 3) = vr;
    }
    ScalarMatrix m = ev * basis;
    return linalg::inverse(m) * realify_multiply_i(n) * m;
}

QuaternionicSpace quaternionic_from_weight1(const RealStructure& r, Field field) {
    require_gaussian(field);
    if (r.kind != RealKind::antipodal) throw Error("not an antipodal structure");
    if (!r.bundle.is_pure(1)) throw Error("quaternionic correspondence needs E = O(1)^r");
    if (!involution_defect(r).empty()) throw Error("not an antipodal structure");
    const std::size_t n = r.bundle.rank();

    // rho on realified sections, column by column.
    ScalarMatrix rho(kCoords * n, kCoords * n);
    ScalarMatrix id = ScalarMatrix::identity(kCoords * n);
    for (std::size_t c = 0; c < kCoords * n; ++c) {
        auto ab = from_real(id, c, n);
        std::vector<BinaryForm> sec;
        for (const auto& [a, b] : ab) sec.push_back(BinaryForm(1, {b, a}));
        auto img = apply(r, sec, field);
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& a = img[j].coeff(1);
            const Scalar& b = img[j].coeff(0);
            rho(kCoords * j, c) = Scalar(a.re());
            rho(kCoords * j + 1, c) = Scalar(a.im());
            rho(kCoords * j + 2, c) = Scalar(b.re());
            rho(kCoords * j + 3, c) = Scalar(b.im());
        }
    }
    QuaternionicSpace q;
    q.basis = linalg::kernel(rho - id);
    q.dim = q.basis.cols();
    if (q.dim != 2 * n) throw TheoremViolation("fixed sections do not have real dimension 2 rank(E)");
    q.I = complex_structure_at(r, q.basis, {Scalar(0), Scalar(1)});
    q.J = complex_structure_at(r, q.basis, {Scalar(1), Scalar(1)});
    q.K = complex_structure_at(r, q.basis, {Scalar::i(), Scalar(1)});
    return q;
}

namespace {

// Columns e_1, I e_1, J e_1, K e_1, e_2, ... spanning the whole space.
ScalarMatrix quaternionic_basis(const QuaternionicSpace& q) {
    ScalarMatrix g(q.dim, 0);
    ScalarMatrix id = ScalarMatrix::identity(q.dim);
    for (std::size_t c = 0; c < q.dim && g.cols() < q.dim; ++c) {
        ScalarMatrix e = id.cols_range(c, 1);
        ScalarMatrix cand = hstack(hstack(e, q.I * e), hstack(q.J * e, q.K * e));
        if (linalg::rank(hstack(g, cand)) == g.cols() + 4) g = hstack(g, cand);
    }
    if (g.cols() != q.dim) throw Error("space is not a quaternionic module");
    return g;
}

}  // namespace

TwistorOfQuaternionic twistor_from_quaternionic(const QuaternionicSpace& q, Field field) {
    if (!quaternion_defect(q).empty()) throw Error("not a quaternionic space: " + quaternion_defect(q));
    if (q.dim % 4 != 0) throw Error("quaternionic structure must have dimension divisible by 4");
    TwistorOfQuaternionic out;
    out.structure = standard_quaternionic(q.dim / 4);
    out.recovered = quaternionic_from_weight1(out.structure, field);
    out.phi = quaternionic_basis(out.recovered) * linalg::inverse(quaternionic_basis(q));
    return out;
}

RealStructure standard_quaternionic(std::size_t copies) {
    ScalarMatrix s(2 * copies, 2 * copies);
    for (std::size_t k = 0; k < copies; ++k) {
        s(2 * k, 2 * k + 1) = Scalar(1);
        s(2 * k + 1, 2 * k) = Scalar(-1);
    }
    return {RealKind::antipodal, SplitBundle::pure(1, 2 * copies), s};
}

TateTwistor tate_twistor(int n) {
    SplitBundle e = SplitBundle::line(2 * n);
    ScalarMatrix one = ScalarMatrix::identity(1);
    return {e, {RealKind::antipodal, e, one}, {RealKind::circular, e, one}};
}

}  // namespace twistor
