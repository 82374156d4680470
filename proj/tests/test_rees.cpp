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

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "twistor/error.hpp"
#include "twistor/exact/linalg.hpp"
#include "twistor/rees/rees.hpp"

using namespace twistor;

namespace {

ScalarMatrix cols(std::size_t dim, std::vector<std::vector<long>> vs) {
    ScalarMatrix m(dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = Scalar(vs[j][i]);
    return m;
}

ScalarMatrix span_of(const ScalarMatrix& g, const std::vector<std::size_t>& idx) {
    ScalarMatrix m(g.rows(), 0);
    for (auto k : idx) m = hstack(m, g.cols_range(k, 1));
    return m;
}

// Tri-filtered space from a basis (columns of g) with weights and Hodge types;
// F' is built on the columns of gp (defaults to g).
struct Typed {
    std::vector<int> w, p, q;
};

FilteredSpace from_types(const ScalarMatrix& g, const Typed& t, const ScalarMatrix* gp = nullptr) {
    const std::size_t n = g.rows();
    FilteredSpace v;
    v.dim = n;
    auto flag = [&](const ScalarMatrix& basis, const std::vector<int>& key, bool dec) {
        Jumps out;
        for (int x : std::set<int>(key.begin(), key.end())) {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < n; ++k)
                if (dec ? key[k] >= x : key[k] <= x) idx.push_back(k);
            out.push_back({x, span_of(basis, idx)});
        }
        return out;
    };
    v.W = flag(g, t.w, false);
    v.F = flag(g, t.p, true);
    v.Fprime = flag(gp ? *gp : g, t.q, true);
    return v;
}

ScalarMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        ScalarMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = oracle::random_scalar(rng, 3);
        if (linalg::rank(g) == n) return g;
    }
}

Typed random_types(std::mt19937_64& rng, std::size_t n) {
    Typed t;
    for (std::size_t k = 0; k < n; ++k) {
        int w = static_cast<int>(oracle::pick(rng, 0, 2));
        int p = static_cast<int>(oracle::pick(rng, 0, w));
        t.w.push_back(w);
        t.p.push_back(p);
        t.q.push_back(w - p);
    }
    return t;
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

std::vector<int> oracle_split(const ReesOutput& r) {
    return oracle::splitting_type_by_sections(r.bundle.T, -6, 6, 10);
}

// Filtration on the quotient by the columns of `sub`: image under a projection
// whose kernel is span(sub).
Jumps quotient_filtration(const Jumps& f, const ScalarMatrix& proj) {
    Jumps out;
    for (const auto& [i, s] : f) out.push_back({i, proj * s});
    return out;
}

}  // namespace

TEST_CASE("rees_bundle examples") {
    SUBCASE("trivial filtrations give the trivial bundle") {
        ScalarMatrix v = ScalarMatrix::identity(3);
        ReesOutput r = rees_bundle(3, {{0, v}}, {{0, v}});
        CHECK(r.split_type == SplitBundle({0, 0, 0}));
        CHECK(oracle_split(r) == std::vector<int>{0, 0, 0});
    }
    SUBCASE("opposed weight one") {
        ScalarMatrix v = ScalarMatrix::identity(2);
        ReesOutput r = rees_bundle(2, {{0, v}, {1, cols(2, {{1, 0}})}}, {{0, v}, {1, cols(2, {{0, 1}})}});
        // By hand: adapted bases are e1, e2 with jumps (1, 0) and (0, 1), so T = diag(t^-1, t^-1).
        LaurentMatrix expected = monomial_diag({-1, -1});
        CHECK(linalg::same_span(r.frame0.basis, v));
        CHECK(oracle::splitting_type_by_sections(expected, -4, 4, 8) == std::vector<int>{1, 1});
        CHECK(oracle_split(r) == std::vector<int>{1, 1});
        CHECK(r.split_type == SplitBundle({1, 1}));
    }
    SUBCASE("non-opposed") {
        ScalarMatrix v = ScalarMatrix::identity(2);
        ReesOutput r = rees_bundle(2, {{0, v}, {1, cols(2, {{1, 0}})}}, {{0, v}, {1, cols(2, {{1, 0}})}});
        CHECK(oracle::splitting_type_by_sections(monomial_diag({-2, 0}), -4, 4, 8) == std::vector<int>{2, 0});
        CHECK(oracle_split(r) == std::vector<int>{2, 0});
        CHECK(r.split_type == SplitBundle({2, 0}));
    }
    SUBCASE("non-exhaustive filtration") {
        ScalarMatrix v = ScalarMatrix::identity(2);
        CHECK_THROWS_AS(rees_bundle(2, {{1, cols(2, {{1, 0}})}}, {{0, v}}), Error);
        CHECK_THROWS_AS(rees_bundle(2, {{0, v}}, {}), Error);
        FilteredSpace fs{2, {{0, cols(2, {{1, 0}})}}, {{0, v}}, {{0, v}}};
        CHECK_THROWS_WITH_AS(validate(fs), "filtration W is not exhaustive", Error);
    }
}

TEST_CASE("rees_mts examples") {
    ScalarMatrix v2 = ScalarMatrix::identity(2);
    FilteredSpace pure{2, {{1, v2}}, {{0, v2}, {1, cols(2, {{1, 0}})}}, {{0, v2}, {1, cols(2, {{0, 1}})}}};
    MtsReport r = validate_mts(rees_mts(pure));
    CHECK(r.valid);
    CHECK(is_complex_mhs(pure));
    auto ranks = graded_ranks(rees_mts(pure));
    CHECK(ranks[1] == 2);
    bool found = false;
    for (const auto& g : r.pieces)
        if (g.weight == 1) {
            CHECK(g.gr == SplitBundle({1, 1}));
            found = true;
        }
    CHECK(found);

    FilteredSpace bad{2, {{1, v2}}, {{0, v2}, {1, cols(2, {{1, 0}})}}, {{0, v2}, {1, cols(2, {{1, 0}})}}};
    CHECK_FALSE(validate_mts(rees_mts(bad)).valid);
    CHECK_FALSE(is_complex_mhs(bad));
    EquivalenceReport e1 = equivalence_check(pure), e2 = equivalence_check(bad);
    CHECK((e1.mhs && e1.mts));
    CHECK((!e2.mhs && !e2.mts));

    // Weight 0 line plus a weight 2 plane of types (2,0) and (0,2).
    ScalarMatrix v3 = ScalarMatrix::identity(3);
    FilteredSpace sum{3,
                      {{0, cols(3, {{1, 0, 0}})}, {2, v3}},
                      {{0, v3}, {2, cols(3, {{0, 1, 0}})}},
                      {{0, v3}, {2, cols(3, {{0, 0, 1}})}}};
    MtsReport rs = validate_mts(rees_mts(sum));
    CHECK(rs.valid);
    std::map<int, SplitBundle> gr;
    for (const auto& g : rs.pieces) gr[g.weight] = g.gr;
    CHECK(gr[0] == SplitBundle({0}));
    CHECK(gr[2] == SplitBundle({2, 2}));
}

TEST_CASE("is_complex_mhs on a three-weight mixed example") {
    // e1 type (0,0); e2, e3 types (1,0), (0,1); e4 type (1,1) glued to e1 in F.
    ScalarMatrix v = ScalarMatrix::identity(4);
    FilteredSpace fs{4,
                     {{0, cols(4, {{1, 0, 0, 0}})}, {1, cols(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})}, {2, v}},
                     {{0, v}, {1, cols(4, {{0, 1, 0, 0}, {1, 0, 0, 1}})}},
                     {{0, v}, {1, cols(4, {{0, 0, 1, 0}, {0, 0, 0, 1}})}}};
    CHECK(is_complex_mhs(fs));
    std::map<std::tuple<int, int, int>, std::size_t> expected{
        {{0, 0, 0}, 1}, {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{2, 1, 1}, 1}};
    CHECK(hodge_numbers(fs) == expected);
    EquivalenceReport e = equivalence_check(fs);
    CHECK(e.mts);
}

TEST_CASE("pure case: opposedness matches semistability") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<std::size_t>(oracle::pick(rng, 1, 4));
        FilteredSpace fs;
        fs.dim = n;
        fs.W = {{1, ScalarMatrix::identity(n)}};
        auto flag = [&] {
            ScalarMatrix g = random_invertible(rng, n);
            std::vector<int> key(n);
            for (auto& k : key) k = static_cast<int>(oracle::pick(rng, 0, 1));
            Jumps out{{0, g}};
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < n; ++k)
                if (key[k] == 1) idx.push_back(k);
            out.push_back({1, span_of(g, idx)});
            return out;
        };
        fs.F = flag();
        fs.Fprime = flag();
        // Opposed in weight 1 iff F^1 and F'^1 are complementary.
        ScalarMatrix f1 = decreasing_at(fs.F, 1, n), g1 = decreasing_at(fs.Fprime, 1, n);
        bool opposed = linalg::rank(f1) + linalg::rank(g1) == n && linalg::rank(linalg::span_sum(f1, g1)) == n;
        CHECK(is_complex_mhs(fs) == opposed);
        EquivalenceReport e = equivalence_check(fs);
        CHECK(e.mts == opposed);
    }
}

TEST_CASE("equivalence on random tri-filtered spaces") {
    Rng rng(2024);
    int mhs = 0, non = 0;
    for (int trial = 0; trial < 80; ++trial) {
        bool want = trial % 2 == 0;
        FilteredSpace fs = random_filtered_space(rng, 5, want);
        EquivalenceReport e = equivalence_check(fs);
        // Constructed structures: the label is known except for random flags.
        if (want) CHECK(e.mhs);
        (e.mhs ? mhs : non)++;
    }
    CHECK(mhs >= 40);
    CHECK(non >= 20);
}

TEST_CASE("common splitting gives sums of O(p+q)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<std::size_t>(oracle::pick(rng, 1, 5));
        Typed t;
        for (std::size_t k = 0; k < n; ++k) {
            t.w.push_back(0);
            t.p.push_back(static_cast<int>(oracle::pick(rng, -2, 2)));
            t.q.push_back(static_cast<int>(oracle::pick(rng, -2, 2)));
        }
        FilteredSpace fs = from_types(random_invertible(rng, n), t);
        ReesOutput r = rees_bundle(n, fs.F, fs.Fprime);
        std::vector<int> expected;
        for (std::size_t k = 0; k < n; ++k) expected.push_back(t.p[k] + t.q[k]);
        CHECK(r.split_type.degrees() == sorted_desc(expected));
        CHECK(oracle_split(r) == sorted_desc(expected));
    }
}

TEST_CASE("rank and degree bookkeeping") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        FilteredSpace fs = random_filtered_space(rng, 5, trial % 2 == 0);
        ReesOutput r = rees_bundle(fs.dim, fs.F, fs.Fprime);
        long expected = 0;
        for (const Jumps* f : {&fs.F, &fs.Fprime})
            for (const auto& [p, s] : *f) {
                long d = static_cast<long>(linalg::rank(s)) -
                         static_cast<long>(linalg::rank(decreasing_at(*f, p + 1, fs.dim)));
                expected += p * d;
            }
        CHECK(r.split_type.rank() == fs.dim);
        CHECK(r.split_type.degree() == expected);
    }
}

TEST_CASE("rees_inverse roundtrip") {
    ScalarMatrix v2 = ScalarMatrix::identity(2);
    Jumps f{{0, v2}, {1, cols(2, {{1, 0}})}}, fp{{0, v2}, {1, cols(2, {{0, 1}})}};
    auto [rf, rfp] = rees_inverse(rees_bundle(2, f, fp));
    CHECK(same_decreasing(rf, f, 2));
    CHECK(same_decreasing(rfp, fp, 2));

    ScalarMatrix v3 = ScalarMatrix::identity(3);
    auto [tf, tfp] = rees_inverse(rees_bundle(3, {{0, v3}}, {{0, v3}}));
    CHECK(same_decreasing(tf, {{0, v3}}, 3));
    CHECK(same_decreasing(tfp, {{0, v3}}, 3));
    CHECK_FALSE(same_decreasing(tf, {{0, v3}, {1, cols(3, {{1, 0, 0}})}}, 3));

    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        FilteredSpace fs;
        do fs = random_filtered_space(rng, 4, trial % 2 == 0);
        while (fs.dim != 4);
        auto [a, b] = rees_inverse(rees_bundle(4, fs.F, fs.Fprime));
        CHECK(same_decreasing(a, fs.F, 4));
        CHECK(same_decreasing(b, fs.Fprime, 4));
    }
}

namespace {

// A map sending basis vector k of the source to combinations of target basis
// vectors l with p'_l >= p_k, q'_l >= q_k and w'_l <= w_k (exact types when `exact`).
ScalarMatrix typed_map(std::mt19937_64& rng, const Typed& s, const Typed& t, bool exact) {
    ScalarMatrix m(t.p.size(), s.p.size());
    for (std::size_t k = 0; k < s.p.size(); ++k)
        for (std::size_t l = 0; l < t.p.size(); ++l) {
            bool ok = exact ? (t.p[l] == s.p[k] && t.q[l] == s.q[k])
                            : (t.p[l] >= s.p[k] && t.q[l] >= s.q[k] && t.w[l] <= s.w[k]);
            if (ok && oracle::pick(rng, 0, 2) > 0) m(l, k) = oracle::random_scalar(rng, 2);
        }
    return m;
}

}  // namespace

TEST_CASE("functoriality of the Rees map") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n[3];
        Typed t[3];
        ScalarMatrix g[3];
        ReesOutput r[3];
        for (int k = 0; k < 3; ++k) {
            n[k] = static_cast<std::size_t>(oracle::pick(rng, 1, 4));
            t[k] = random_types(rng, n[k]);
            g[k] = random_invertible(rng, n[k]);
            FilteredSpace fs = from_types(g[k], t[k]);
            r[k] = rees_bundle(n[k], fs.F, fs.Fprime);
        }
        ScalarMatrix phi = g[1] * typed_map(rng, t[0], t[1], false) * linalg::inverse(g[0]);
        ScalarMatrix psi = g[2] * typed_map(rng, t[1], t[2], false) * linalg::inverse(g[1]);
        BundleMap a = rees_map(r[0], r[1], phi), b = rees_map(r[1], r[2], psi);
        CHECK(rees_map(r[0], r[2], psi * phi) == b * a);
        CHECK(rees_map(r[0], r[0], ScalarMatrix::identity(n[0])) == BundleMap::identity(r[0].split_type));
        // Kernel of the induced map is the Rees bundle of the kernel.
        ScalarMatrix ker = linalg::kernel(phi);
        FilteredSpace fs0 = from_types(g[0], t[0]);
        SplitBundle expected = ker.cols() == 0
                                   ? SplitBundle()
                                   : rees_bundle(ker.cols(), induced_on(fs0.F, ker), induced_on(fs0.Fprime, ker)).split_type;
        CHECK(kernel(a).bundle == expected);
    }
    // A map that breaks F.
    ScalarMatrix v2 = ScalarMatrix::identity(2);
    ReesOutput r = rees_bundle(2, {{0, v2}, {1, cols(2, {{1, 0}})}}, {{0, v2}});
    CHECK_THROWS_WITH_AS(rees_map(r, r, cols(2, {{0, 1}, {1, 0}})), "map does not preserve F", Error);
}

TEST_CASE("MTS kernel and cokernel agree with the Hodge side") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        auto n0 = static_cast<std::size_t>(oracle::pick(rng, 1, 4));
        auto n1 = static_cast<std::size_t>(oracle::pick(rng, 1, 4));
        Typed t0 = random_types(rng, n0), t1 = random_types(rng, n1);
        ScalarMatrix g0 = random_invertible(rng, n0), g1 = random_invertible(rng, n1);
        FilteredSpace s = from_types(g0, t0), t = from_types(g1, t1);
        ScalarMatrix phi = g1 * typed_map(rng, t0, t1, true) * linalg::inverse(g0);
        MtsMorphism m{rees_mts(s), rees_mts(t), rees_map(rees_bundle(n0, s.F, s.Fprime), rees_bundle(n1, t.F, t.Fprime), phi)};

        ScalarMatrix ker = linalg::kernel(phi);
        MixedTwistorStructure k = mts_kernel(m);
        if (ker.cols() == 0) {
            CHECK(k.total().rank() == 0);
        } else {
            FilteredSpace hk{ker.cols(), induced_on(s.W, ker), induced_on(s.F, ker), induced_on(s.Fprime, ker)};
            MixedTwistorStructure ek = rees_mts(hk);
            CHECK(k.total() == ek.total());
            CHECK(graded_ranks(k) == graded_ranks(ek));
        }

        ScalarMatrix ann = linalg::kernel(phi.transpose());
        MixedTwistorStructure c = mts_cokernel(m);
        if (ann.cols() == 0) {
            CHECK(c.total().rank() == 0);
        } else {
            ScalarMatrix proj = ann.transpose();
            FilteredSpace hc{proj.rows(), quotient_filtration(t.W, proj), quotient_filtration(t.F, proj),
                             quotient_filtration(t.Fprime, proj)};
            MixedTwistorStructure ec = rees_mts(hc);
            CHECK(c.total() == ec.total());
            CHECK(graded_ranks(c) == graded_ranks(ec));
            CHECK(validate_mts(c).valid);
        }
    }
}

TEST_CASE("jet_mts_example") {
    auto r1 = jet_mts_example(1, 2);
    CHECK(graded_ranks(r1) == std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 1}});
    auto r2 = jet_mts_example(2, 2);
    CHECK(graded_ranks(r2) == std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 3}});
    auto r3 = jet_mts_example(2, 3);
    CHECK(r3.total().rank() == 10);
    for (const auto* m : {&r1, &r2, &r3}) CHECK(validate_mts(*m).valid);
    CHECK_THROWS_AS(jet_mts_example(0, 1), Error);
}
