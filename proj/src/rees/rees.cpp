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

#include "twistor/rees/rees.hpp"

#include <algorithm>
#include <set>

#include "twistor/error.hpp"
#include "twistor/exact/linalg.hpp"
#include "twistor/exact/smith.hpp"

namespace twistor {

namespace {

ScalarMatrix zero_space(std::size_t dim) { return ScalarMatrix(dim, 0); }

LaurentMatrix constant(const ScalarMatrix& m) {
    return m.map([](const Scalar& x) { return Laurent(x); });
}

std::vector<int> negated(std::vector<int> v) {
    for (auto& x : v) x = -x;
    return v;
}

void check_vectors(const Jumps& j, std::size_t dim, const std::string& name) {
    for (const auto& [i, s] : j)
        if (s.rows() != dim) throw Error("filtration " + name + " has vectors of the wrong length");
    for (std::size_t k = 1; k < j.size(); ++k)
        if (j[k].first <= j[k - 1].first) throw Error("filtration " + name + " indices must be strictly ascending");
}

void check_decreasing(const Jumps& f, std::size_t dim, const std::string& name) {
    check_vectors(f, dim, name);
    if (dim == 0) return;
    if (f.empty() || linalg::rank(f.front().second) != dim) throw Error("filtration " + name + " is not exhaustive");
    for (std::size_t k = 1; k < f.size(); ++k)
        if (!linalg::contains(f[k - 1].second, f[k].second))
            throw Error("filtration " + name + " is not decreasing");
}

// Quotient coordinates of W_w / W_{w-1} for subspaces of W_w.
struct Quotient {
    ScalarMatrix full;
    std::size_t skip;
    std::size_t dim;
    ScalarMatrix project(const ScalarMatrix& u) const {
        auto z = linalg::solve(full, u);
        if (!z) throw Error("subspace is not contained in the weight step");
        return linalg::column_basis(z->rows_range(skip, dim));
    }
};

Quotient quotient(const ScalarMatrix& big, const ScalarMatrix& small) {
    ScalarMatrix y = linalg::column_basis(small);
    ScalarMatrix x = linalg::extend_basis(y, big);
    return {hstack(y, x), y.cols(), x.cols()};
}

std::pair<int, int> index_range(const Jumps& f) {
    if (f.empty()) return {0, 0};
    return {f.front().first, f.back().first};
}

Jumps read_lattice(const LaurentMatrix& lattice, bool at_zero) {
    const std::size_t n = lattice.rows();
    Jumps out;
    if (n == 0) return out;
    LaurentMatrix inv = laurent::inverse(lattice);
    int lo = 0, hi = 0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (inv(i, j).is_zero()) continue;
            lo = first ? inv(i, j).min_exp() : std::min(lo, inv(i, j).min_exp());
            hi = first ? inv(i, j).max_exp() : std::max(hi, inv(i, j).max_exp());
            first = false;
        }
    // At 0: t^-p v in the lattice iff coefficients of inv*v below t^p vanish.
    // At infinity: t^q v in the lattice iff coefficients above t^-q vanish.
    auto space = [&](int p) {
        ScalarMatrix sys(0, n);
        for (int e = lo; e <= hi; ++e) {
            bool bad = at_zero ? e < p : e > -p;
            if (!bad) continue;
            ScalarMatrix row(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!inv(i, j).is_zero() && e >= inv(i, j).min_exp() && e <= inv(i, j).max_exp())
                        row(i, j) = inv(i, j).coeff(e);
            sys = vstack(sys, row);
        }
        return sys.rows() == 0 ? ScalarMatrix::identity(n) : linalg::kernel(sys);
    };
    int pmin = at_zero ? lo : -hi;
    int pmax = at_zero ? hi : -lo;
    ScalarMatrix next = space(pmax + 1);
    for (int p = pmax; p >= pmin; --p) {
        ScalarMatrix cur = space(p);
        if (cur.cols() != next.cols()) out.push_back({p, cur});
        next = std::move(cur);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

ScalarMatrix random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        ScalarMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.scalar(3);
        if (linalg::rank(g) == n) return g;
    }
}

// F^p = span of columns k with key_k >= p (decreasing) or key_k <= p (increasing).
Jumps flag_from_keys(const ScalarMatrix& vecs, const std::vector<int>& key, bool decreasing) {
    std::set<int> values(key.begin(), key.end());
    Jumps out;
    for (int v : values) {
        ScalarMatrix s(vecs.rows(), 0);
        for (std::size_t k = 0; k < key.size(); ++k)
            if (decreasing ? key[k] >= v : key[k] <= v) s = hstack(s, vecs.cols_range(k, 1));
        out.push_back({v, s});
    }
    return out;
}

}  // namespace

ScalarMatrix decreasing_at(const Jumps& f, int p, std::size_t dim) {
    for (const auto& [i, s] : f)
        if (i >= p) return s;
    return zero_space(dim);
}

ScalarMatrix increasing_at(const Jumps& w, int i, std::size_t dim) {
    const ScalarMatrix* best = nullptr;
    for (const auto& [k, s] : w)
        if (k <= i) best = &s;
    return best ? *best : zero_space(dim);
}

bool same_decreasing(const Jumps& a, const Jumps& b, std::size_t dim) {
    std::set<int> idx;
    for (const auto& [i, s] : a) idx.insert(i);
    for (const auto& [i, s] : b) idx.insert(i);
    if (idx.empty()) return true;
    idx.insert(*idx.begin() - 1);
    idx.insert(*idx.rbegin() + 1);
    for (int p : idx)
        if (!linalg::same_span(decreasing_at(a, p, dim), decreasing_at(b, p, dim))) return false;
    return true;
}

void validate(const FilteredSpace& v) {
    check_decreasing(v.F, v.dim, "F");
    check_decreasing(v.Fprime, v.dim, "F'");
    check_vectors(v.W, v.dim, "W");
    if (v.dim == 0) return;
    if (v.W.empty() || linalg::rank(v.W.back().second) != v.dim) throw Error("filtration W is not exhaustive");
    for (std::size_t k = 1; k < v.W.size(); ++k)
        if (!linalg::contains(v.W[k].second, v.W[k - 1].second)) throw Error("filtration W is not increasing");
}

AdaptedBasis adapted_basis(const Jumps& f, std::size_t dim) {
    AdaptedBasis out{zero_space(dim), {}};
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        ScalarMatrix add = linalg::extend_basis(out.basis, it->second);
        out.basis = hstack(out.basis, add);
        for (std::size_t k = 0; k < add.cols(); ++k) out.jumps.push_back(it->first);
    }
    return out;
}

Jumps induced_on(const Jumps& f, const ScalarMatrix& sub) {
    Jumps out;
    for (const auto& [p, s] : f) {
        ScalarMatrix meet = linalg::intersect(s, sub);
        auto z = linalg::solve(sub, meet);
        if (!z) throw Error("induced_on: intersection outside the subspace");
        out.push_back({p, *z});
    }
    return out;
}

ReesOutput rees_bundle(std::size_t dim, const Jumps& f, const Jumps& fprime) {
    check_decreasing(f, dim, "F");
    check_decreasing(fprime, dim, "F'");
    ReesOutput r;
    r.dim = dim;
    r.frame0 = adapted_basis(f, dim);
    r.frame_inf = adapted_basis(fprime, dim);
    if (dim == 0) return r;
    LaurentMatrix b = constant(r.frame0.basis);
    LaurentMatrix c = constant(r.frame_inf.basis);
    r.lattice0 = b * monomial_diag(negated(r.frame0.jumps));
    r.lattice_inf = c * monomial_diag(r.frame_inf.jumps);
    r.bundle.T = monomial_diag(negated(r.frame_inf.jumps)) * constant(linalg::inverse(r.frame_inf.basis)) * r.lattice0;
    r.split = birkhoff_split(r.bundle);
    r.split_type = r.split.bundle();
    return r;
}

SubBundle rees_subbundle(const ReesOutput& r, const Jumps& f, const Jumps& fprime, const ScalarMatrix& sub) {
    ScalarMatrix u = linalg::column_basis(sub);
    const std::size_t k = u.cols();
    AdaptedBasis a = adapted_basis(induced_on(f, u), k);
    AdaptedBasis c = adapted_basis(induced_on(fprime, u), k);
    LaurentMatrix k0 = monomial_diag(r.frame0.jumps) * constant(linalg::inverse(r.frame0.basis) * u * a.basis) *
                       monomial_diag(negated(a.jumps));
    LaurentMatrix kinf = monomial_diag(negated(r.frame_inf.jumps)) *
                         constant(linalg::inverse(r.frame_inf.basis) * u * c.basis) * monomial_diag(c.jumps);
    k0 = r.split.A * k0;
    kinf = r.split.Binv * kinf;
    if (!in_t_ring(k0) || !in_s_ring(kinf)) throw Error("subspace lattice is not contained in the Rees lattice");
    return glue_subbundle(r.split_type, to_t(k0), to_s(kinf));
}

ReesOutput rees_filtered(const FilteredSpace& v) {
    validate(v);
    ReesOutput r = rees_bundle(v.dim, v.F, v.Fprime);
    for (const auto& [i, s] : v.W) {
        ScalarMatrix u = linalg::column_basis(s);
        ReesOutput sub = rees_bundle(u.cols(), induced_on(v.F, u), induced_on(v.Fprime, u));
        r.filtration_transitions.push_back({i, sub.bundle.T});
    }
    return r;
}

MixedTwistorStructure rees_mts(const FilteredSpace& v) {
    validate(v);
    if (v.dim == 0) return {};
    ReesOutput r = rees_bundle(v.dim, v.F, v.Fprime);
    std::vector<WeightStep> steps;
    for (const auto& [i, s] : v.W) {
        if (linalg::rank(s) == 0) continue;
        SubBundle sb = rees_subbundle(r, v.F, v.Fprime, s);
        steps.push_back({i, sb.bundle, sb.incl});
    }
    return MixedTwistorStructure(r.split_type, std::move(steps));
}

BundleMap rees_map(const ReesOutput& source, const ReesOutput& target, const ScalarMatrix& phi) {
    if (phi.rows() != target.dim || phi.cols() != source.dim) throw Error("rees_map: shape mismatch");
    if (source.dim == 0 || target.dim == 0) return BundleMap(source.split_type, target.split_type);
    LaurentMatrix m0 = monomial_diag(target.frame0.jumps) *
                       constant(linalg::inverse(target.frame0.basis) * phi * source.frame0.basis) *
                       monomial_diag(negated(source.frame0.jumps));
    LaurentMatrix minf = monomial_diag(negated(target.frame_inf.jumps)) *
                         constant(linalg::inverse(target.frame_inf.basis) * phi * source.frame_inf.basis) *
                         monomial_diag(source.frame_inf.jumps);
    if (!in_t_ring(m0)) throw Error("map does not preserve F");
    if (!in_s_ring(minf)) throw Error("map does not preserve F'");
    return BundleMap::from_chart0(source.split_type, target.split_type, to_t(target.split.A * m0 * source.split.Ainv));
}

std::map<std::tuple<int, int, int>, std::size_t> hodge_numbers(const FilteredSpace& v) {
    validate(v);
    std::map<std::tuple<int, int, int>, std::size_t> out;
    auto [plo, phi] = index_range(v.F);
    auto [qlo, qhi] = index_range(v.Fprime);
    for (const auto& [w, ww] : v.W) {
        Quotient q = quotient(ww, increasing_at(v.W, w - 1, v.dim));
        if (q.dim == 0) continue;
        auto gr = [&](const Jumps& f, int p) { return q.project(linalg::intersect(decreasing_at(f, p, v.dim), ww)); };
        auto d = [&](int p, int qq) { return static_cast<long>(linalg::rank(linalg::intersect(gr(v.F, p), gr(v.Fprime, qq)))); };
        for (int p = plo; p <= phi; ++p)
            for (int qq = qlo; qq <= qhi; ++qq) {
                long h = d(p, qq) - d(p + 1, qq) - d(p, qq + 1) + d(p + 1, qq + 1);
                if (h != 0) out[{w, p, qq}] = static_cast<std::size_t>(h);
            }
    }
    return out;
}

bool is_complex_mhs(const FilteredSpace& v) {
    for (const auto& [key, h] : hodge_numbers(v)) {
        auto [w, p, q] = key;
        if (p + q != w) return false;
    }
    return true;
}

EquivalenceReport equivalence_check(const FilteredSpace& v) {
    EquivalenceReport out;
    out.mhs = is_complex_mhs(v);
    out.report = validate_mts(rees_mts(v));
    out.mts = out.report.valid;
    if (out.mhs != out.mts)
        throw TheoremViolation(std::string("Rees verdict disagrees with the Hodge verdict: mhs=") +
                               (out.mhs ? "true" : "false") + " mts=" + (out.mts ? "true" : "false"));
    return out;
}

std::pair<Jumps, Jumps> rees_inverse(const ReesOutput& r) {
    return {read_lattice(r.lattice0, true), read_lattice(r.lattice_inf, false)};
}

MixedTwistorStructure jet_mts_example(int r, int n) {
    if (r < 1 || n < 0) throw Error("jet_mts_example: need r >= 1 and n >= 0");
    MixedTwistorStructure out;
    for (int m = 0; m <= n; ++m) {
        // binom(m + r - 1, r - 1)
        long k = 1;
        for (int j = 1; j <= r - 1; ++j) k = k * (m + j) / j;
        auto piece = MixedTwistorStructure::pure(SplitBundle::pure(m, static_cast<std::size_t>(k)), m);
        out = out.is_zero() ? piece : direct_sum(out, piece);
    }
    return out;
}

FilteredSpace random_filtered_space(Rng& rng, std::size_t max_dim, bool mhs) {
    auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim)));
    FilteredSpace v;
    v.dim = n;
    if (!mhs && rng.chance(1, 3)) {
        auto keys = [&] {
            std::vector<int> k(n);
            for (auto& x : k) x = static_cast<int>(rng.uniform(0, 2));
            return k;
        };
        v.W = flag_from_keys(random_invertible(rng, n), keys(), false);
        v.F = flag_from_keys(random_invertible(rng, n), keys(), true);
        v.Fprime = flag_from_keys(random_invertible(rng, n), keys(), true);
        return v;
    }
    std::vector<int> w(n), p(n), q(n);
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = static_cast<int>(rng.uniform(0, 2));
        p[k] = static_cast<int>(rng.uniform(0, w[k]));
        q[k] = w[k] - p[k];
    }
    if (!mhs) {
        auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        q[k] += rng.chance(1, 2) ? 1 : -1;
    }
    ScalarMatrix g = random_invertible(rng, n);
    ScalarMatrix lower = ScalarMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (w[i] < w[j] && rng.chance(1, 2)) lower(i, j) = rng.scalar(2);
    v.W = flag_from_keys(g, w, false);
    v.F = flag_from_keys(g, p, true);
    v.Fprime = flag_from_keys(g * lower, q, true);
    return v;
}

}  // namespace twistor
