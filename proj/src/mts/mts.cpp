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

#include "twistor/mts/mts.hpp"

#include <algorithm>
#include <set>

#include "twistor/error.hpp"
#include "twistor/exact/linalg.hpp"

namespace twistor {

namespace {

std::string at_index(int i) { return " at " + std::to_string(i); }

void require_valid(const MixedTwistorStructure& m, const char* what) {
    if (!validate_mts(m).valid) throw Error(std::string(what) + " is not a valid mixed twistor structure");
}

std::vector<int> merged_indices(const MixedTwistorStructure& a, const MixedTwistorStructure& b) {
    std::set<int> s;
    for (int i : a.indices()) s.insert(i);
    for (int i : b.indices()) s.insert(i);
    return {s.begin(), s.end()};
}

}  // namespace

MixedTwistorStructure::MixedTwistorStructure(SplitBundle total, std::vector<WeightStep> steps)
    : total_(std::move(total)), steps_(std::move(steps)) {
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        const auto& s = steps_[k];
        if (k > 0 && s.index <= steps_[k - 1].index) throw Error("weight indices must be strictly ascending");
        if (s.incl.source().degrees() != s.bundle.degrees() || s.incl.target().degrees() != total_.degrees())
            throw Error("weight step" + at_index(s.index) + " has an inclusion of the wrong shape");
    }
    if (!steps_.empty() && steps_.back().bundle.rank() != total_.rank())
        throw Error("top weight step is not the whole bundle");
    if (steps_.empty() && total_.rank() != 0) throw Error("a nonzero bundle needs at least one weight step");
}

MixedTwistorStructure MixedTwistorStructure::pure(const SplitBundle& e, int w) {
    if (e.rank() == 0) return {};
    return MixedTwistorStructure(e, {{w, e, BundleMap::identity(e)}});
}

std::vector<int> MixedTwistorStructure::indices() const {
    std::vector<int> out;
    for (const auto& s : steps_) out.push_back(s.index);
    return out;
}

WeightStep MixedTwistorStructure::at(int i) const {
    const WeightStep* best = nullptr;
    for (const auto& s : steps_)
        if (s.index <= i) best = &s;
    if (best) return {i, best->bundle, best->incl};
    return {i, SplitBundle(), BundleMap(SplitBundle(), total_)};
}

MtsReport validate_mts(const MixedTwistorStructure& m) {
    MtsReport r;
    WeightStep prev{0, SplitBundle(), BundleMap(SplitBundle(), m.total())};
    for (const auto& s : m.steps()) {
        if (!is_strict_injection(s.incl)) throw Error("filtration not strict" + at_index(s.index));
        BundleMap kappa;
        try {
            kappa = factor_through_injection(s.incl, prev.incl);
        } catch (const Error&) {
            throw Error("filtration not strict" + at_index(s.index));
        }
        if (!is_strict_injection(kappa)) throw Error("filtration not strict" + at_index(s.index));
        CokernelReport c = cokernel(kappa);
        GradedPiece piece{s.index, c.free_part, c.torsion_divisors,
                          c.torsion_divisors.empty() && c.free_part.is_pure(s.index)};
        if (!piece.pure && r.valid) {
            r.valid = false;
            r.first_invalid = s.index;
        }
        r.pieces.push_back(std::move(piece));
        prev = s;
    }
    return r;
}

bool is_valid_mts(const MixedTwistorStructure& m) { return validate_mts(m).valid; }

void check_filtered(const MtsMorphism& phi) {
    if (phi.f.source().degrees() != phi.source.total().degrees() ||
        phi.f.target().degrees() != phi.target.total().degrees())
        throw Error("morphism does not match the structures' bundles");
    for (const auto& s : phi.source.steps()) {
        WeightStep t = phi.target.at(s.index);
        try {
            factor_through_injection(t.incl, phi.f * s.incl);
        } catch (const Error&) {
            throw Error("map does not preserve the weight filtration" + at_index(s.index));
        }
    }
}

std::vector<BundleMap> induced_maps(const MtsMorphism& phi) {
    std::vector<BundleMap> out;
    for (const auto& s : phi.source.steps())
        out.push_back(factor_through_injection(phi.target.at(s.index).incl, phi.f * s.incl));
    return out;
}

MixedTwistorStructure mts_kernel(const MtsMorphism& phi) {
    require_valid(phi.source, "source");
    require_valid(phi.target, "target");
    check_filtered(phi);
    SubBundle a = kernel(phi.f);
    if (a.bundle.rank() == 0) return {};
    std::vector<WeightStep> steps;
    for (const auto& s : phi.source.steps()) {
        BundleMap to_quotient = cokernel(s.incl).projection * a.incl;
        SubBundle w = kernel(to_quotient);
        steps.push_back({s.index, w.bundle, w.incl});
    }
    MixedTwistorStructure out(a.bundle, std::move(steps));
    if (!validate_mts(out).valid) throw TheoremViolation("kernel of an MTS morphism is not an MTS");
    return out;
}

MixedTwistorStructure mts_cokernel(const MtsMorphism& phi) {
    require_valid(phi.source, "source");
    require_valid(phi.target, "target");
    check_filtered(phi);
    CokernelReport c = cokernel(phi.f);
    if (!c.torsion_divisors.empty()) throw Error("not an MTS morphism");
    if (c.free_part.rank() == 0) return {};
    std::vector<WeightStep> steps;
    for (const auto& s : phi.target.steps()) {
        ImageReport im = image_saturation(c.projection * s.incl);
        if (cokernel(im.proj).torsion_length() != 0)
            throw TheoremViolation("image of W" + std::to_string(s.index) + " in the cokernel is not strict");
        steps.push_back({s.index, im.image, im.incl});
    }
    MixedTwistorStructure out(c.free_part, std::move(steps));
    if (!validate_mts(out).valid) throw TheoremViolation("cokernel of an MTS morphism is not an MTS");
    return out;
}

ImageCoimage mts_image_coimage(const MtsMorphism& phi) {
    ImageCoimage out;
    CokernelReport c = cokernel(phi.f);
    if (!c.torsion_divisors.empty()) throw Error("not an MTS morphism");
    MixedTwistorStructure coker = mts_cokernel(phi);
    out.image = mts_kernel({phi.target, coker, c.projection});
    SubBundle k = kernel(phi.f);
    MixedTwistorStructure ker = mts_kernel(phi);
    out.coimage = mts_cokernel({ker, phi.source, k.incl});

    out.image_incl = out.image.is_zero() ? BundleMap(SplitBundle(), phi.target.total()) : kernel(c.projection).incl;
    out.coimage_proj = cokernel(k.incl).projection;
    // The kernel/cokernel calls above are deterministic, so these frames match
    // the ones inside out.image and out.coimage.
    BundleMap g = factor_through_injection(out.image_incl, phi.f);
    out.comparison = factor_through_surjection(out.coimage_proj, g);
    if (!is_isomorphism(out.comparison)) throw TheoremViolation("image and coimage differ");
    std::set<int> idx;
    for (int i : out.image.indices()) idx.insert(i);
    for (int i : out.coimage.indices()) idx.insert(i);
    for (int i : idx) {
        WeightStep ci = out.coimage.at(i);
        WeightStep ii = out.image.at(i);
        BundleMap ci_to_ii;
        try {
            ci_to_ii = factor_through_injection(ii.incl, out.comparison * ci.incl);
        } catch (const Error&) {
            throw TheoremViolation("comparison map does not respect W" + std::to_string(i));
        }
        if (!is_isomorphism(ci_to_ii)) throw TheoremViolation("image and coimage differ on W" + std::to_string(i));
    }
    return out;
}

std::size_t FilteredFiber::dim_at(int i) const {
    std::size_t d = 0;
    for (const auto& [k, sub] : steps)
        if (k <= i) d = sub.cols();
    return d;
}

FilteredFiber fiber_functor(const MixedTwistorStructure& m, const Point& p) {
    FilteredFiber out;
    out.dim = m.total().rank();
    for (const auto& s : m.steps()) {
        ScalarMatrix v = s.incl.at(p);
        out.steps.emplace_back(s.index, v.cols() == 0 ? v : linalg::column_basis(v));
    }
    return out;
}

MixedTwistorStructure tate_twist(const MixedTwistorStructure& m, int n) {
    if (m.is_zero()) return m;
    std::vector<WeightStep> steps;
    for (const auto& s : m.steps()) steps.push_back({s.index + 2 * n, twist(s.bundle, 2 * n), twist(s.incl, 2 * n)});
    return MixedTwistorStructure(twist(m.total(), 2 * n), std::move(steps));
}

MixedTwistorStructure direct_sum(const MixedTwistorStructure& a, const MixedTwistorStructure& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<WeightStep> steps;
    for (int i : merged_indices(a, b)) {
        WeightStep x = a.at(i), y = b.at(i);
        steps.push_back({i, direct_sum(x.bundle, y.bundle), direct_sum(x.incl, y.incl)});
    }
    return MixedTwistorStructure(direct_sum(a.total(), b.total()), std::move(steps));
}

MixedTwistorStructure tensor(const MixedTwistorStructure& a, const MixedTwistorStructure& b) {
    if (a.is_zero() || b.is_zero()) return {};
    SplitBundle total = tensor(a.total(), b.total());
    std::set<int> sums;
    for (int i : a.indices())
        for (int j : b.indices()) sums.insert(i + j);
    std::vector<WeightStep> steps;
    for (int k : sums) {
        BundleMap gens(SplitBundle(), total);
        for (int i : a.indices()) {
            WeightStep x = a.at(i), y = b.at(k - i);
            gens = hstack(gens, tensor(x.incl, y.incl));
        }
        ImageReport im = image_saturation(gens);
        steps.push_back({k, im.image, im.incl});
    }
    return MixedTwistorStructure(total, std::move(steps));
}

std::map<int, std::size_t> graded_ranks(const MixedTwistorStructure& m) {
    std::map<int, std::size_t> out;
    std::size_t prev = 0;
    for (const auto& s : m.steps()) {
        if (s.bundle.rank() != prev) out[s.index] = s.bundle.rank() - prev;
        prev = s.bundle.rank();
    }
    return out;
}

MixedTwistorStructure random_mts(Rng& rng, const RandomMtsShape& shape) {
    auto r = static_cast<std::size_t>(
        rng.uniform(static_cast<long>(shape.min_rank), static_cast<long>(shape.max_rank)));
    if (r == 0) return {};
    std::vector<int> w(r);
    for (auto& x : w) x = static_cast<int>(rng.uniform(shape.min_weight, shape.max_weight));
    std::sort(w.begin(), w.end());

    LaurentMatrix T = SplitBundle(w).transition();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            if (w[i] == w[j] || rng.chance(1, 3)) continue;
            Laurent x;
            for (int e = -shape.exponent_range; e <= shape.exponent_range; ++e)
                if (rng.chance(1, 2)) x += Laurent::monomial(e - w[j], rng.scalar(2));
            T(i, j) = x;
        }
    BirkhoffSplit split = birkhoff_split(T);
    SplitBundle e = split.bundle();
    PolyMatrix a = to_t(split.A);
    PolyMatrix binv = to_s(split.Binv);

    std::vector<WeightStep> steps;
    for (std::size_t k = 0; k < r; ++k) {
        if (k + 1 < r && w[k + 1] == w[k]) continue;
        PolyMatrix basis = PolyMatrix::identity(r).cols_range(0, k + 1);
        SubBundle sub = glue_subbundle(e, a * basis, binv * basis);
        steps.push_back({w[k], sub.bundle, sub.incl});
    }
    return MixedTwistorStructure(e, std::move(steps));
}

MtsMorphism random_morphism(Rng& rng, const MixedTwistorStructure& s, const MixedTwistorStructure& t) {
    HomSpace hs = hom_space(s.total(), t.total());
    std::vector<ScalarMatrix> blocks;
    for (const auto& st : s.steps()) {
        BundleMap quot = cokernel(t.at(st.index).incl).projection;
        std::vector<BundleMap> conds;
        for (const auto& h : hs.basis) conds.push_back(quot * h * st.incl);
        if (!conds.empty() && !coefficients(conds[0]).empty()) blocks.push_back(coefficient_matrix(conds));
    }
    ScalarMatrix sys(0, hs.basis.size());
    for (const auto& b : blocks) sys = vstack(sys, b);
    ScalarMatrix sol = sys.rows() == 0 ? ScalarMatrix::identity(hs.basis.size()) : linalg::kernel(sys);
    std::vector<Scalar> c(hs.basis.size());
    for (std::size_t k = 0; k < sol.cols(); ++k) {
        if (rng.chance(1, 3)) continue;
        Scalar x = rng.scalar(2);
        for (std::size_t i = 0; i < sol.rows(); ++i) c[i] += x * sol(i, k);
    }
    return {s, t, combine(hs, c, s.total(), t.total())};
}

}  // namespace twistor
