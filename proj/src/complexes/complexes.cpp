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

#include "twistor/complexes/complexes.hpp"

#include <algorithm>
#include <set>

#include "twistor/error.hpp"
#include "twistor/exact/smith.hpp"

namespace twistor {

namespace {

bool factors(const BundleMap& incl, const BundleMap& g) {
    try {
        factor_through_injection(incl, g);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool sheaf_contains(const BundleMap& gens, const BundleMap& h) {
    if (h.is_zero()) return true;
    return pid::module_contains(gens.chart0(), h.chart0()) && pid::module_contains(gens.chart_inf(), h.chart_inf());
}

SheafReport report_of(const CokernelReport& c) { return {c.free_part, c.torsion_divisors}; }

long chi(const SheafReport& s) {
    return static_cast<long>(s.free.degree()) + static_cast<long>(s.free.rank()) + s.torsion_length();
}

// Matrix of a map between direct sums assembled from blocks.
BundleMap assemble(const std::vector<SplitBundle>& src, const std::vector<SplitBundle>& tgt,
                   const std::map<std::pair<std::size_t, std::size_t>, BundleMap>& blocks) {
    SplitBundle s, t;
    std::vector<std::size_t> so, to;
    for (const auto& b : src) {
        so.push_back(s.rank());
        s = direct_sum(s, b);
    }
    for (const auto& b : tgt) {
        to.push_back(t.rank());
        t = direct_sum(t, b);
    }
    BundleMap::FormMatrix m(t.rank(), s.rank());
    for (const auto& [key, f] : blocks) {
        auto [i, j] = key;
        for (std::size_t a = 0; a < f.target().rank(); ++a)
            for (std::size_t b = 0; b < f.source().rank(); ++b) m(to[i] + a, so[j] + b) = f(a, b);
    }
    return BundleMap(s, t, m);
}

// Z_r^{p} in degree k with F^p = W^pre_{-p}: x in F^p M^k with dx in F^{p+r}.
BundleMap zr(const FilteredComplex& c, int p, int k, int r) {
    BundleMap fp = c.level(-p, k);
    if (fp.source().rank() == 0) return fp;
    BundleMap q = cokernel(c.level(-p - r, k + 1)).projection;
    SubBundle z = kernel(q * c.differential(k) * fp);
    return fp * z.incl;
}

// Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1} inside M^k.
BundleMap boundaries(const FilteredComplex& c, int p, int k, int r) {
    return hstack(zr(c, p + 1, k, r - 1), c.differential(k - 1) * zr(c, p - r + 1, k - 1, r - 1));
}

struct Entry {
    BundleMap z;
    CokernelReport quotient;
};

Entry entry(const FilteredComplex& c, int p, int k, int r) {
    BundleMap z = zr(c, p, k, r);
    if (z.source().rank() == 0) return {z, CokernelReport{}};
    return {z, cokernel(factor_through_injection(z, boundaries(c, p, k, r)))};
}

std::pair<int, int> level_range(const FilteredComplex& c) {
    auto l = c.levels();
    if (l.empty()) return {0, -1};
    return {l.front(), l.back()};
}

}  // namespace

int SheafReport::torsion_length() const {
    int n = 0;
    for (const auto& d : torsion) n += d.degree();
    return n;
}

FilteredComplex::FilteredComplex(int lo, std::vector<SplitBundle> objects, std::vector<BundleMap> d,
                                 std::vector<PreweightLevel> preweight)
    : lo_(lo), objects_(std::move(objects)), d_(std::move(d)), preweight_(std::move(preweight)) {
    const std::size_t len = objects_.size();
    if (d_.size() != (len == 0 ? 0 : len - 1)) throw Error("complex needs one differential between consecutive objects");
    for (std::size_t j = 0; j < d_.size(); ++j)
        if (d_[j].source().degrees() != objects_[j].degrees() || d_[j].target().degrees() != objects_[j + 1].degrees())
            throw Error("differential " + std::to_string(lo_ + static_cast<int>(j)) + " has the wrong shape");
    for (std::size_t j = 0; j + 1 < d_.size(); ++j)
        if (!(d_[j + 1] * d_[j]).is_zero()) throw Error("d squared is not zero");
    bool nonzero = std::any_of(objects_.begin(), objects_.end(), [](const SplitBundle& e) { return e.rank() > 0; });
    if (nonzero && preweight_.empty()) throw Error("preweight filtration is empty");
    for (std::size_t l = 0; l < preweight_.size(); ++l) {
        const auto& lev = preweight_[l];
        if (l > 0 && lev.n <= preweight_[l - 1].n) throw Error("preweight levels must be strictly ascending");
        if (lev.incl.size() != len) throw Error("preweight level needs one inclusion per object");
        for (std::size_t k = 0; k < len; ++k) {
            const BundleMap& in = lev.incl[k];
            if (in.target().degrees() != objects_[k].degrees()) throw Error("preweight inclusion has the wrong target");
            if (in.source().rank() > 0 && !is_strict_injection(in))
                throw Error("preweight step is not a strict subbundle");
            if (l > 0 && !factors(in, preweight_[l - 1].incl[k])) throw Error("preweight filtration is not increasing");
            if (k + 1 < len && !factors(lev.incl[k + 1], d_[k] * in))
                throw Error("preweight filtration is not compatible with d");
        }
    }
    if (!preweight_.empty())
        for (std::size_t k = 0; k < len; ++k)
            if (preweight_.back().incl[k].source().rank() != objects_[k].rank())
                throw Error("preweight filtration is not exhaustive");
}

std::vector<int> FilteredComplex::levels() const {
    std::vector<int> out;
    for (const auto& l : preweight_) out.push_back(l.n);
    return out;
}

SplitBundle FilteredComplex::object(int k) const {
    if (k < lo_ || k > hi()) return {};
    return objects_[static_cast<std::size_t>(k - lo_)];
}

BundleMap FilteredComplex::differential(int k) const {
    if (k < lo_ || k >= hi()) return BundleMap(object(k), object(k + 1));
    return d_[static_cast<std::size_t>(k - lo_)];
}

BundleMap FilteredComplex::level(int n, int k) const {
    const PreweightLevel* best = nullptr;
    for (const auto& l : preweight_)
        if (l.n <= n) best = &l;
    if (!best || k < lo_ || k > hi()) return BundleMap(SplitBundle(), object(k));
    return best->incl[static_cast<std::size_t>(k - lo_)];
}

FilteredComplex single_object(const SplitBundle& e, int k, int n) {
    return FilteredComplex(k, {e}, {}, {{n, {BundleMap::identity(e)}}});
}

CohomologyReport cohomology_sheaves(const FilteredComplex& c) {
    CohomologyReport out;
    long lhs = 0, rhs = 0;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        SubBundle ker = kernel(c.differential(k));
        SheafReport h = report_of(cokernel(factor_through_injection(ker.incl, c.differential(k - 1))));
        long sign = (k % 2 == 0) ? 1 : -1;
        lhs += sign * chi(h);
        SplitBundle m = c.object(k);
        rhs += sign * (static_cast<long>(m.degree()) + static_cast<long>(m.rank()));
        out.sheaves[k] = std::move(h);
    }
    out.euler_balanced = lhs == rhs;
    return out;
}

bool SpectralPage::all_zero() const {
    return std::all_of(differentials.begin(), differentials.end(), [](const auto& d) { return d.second.zero; });
}

int stable_page(const FilteredComplex& c) {
    auto [lo, hi] = level_range(c);
    return std::max(1, hi - lo + 1);
}

std::vector<SpectralPage> spectral_sequence(const FilteredComplex& c, int max_page) {
    std::vector<SpectralPage> pages;
    auto [nlo, nhi] = level_range(c);
    for (int r = 1; r <= max_page; ++r) {
        SpectralPage page{r, {}, {}};
        for (int k = c.lo(); k <= c.hi(); ++k)
            for (int p = -nhi; p <= -nlo; ++p) {
                Entry e = entry(c, p, k, r);
                if (e.z.source().rank() == 0) continue;
                SheafReport rep = report_of(e.quotient);
                if (rep.free.rank() == 0 && rep.torsion.empty()) continue;
                page.entries[{p, k - p}] = rep;

                BundleMap h = c.differential(k) * e.z;
                DifferentialInfo info{sheaf_contains(boundaries(c, p + r, k + 1, r), h), 0};
                if (!info.zero) {
                    Entry t = entry(c, p + r, k + 1, r);
                    if (t.z.source().rank() > 0)
                        info.generic_rank = (t.quotient.projection * factor_through_injection(t.z, h)).rank();
                }
                page.differentials[{p, k - p}] = info;
            }
        pages.push_back(std::move(page));
    }
    return pages;
}

MtcReport validate_mtc(const FilteredComplex& c) {
    MtcReport out{true, {}};
    if (c.levels().empty()) return out;
    auto pages = spectral_sequence(c, 1);
    for (const auto& [pq, rep] : pages.front().entries) {
        int n = -pq.first, i = pq.first + pq.second;
        bool pure = rep.torsion.empty() && rep.free.is_pure(n + i);
        out.checks.push_back({n, i, rep, pure});
        if (!pure) out.valid = false;
    }
    return out;
}

DegenerationReport degeneration_check(const FilteredComplex& c) {
    if (!validate_mtc(c).valid) throw Error("not a mixed twistor complex");
    DegenerationReport out{true, std::max(3, stable_page(c) + 1), {}};
    auto pages = spectral_sequence(c, out.pages);
    out.d2_zero = pages.size() < 2 || pages[1].all_zero();
    for (const auto& page : pages)
        if (page.r >= 3 && !page.all_zero())
            throw TheoremViolation("spectral sequence differential d_" + std::to_string(page.r) + " is nonzero");

    auto [nlo, nhi] = level_range(c);
    const int far = nhi - nlo + 2;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        SubBundle ker = kernel(c.differential(i));
        CokernelReport h = cokernel(factor_through_injection(ker.incl, c.differential(i - 1)));
        if (!h.torsion_divisors.empty())
            throw TheoremViolation("cohomology sheaf H^" + std::to_string(i) + " has torsion");
        if (h.free_part.rank() == 0) {
            out.cohomology[i] = {};
            continue;
        }
        std::vector<WeightStep> steps;
        std::size_t prev = 0;
        for (int m = nlo; m <= nhi; ++m) {
            BundleMap cycles = factor_through_injection(ker.incl, zr(c, -m, i, far));
            BundleMap g = h.projection * cycles;
            if (g.is_zero()) continue;
            ImageReport im = image_saturation(g);
            if (!is_strict_surjection(im.proj))
                throw TheoremViolation("filtration induced on H^" + std::to_string(i) + " is not strict");
            if (im.image.rank() == prev) continue;
            prev = im.image.rank();
            steps.push_back({m + i, im.image, im.incl});
        }
        MixedTwistorStructure mts(h.free_part, std::move(steps));
        if (!validate_mts(mts).valid)
            throw TheoremViolation("H^" + std::to_string(i) + " with the shifted filtration is not a mixed twistor structure");
        out.cohomology[i] = std::move(mts);
    }
    return out;
}

void check_complex_map(const ComplexMap& f) {
    const auto& a = f.source;
    const auto& b = f.target;
    if (a.lo() != b.lo() || a.hi() != b.hi()) throw Error("complex map needs equal degree ranges");
    if (f.f.size() != a.objects().size()) throw Error("complex map needs one component per degree");
    for (int k = a.lo(); k <= a.hi(); ++k) {
        const BundleMap& fk = f.f[static_cast<std::size_t>(k - a.lo())];
        if (fk.source().degrees() != a.object(k).degrees() || fk.target().degrees() != b.object(k).degrees())
            throw Error("complex map component has the wrong shape");
        if (k < a.hi()) {
            const BundleMap& fn = f.f[static_cast<std::size_t>(k + 1 - a.lo())];
            if (!(b.differential(k) * fk == fn * a.differential(k)))
                throw Error("map does not commute with differentials");
        }
        std::set<int> lv;
        for (int n : a.levels()) lv.insert(n);
        for (int n : b.levels()) lv.insert(n);
        for (int n : lv)
            if (!factors(b.level(n, k), fk * a.level(n, k)))
                throw Error("map does not preserve the preweight filtration");
    }
}

FilteredComplex cone(const ComplexMap& f, int shift) {
    check_complex_map(f);
    const auto& a = f.source;
    const auto& b = f.target;
    auto comp = [&](int k) {
        if (k < a.lo() || k > a.hi()) return BundleMap(a.object(k), b.object(k));
        return f.f[static_cast<std::size_t>(k - a.lo())];
    };
    const int lo = a.lo() - 1;
    const int hi = b.hi();
    std::vector<SplitBundle> objs;
    for (int k = lo; k <= hi; ++k) objs.push_back(direct_sum(a.object(k + 1), b.object(k)));
    std::vector<BundleMap> d;
    for (int k = lo; k < hi; ++k) {
        std::map<std::pair<std::size_t, std::size_t>, BundleMap> blocks{
            {{0, 0}, -a.differential(k + 1)}, {{1, 0}, comp(k + 1)}, {{1, 1}, b.differential(k)}};
        d.push_back(assemble({a.object(k + 1), b.object(k)}, {a.object(k + 2), b.object(k + 1)}, blocks));
    }
    std::set<int> lv;
    for (int n : a.levels()) lv.insert(n - shift);
    for (int n : b.levels()) lv.insert(n);
    std::vector<PreweightLevel> pw;
    for (int n : lv) {
        PreweightLevel l{n, {}};
        for (int k = lo; k <= hi; ++k) l.incl.push_back(direct_sum(a.level(n + shift, k + 1), b.level(n, k)));
        pw.push_back(std::move(l));
    }
    return FilteredComplex(lo, std::move(objs), std::move(d), std::move(pw));
}

FilteredComplex simplicial_total(const CosimplicialFamily& fam) {
    const auto& ms = fam.levels;
    if (ms.empty()) return {};
    if (fam.cofaces.size() + 1 != ms.size()) throw Error("cosimplicial family needs cofaces between consecutive levels");
    const int kmax = static_cast<int>(ms.size()) - 1;
    // delta_k = alternating sum of cofaces, per degree of M_k.
    std::vector<std::vector<BundleMap>> delta(ms.size() - 1);
    for (std::size_t k = 0; k + 1 < ms.size(); ++k) {
        if (fam.cofaces[k].size() != k + 2) throw Error("level " + std::to_string(k) + " needs k + 2 cofaces");
        for (int i = ms[k].lo(); i <= ms[k].hi(); ++i) {
            BundleMap sum(ms[k].object(i), ms[k + 1].object(i));
            for (std::size_t j = 0; j < fam.cofaces[k].size(); ++j) {
                const ComplexMap& cf = fam.cofaces[k][j];
                check_complex_map(cf);
                if (cf.source.lo() != ms[k].lo() || cf.target.lo() != ms[k + 1].lo())
                    throw Error("coface does not connect consecutive levels");
                const BundleMap& x = cf.f[static_cast<std::size_t>(i - ms[k].lo())];
                sum = j % 2 == 0 ? sum + x : sum - x;
            }
            delta[k].push_back(sum);
        }
    }
    auto delta_at = [&](int k, int i) {
        const auto& m = ms[static_cast<std::size_t>(k)];
        if (k >= kmax || i < m.lo() || i > m.hi())
            return BundleMap(m.object(i), k < kmax ? ms[static_cast<std::size_t>(k + 1)].object(i) : SplitBundle());
        return delta[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - m.lo())];
    };
    int lo = ms[0].lo(), hi = ms[0].hi();
    for (int k = 0; k <= kmax; ++k) {
        lo = std::min(lo, ms[static_cast<std::size_t>(k)].lo() + k);
        hi = std::max(hi, ms[static_cast<std::size_t>(k)].hi() + k);
    }
    auto summands = [&](int j) {
        std::vector<SplitBundle> s;
        for (int k = 0; k <= kmax; ++k) s.push_back(ms[static_cast<std::size_t>(k)].object(j - k));
        return s;
    };
    std::vector<SplitBundle> objs;
    std::vector<BundleMap> d;
    for (int j = lo; j <= hi; ++j) {
        SplitBundle total;
        for (const auto& s : summands(j)) total = direct_sum(total, s);
        objs.push_back(total);
        if (j == hi) break;
        std::map<std::pair<std::size_t, std::size_t>, BundleMap> blocks;
        for (int k = 0; k <= kmax; ++k) {
            auto uk = static_cast<std::size_t>(k);
            BundleMap dk = ms[uk].differential(j - k);
            blocks.insert({{uk, uk}, k % 2 == 0 ? dk : -dk});
            if (k < kmax) blocks.insert({{uk + 1, uk}, delta_at(k, j - k)});
        }
        d.push_back(assemble(summands(j), summands(j + 1), blocks));
    }
    std::set<int> lv;
    for (int k = 0; k <= kmax; ++k)
        for (int n : ms[static_cast<std::size_t>(k)].levels()) lv.insert(n - k);
    std::vector<PreweightLevel> pw;
    for (int n : lv) {
        PreweightLevel l{n, {}};
        for (int j = lo; j <= hi; ++j) {
            BundleMap incl{SplitBundle{}, SplitBundle{}};
            for (int k = 0; k <= kmax; ++k)
                incl = direct_sum(incl, ms[static_cast<std::size_t>(k)].level(n + k, j - k));
            l.incl.push_back(incl);
        }
        pw.push_back(std::move(l));
    }
    return FilteredComplex(lo, std::move(objs), std::move(d), std::move(pw));
}

namespace {

// Objects are MTS totals with W^pre_n M^i = W_{n+i}, differentials MTS morphisms.
FilteredComplex from_mts_chain(const std::vector<MixedTwistorStructure>& xs, const std::vector<BundleMap>& d) {
    std::vector<SplitBundle> objs;
    std::set<int> lv;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        objs.push_back(xs[i].total());
        for (int w : xs[i].indices()) lv.insert(w - static_cast<int>(i));
    }
    std::vector<PreweightLevel> pw;
    for (int n : lv) {
        PreweightLevel l{n, {}};
        for (std::size_t i = 0; i < xs.size(); ++i) l.incl.push_back(xs[i].at(n + static_cast<int>(i)).incl);
        pw.push_back(std::move(l));
    }
    return FilteredComplex(0, std::move(objs), d, std::move(pw));
}

MixedTwistorStructure random_object(Rng& rng, const RandomMtcShape& shape) {
    RandomMtsShape s;
    s.min_rank = 1;
    s.max_rank = shape.max_rank;
    s.min_weight = 0;
    s.max_weight = shape.max_weight;
    return random_mts(rng, s);
}

}  // namespace

FilteredComplex random_mtc(Rng& rng, const RandomMtcShape& shape) {
    const int len = static_cast<int>(rng.uniform(1, std::max(1, shape.max_length)));
    if (len >= 2 && rng.chance(1, 3)) {
        // Cone of a map between complexes with zero differentials.
        std::vector<MixedTwistorStructure> a, b;
        std::vector<BundleMap> f;
        for (int i = 0; i < len - 1; ++i) {
            a.push_back(random_object(rng, shape));
            b.push_back(random_object(rng, shape));
            f.push_back(random_morphism(rng, a.back(), b.back()).f);
        }
        auto zero_d = [](const std::vector<MixedTwistorStructure>& xs) {
            std::vector<BundleMap> d;
            for (std::size_t i = 0; i + 1 < xs.size(); ++i) d.push_back(BundleMap(xs[i].total(), xs[i + 1].total()));
            return d;
        };
        ComplexMap m{from_mts_chain(a, zero_d(a)), from_mts_chain(b, zero_d(b)), f};
        return cone(m, -1);
    }
    std::vector<MixedTwistorStructure> xs;
    std::vector<BundleMap> d;
    if (len <= 2) {
        for (int i = 0; i < len; ++i) xs.push_back(random_object(rng, shape));
        if (len == 2) d.push_back(random_morphism(rng, xs[0], xs[1]).f);
    } else {
        MixedTwistorStructure x0 = random_object(rng, shape), y = random_object(rng, shape),
                              z = random_object(rng, shape), x2 = random_object(rng, shape);
        BundleMap g = random_morphism(rng, x0, y).f;
        BundleMap h = random_morphism(rng, z, x2).f;
        xs = {x0, direct_sum(y, z), x2};
        d.push_back(vstack(g, BundleMap(x0.total(), z.total())));
        d.push_back(hstack(BundleMap(y.total(), x2.total()), h));
    }
    return from_mts_chain(xs, d);
}

// Chart complexes.

namespace {

int clearing_shift(const LaurentMatrix& m) {
    int s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) s = std::max(s, -m(i, j).min_exp());
    return s;
}

PolyMatrix to_ring(const LaurentMatrix& m, Chart c) {
    switch (c) {
        case Chart::zero:
            return to_t(m);
        case Chart::infinity:
            return to_s(m);
        case Chart::overlap: {
            int s = clearing_shift(m);
            return m.map([s](const Laurent& x) { return x.scaled_to_t(s); });
        }
    }
    return {};
}

LaurentMatrix from_ring(const PolyMatrix& m, Chart c) {
    return c == Chart::infinity ? laurent_from_s(m) : laurent_from_t(m);
}

bool ring_unit(const Poly& p, Chart c) {
    if (p.is_zero()) return false;
    return c == Chart::overlap ? p.valuation() == p.degree() : p.degree() == 0;
}

bool in_ring(const LaurentMatrix& m, Chart c) {
    if (c == Chart::zero) return in_t_ring(m);
    if (c == Chart::infinity) return in_s_ring(m);
    return true;
}

std::vector<int> levels_at(const ChartComplex& c, int k) {
    if (k < c.lo || k > c.hi()) return {};
    return c.levels[static_cast<std::size_t>(k - c.lo)];
}

LaurentMatrix diff_at(const ChartComplex& c, int k) {
    if (k < c.lo || k >= c.hi()) return LaurentMatrix(c.rank(k + 1), c.rank(k));
    return c.d[static_cast<std::size_t>(k - c.lo)];
}

LaurentMatrix map_at(const ChartMap& f, const ChartComplex& src, const ChartComplex& tgt, int k) {
    if (k < src.lo || k > src.hi()) return LaurentMatrix(tgt.rank(k), src.rank(k));
    return f[static_cast<std::size_t>(k - src.lo)];
}

std::vector<std::size_t> at_level(const ChartComplex& c, int k, int n) {
    std::vector<std::size_t> out;
    auto l = levels_at(c, k);
    for (std::size_t b = 0; b < l.size(); ++b)
        if (l[b] == n) out.push_back(b);
    return out;
}

LaurentMatrix pick(const LaurentMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    LaurentMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

void check_chart_map(const ChartMap& f, const ChartComplex& src, const ChartComplex& tgt) {
    if (f.size() != src.levels.size()) throw Error("chart map needs one matrix per source degree");
    for (int k = src.lo; k <= src.hi(); ++k) {
        const LaurentMatrix& m = map_at(f, src, tgt, k);
        if (m.rows() != tgt.rank(k) || m.cols() != src.rank(k)) throw Error("chart map has the wrong shape");
        auto ls = levels_at(src, k), lt = levels_at(tgt, k);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero() && lt[i] > ls[j]) throw Error("chart map does not preserve the preweight");
        if (!(diff_at(tgt, k) * m == map_at(f, src, tgt, k + 1) * diff_at(src, k)))
            throw Error("chart map does not commute with differentials");
    }
}

// H^i(Gr_n) of a chart complex as a free module.
struct ChartCohomology {
    std::size_t rank = 0;
    std::vector<std::size_t> idx;
    LaurentMatrix cycles, to_class, reps;
};

ChartCohomology gr_cohomology(const ChartComplex& c, int n, int i) {
    ChartCohomology out;
    out.idx = at_level(c, i, n);
    if (out.idx.empty()) return out;
    LaurentMatrix di = pick(diff_at(c, i), at_level(c, i + 1, n), out.idx);
    LaurentMatrix dprev = pick(diff_at(c, i - 1), out.idx, at_level(c, i - 1, n));
    PolyMatrix kb = pid::kernel_basis(to_ring(di, c.chart));
    if (kb.cols() == 0) return out;
    auto x = pid::solve_left(kb, to_ring(dprev, c.chart));
    if (!x) throw Error("boundaries are not cycles");
    SmithForm s = smith_normal_form(*x);
    for (const auto& d : s.invariants)
        if (!ring_unit(d, c.chart)) throw Error("chart cohomology has torsion");
    const std::size_t k = kb.cols(), rho = s.rank;
    out.rank = k - rho;
    out.cycles = from_ring(kb, c.chart);
    out.to_class = from_ring(s.U.rows_range(rho, k - rho), c.chart);
    out.reps = out.cycles * from_ring(s.Uinv.cols_range(rho, k - rho), c.chart);
    return out;
}

LaurentMatrix induced(const ChartCohomology& src, const ChartCohomology& tgt, const LaurentMatrix& block) {
    LaurentMatrix z = block * src.reps;
    auto y = laurent::solve_left(tgt.cycles, z);
    if (!y) throw Error("chart map does not send cycles to cycles");
    return tgt.to_class * *y;
}

}  // namespace

std::size_t ChartComplex::rank(int k) const { return levels_at(*this, k).size(); }

void check_chart_complex(const ChartComplex& c) {
    if (c.d.size() != (c.levels.empty() ? 0 : c.levels.size() - 1))
        throw Error("chart complex needs one differential between consecutive degrees");
    for (int k = c.lo; k < c.hi(); ++k) {
        const LaurentMatrix& d = diff_at(c, k);
        if (d.rows() != c.rank(k + 1) || d.cols() != c.rank(k)) throw Error("chart differential has the wrong shape");
        if (!in_ring(d, c.chart)) throw Error("chart differential has entries outside the chart ring");
        auto ls = levels_at(c, k), lt = levels_at(c, k + 1);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (!d(i, j).is_zero() && lt[i] > ls[j]) throw Error("chart differential does not preserve the preweight");
        if (k + 1 < c.hi() && !(diff_at(c, k + 1) * d).is_zero()) throw Error("d squared is not zero");
    }
}

PatchResult patch(const ChartComplex& m, const ChartComplex& p, const ChartComplex& n, const ChartMap& u,
                  const ChartMap& v) {
    if (m.chart != Chart::zero || n.chart != Chart::infinity || p.chart != Chart::overlap)
        throw Error("patch needs charts (zero, overlap, infinity)");
    for (const auto* c : {&m, &p, &n}) check_chart_complex(*c);
    check_chart_map(u, p, m);
    check_chart_map(v, p, n);
    std::set<int> lv;
    int lo = p.lo, hi = p.hi();
    for (const auto* c : {&m, &p, &n}) {
        for (const auto& l : c->levels)
            for (int x : l) lv.insert(x);
        lo = std::min(lo, c->lo);
        hi = std::max(hi, c->hi());
    }
    PatchResult out;
    for (int lev : lv)
        for (int i = lo; i <= hi; ++i) {
            ChartCohomology hm = gr_cohomology(m, lev, i), hp = gr_cohomology(p, lev, i), hn = gr_cohomology(n, lev, i);
            if (hm.rank == 0 && hp.rank == 0 && hn.rank == 0) continue;
            if (hm.rank != hp.rank || hn.rank != hp.rank) throw Error("not a filtered quasiisomorphism");
            LaurentMatrix hu = induced(hp, hm, pick(map_at(u, p, m, i), hm.idx, hp.idx));
            LaurentMatrix hv = induced(hp, hn, pick(map_at(v, p, n, i), hn.idx, hp.idx));
            if (!laurent::is_invertible(hu) || !laurent::is_invertible(hv)) throw Error("not a filtered quasiisomorphism");
            BirkhoffSplit split = birkhoff_split(hv * laurent::inverse(hu));
            out.pieces[{lev, i}] = split.bundle().sorted();
            out.splits.emplace(std::make_pair(lev, i), std::move(split));
        }
    return out;
}

ChartComplex cone_prime(const ChartComplex& p, const ChartComplex& r, const ChartComplex& q, const ChartMap& a,
                        const ChartMap& b) {
    for (const auto* c : {&p, &r, &q}) check_chart_complex(*c);
    check_chart_map(a, p, q);
    check_chart_map(b, r, q);
    if (p.lo != r.lo || p.lo != q.lo || p.levels.size() != r.levels.size() || p.levels.size() != q.levels.size())
        throw Error("cone_prime needs complexes on the same degree range");
    ChartComplex x;
    x.chart = Chart::overlap;
    x.lo = p.lo;
    for (int k = p.lo; k <= p.hi() + 1; ++k) {
        std::vector<int> l = levels_at(p, k);
        for (int y : levels_at(r, k)) l.push_back(y);
        for (int y : levels_at(q, k - 1)) l.push_back(y);
        x.levels.push_back(std::move(l));
    }
    for (int k = p.lo; k <= p.hi(); ++k) {
        std::size_t sp = p.rank(k), sr = r.rank(k), sq = q.rank(k - 1);
        std::size_t tp = p.rank(k + 1), tr = r.rank(k + 1), tq = q.rank(k);
        LaurentMatrix d(tp + tr + tq, sp + sr + sq);
        d.set_block(0, 0, diff_at(p, k));
        d.set_block(tp, sp, diff_at(r, k));
        d.set_block(tp + tr, 0, map_at(a, p, q, k));
        d.set_block(tp + tr, sp, -map_at(b, r, q, k));
        d.set_block(tp + tr, sp + sr, -diff_at(q, k - 1));
        x.d.push_back(std::move(d));
    }
    check_chart_complex(x);
    return x;
}

PatchResult patch_chain(const ChartComplex& m, const ChartComplex& p, const ChartComplex& q, const ChartComplex& r,
                        const ChartComplex& n, const ChartMap& u, const ChartMap& a, const ChartMap& b,
                        const ChartMap& v) {
    check_chart_map(u, p, m);
    check_chart_map(v, r, n);
    ChartComplex x = cone_prime(p, r, q, a, b);
    ChartMap ux, vx;
    for (int k = x.lo; k <= x.hi(); ++k) {
        std::size_t sp = p.rank(k), sr = r.rank(k), sq = q.rank(k - 1);
        LaurentMatrix mu(m.rank(k), sp + sr + sq), mv(n.rank(k), sp + sr + sq);
        mu.set_block(0, 0, map_at(u, p, m, k));
        mv.set_block(0, sp, map_at(v, r, n, k));
        ux.push_back(std::move(mu));
        vx.push_back(std::move(mv));
    }
    return patch(m, x, n, ux, vx);
}

}  // namespace twistor
