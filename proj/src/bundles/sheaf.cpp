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

#include "twistor/bundles/sheaf.hpp"

#include "twistor/error.hpp"
#include "twistor/exact/linalg.hpp"
#include "twistor/exact/smith.hpp"

namespace twistor {

namespace {

bool units_only(const SmithForm& s) {
    for (const auto& d : s.invariants)
        if (!d.is_unit()) return false;
    return true;
}

}  // namespace

int CokernelReport::torsion_length() const {
    int n = 0;
    for (const auto& d : torsion_divisors) n += d.degree();
    return n;
}

SubBundle glue_subbundle(const SplitBundle& e, const PolyMatrix& k0, const PolyMatrix& kinf) {
    if (k0.cols() != kinf.cols()) throw Error("chart bases have different ranks");
    const std::size_t r = k0.cols();
    if (r == 0) return {SplitBundle(), BundleMap(SplitBundle(), e)};
    LaurentMatrix lhs = laurent_from_s(kinf);
    LaurentMatrix rhs = e.transition() * laurent_from_t(k0);
    auto ta = laurent::solve_left(lhs, rhs);
    if (!ta) throw Error("chart bases do not span the same subsheaf");
    BirkhoffSplit split = birkhoff_split(*ta);
    PolyMatrix incl0 = k0 * to_t(split.Ainv);
    SplitBundle a = split.bundle();
    return {a, BundleMap::from_chart0(a, e, incl0)};
}

SubBundle kernel(const BundleMap& f) {
    return glue_subbundle(f.source(), pid::kernel_basis(f.chart0()), pid::kernel_basis(f.chart_inf()));
}

ImageReport image_saturation(const BundleMap& f) {
    SubBundle im = glue_subbundle(f.target(), pid::saturation_basis(f.chart0()), pid::saturation_basis(f.chart_inf()));
    return {im.bundle, im.incl, factor_through_injection(im.incl, f)};
}

CokernelReport cokernel(const BundleMap& f) {
    const SplitBundle& e = f.target();
    SmithForm s0 = smith_normal_form(f.chart0());
    SmithForm si = smith_normal_form(f.chart_inf());
    if (s0.rank != si.rank) throw Error("chart ranks disagree");
    const std::size_t rho = s0.rank;
    const std::size_t q = e.rank() - rho;

    CokernelReport out;
    for (std::size_t i = 0; i < rho; ++i) {
        const Poly& d0 = s0.invariants[i];
        int at_inf = si.invariants[i].valuation();
        BinaryForm div = BinaryForm::from_t(d0, d0.degree()) * BinaryForm::monomial(at_inf, 0);
        if (div.degree() > 0) out.torsion_divisors.push_back(div.monic());
    }

    PolyMatrix p0 = s0.U.rows_range(rho, q);
    PolyMatrix pinf = si.U.rows_range(rho, q);
    LaurentMatrix tq = laurent_from_s(pinf) * e.transition() * laurent_from_t(s0.Uinv.cols_range(rho, q));
    if (q == 0) {
        out.projection = BundleMap(e, SplitBundle());
        return out;
    }
    BirkhoffSplit split = birkhoff_split(tq);
    out.free_part = split.bundle();
    out.projection = BundleMap::from_chart0(e, out.free_part, to_t(split.A) * p0);
    return out;
}

bool is_strict_injection(const BundleMap& f) {
    if (f.source().rank() > f.target().rank()) return false;
    SmithForm s0 = smith_normal_form(f.chart0());
    if (s0.rank != f.source().rank() || !units_only(s0)) return false;
    SmithForm si = smith_normal_form(f.chart_inf());
    return si.rank == f.source().rank() && units_only(si);
}

bool is_strict_surjection(const BundleMap& f) {
    if (f.source().rank() < f.target().rank()) return false;
    SmithForm s0 = smith_normal_form(f.chart0());
    if (s0.rank != f.target().rank() || !units_only(s0)) return false;
    SmithForm si = smith_normal_form(f.chart_inf());
    return si.rank == f.target().rank() && units_only(si);
}

bool is_isomorphism(const BundleMap& f) {
    return f.source().rank() == f.target().rank() && is_strict_injection(f);
}

BundleMap factor_through_injection(const BundleMap& incl, const BundleMap& g) {
    if (incl.target().degrees() != g.target().degrees()) throw Error("factorization: targets differ");
    if (incl.source().rank() == 0) {
        if (!g.is_zero()) throw Error("map does not factor through the subbundle");
        return BundleMap(g.source(), incl.source());
    }
    auto x = pid::solve_left(incl.chart0(), g.chart0());
    if (!x) throw Error("map does not factor through the subbundle");
    BundleMap h;
    try {
        h = BundleMap::from_chart0(g.source(), incl.source(), *x);
    } catch (const Error&) {
        throw Error("map does not factor through the subbundle");
    }
    if (incl * h != g) throw Error("map does not factor through the subbundle");
    return h;
}

BundleMap factor_through_surjection(const BundleMap& surj, const BundleMap& g) {
    if (surj.source().degrees() != g.source().degrees()) throw Error("factorization: sources differ");
    if (surj.target().rank() == 0) {
        if (!g.is_zero()) throw Error("map does not factor through the quotient");
        return BundleMap(surj.target(), g.target());
    }
    PolyMatrix h0 = g.chart0() * pid::right_inverse(surj.chart0());
    BundleMap h;
    try {
        h = BundleMap::from_chart0(surj.target(), g.target(), h0);
    } catch (const Error&) {
        throw Error("map does not factor through the quotient");
    }
    if (h * surj != g) throw Error("map does not factor through the quotient");
    return h;
}

BundleMap inverse(const BundleMap& f) {
    if (!is_isomorphism(f)) throw Error("map is not an isomorphism");
    return BundleMap::from_chart0(f.target(), f.source(), pid::unimodular_inverse(f.chart0()));
}

std::size_t rank_at(const BundleMap& f, const Point& p) { return linalg::rank(f.at(p)); }

}  // namespace twistor
