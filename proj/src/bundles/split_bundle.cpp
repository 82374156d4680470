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

#include "twistor/bundles/split_bundle.hpp"

#include <algorithm>
#include <numeric>

#include "twistor/error.hpp"
#include "twistor/exact/smith.hpp"

namespace twistor {

int SplitBundle::degree() const noexcept { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

bool SplitBundle::is_pure(int w) const noexcept {
    return std::all_of(degrees_.begin(), degrees_.end(), [w](int d) { return d == w; });
}

bool SplitBundle::is_sorted() const noexcept {
    return std::is_sorted(degrees_.begin(), degrees_.end(), std::greater<>());
}

SplitBundle SplitBundle::sorted() const {
    auto d = degrees_;
    std::sort(d.begin(), d.end(), std::greater<>());
    return SplitBundle(std::move(d));
}

LaurentMatrix SplitBundle::transition() const {
    std::vector<int> e(degrees_.size());
    std::transform(degrees_.begin(), degrees_.end(), e.begin(), [](int d) { return -d; });
    return monomial_diag(e);
}

bool operator==(const SplitBundle& a, const SplitBundle& b) { return a.sorted().degrees_ == b.sorted().degrees_; }

std::string SplitBundle::to_string() const {
    if (degrees_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) out += "+";
        out += "O(" + std::to_string(degrees_[i]) + ")";
    }
    return out;
}

SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b) {
    auto d = a.degrees();
    d.insert(d.end(), b.degrees().begin(), b.degrees().end());
    return SplitBundle(std::move(d));
}

SplitBundle tensor(const SplitBundle& a, const SplitBundle& b) {
    std::vector<int> d;
    for (int x : a.degrees())
        for (int y : b.degrees()) d.push_back(x + y);
    return SplitBundle(std::move(d));
}

SplitBundle dual(const SplitBundle& e) {
    std::vector<int> d;
    for (int x : e.degrees()) d.push_back(-x);
    return SplitBundle(std::move(d));
}

SplitBundle twist(const SplitBundle& e, int n) {
    std::vector<int> d;
    for (int x : e.degrees()) d.push_back(x + n);
    return SplitBundle(std::move(d));
}

BundleMap::BundleMap(SplitBundle source, SplitBundle target)
    : source_(std::move(source)), target_(std::move(target)), m_(target_.rank(), source_.rank()) {}

BundleMap::BundleMap(SplitBundle source, SplitBundle target, FormMatrix m)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m)) {
    if (m_.rows() != target_.rank() || m_.cols() != source_.rank())
        throw Error("map matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) + ", expected " +
                    std::to_string(target_.rank()) + "x" + std::to_string(source_.rank()));
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (!m_(i, j).is_zero() && m_(i, j).degree() != entry_degree(i, j))
                throw Error("map entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                            std::to_string(m_(i, j).degree()) + ", expected " + std::to_string(entry_degree(i, j)));
}

BundleMap BundleMap::identity(const SplitBundle& e) {
    BundleMap f(e, e);
    for (std::size_t i = 0; i < e.rank(); ++i) f.m_(i, i) = BinaryForm::constant(Scalar(1));
    return f;
}

BundleMap BundleMap::from_chart0(const SplitBundle& source, const SplitBundle& target, const PolyMatrix& m) {
    if (m.rows() != target.rank() || m.cols() != source.rank()) throw Error("chart matrix shape mismatch");
    BundleMap f(source, target);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            int d = f.entry_degree(i, j);
            if (m(i, j).degree() > d) throw Error("chart matrix does not extend over infinity");
            f.m_(i, j) = BinaryForm::from_t(m(i, j), d);
        }
    return f;
}

void BundleMap::set(std::size_t i, std::size_t j, BinaryForm f) {
    if (!f.is_zero() && f.degree() != entry_degree(i, j)) throw Error("map entry has the wrong degree");
    m_(i, j) = std::move(f);
}

PolyMatrix BundleMap::chart0() const {
    return m_.map([](const BinaryForm& f) { return f.at_t(); });
}

PolyMatrix BundleMap::chart_inf() const {
    return m_.map([](const BinaryForm& f) { return f.at_s(); });
}

ScalarMatrix BundleMap::at(const Point& p) const {
    if (p.lambda.is_zero() && p.mu.is_zero()) throw Error("[0:0] is not a point of P^1");
    if (!p.mu.is_zero()) {
        Scalar t = p.lambda / p.mu;
        return m_.map([&t](const BinaryForm& f) { return f.at_t().eval(t); });
    }
    return m_.map([](const BinaryForm& f) { return f.at_s().coeff(0); });
}

std::size_t BundleMap::rank() const { return pid::generic_rank(chart0()); }

BundleMap operator+(const BundleMap& a, const BundleMap& b) {
    if (a.source_.degrees() != b.source_.degrees() || a.target_.degrees() != b.target_.degrees())
        throw Error("adding maps between different bundles");
    BundleMap r = a;
    r.m_ = a.m_ + b.m_;
    return r;
}

BundleMap operator-(const BundleMap& a, const BundleMap& b) { return a + (-b); }

BundleMap operator-(const BundleMap& a) {
    BundleMap r = a;
    r.m_ = -a.m_;
    return r;
}

BundleMap operator*(const BundleMap& a, const BundleMap& b) {
    if (a.source_.degrees() != b.target_.degrees())
        throw Error("composing maps through different bundles: " + b.target_.to_string() + " vs " +
                    a.source_.to_string());
    BundleMap r(b.source_, a.target_);
    r.m_ = a.m_ * b.m_;
    return r;
}

BundleMap operator*(const Scalar& c, const BundleMap& a) {
    BundleMap r = a;
    r.m_ = a.m_.map([&c](const BinaryForm& f) { return f * c; });
    return r;
}

std::string BundleMap::to_string() const {
    std::string out = source_.to_string() + " -> " + target_.to_string() + "\n";
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        out += "  [";
        for (std::size_t j = 0; j < m_.cols(); ++j) out += (j ? ", " : "") + m_(i, j).to_string();
        out += "]\n";
    }
    return out;
}

BundleMap direct_sum(const BundleMap& a, const BundleMap& b) {
    return BundleMap(direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()),
                     block_diag(a.matrix(), b.matrix()));
}

BundleMap hstack(const BundleMap& a, const BundleMap& b) {
    if (a.target().degrees() != b.target().degrees()) throw Error("hstack of maps with different targets");
    return BundleMap(direct_sum(a.source(), b.source()), a.target(), hstack(a.matrix(), b.matrix()));
}

BundleMap vstack(const BundleMap& a, const BundleMap& b) {
    if (a.source().degrees() != b.source().degrees()) throw Error("vstack of maps with different sources");
    return BundleMap(a.source(), direct_sum(a.target(), b.target()), vstack(a.matrix(), b.matrix()));
}

BundleMap tensor(const BundleMap& a, const BundleMap& b) {
    const auto& ma = a.matrix();
    const auto& mb = b.matrix();
    BundleMap::FormMatrix m(ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (std::size_t i = 0; i < ma.rows(); ++i)
        for (std::size_t j = 0; j < ma.cols(); ++j)
            for (std::size_t k = 0; k < mb.rows(); ++k)
                for (std::size_t l = 0; l < mb.cols(); ++l)
                    m(i * mb.rows() + k, j * mb.cols() + l) = ma(i, j) * mb(k, l);
    return BundleMap(tensor(a.source(), b.source()), tensor(a.target(), b.target()), std::move(m));
}

BundleMap dual(const BundleMap& f) { return BundleMap(dual(f.target()), dual(f.source()), f.matrix().transpose()); }

BundleMap twist(const BundleMap& f, int n) { return BundleMap(twist(f.source(), n), twist(f.target(), n), f.matrix()); }

BundleMap submap(const BundleMap& f, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    std::vector<int> sd, td;
    for (auto j : cols) sd.push_back(f.source()[j]);
    for (auto i : rows) td.push_back(f.target()[i]);
    BundleMap::FormMatrix m(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = f(rows[a], cols[b]);
    return BundleMap(SplitBundle(sd), SplitBundle(td), std::move(m));
}

HomSpace hom_space(const SplitBundle& e, const SplitBundle& f) {
    HomSpace h;
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (std::size_t j = 0; j < e.rank(); ++j) {
            int d = f[i] - e[j];
            for (int k = d; k >= 0; --k) {
                BundleMap m(e, f);
                m.set(i, j, BinaryForm::monomial(d, k));
                h.basis.push_back(std::move(m));
            }
        }
    h.dimension = h.basis.size();
    return h;
}

std::vector<Scalar> coefficients(const BundleMap& f) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < f.target().rank(); ++i)
        for (std::size_t j = 0; j < f.source().rank(); ++j) {
            int d = f.entry_degree(i, j);
            for (int k = 0; k <= d; ++k) out.push_back(f(i, j).coeff(k));
        }
    return out;
}

BundleMap combine(const HomSpace& h, const std::vector<Scalar>& c, const SplitBundle& source,
                  const SplitBundle& target) {
    if (c.size() != h.basis.size()) throw Error("coefficient count does not match the basis");
    BundleMap out(source, target);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) out = out + c[k] * h.basis[k];
    return out;
}

ScalarMatrix coefficient_matrix(const std::vector<BundleMap>& maps) {
    if (maps.empty()) return {};
    std::size_t n = coefficients(maps[0]).size();
    ScalarMatrix m(n, maps.size());
    for (std::size_t k = 0; k < maps.size(); ++k) {
        auto v = coefficients(maps[k]);
        for (std::size_t i = 0; i < n; ++i) m(i, k) = v[i];
    }
    return m;
}

Cohomology cohomology(const SplitBundle& e) {
    Cohomology c;
    for (std::size_t i = 0; i < e.rank(); ++i) {
        int d = e[i];
        for (int k = d; k >= 0; --k) c.h0_basis.emplace_back(i, BinaryForm::monomial(d, k));
        for (int x = -1; x > d; --x) c.h1_basis.push_back({i, x});
    }
    c.h0 = c.h0_basis.size();
    c.h1 = c.h1_basis.size();
    return c;
}

std::size_t ext1_dim(const SplitBundle& e, const SplitBundle& f) { return cohomology(tensor(dual(e), f)).h1; }

}  // namespace twistor
