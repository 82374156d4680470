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

#include "twistor/exact/poly.hpp"

#include "twistor/error.hpp"

namespace twistor {

Poly::Poly(Scalar c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int k, Scalar c) {
    if (k < 0) throw Error("negative exponent in polynomial monomial");
    if (c.is_zero()) return {};
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    Poly p;
    p.c_ = std::move(v);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::coeff(int k) const noexcept {
    static const Scalar zero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

int Poly::valuation() const noexcept {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Scalar inv = lead().inverse();
    return *this * inv;
}

Scalar Poly::eval(const Scalar& at) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw Error("negative polynomial shift");
    Poly p;
    p.c_.assign(static_cast<std::size_t>(k), Scalar());
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

Poly Poly::strip_x() const {
    int v = valuation();
    if (v <= 0) return *this;
    Poly p;
    p.c_.assign(c_.begin() + v, c_.end());
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Scalar> rem = a.coeffs();
    std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    Scalar inv = b.lead().inverse();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const Scalar& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        Scalar q = top * inv;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(j);
        quo[static_cast<std::size_t>(k - db)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool paren = !c.is_rational() && sgn(c.re()) != 0;
        if (paren) cs = "(" + cs + ")";
        bool neg = !paren && !cs.empty() && cs[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) cs = cs.substr(1);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

}  // namespace twistor
