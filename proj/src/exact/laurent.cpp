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

#include "twistor/exact/laurent.hpp"

#include "twistor/error.hpp"

namespace twistor {

Laurent::Laurent(int low, Poly body) : low_(low), body_(std::move(body)) { normalize(); }

void Laurent::normalize() {
    if (body_.is_zero()) {
        low_ = 0;
        return;
    }
    int v = body_.valuation();
    if (v > 0) {
        body_ = body_.strip_x();
        low_ += v;
    }
}

Laurent Laurent::monomial(int e, Scalar c) { return Laurent(e, Poly(std::move(c))); }

Laurent Laurent::from_t(const Poly& p) { return Laurent(0, p); }

Laurent Laurent::from_s(const Poly& p) {
    if (p.is_zero()) return {};
    std::vector<Scalar> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return Laurent(-p.degree(), Poly(std::move(rev)));
}

Poly Laurent::to_t() const {
    if (!in_t_ring()) throw Error("Laurent polynomial has negative powers of t");
    return body_.shifted(low_);
}

Poly Laurent::to_s() const {
    if (!in_s_ring()) throw Error("Laurent polynomial has positive powers of t");
    if (is_zero()) return {};
    std::vector<Scalar> out(static_cast<std::size_t>(-min_exp()) + 1);
    for (int e = min_exp(); e <= max_exp(); ++e) out[static_cast<std::size_t>(-e)] = coeff(e);
    return Poly(std::move(out));
}

Poly Laurent::scaled_to_t(int shift) const {
    if (is_zero()) return {};
    if (low_ + shift < 0) throw Error("Laurent scaling leaves negative powers");
    return body_.shifted(low_ + shift);
}

Laurent Laurent::inverse_unit() const {
    if (!is_unit()) throw Error("Laurent polynomial is not a unit");
    return Laurent(-low_, Poly(body_.coeff(0).inverse()));
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int low = std::min(low_, o.low_);
    Poly a = body_.shifted(low_ - low);
    a += o.body_.shifted(o.low_ - low);
    low_ = low;
    body_ = std::move(a);
    normalize();
    return *this;
}

Laurent& Laurent::operator*=(const Scalar& c) {
    body_ *= c;
    normalize();
    return *this;
}

Laurent operator-(const Laurent& a) { return Laurent(a.low_, -a.body_); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Laurent(a.low_ + b.low_, a.body_ * b.body_);
}

std::optional<Laurent> exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw Error("Laurent division by zero");
    if (a.is_zero()) return Laurent();
    Poly bb = b.scaled_to_t(-b.min_exp());
    Poly ab = a.scaled_to_t(-a.min_exp());
    auto q = exact_div(ab, bb);
    if (!q) return std::nullopt;
    return Laurent::from_t(*q) * Laurent::monomial(a.min_exp() - b.min_exp());
}

std::string Laurent::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = max_exp(); e >= min_exp(); --e) {
        const Scalar& c = coeff(e);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool paren = !c.is_rational() && sgn(c.re()) != 0;
        if (paren) cs = "(" + cs + ")";
        bool neg = !paren && cs[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) cs = cs.substr(1);
        std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

}  // namespace twistor
