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

#include "twistor/exact/binary_form.hpp"

#include "twistor/error.hpp"

namespace twistor {

BinaryForm::BinaryForm(int degree, std::vector<Scalar> coeffs) {
    if (degree < 0) throw Error("binary form degree must be nonnegative");
    if (coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw Error("binary form of degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                    " coefficients");
    for (const auto& c : coeffs)
        if (!c.is_zero()) {
            degree_ = degree;
            coeffs_ = std::move(coeffs);
            return;
        }
}

BinaryForm BinaryForm::monomial(int degree, int lambda_power, Scalar c) {
    if (lambda_power < 0 || lambda_power > degree) throw Error("monomial exponent out of range");
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
    v[static_cast<std::size_t>(lambda_power)] = std::move(c);
    return BinaryForm(degree, std::move(v));
}

BinaryForm BinaryForm::from_t(const Poly& p, int degree) {
    if (p.is_zero()) return {};
    if (p.degree() > degree) throw Error("polynomial does not homogenize to the requested degree");
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= p.degree(); ++k) v[static_cast<std::size_t>(k)] = p.coeff(k);
    return BinaryForm(degree, std::move(v));
}

BinaryForm BinaryForm::from_s(const Poly& p, int degree) {
    if (p.is_zero()) return {};
    if (p.degree() > degree) throw Error("polynomial does not homogenize to the requested degree");
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= p.degree(); ++k) v[static_cast<std::size_t>(degree - k)] = p.coeff(k);
    return BinaryForm(degree, std::move(v));
}

int BinaryForm::degree() const {
    if (is_zero()) throw Error("the zero form has no degree");
    return degree_;
}

const Scalar& BinaryForm::coeff(int k) const noexcept {
    static const Scalar zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

Poly BinaryForm::at_t() const { return Poly(coeffs_); }

Poly BinaryForm::at_s() const { return Poly(std::vector<Scalar>(coeffs_.rbegin(), coeffs_.rend())); }

Scalar BinaryForm::eval(const Scalar& lambda, const Scalar& mu) const {
    Scalar acc;
    if (is_zero()) return acc;
    std::vector<Scalar> lp(coeffs_.size()), mp(coeffs_.size());
    lp[0] = mp[0] = Scalar(1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        lp[k] = lp[k - 1] * lambda;
        mp[k] = mp[k - 1] * mu;
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) acc += coeffs_[k] * lp[k] * mp[coeffs_.size() - 1 - k];
    return acc;
}

int BinaryForm::order_at_infinity() const {
    if (is_zero()) throw Error("the zero form has no order");
    int top = degree_;
    while (coeffs_[static_cast<std::size_t>(top)].is_zero()) --top;
    return degree_ - top;
}

BinaryForm BinaryForm::monic() const {
    if (is_zero()) return {};
    int top = degree_;
    while (coeffs_[static_cast<std::size_t>(top)].is_zero()) --top;
    return *this * coeffs_[static_cast<std::size_t>(top)].inverse();
}

BinaryForm BinaryForm::conj_coeffs() const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_) c = c.conj();
    return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (degree_ != o.degree_) throw Error("adding binary forms of different degrees");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    *this = BinaryForm(degree_, std::move(coeffs_));
    return *this;
}

BinaryForm& BinaryForm::operator*=(const Scalar& c) {
    if (c.is_zero()) return *this = BinaryForm();
    for (auto& x : coeffs_) x *= c;
    return *this;
}

BinaryForm operator-(const BinaryForm& a) {
    BinaryForm r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return BinaryForm::from_t(a.at_t() * b.at_t(), a.degree_ + b.degree_);
}

std::string BinaryForm::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree_; k >= 0; --k) {
        const Scalar& c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool paren = !c.is_rational() && sgn(c.re()) != 0;
        if (paren) cs = "(" + cs + ")";
        bool neg = !paren && cs[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) cs = cs.substr(1);
        std::string mono;
        auto power = [](const char* v, int e) {
            return e == 0 ? std::string() : (e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
        };
        std::string l = power("λ", k), m = power("μ", degree_ - k);
        mono = l.empty() ? m : (m.empty() ? l : l + m);
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) throw Error("gcd undefined");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    // Finite roots come from the dehomogenizations, the root at infinity from mu-powers.
    Poly h = gcd(f.at_t(), g.at_t());
    int inf = std::min(f.order_at_infinity(), g.order_at_infinity());
    return BinaryForm::from_t(h, h.degree()) * BinaryForm::monomial(inf, 0);
}

std::optional<BinaryForm> form_divide(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw Error("division by the zero form");
    if (f.is_zero()) return BinaryForm();
    int d = f.degree() - g.degree();
    if (d < 0) return std::nullopt;
    auto q = exact_div(f.at_t(), g.at_t());
    if (!q || q->degree() > d) return std::nullopt;
    BinaryForm res = BinaryForm::from_t(*q, d);
    if (res * g != f) return std::nullopt;
    return res;
}

}  // namespace twistor
