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

#ifndef TWISTOR_EXACT_BINARY_FORM_HPP
#define TWISTOR_EXACT_BINARY_FORM_HPP

#include <string>
#include <vector>

#include "twistor/exact/poly.hpp"

namespace twistor {

/// Homogeneous polynomial sum_k c_k lambda^k mu^(d-k). The default value is
/// the distinguished Zero form, which has no degree. t = lambda/mu is the
/// coordinate vanishing at 0, s = mu/lambda the one vanishing at infinity.
class BinaryForm {
   public:
    BinaryForm() = default;
    /// coeffs[k] multiplies lambda^k mu^(degree-k); all-zero input gives Zero.
    BinaryForm(int degree, std::vector<Scalar> coeffs);
    /// Constant form of degree 0.
    explicit BinaryForm(Scalar c) : BinaryForm(0, {std::move(c)}) {}

    static BinaryForm constant(Scalar c) { return BinaryForm(std::move(c)); }
    static BinaryForm monomial(int degree, int lambda_power, Scalar c = Scalar(1));
    static BinaryForm lambda() { return monomial(1, 1); }
    static BinaryForm mu() { return monomial(1, 0); }
    /// mu^degree * p(lambda/mu); throws if deg p > degree.
    static BinaryForm from_t(const Poly& p, int degree);
    /// lambda^degree * p(mu/lambda); throws if deg p > degree.
    static BinaryForm from_s(const Poly& p, int degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws on the Zero form.
    int degree() const;
    const Scalar& coeff(int k) const noexcept;
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    /// f(t, 1).
    Poly at_t() const;
    /// f(1, s).
    Poly at_s() const;
    Scalar eval(const Scalar& lambda, const Scalar& mu) const;
    /// Multiplicity of the root at infinity (the mu-adic valuation).
    int order_at_infinity() const;
    /// Leading nonzero lambda-coefficient scaled to 1.
    BinaryForm monic() const;
    BinaryForm conj_coeffs() const;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o) { return *this += -o; }
    BinaryForm& operator*=(const Scalar& c);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator-(const BinaryForm& a);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(BinaryForm a, const Scalar& c) { return a *= c; }
    friend BinaryForm operator*(const Scalar& c, BinaryForm a) { return a *= c; }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    std::string to_string() const;

   private:
    int degree_ = -1;
    std::vector<Scalar> coeffs_;
};

/// Monic generator of the gcd ideal; coprime forms give the constant 1.
/// Throws twistor::Error("gcd undefined") when both inputs are zero.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);
/// Exact division f / g in K[lambda, mu]; nullopt when g does not divide f.
std::optional<BinaryForm> form_divide(const BinaryForm& f, const BinaryForm& g);

}  // namespace twistor

#endif
