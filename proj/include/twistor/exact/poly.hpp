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

#ifndef TWISTOR_EXACT_POLY_HPP
#define TWISTOR_EXACT_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistor/exact/scalar.hpp"

namespace twistor {

/// Dense univariate polynomial over Q(i). Coefficients are stored by ascending
/// power with no trailing zeros, so the zero polynomial has no coefficients.
/// The variable is contextual: t on the chart at 0, s = 1/t on the chart at infinity.
class Poly {
   public:
    Poly() = default;
    explicit Poly(Scalar c);
    explicit Poly(std::vector<Scalar> coeffs);

    static Poly monomial(int k, Scalar c = Scalar(1));
    static Poly x() { return monomial(1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Nonzero constant.
    bool is_unit() const noexcept { return c_.size() == 1; }
    const Scalar& coeff(int k) const noexcept;
    const Scalar& lead() const noexcept { return coeff(degree()); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    /// Lowest power with nonzero coefficient; -1 for zero.
    int valuation() const noexcept;

    Poly monic() const;
    Scalar eval(const Scalar& at) const;
    /// x^k * p.
    Poly shifted(int k) const;
    /// Drops the factor x^valuation.
    Poly strip_x() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const;

   private:
    void trim();
    std::vector<Scalar> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
/// a / b when b divides a exactly.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

}  // namespace twistor

#endif
