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

#ifndef TWISTOR_EXACT_LAURENT_HPP
#define TWISTOR_EXACT_LAURENT_HPP

#include <optional>
#include <string>

#include "twistor/exact/poly.hpp"

namespace twistor {

/// Laurent polynomial t^low * body(t) in K[t, 1/t]; body has nonzero constant
/// term unless the value is zero. Polynomials in s = 1/t embed by s^k -> t^-k.
class Laurent {
   public:
    Laurent() = default;
    explicit Laurent(Scalar c) : body_(std::move(c)) {}

    static Laurent monomial(int e, Scalar c = Scalar(1));
    /// p(t).
    static Laurent from_t(const Poly& p);
    /// p(s) with s = 1/t.
    static Laurent from_s(const Poly& p);

    bool is_zero() const noexcept { return body_.is_zero(); }
    int min_exp() const noexcept { return low_; }
    int max_exp() const noexcept { return low_ + body_.degree(); }
    const Scalar& coeff(int e) const noexcept { return body_.coeff(e - low_); }

    bool in_t_ring() const noexcept { return is_zero() || low_ >= 0; }
    bool in_s_ring() const noexcept { return is_zero() || max_exp() <= 0; }
    /// Requires in_t_ring().
    Poly to_t() const;
    /// Requires in_s_ring().
    Poly to_s() const;
    /// t^shift * this, as a polynomial in t (requires the result to have no negative powers).
    Poly scaled_to_t(int shift) const;

    /// Units of K[t,1/t] are the nonzero monomials.
    bool is_unit() const noexcept { return body_.degree() == 0; }
    Laurent inverse_unit() const;
    /// Same value with the monomial unit factor removed (monic body, low = 0).
    Poly unit_free_part() const { return body_.monic(); }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o) { return *this += -o; }
    Laurent& operator*=(const Scalar& c);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Scalar& c) { return a *= c; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.body_ == b.body_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    std::string to_string() const;

   private:
    Laurent(int low, Poly body);
    void normalize();
    int low_ = 0;
    Poly body_;
};

/// a / b in K[t,1/t] when the quotient exists.
std::optional<Laurent> exact_div(const Laurent& a, const Laurent& b);

}  // namespace twistor

#endif
