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

#ifndef TWISTOR_EXACT_SCALAR_HPP
#define TWISTOR_EXACT_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace twistor {

/// Which base field values are allowed to live in.
enum class Field { rational, gaussian };

/// An element of Q(i). Rational values simply carry a zero imaginary part;
/// whether imaginary parts are admissible is decided by the caller's Field.
class Scalar {
   public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_rational() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |x|^2, always rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" for rationals, "a+bi" style otherwise. Used in text reports.
    std::string to_string() const;

   private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline Scalar conj(const Scalar& x) { return x.conj(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Exact rational string "p/q" (or "p" when q = 1).
std::string rational_string(const mpq_class& q);
/// Parses "p", "-p", "p/q"; throws twistor::Error on malformed text.
mpq_class parse_rational(const std::string& text);

}  // namespace twistor

#endif
