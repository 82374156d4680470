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

#include "twistor/exact/scalar.hpp"

#include <ostream>

#include "twistor/error.hpp"

namespace twistor {

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (is_rational()) return Scalar(mpq_class(1) / re_);
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t k = start; k < text.size(); ++k) {
        char c = text[k];
        if (c == '/') {
            if (seen_slash) throw Error("malformed rational literal '" + text + "'");
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw Error("malformed rational literal '" + text + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw Error("malformed rational literal '" + text + "'");
    std::string body = text[0] == '+' ? text.substr(1) : text;
    mpq_class q;
    if (q.set_str(body, 10) != 0) throw Error("malformed rational literal '" + text + "'");
    if (seen_slash && q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational_string(re_);
    std::string out;
    if (sgn(re_) != 0) out = rational_string(re_);
    mpq_class im = im_;
    if (!out.empty()) out += sgn(im) < 0 ? "-" : "+";
    else if (sgn(im) < 0) out += "-";
    if (sgn(im) < 0) im = -im;
    if (im != 1) out += rational_string(im) + "*";
    out += "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace twistor
