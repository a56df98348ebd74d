/*
 * Copyright 2026 The pfhaf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pfhaf/quad_ext.hpp"

#include "pfhaf/errors.hpp"

namespace pfhaf {

QuadExt::QuadExt(Rat p, Rat q, Rat d) : p_(std::move(p)), q_(std::move(q)) {
    if (d.is_zero() || d.exact_sqrt()) {
        throw DomainError("radicand " + d.str() + " is a rational square");
    }
    d_ = std::move(d);
}

void QuadExt::adopt_radicand(const QuadExt& o) {
    if (!o.d_) return;
    if (!d_) {
        d_ = o.d_;
    } else if (*d_ != *o.d_) {
        throw DomainError("mixed radicands " + d_->str() + " and " + o.d_->str());
    }
}

Rat QuadExt::to_rat() const {
    if (!is_rational()) throw DomainError("element " + str() + " is not rational");
    return p_;
}

Rat QuadExt::norm() const {
    if (!d_) return p_ * p_;
    return p_ * p_ - q_ * q_ * *d_;
}

QuadExt QuadExt::conjugate() const {
    QuadExt r = *this;
    r.q_ = -r.q_;
    return r;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    adopt_radicand(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    adopt_radicand(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    adopt_radicand(o);
    if (!d_) {
        p_ *= o.p_;
        return *this;
    }
    Rat p = p_ * o.p_ + q_ * o.q_ * *d_;
    Rat q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    adopt_radicand(o);
    if (o.is_zero()) throw DomainError("division by zero");
    Rat n = o.norm();
    QuadExt c = o.conjugate();
    *this *= c;
    p_ /= n;
    q_ /= n;
    return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.d_ && b.d_ && *a.d_ != *b.d_ && !(a.is_rational() && b.is_rational())) {
        throw DomainError("comparing elements with mixed radicands");
    }
    return a.p_ == b.p_ && a.q_ == b.q_;
}

QuadExt QuadExt::pow(long e) const {
    if (e < 0) return (QuadExt(1) / *this).pow(-e);
    QuadExt result(1);
    QuadExt base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    // keep the radicand even when e == 0
    result.adopt_radicand(*this);
    return result;
}

std::string QuadExt::str() const {
    if (is_rational()) return p_.str();
    std::string s = p_.is_zero() ? "" : p_.str();
    if (q_.sign() > 0 && !s.empty()) s += "+";
    s += q_ == Rat(1) ? "" : (q_ == Rat(-1) ? "-" : q_.str() + "*");
    return s + "sqrt(" + d_->str() + ")";
}

}  // namespace pfhaf
