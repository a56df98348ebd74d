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

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "pfhaf/rat.hpp"

namespace pfhaf {

/**
 * Element p + q*sqrt(d) of the quadratic field Q(sqrt(d)).
 *
 * The radicand d is a nonzero rational that is not the square of a rational;
 * negative d is allowed and treated as a formal square root. An element built
 * from a plain rational carries no radicand yet and adopts the radicand of the
 * first operand it meets. Combining two elements with different radicands is a
 * DomainError.
 */
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rat p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long p) : p_(p) {}            // NOLINT(google-explicit-constructor)
    QuadExt(int p) : p_(p) {}             // NOLINT(google-explicit-constructor)
    /// Throws DomainError when d is zero or a rational square.
    QuadExt(Rat p, Rat q, Rat d);

    /// sqrt(d) itself: 0 + 1*sqrt(d).
    static QuadExt sqrt_of(const Rat& d) { return QuadExt(Rat(0), Rat(1), d); }

    const Rat& rational_part() const noexcept { return p_; }
    const Rat& radical_part() const noexcept { return q_; }
    /// Radicand, if one has been attached.
    const std::optional<Rat>& radicand() const noexcept { return d_; }

    bool is_rational() const noexcept { return q_.is_zero(); }
    bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }
    /// Throws DomainError when the radical part is nonzero.
    Rat to_rat() const;

    /// p^2 - q^2 d, the field norm.
    Rat norm() const;
    QuadExt conjugate() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b);

    QuadExt pow(long e) const;

    /// "p" when rational, otherwise "p+q*sqrt(d)".
    std::string str() const;

private:
    void adopt_radicand(const QuadExt& o);

    Rat p_;
    Rat q_;
    std::optional<Rat> d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

}  // namespace pfhaf
