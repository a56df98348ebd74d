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

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pfhaf {

/**
 * Exact rational number backed by GMP.
 *
 * Always held in lowest terms with a positive denominator. The textual form is
 * "p/q" or "p" (meaning p/1), with an optional leading '-' on p.
 */
class Rat {
public:
    Rat() = default;
    Rat(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(mpq_class v);

    /// Parses "p/q" or "p". Throws DomainError on malformed text or q = 0.
    static Rat parse(std::string_view text);

    std::string str() const { return value_.get_str(); }
    /// Rounded decimal rendering with `digits` fractional digits.
    std::string to_decimal(int digits) const;

    const mpq_class& raw() const noexcept { return value_; }
    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return mpq_cmp_ui(value_.get_mpq_t(), 1, 1) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rat operator-() const {
        Rat r;
        mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
        return r;
    }
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    /// Throws DomainError when `o` is zero.
    Rat& operator/=(const Rat& o);

    // GMP results are already canonical, so these write straight into a fresh value.
    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return r;
    }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    /// Integer power; negative exponents require a nonzero base. pow(0, 0) = 1.
    Rat pow(long e) const;
    Rat inverse() const { return Rat(1) / *this; }
    /// The rational square root when one exists.
    std::optional<Rat> exact_sqrt() const;

private:
    mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace pfhaf
