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

#include "pfhaf/rat.hpp"

#include <cctype>

#include "pfhaf/errors.hpp"

namespace pfhaf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat::Rat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    std::string_view s = trim(text);
    std::string sign;
    // U+2212 MINUS SIGN is accepted as well as ASCII '-'.
    if (s.rfind("\xE2\x88\x92", 0) == 0) {
        sign = "-";
        s.remove_prefix(3);
    } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') sign = "-";
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(sign + std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("rational with zero denominator '" + std::string(text) + "'");
    return Rat(n, d);
}

std::string Rat::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = abs().num() * scale;
    mpz_class d = den();
    // round half away from zero
    mpz_class q = (2 * n + d) / (2 * d);
    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sign() < 0 && q != 0 ? "-" : "") + body;
}

Rat& Rat::operator+=(const Rat& o) {
    value_ += o.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    value_ -= o.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    value_ *= o.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

std::optional<Rat> Rat::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(rn, rd);
}

}  // namespace pfhaf
