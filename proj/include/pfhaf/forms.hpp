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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfhaf/rat.hpp"

namespace pfhaf {

/// Sample points x_1..x_m and, for Cauchy-type builders, y_1..y_n.
struct PointConfig {
    std::vector<Rat> xs;
    std::optional<std::vector<Rat>> ys;

    std::size_t size() const noexcept { return xs.size(); }
};

bool all_distinct(std::span<const Rat> v);

/// f(x,y) = a*x*y + b*x + c*y + d, not identically zero.
class BilinearForm {
public:
    /// Throws DomainError when a = b = c = d = 0.
    BilinearForm(Rat a, Rat b, Rat c, Rat d);

    /// x + y
    static BilinearForm sum() { return {0, 1, 1, 0}; }
    /// 1 - x*y
    static BilinearForm one_minus_product() { return {-1, 0, 0, 1}; }
    /// Accepts "x+y", "1-xy", or four comma-separated coefficients "a,b,c,d".
    static BilinearForm parse(std::string_view text);

    Rat operator()(const Rat& x, const Rat& y) const { return a_ * x * y + b_ * x + c_ * y + d_; }
    /// a*d - b*c
    Rat disc() const { return a_ * d_ - b_ * c_; }

    const Rat& a() const noexcept { return a_; }
    const Rat& b() const noexcept { return b_; }
    const Rat& c() const noexcept { return c_; }
    const Rat& d() const noexcept { return d_; }

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
    Rat a_, b_, c_, d_;
};

/// g(x,y) = a*x*y + b*(x+y) + c, symmetric in x and y, not identically zero.
class SymmetricForm {
public:
    /// Throws DomainError when a = b = c = 0.
    SymmetricForm(Rat a, Rat b, Rat c);

    /// x + y
    static SymmetricForm sum() { return {0, 1, 0}; }
    /// 1 - x*y
    static SymmetricForm one_minus_product() { return {-1, 0, 1}; }
    /// Accepts "x+y", "1-xy", or three comma-separated coefficients "a,b,c".
    static SymmetricForm parse(std::string_view text);

    Rat operator()(const Rat& x, const Rat& y) const {
        Rat v = x + y;
        if (!b_.is_one()) v *= b_;
        if (!a_.is_zero()) v += a_ * x * y;
        if (!c_.is_zero()) v += c_;
        return v;
    }
    /// b^2 - a*c
    Rat disc() const { return b_ * b_ - a_ * c_; }

    const Rat& a() const noexcept { return a_; }
    const Rat& b() const noexcept { return b_; }
    const Rat& c() const noexcept { return c_; }

    friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;

private:
    Rat a_, b_, c_;
};

/// Splits "1,2,3/4" into rationals.
std::vector<Rat> parse_rat_list(std::string_view text);

}  // namespace pfhaf
