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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pfhaf/errors.hpp"
#include "pfhaf/matrix.hpp"
#include "pfhaf/rat.hpp"

namespace pfhaf {

enum class Functional { det, perm, pf, hf };
enum class Algorithm { leibniz, bareiss, definition, ryser, matching, elimination, recursive };

std::string_view to_string(Functional f);
std::string_view to_string(Algorithm a);

inline constexpr std::size_t kDetOracleMax = 8;
inline constexpr std::size_t kPermOracleMax = 8;
inline constexpr std::size_t kMatchingOracleMax = 12;
inline constexpr std::size_t kHfRecursiveMax = 22;

template <typename T>
struct KernelResult {
    T value;
    Functional functional;
    Algorithm algorithm;
    std::size_t dimension = 0;
    /// Terms summed for definition-level oracles, scalar multiplications otherwise.
    std::uint64_t operation_count = 0;
};

namespace detail {

inline void require_at_most(std::size_t n, std::size_t limit, const char* what) {
    if (n > limit) throw SizeError(what, n, limit);
}

template <typename T>
void require_even_skew(const Matrix<T>& m, const char* what) {
    if (m.size() % 2 != 0) throw DomainError(std::string(what) + ": odd dimension " + std::to_string(m.size()));
    if (!m.is_skew()) throw DomainError(std::string(what) + ": matrix is not skew-symmetric");
}

template <typename T>
void require_even_symmetric(const Matrix<T>& m, const char* what) {
    if (m.size() % 2 != 0) throw DomainError(std::string(what) + ": odd dimension " + std::to_string(m.size()));
    if (!m.is_symmetric()) throw DomainError(std::string(what) + ": matrix is not symmetric");
}

// Calls visit(sigma) for every sigma in F_{2n}, i.e. every perfect matching
// written as (i1 j1 i2 j2 ...) with i1 < i2 < ... and i_k < j_k.
inline void for_each_matching(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> sigma;
    std::vector<bool> used(n, false);
    sigma.reserve(n);
    std::function<void()> rec = [&]() {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) {
            visit(sigma);
            return;
        }
        std::size_t i = static_cast<std::size_t>(first - used.begin());
        used[i] = true;
        sigma.push_back(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            sigma.push_back(j);
            rec();
            sigma.pop_back();
            used[j] = false;
        }
        sigma.pop_back();
        used[i] = false;
    };
    rec();
}

template <typename T>
T leibniz(const Matrix<T>& m, bool signed_sum, std::uint64_t& terms) {
    std::size_t n = m.size();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    T total(0);
    do {
        T term(1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, sigma[i]);
        if (signed_sum && permutation_sign(sigma) < 0) term = -term;
        total += term;
        ++terms;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

template <typename T>
T matching_sum(const Matrix<T>& m, bool signed_sum, std::uint64_t& terms) {
    T total(0);
    for_each_matching(m.size(), [&](const std::vector<std::size_t>& sigma) {
        T term(1);
        for (std::size_t k = 0; k < sigma.size(); k += 2) term *= m(sigma[k], sigma[k + 1]);
        if (signed_sum && permutation_sign(sigma) < 0) term = -term;
        total += term;
        ++terms;
    });
    return total;
}

template <typename T>
T ryser(const Matrix<T>& m, std::uint64_t& ops) {
    std::size_t n = m.size();
    if (n == 0) return T(1);
    std::vector<T> row_sums(n, T(0));
    T total(0);
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t g = 1; g < subsets; ++g) {
        auto col = static_cast<std::size_t>(std::countr_zero(g));
        gray ^= std::uint64_t{1} << col;
        bool added = (gray >> col) & 1U;
        for (std::size_t i = 0; i < n; ++i) {
            if (added) {
                row_sums[i] += m(i, col);
            } else {
                row_sums[i] -= m(i, col);
            }
        }
        T prod(1);
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
            prod *= row_sums[i];
            ++ops;
        }
        if (std::popcount(gray) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    return n % 2 == 0 ? total : -total;
}

template <typename T>
T skew_elimination(const Matrix<T>& m, std::uint64_t& ops) {
    std::size_t n = m.size();
    std::vector<T> w(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> T& { return w[i * n + j]; };
    T result(1);
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t pivot = k + 1;
        while (pivot < n && at(k, pivot).is_zero()) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != k + 1) {
            // simultaneous row and column swap keeps skewness and flips the sign
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k + 1, c), at(pivot, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(at(r, k + 1), at(r, pivot));
            result = -result;
        }
        const T a = at(k, k + 1);
        result *= a;
        ++ops;
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                T upd = (at(k + 1, i) * at(k, j) - at(k, i) * at(k + 1, j)) / a;
                ops += 3;
                at(i, j) += upd;
                at(j, i) = -at(i, j);
            }
        }
    }
    return result;
}

template <typename T>
T hafnian_memo(const Matrix<T>& m, std::uint64_t& ops) {
    std::size_t n = m.size();
    if (n == 0) return T(1);
    std::unordered_map<std::uint32_t, T> memo;
    std::function<T(std::uint32_t)> hf = [&](std::uint32_t mask) -> T {
        if (mask == 0) return T(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        // expand along the highest active row/column
        auto top = static_cast<std::size_t>(31 - std::countl_zero(mask));
        std::uint32_t rest = mask & ~(std::uint32_t{1} << top);
        T total(0);
        for (std::uint32_t r = rest; r != 0; r &= r - 1) {
            auto k = static_cast<std::size_t>(std::countr_zero(r));
            const T& e = m(k, top);
            if (e.is_zero()) continue;
            total += e * hf(rest & ~(std::uint32_t{1} << k));
            ++ops;
        }
        return memo.emplace(mask, std::move(total)).first->second;
    };
    return hf((std::uint32_t{1} << n) - 1);
}

}  // namespace detail

/// Leibniz expansion over Sym_n. SizeError above kDetOracleMax.
template <typename T>
T det_oracle(const Matrix<T>& m) {
    detail::require_at_most(m.size(), kDetOracleMax, "det_oracle");
    std::uint64_t terms = 0;
    return detail::leibniz(m, true, terms);
}

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rat det_bareiss(const Matrix<Rat>& m);

/// Integer skew elimination, faster than pf_elimination on rational input.
Rat pf_fraction_free(const Matrix<Rat>& m);
KernelResult<Rat> det_bareiss_result(const Matrix<Rat>& m);

template <typename T>
T perm_oracle(const Matrix<T>& m) {
    detail::require_at_most(m.size(), kPermOracleMax, "perm_oracle");
    std::uint64_t terms = 0;
    return detail::leibniz(m, false, terms);
}

/// Ryser inclusion-exclusion with Gray-code column updates, O(2^n n).
template <typename T>
T perm_ryser(const Matrix<T>& m) {
    if (m.size() > 62) throw SizeError("perm_ryser", m.size(), 62);
    std::uint64_t ops = 0;
    return detail::ryser(m, ops);
}

/// Signed sum over F_{2n}; Pf([[0,1],[-1,0]]) = 1.
template <typename T>
T pf_oracle(const Matrix<T>& m) {
    detail::require_even_skew(m, "pf_oracle");
    detail::require_at_most(m.size(), kMatchingOracleMax, "pf_oracle");
    std::uint64_t terms = 0;
    return detail::matching_sum(m, true, terms);
}

/// Skew-symmetric elimination in 2x2 blocks; zero pivots are handled by a
/// simultaneous row/column swap with a sign flip.
template <typename T>
T pf_elimination(const Matrix<T>& m) {
    detail::require_even_skew(m, "pf_elimination");
    std::uint64_t ops = 0;
    return detail::skew_elimination(m, ops);
}

/// Unsigned sum over F_{2n}. The diagonal is never read.
template <typename T>
T hf_oracle(const Matrix<T>& m) {
    detail::require_even_symmetric(m, "hf_oracle");
    detail::require_at_most(m.size(), kMatchingOracleMax, "hf_oracle");
    std::uint64_t terms = 0;
    return detail::matching_sum(m, false, terms);
}

/// Expansion along the last row/column, memoized on the active index subset.
/// SizeError above kHfRecursiveMax.
template <typename T>
T hf_recursive(const Matrix<T>& m) {
    detail::require_even_symmetric(m, "hf_recursive");
    detail::require_at_most(m.size(), kHfRecursiveMax, "hf_recursive");
    std::uint64_t ops = 0;
    return detail::hafnian_memo(m, ops);
}

/// Runs one functional with one algorithm, recording diagnostics.
KernelResult<Rat> evaluate(Functional f, Algorithm a, const Matrix<Rat>& m);

/// The efficient algorithm for each functional.
Algorithm fast_algorithm(Functional f);
/// The definition-level algorithm for each functional.
Algorithm oracle_algorithm(Functional f);

}  // namespace pfhaf
