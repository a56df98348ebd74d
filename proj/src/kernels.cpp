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

#include "pfhaf/kernels.hpp"

namespace pfhaf {

std::string_view to_string(Functional f) {
    switch (f) {
        case Functional::det: return "det";
        case Functional::perm: return "perm";
        case Functional::pf: return "pf";
        case Functional::hf: return "hf";
    }
    return "det";
}

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::leibniz: return "leibniz";
        case Algorithm::bareiss: return "bareiss";
        case Algorithm::definition: return "definition";
        case Algorithm::ryser: return "ryser";
        case Algorithm::matching: return "matching";
        case Algorithm::elimination: return "elimination";
        case Algorithm::recursive: return "recursive";
    }
    return "leibniz";
}

namespace {

Rat bareiss(const Matrix<Rat>& m, std::uint64_t& ops) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);

    // Scale each row by the lcm of its denominators to get an integer matrix.
    std::vector<mpz_class> a(n * n);
    mpz_class scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (const Rat& v : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).num() * (l / m(i, j).den());
        scale_product *= l;
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

    int sign = 1;
    mpz_class prev = 1, t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return Rat(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(t.get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
                mpz_submul(t.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                ops += 2;
            }
        }
        prev = at(k, k);
    }
    mpz_class det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return Rat(det, scale_product);
}

// Skew analogue of Bareiss. Row and column i are scaled by the lcm of row i's
// denominators; after step k every live entry is the Pfaffian of a principal
// minor of the scaled matrix, so the division by the previous pivot is exact.
Rat pf_bareiss(const Matrix<Rat>& m, std::uint64_t& ops) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);
    std::vector<mpz_class> scales(n);
    mpz_class scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (const Rat& v : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
        scales[i] = l;
        scale_product *= l;
    }
    std::vector<mpz_class> a(n * n);
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).num() * (scales[i] / m(i, j).den()) * scales[j];

    int sign = 1;
    mpz_class prev = 1, t;
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t p = k + 1;
        while (p < n && at(k, p) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k + 1, c), at(p, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(at(r, k + 1), at(r, p));
            sign = -sign;
        }
        const mpz_class piv = at(k, k + 1);
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), at(i, j).get_mpz_t());
                mpz_addmul(t.get_mpz_t(), at(k + 1, i).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_submul(t.get_mpz_t(), at(k, i).get_mpz_t(), at(k + 1, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                mpz_neg(at(j, i).get_mpz_t(), at(i, j).get_mpz_t());
                ops += 3;
            }
        }
        prev = piv;
    }
    mpz_class pf = prev;
    if (sign < 0) pf = -pf;
    return Rat(pf, scale_product);
}

}  // namespace

Rat det_bareiss(const Matrix<Rat>& m) {
    std::uint64_t ops = 0;
    return bareiss(m, ops);
}

Rat pf_fraction_free(const Matrix<Rat>& m) {
    detail::require_even_skew(m, "pf_fraction_free");
    std::uint64_t ops = 0;
    return pf_bareiss(m, ops);
}

KernelResult<Rat> det_bareiss_result(const Matrix<Rat>& m) {
    KernelResult<Rat> r{Rat(0), Functional::det, Algorithm::bareiss, m.size(), 0};
    r.value = bareiss(m, r.operation_count);
    return r;
}

Algorithm fast_algorithm(Functional f) {
    switch (f) {
        case Functional::det: return Algorithm::bareiss;
        case Functional::perm: return Algorithm::ryser;
        case Functional::pf: return Algorithm::elimination;
        case Functional::hf: return Algorithm::recursive;
    }
    return Algorithm::bareiss;
}

Algorithm oracle_algorithm(Functional f) {
    switch (f) {
        case Functional::det: return Algorithm::leibniz;
        case Functional::perm: return Algorithm::definition;
        case Functional::pf:
        case Functional::hf: return Algorithm::matching;
    }
    return Algorithm::leibniz;
}

KernelResult<Rat> evaluate(Functional f, Algorithm a, const Matrix<Rat>& m) {
    KernelResult<Rat> r{Rat(0), f, a, m.size(), 0};
    auto mismatch = [&]() {
        return DomainError("algorithm " + std::string(to_string(a)) + " does not compute " +
                           std::string(to_string(f)));
    };
    switch (f) {
        case Functional::det:
            if (a == Algorithm::leibniz) {
                detail::require_at_most(m.size(), kDetOracleMax, "det_oracle");
                r.value = detail::leibniz(m, true, r.operation_count);
            } else if (a == Algorithm::bareiss) {
                r.value = bareiss(m, r.operation_count);
            } else {
                throw mismatch();
            }
            break;
        case Functional::perm:
            if (a == Algorithm::definition) {
                detail::require_at_most(m.size(), kPermOracleMax, "perm_oracle");
                r.value = detail::leibniz(m, false, r.operation_count);
            } else if (a == Algorithm::ryser) {
                detail::require_at_most(m.size(), 62, "perm_ryser");
                r.value = detail::ryser(m, r.operation_count);
            } else {
                throw mismatch();
            }
            break;
        case Functional::pf:
            detail::require_even_skew(m, "pf");
            if (a == Algorithm::matching) {
                detail::require_at_most(m.size(), kMatchingOracleMax, "pf_oracle");
                r.value = detail::matching_sum(m, true, r.operation_count);
            } else if (a == Algorithm::elimination) {
                r.value = pf_bareiss(m, r.operation_count);
            } else {
                throw mismatch();
            }
            break;
        case Functional::hf:
            detail::require_even_symmetric(m, "hf");
            if (a == Algorithm::matching) {
                detail::require_at_most(m.size(), kMatchingOracleMax, "hf_oracle");
                r.value = detail::matching_sum(m, false, r.operation_count);
            } else if (a == Algorithm::recursive) {
                detail::require_at_most(m.size(), kHfRecursiveMax, "hf_recursive");
                r.value = detail::hafnian_memo(m, r.operation_count);
            } else {
                throw mismatch();
            }
            break;
    }
    return r;
}

}  // namespace pfhaf
