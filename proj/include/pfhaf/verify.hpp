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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pfhaf/forms.hpp"
#include "pfhaf/matrix.hpp"
#include "pfhaf/rat.hpp"
#include "pfhaf/report.hpp"

namespace pfhaf {

/// Constraints for gen_points. Values are p/q with q in 1..max_den; without
/// bounds, p is drawn from 1..100.
struct GenConstraints {
    bool distinct = true;
    bool positive = false;
    std::optional<std::pair<Rat, Rat>> bounds;
    std::optional<SymmetricForm> no_pole;
    long max_den = 10;
};

/// Deterministic in (seed, m, constraints). Throws GenError when the
/// constraints cannot be met.
PointConfig gen_points(std::uint64_t seed, std::size_t m, const GenConstraints& constraints = {});

/// xs and ys of length n with f(x_i, y_j) != 0 for all i, j.
PointConfig gen_cauchy_points(std::uint64_t seed, std::size_t n, const BilinearForm& f,
                              const GenConstraints& constraints = {});

/// a_ij = u_i v_j + s_i t_j.
struct Rank2Spec {
    std::vector<Rat> u, v, s, t;

    std::size_t size() const noexcept { return u.size(); }
    Rat entry(std::size_t i, std::size_t j) const { return u[i] * v[j] + s[i] * t[j]; }
    Matrix<Rat> matrix() const;
};

/// Every entry of the generated matrix is nonzero. `rank1` forces s = t = 0.
Rank2Spec gen_rank2(std::uint64_t seed, std::size_t n, bool rank1 = false);

/// Everything a check may need; which fields are read depends on the identity.
struct CheckInput {
    PointConfig points;
    std::optional<BilinearForm> f;
    std::optional<SymmetricForm> g;
    std::optional<Rat> z;
    std::optional<Rank2Spec> rank2;
};

/// Sides of the two residue lemmas at z, evaluated exactly.
std::pair<Rat, Rat> lemma1_sides(std::span<const Rat> xs, const Rat& z);
std::pair<Rat, Rat> lemma2_sides(std::span<const Rat> xs, const Rat& z);

/// Evaluates both sides of one identity exactly. Throws DomainError naming the
/// violated constraint when the input does not fit the identity.
IdentityReport check_identity(IdentityId id, const CheckInput& input);

/// A random input for `id` at size n (matrix dimension n for det/perm
/// identities, 2n for Pfaffian/Hafnian ones).
CheckInput make_instance(IdentityId id, std::size_t n, std::uint64_t seed);

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::vector<std::size_t> sizes{1, 2, 3};
    std::size_t trials = 5;
    std::vector<IdentityId> only;  // empty means all
    unsigned threads = 0;          // 0 means hardware concurrency
};

struct SuiteResult {
    std::vector<IdentityReport> reports;  // sorted by identity, size, trial
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t identities = 0;

    bool ok() const noexcept { return failed == 0; }
};

SuiteResult run_suite(const SuiteOptions& options);

/// JSON lines for every report, then one summary line.
std::string render_suite(const SuiteResult& result, bool with_timing);

}  // namespace pfhaf
