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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfhaf/errors.hpp"
#include "pfhaf/forms.hpp"
#include "pfhaf/matrix.hpp"
#include "pfhaf/structured.hpp"
#include "test_support.hpp"

using namespace pfhaf;
using pfhaf::testing::random_matrix;

namespace {

Matrix<Rat> ints(std::vector<std::vector<Rat>> rows) { return Matrix<Rat>::from_rows(rows); }

}  // namespace

TEST_CASE("classify picks the strictest kind") {
    CHECK(classify(ints({{0, 5}, {-5, 0}})) == Kind::skew);
    CHECK(classify(ints({{1, 2}, {2, 3}})) == Kind::symmetric);
    CHECK(classify(ints({{1, 2}, {3, 4}})) == Kind::general);
    CHECK(classify(Matrix<Rat>(3)) == Kind::skew);
    CHECK(classify(Matrix<Rat>::identity(3)) == Kind::symmetric);
}

TEST_CASE("declared kinds are verified") {
    CHECK_THROWS_AS(Matrix<Rat>(2, {1, 2, 3, 4}, Kind::symmetric), DomainError);
    CHECK_THROWS_AS(Matrix<Rat>(2, {1, 2, -2, 0}, Kind::skew), DomainError);
    CHECK(Matrix<Rat>(2, {0, 0, 0, 0}, Kind::symmetric).kind() == Kind::symmetric);
    CHECK_THROWS_AS(Matrix<Rat>(2, {1, 2, 3}), DomainError);
    CHECK_THROWS_AS(Matrix<Rat>::from_rows({{1, 2}, {3}}), DomainError);
}

TEST_CASE("minor removes rows and columns") {
    Matrix<Rat> m(4, {11, 12, 13, 14, 21, 22, 23, 24, 31, 32, 33, 34, 41, 42, 43, 44});
    CHECK(minor(m, IndexSet{2, 4}) == ints({{11, 13}, {31, 33}}));
    CHECK(minor(m, IndexSet{}) == m);
    CHECK(minor(m, IndexSet{1, 2, 3, 4}).size() == 0);
    CHECK_THROWS_AS(minor(m, IndexSet{5}), DomainError);
    CHECK_THROWS_AS(IndexSet({2, 2}), DomainError);
    CHECK_THROWS_AS(IndexSet({0}), DomainError);
}

TEST_CASE("minor keeps the kind tag") {
    std::mt19937_64 rng(3);
    auto s = pfhaf::testing::random_skew(rng, 6);
    CHECK(minor(s, IndexSet{1, 5}).kind() == Kind::skew);
    auto y = pfhaf::testing::random_symmetric(rng, 6);
    CHECK(minor(y, IndexSet{3}).kind() == Kind::symmetric);
}

TEST_CASE("minor of the Hafnian matrix matches rebuilding without the points") {
    PointConfig pc{{1, 2, 3, 4, 5, 6}, std::nullopt};
    auto g = SymmetricForm::sum();
    auto b = build_hafnian_mat(pc, g);
    for (std::size_t k = 1; k < 6; ++k) {
        PointConfig reduced;
        for (std::size_t i = 1; i <= 6; ++i)
            if (i != k && i != 6) reduced.xs.push_back(pc.xs[i - 1]);
        CHECK(minor(b, IndexSet{k, 6}) == build_hafnian_mat(reduced, g));
    }
}

TEST_CASE("nested minors compose") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 7);
        // remove {2, 5} then, in the 5x5 result, indices {1, 4} which were originally {1, 6}
        CHECK(minor(minor(m, IndexSet{2, 5}), IndexSet{1, 4}) == minor(m, IndexSet{1, 2, 5, 6}));
    }
}

TEST_CASE("permutation conjugation preserves kind") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = pfhaf::testing::random_permutation(rng, 6);
        CHECK(classify(conjugate_by(pfhaf::testing::random_skew(rng, 6), p)) == Kind::skew);
        CHECK(classify(conjugate_by(pfhaf::testing::random_symmetric(rng, 6), p)) != Kind::general);
        auto g = random_matrix(rng, 6);
        CHECK(classify(conjugate_by(g, p)) == classify(g));
    }
}

TEST_CASE("permutation sign") {
    std::vector<std::size_t> id{0, 1, 2, 3}, swap{1, 0, 2, 3}, cyc{1, 2, 0};
    CHECK(permutation_sign(id) == 1);
    CHECK(permutation_sign(swap) == -1);
    CHECK(permutation_sign(cyc) == 1);
}
