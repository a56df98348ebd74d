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

#include <sstream>

#include "pfhaf/errors.hpp"
#include "pfhaf/kernels.hpp"
#include "pfhaf/structured.hpp"
#include "pfhaf/verify.hpp"

using namespace pfhaf;

namespace {

Rat q(const char* s) { return Rat::parse(s); }

std::vector<Rat> ints(std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

CheckInput points(std::vector<Rat> xs) {
    CheckInput in;
    in.points.xs = std::move(xs);
    return in;
}

}  // namespace

TEST_CASE("point generation is deterministic and respects constraints") {
    auto a = gen_points(1234, 8);
    auto b = gen_points(1234, 8);
    CHECK(a.xs == b.xs);
    CHECK(gen_points(1235, 8).xs != a.xs);
    CHECK(all_distinct(a.xs));
    for (const Rat& x : a.xs) {
        CHECK(x.den() <= 10);
        CHECK(x > Rat(0));
    }
    GenConstraints bounded;
    bounded.bounds = std::make_pair(Rat(-1), Rat(1));
    bounded.no_pole = SymmetricForm::one_minus_product();
    auto c = gen_points(9, 10, bounded);
    for (const Rat& x : c.xs) {
        CHECK(x >= Rat(-1));
        CHECK(x <= Rat(1));
    }
    for (std::size_t i = 0; i < c.xs.size(); ++i)
        for (std::size_t j = i + 1; j < c.xs.size(); ++j) CHECK_FALSE(SymmetricForm::one_minus_product()(c.xs[i], c.xs[j]).is_zero());

    GenConstraints sum_safe;
    sum_safe.bounds = std::make_pair(Rat(-3), Rat(3));
    sum_safe.no_pole = SymmetricForm::sum();
    auto d = gen_points(10, 12, sum_safe);
    for (std::size_t i = 0; i < d.xs.size(); ++i)
        for (std::size_t j = i + 1; j < d.xs.size(); ++j) CHECK(d.xs[i] + d.xs[j] != Rat(0));
}

TEST_CASE("infeasible constraints raise GenError") {
    GenConstraints tight;
    tight.bounds = std::make_pair(Rat(0), Rat(1));
    tight.max_den = 1;
    CHECK_THROWS_AS(gen_points(1, 5, tight), GenError);
}

TEST_CASE("Cauchy point generation avoids poles") {
    auto f = BilinearForm::one_minus_product();
    auto pc = gen_cauchy_points(77, 6, f);
    REQUIRE(pc.ys);
    for (const Rat& x : pc.xs)
        for (const Rat& y : *pc.ys) CHECK_FALSE(f(x, y).is_zero());
    CHECK(gen_cauchy_points(77, 6, f).xs == pc.xs);
}

TEST_CASE("Cauchy point generation with a reducible form") {
    // (x - 2)(y + 1): x = 2 kills a whole row, so it must never be drawn
    BilinearForm f(1, 1, -2, -2);
    GenConstraints c;
    c.bounds = std::make_pair(Rat(1), Rat(3));
    c.max_den = 1;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto pc = gen_cauchy_points(seed, 2, f, c);
        CHECK(std::find(pc.xs.begin(), pc.xs.end(), Rat(2)) == pc.xs.end());
    }
}

TEST_CASE("rank-two generation") {
    auto r = gen_rank2(5, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK_FALSE(r.entry(i, j).is_zero());
    auto one = gen_rank2(5, 4, true);
    CHECK(det_bareiss(one.matrix()) == Rat(0));
}

TEST_CASE("named instances") {
    auto main1 = check_identity(IdentityId::MAIN1, points(ints({1, 2, 3, 4})));
    CHECK(main1.pass);
    CHECK(main1.size == 2);

    auto in = points(ints({1, 2}));
    in.points.ys = ints({3, 4});
    auto cauchy = check_identity(IdentityId::CAUCHY1, in);
    CHECK(cauchy.lhs == "1/600");
    CHECK(cauchy.pass);
    auto borch = check_identity(IdentityId::BORCH1, in);
    CHECK(borch.lhs == "49/360000");
    CHECK(borch.pass);

    auto schur = check_identity(IdentityId::SCHUR1, points(ints({1, 2})));
    CHECK(schur.lhs == "1/3");
    CHECK(schur.pass);

    auto lemma = points(ints({1, 2, 3, 4}));
    lemma.z = Rat(5);
    CHECK(check_identity(IdentityId::LEMMA1, lemma).pass);
    CHECK(check_identity(IdentityId::LEMMA2, lemma).pass);

    CheckInput carlitz;
    carlitz.rank2 = Rank2Spec{ints({1, 2, 3}), ints({1, 1, 2}), ints({1, -1, 2}), ints({3, 1, 1})};
    auto cr = check_identity(IdentityId::CARLITZ, carlitz);
    CHECK(cr.pass);
    CHECK(cr.size == 3);

    CheckInput rank1;
    rank1.rank2 = Rank2Spec{ints({1, 2, 3}), ints({1, 4, 2}), ints({0, 0, 0}), ints({0, 0, 0})};
    auto r1 = check_identity(IdentityId::CARLITZ, rank1);
    CHECK(r1.pass);
    CHECK(r1.rhs == "0");
}

TEST_CASE("identities hold on generated instances") {
    for (IdentityId id : kAllIdentities) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::uint64_t t = 0; t < 100; ++t) {
                auto rep = check_identity(id, make_instance(id, n, 1000 * n + t));
                CHECK_MESSAGE(rep.pass, to_string(id), " n=", n, " t=", t, " ", rep.lhs, " vs ", rep.rhs);
            }
        }
    }
}

TEST_CASE("repeated points collapse both sides") {
    auto rep = check_identity(IdentityId::MAIN1, points(ints({1, 2, 2, 5})));
    CHECK(rep.pass);
    CHECK(rep.lhs == "0");
    CHECK(rep.rhs == "0");
    auto schur = check_identity(IdentityId::SCHUR2, points(std::vector<Rat>{q("1/2"), q("1/3"), q("1/3"), q("1/5")}));
    CHECK(schur.pass);
    CHECK(schur.lhs == "0");
}

TEST_CASE("degenerate Pfaffian") {
    auto two = check_identity(IdentityId::DEGENERATE_PF, points(ints({3, 7})));
    CHECK(two.lhs == "4");
    CHECK(two.pass);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto rep = check_identity(IdentityId::DEGENERATE_PF, make_instance(IdentityId::DEGENERATE_PF, 3, seed));
        CHECK(rep.lhs == "0");
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(check_identity(IdentityId::GEN_DET, points(ints({1}))), DomainError);
    CHECK_THROWS_AS(check_identity(IdentityId::GEN_SCHUR, points(ints({1, 2}))), DomainError);
    CHECK_THROWS_AS(check_identity(IdentityId::LEMMA1, points(ints({1, 2}))), DomainError);
    auto pole = points(ints({1, 2}));
    pole.z = Rat(2);
    CHECK_THROWS_AS(check_identity(IdentityId::LEMMA1, pole), DomainError);
    CHECK_THROWS_AS(check_identity(IdentityId::CARLITZ, points({})), DomainError);
}

TEST_CASE("suite with the default seed") {
    SuiteOptions o;
    auto r = run_suite(o);
    CHECK(r.ok());
    CHECK(r.identities == 16);
    CHECK(r.reports.size() == 16 * 3 * 5);
    CHECK(r.passed == r.reports.size());
    // canonical order
    for (std::size_t i = 1; i < r.reports.size(); ++i) {
        const auto& a = r.reports[i - 1];
        const auto& b = r.reports[i];
        bool ordered = std::tuple(static_cast<int>(a.id), a.size, a.trial) < std::tuple(static_cast<int>(b.id), b.size, b.trial);
        CHECK(ordered);
    }
}

TEST_CASE("suite output is deterministic across thread counts") {
    SuiteOptions a;
    a.sizes = {1, 2};
    a.trials = 3;
    a.threads = 1;
    SuiteOptions b = a;
    b.threads = 4;
    CHECK(render_suite(run_suite(a), false) == render_suite(run_suite(b), false));
    CHECK(render_suite(run_suite(a), false) == render_suite(run_suite(a), false));
}

TEST_CASE("empty suite") {
    SuiteOptions o;
    o.trials = 0;
    auto r = run_suite(o);
    CHECK(r.reports.empty());
    CHECK(r.ok());
    CHECK(r.identities == 0);
    auto text = render_suite(r, false);
    CHECK(text.find("\"total\":0") != std::string::npos);
}

TEST_CASE("suite filtering and rendering") {
    SuiteOptions o;
    o.only = {IdentityId::LEMMA2};
    o.sizes = {2};
    o.trials = 2;
    auto r = run_suite(o);
    CHECK(r.identities == 1);
    REQUIRE(r.reports.size() == 2);
    auto text = render_suite(r, true);
    std::istringstream in(text);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        if (lines < 2) {
            CHECK(j["id"] == "LEMMA2");
            CHECK(j["pass"] == true);
            CHECK(j.contains("elapsed_ns"));
            CHECK(j["params"].contains("seed"));
        } else {
            CHECK(j["summary"]["total"] == 2);
            CHECK(j["summary"]["failed"] == 0);
        }
        ++lines;
    }
    CHECK(lines == 3);
    CHECK(render_suite(r, false).find("elapsed_ns") == std::string::npos);
}

TEST_CASE("identity names round trip") {
    for (IdentityId id : kAllIdentities) CHECK(identity_from_string(to_string(id)) == id);
    CHECK_FALSE(identity_from_string("NOPE").has_value());
}
