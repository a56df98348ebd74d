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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "pfhaf/bench.hpp"
#include "pfhaf/errors.hpp"
#include "pfhaf/kernels.hpp"
#include "pfhaf/structured.hpp"
#include "pfhaf/verify.hpp"
#include "test_support.hpp"

using namespace pfhaf;
using namespace pfhaf::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double median_seconds(const std::function<void()>& job, int repeats) {
    std::vector<double> t;
    for (int r = 0; r < repeats; ++r) {
        auto start = Clock::now();
        job();
        t.push_back(seconds_since(start));
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

PointConfig integer_points(long m) {
    PointConfig pc;
    for (long i = 1; i <= m; ++i) pc.xs.emplace_back(i);
    return pc;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome identity_suite() {
    SuiteOptions o;
    o.seed = 42;
    o.sizes = {1, 2, 3, 4};
    o.trials = 25;
    auto start = Clock::now();
    SuiteResult r = run_suite(o);
    double s = seconds_since(start);
    std::string first_failure;
    for (const auto& rep : r.reports)
        if (!rep.pass && first_failure.empty()) first_failure = "; first failure " + to_json_line(rep, false);
    bool ok = r.ok() && r.identities == 16 && r.reports.size() == 16 * 4 * 25 && s < 60.0;
    return {ok, std::to_string(r.passed) + "/" + std::to_string(r.reports.size()) + " checks over " +
                    std::to_string(r.identities) + " identities in " + fmt("%.2f s", s) + first_failure};
}

Outcome main_identity_instance() {
    PointConfig pc = integer_points(4);
    auto g = SymmetricForm::sum();
    // the (x_i - x_j) orientation and its matching product
    Matrix<Rat> a = build_schur(pc, g, 2, Orientation::ij);
    Matrix<Rat> b = build_hafnian_mat(pc, g);
    Rat prod(1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) prod *= (pc.xs[i] - pc.xs[j]) / (pc.xs[i] + pc.xs[j]);
    Rat lhs_oracle = pf_oracle(a);
    Rat lhs_fast = pf_elimination(a);
    Rat rhs_oracle = prod * hf_oracle(b);
    Rat rhs_fast = prod * fast_cauchy_hafnian(pc, g);
    bool ok = lhs_oracle == lhs_fast && lhs_fast == rhs_oracle && rhs_oracle == rhs_fast;
    return {ok, "Pf oracle " + lhs_oracle.str() + ", Pf elimination " + lhs_fast.str() + ", product*Hf oracle " +
                    rhs_oracle.str() + ", product*Hf fast " + rhs_fast.str()};
}

Outcome borchardt_witness() {
    PointConfig pc{{Rat(1), Rat(2)}, std::vector<Rat>{Rat(3), Rat(4)}};
    auto f = BilinearForm::sum();
    Rat lhs = det_bareiss(build_cauchy(pc, f, 2));
    Rat d = det_bareiss(build_cauchy(pc, f, 1));
    Rat p = perm_ryser(build_cauchy(pc, f, 1));
    bool ok = lhs == Rat::parse("49/360000") && d == Rat::parse("1/600") && p == Rat::parse("49/600") &&
              lhs == d * p && Rat::parse(lhs.str()) == lhs;
    return {ok, "det[1/(x+y)^2] = " + lhs.str() + ", det = " + d.str() + ", perm = " + p.str()};
}

Outcome oracle_equivalences() {
    std::mt19937_64 rng(4);
    int mismatches = 0, checks = 0;
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix(rng, 1 + t % 6);
        mismatches += det_bareiss(m) != det_oracle(m);
        auto p = random_matrix(rng, 1 + t % 7);
        mismatches += perm_ryser(p) != perm_oracle(p);
        auto s = random_skew(rng, 2 * (1 + t % 5));
        mismatches += pf_elimination(s) != pf_oracle(s);
        mismatches += pf_fraction_free(s) != pf_oracle(s);
        auto y = random_symmetric(rng, 2 * (1 + t % 5));
        mismatches += hf_recursive(y) != hf_oracle(y);
        checks += 5;
    }
    return {mismatches == 0, std::to_string(checks - mismatches) + "/" + std::to_string(checks) +
                                 " agree (det n<=6, perm n<=7, pf and hf 2n<=10, 50 each)"};
}

Outcome pfaffian_squared() {
    std::mt19937_64 rng(5);
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
        auto s = random_skew(rng, 2 * (1 + t % 4));
        bad += pf_elimination(s).pow(2) != det_bareiss(s);
    }
    return {bad == 0, std::to_string(100 - bad) + "/100 skew matrices with 2n<=8"};
}

Outcome lemma_certification() {
    PointConfig pc = gen_points(6, 6);
    GenConstraints zc;
    zc.bounds = std::make_pair(Rat(101), Rat(200));
    PointConfig zs = gen_points(7, 13, zc);
    int ok1 = 0, ok2 = 0;
    for (const Rat& z : zs.xs) {
        auto [l1, r1] = lemma1_sides(pc.xs, z);
        auto [l2, r2] = lemma2_sides(pc.xs, z);
        ok1 += l1 == r1;
        ok2 += l2 == r2;
    }
    bool distinct = all_distinct(zs.xs) && zs.xs.size() == 13;
    return {distinct && ok1 == 13 && ok2 == 13,
            "first lemma " + std::to_string(ok1) + "/13, second lemma " + std::to_string(ok2) +
                "/13 at distinct z for 2n=6"};
}

Outcome performance_separation() {
    auto g = SymmetricForm::sum();
    PointConfig p40 = integer_points(40);
    auto start = Clock::now();
    Rat h40 = fast_cauchy_hafnian(p40, g);
    double t40 = seconds_since(start);

    bool refused = false;
    try {
        hf_recursive(build_hafnian_mat(integer_points(24), g));
    } catch (const SizeError&) {
        refused = true;
    }
    bool allowed22 = kHfRecursiveMax == 22;

    PointConfig p20 = integer_points(20);
    Matrix<Rat> b20 = build_hafnian_mat(p20, g);
    Rat slow_value, fast_value;
    double slow = median_seconds([&] { slow_value = hf_recursive(b20); }, 3);
    double fast = median_seconds([&] { fast_value = fast_cauchy_hafnian(p20, g); }, 11);
    double ratio = slow / fast;

    // crossover: the fast path loses at the smallest size and wins at the largest
    BenchOptions bo;
    bo.sizes = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    bo.repeats = 3;
    auto rows = run_bench(bo);
    std::ofstream csv("acceptance_bench.csv");
    write_bench_csv(csv, rows);
    std::map<std::pair<std::string, std::size_t>, std::int64_t> t;
    std::map<std::size_t, std::set<std::string>> digests;
    for (const auto& r : rows) {
        t[{r.algorithm, r.n}] = r.median_ns;
        digests[r.n].insert(r.digest);
    }
    bool crossover = t[{"oracle", 2}] < t[{"fast", 2}] && t[{"fast", 20}] < t[{"exponential", 20}] &&
                     t[{"fast", 12}] < t[{"oracle", 12}];
    bool digests_agree = std::all_of(digests.begin(), digests.end(), [](const auto& kv) { return kv.second.size() == 1; });

    bool ok = t40 < 5.0 && refused && allowed22 && ratio >= 100.0 && slow_value == fast_value && crossover &&
              digests_agree;
    return {ok, "2n=40 fast in " + fmt("%.3f s", t40) + (refused ? ", 2n=24 refused" : ", 2n=24 NOT refused") +
                    ", 2n=20 recursive/fast = " + fmt("%.0f", ratio) + "x (" + fmt("%.4f s", slow) + " vs " +
                    fmt("%.6f s", fast) + ")" + (crossover ? ", crossover in acceptance_bench.csv" : ", no crossover") +
                    (digests_agree ? "" : ", digest mismatch") + ", Hf(1..40) has " +
                    std::to_string(h40.str().size()) + " chars"};
}

Outcome degenerate_branches() {
    bool ok = true;
    std::string detail;
    SymmetricForm g(1, 1, 1);  // (x+1)(y+1)
    PointConfig pc = integer_points(6);
    try {
        fast_cauchy_hafnian(pc, g);
        ok = false;
        detail += "Hafnian fast path did not raise; ";
    } catch (const DegenerateFormError&) {
        Rat rec = hf_recursive(build_hafnian_mat(pc, g));
        Rat orc = hf_oracle(build_hafnian_mat(pc, g));
        ok = ok && rec == orc;
        detail += "Hafnian fallback " + rec.str() + "; ";
    }
    BilinearForm f(2, 2, 3, 3);  // (2x+3)(y+1)
    PointConfig cp{{Rat(1), Rat(2), Rat(3), Rat(5)}, std::vector<Rat>{Rat(4), Rat(6), Rat(7), Rat(9)}};
    try {
        fast_cauchy_perm(cp, f);
        ok = false;
        detail += "permanent fast path did not raise; ";
    } catch (const DegenerateFormError&) {
        auto c = build_cauchy(cp, f, 1);
        ok = ok && perm_ryser(c) == perm_oracle(c);
        detail += "permanent fallback " + perm_ryser(c).str() + "; ";
    }
    int zero = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::size_t n = 2 + seed % 4;
        auto rep = check_identity(IdentityId::DEGENERATE_PF, make_instance(IdentityId::DEGENERATE_PF, n, seed));
        zero += rep.lhs == "0" && rep.pass;
    }
    ok = ok && zero == 20;
    return {ok, detail + "Pf(x_j-x_i) = 0 in " + std::to_string(zero) + "/20 configs"};
}

Outcome quadratic_witness() {
    PointConfig pc{{Rat(1), Rat(2), Rat(3), Rat(4)}, std::nullopt};
    SymmetricForm g(1, 1, -1);
    IdentityReport r = substitution_witness(pc, g);
    QuadExt s = form_sqrt_disc(g);
    bool over_sqrt2 = s.radicand() && *s.radicand() == Rat(2);
    return {r.pass && over_sqrt2 && r.lhs == r.rhs,
            "g=(1,1,-1), sqrt(disc) = " + s.str() + ", recovered " + r.lhs + " vs " + r.rhs +
                (r.note.empty() ? "" : " (" + r.note + ")")};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"identity-suite", identity_suite},
        {"main-identity-instance", main_identity_instance},
        {"borchardt-witness", borchardt_witness},
        {"oracle-equivalences", oracle_equivalences},
        {"pfaffian-squared", pfaffian_squared},
        {"lemma-certification", lemma_certification},
        {"performance-separation", performance_separation},
        {"degenerate-branches", degenerate_branches},
        {"quadratic-witness", quadratic_witness},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << c.name << ": " << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
