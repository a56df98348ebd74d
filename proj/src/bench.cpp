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

#include "pfhaf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>

#include "pfhaf/errors.hpp"
#include "pfhaf/kernels.hpp"
#include "pfhaf/structured.hpp"

namespace pfhaf {

namespace {

// Exponential kernels are skipped above these sizes in a benchmark run.
constexpr std::size_t kBenchRyserMax = 20;

PointConfig integer_points(std::size_t n, bool with_ys) {
    PointConfig pc;
    for (std::size_t i = 1; i <= n; ++i) pc.xs.emplace_back(static_cast<long>(i));
    if (with_ys) pc.ys = pc.xs;
    return pc;
}

std::optional<std::function<Rat()>> job_for(const std::string& functional, const std::string& algorithm,
                                             std::size_t n) {
    if (functional == "hafnian") {
        if (n % 2 != 0) return std::nullopt;
        PointConfig pc = integer_points(n, false);
        auto g = SymmetricForm::sum();
        if (algorithm == "oracle") {
            if (n > kMatchingOracleMax) return std::nullopt;
            auto b = build_hafnian_mat(pc, g);
            return [b] { return hf_oracle(b); };
        }
        if (algorithm == "exponential") {
            if (n > kHfRecursiveMax) return std::nullopt;
            auto b = build_hafnian_mat(pc, g);
            return [b] { return hf_recursive(b); };
        }
        if (algorithm == "fast") return [pc, g] { return fast_cauchy_hafnian(pc, g); };
    } else if (functional == "perm") {
        PointConfig pc = integer_points(n, true);
        auto f = BilinearForm::sum();
        if (algorithm == "oracle") {
            if (n > kPermOracleMax) return std::nullopt;
            auto c = build_cauchy(pc, f, 1);
            return [c] { return perm_oracle(c); };
        }
        if (algorithm == "exponential") {
            if (n > kBenchRyserMax) return std::nullopt;
            auto c = build_cauchy(pc, f, 1);
            return [c] { return perm_ryser(c); };
        }
        if (algorithm == "fast") return [pc, f] { return fast_cauchy_perm(pc, f); };
    }
    throw DomainError("unknown benchmark " + functional + "/" + algorithm);
}

}  // namespace

std::vector<std::string> bench_algorithms(const std::string& functional) {
    if (functional == "hafnian" || functional == "perm") return {"oracle", "exponential", "fast"};
    throw DomainError("benchmark functional must be hafnian or perm, got '" + functional + "'");
}

std::string value_digest(const Rat& v) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : v.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    auto known = bench_algorithms(options.functional);
    for (const auto& a : options.algorithms)
        if (std::find(known.begin(), known.end(), a) == known.end()) throw DomainError("unknown algorithm '" + a + "'");
    std::vector<BenchRow> rows;
    const std::size_t repeats = std::max<std::size_t>(options.repeats, 1);
    for (std::size_t n : options.sizes) {
        for (const auto& algorithm : options.algorithms) {
            auto job = job_for(options.functional, algorithm, n);
            if (!job) continue;
            std::vector<std::int64_t> times;
            Rat value;
            for (std::size_t r = 0; r < repeats; ++r) {
                auto start = std::chrono::steady_clock::now();
                value = (*job)();
                auto stop = std::chrono::steady_clock::now();
                times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
            }
            std::sort(times.begin(), times.end());
            rows.push_back({options.functional, algorithm, n, times[times.size() / 2], value_digest(value)});
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "functional,algorithm,n,median_ns,digest\n";
    for (const auto& r : rows)
        out << r.functional << ',' << r.algorithm << ',' << r.n << ',' << r.median_ns << ',' << r.digest << '\n';
}

}  // namespace pfhaf
