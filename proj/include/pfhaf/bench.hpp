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
#include <ostream>
#include <string>
#include <vector>

#include "pfhaf/rat.hpp"

namespace pfhaf {

/// "hafnian" times hf_oracle / hf_recursive / the Pfaffian fast path on
/// 1/(x_i+x_j) with x = 1..n; "perm" times perm_oracle / perm_ryser / the
/// Borchardt fast path on 1/(x_i+y_j) with x = 1..n, y = 1..n.
struct BenchOptions {
    std::string functional = "hafnian";
    std::vector<std::size_t> sizes;
    std::vector<std::string> algorithms{"oracle", "exponential", "fast"};
    std::size_t repeats = 3;
};

struct BenchRow {
    std::string functional;
    std::string algorithm;
    std::size_t n = 0;
    std::int64_t median_ns = 0;
    std::string digest;
};

/// Sizes an algorithm refuses (guards, odd Hafnian dimension) produce no row.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Header "functional,algorithm,n,median_ns,digest" then one line per row.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// FNV-1a 64 of the exact rendering, as 16 hex digits.
std::string value_digest(const Rat& v);

/// Algorithm names accepted by run_bench for a functional.
std::vector<std::string> bench_algorithms(const std::string& functional);

}  // namespace pfhaf
