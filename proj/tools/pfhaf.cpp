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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pfhaf/bench.hpp"
#include "pfhaf/errors.hpp"
#include "pfhaf/io.hpp"
#include "pfhaf/kernels.hpp"
#include "pfhaf/structured.hpp"
#include "pfhaf/verify.hpp"

using namespace pfhaf;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;
constexpr std::size_t kCrosscheckRyserMax = 25;

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
        if (item.empty()) continue;
        try {
            std::size_t dots = item.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stoul(item));
            } else {
                std::size_t lo = std::stoul(item.substr(0, dots)), hi = std::stoul(item.substr(dots + 2));
                if (lo > hi) throw DomainError("empty size range '" + item + "'");
                for (std::size_t s = lo; s <= hi; ++s) out.push_back(s);
            }
        } catch (const std::logic_error&) {
            throw DomainError("bad size list '" + text + "'");
        }
    }
    return out;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        if (comma > pos) out.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

Functional parse_functional(const std::string& s) {
    if (s == "det") return Functional::det;
    if (s == "perm") return Functional::perm;
    if (s == "pf") return Functional::pf;
    if (s == "hf") return Functional::hf;
    throw DomainError("--fn must be det, perm, pf or hf");
}

void print_value(const Rat& v, std::optional<int> decimal) {
    std::cout << (decimal ? v.to_decimal(*decimal) : v.str()) << '\n';
}

// eval

struct EvalArgs {
    std::string input, csv, fn, algorithm = "auto";
    std::optional<int> decimal;
    bool json = false;
};

int run_eval(const EvalArgs& a) {
    if (a.input.empty() == a.csv.empty()) throw DomainError("give exactly one of --input or --csv");
    Matrix<Rat> m = a.csv.empty() ? read_matrix_file(a.input, false) : read_matrix_file(a.csv, true);
    Functional f = parse_functional(a.fn);
    Algorithm alg = a.algorithm == "oracle" ? oracle_algorithm(f) : fast_algorithm(f);
    if (a.algorithm != "oracle" && a.algorithm != "fast" && a.algorithm != "auto")
        throw DomainError("--algorithm must be oracle, fast or auto");
    KernelResult<Rat> r = evaluate(f, alg, m);
    if (a.json) {
        nlohmann::ordered_json j;
        j["value"] = r.value.str();
        j["functional"] = std::string(to_string(r.functional));
        j["algorithm"] = std::string(to_string(r.algorithm));
        j["dimension"] = r.dimension;
        j["operations"] = r.operation_count;
        if (a.decimal) j["decimal"] = r.value.to_decimal(*a.decimal);
        std::cout << j.dump() << '\n';
    } else {
        print_value(r.value, a.decimal);
    }
    return 0;
}

// structured

struct StructuredArgs {
    std::string xs, ys, points, f, g, target, algorithm = "fast";
    bool crosscheck = false;
    std::optional<int> decimal;
};

PointConfig load_points(const StructuredArgs& a) {
    if (!a.points.empty()) {
        if (!a.xs.empty() || !a.ys.empty()) throw DomainError("--points excludes --xs and --ys");
        std::ifstream in(a.points);
        if (!in) throw DomainError("cannot open " + a.points);
        try {
            return point_config_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::parse_error& e) {
            throw DomainError(std::string("invalid JSON in ") + a.points + ": " + e.what());
        }
    }
    if (a.xs.empty()) throw DomainError("give --xs or --points");
    PointConfig pc;
    pc.xs = parse_rat_list(a.xs);
    if (!a.ys.empty()) pc.ys = parse_rat_list(a.ys);
    return pc;
}

Rat structured_fast(const std::string& target, const PointConfig& pc, const StructuredArgs& a) {
    if (target == "perm") {
        auto f = BilinearForm::parse(a.f);
        try {
            return fast_cauchy_perm(pc, f);
        } catch (const DegenerateFormError& e) {
            std::cerr << "warning: " << e.what() << "; falling back to Ryser\n";
            return perm_ryser(build_cauchy(pc, f, 1));
        }
    }
    if (target == "hafnian") {
        auto g = SymmetricForm::parse(a.g);
        try {
            return fast_cauchy_hafnian(pc, g);
        } catch (const DegenerateFormError& e) {
            std::cerr << "warning: " << e.what() << "; falling back to the recursive Hafnian\n";
            return hf_recursive(build_hafnian_mat(pc, g));
        }
    }
    if (target == "det") return cauchy_det_closed(pc, BilinearForm::parse(a.f));
    return schur_pf_closed(pc, SymmetricForm::parse(a.g));
}

Rat structured_oracle(const std::string& target, const PointConfig& pc, const StructuredArgs& a) {
    if (target == "perm") {
        auto c = build_cauchy(pc, BilinearForm::parse(a.f), 1);
        if (c.size() > kCrosscheckRyserMax)
            throw SizeError("Ryser cross-check refused", c.size(), kCrosscheckRyserMax);
        return perm_ryser(c);
    }
    if (target == "hafnian") return hf_recursive(build_hafnian_mat(pc, SymmetricForm::parse(a.g)));
    if (target == "det") return det_bareiss(build_cauchy(pc, BilinearForm::parse(a.f), 1));
    return pf_elimination(build_schur(pc, SymmetricForm::parse(a.g), 1, Orientation::ji));
}

int run_structured(const StructuredArgs& a) {
    const std::string& t = a.target;
    if (t != "perm" && t != "hafnian" && t != "det" && t != "pf")
        throw DomainError("--target must be perm, hafnian, det or pf");
    bool bilinear = t == "perm" || t == "det";
    if (bilinear && a.f.empty()) throw DomainError("--target " + t + " needs --f");
    if (!bilinear && a.g.empty()) throw DomainError("--target " + t + " needs --g");
    if (a.algorithm != "fast" && a.algorithm != "oracle") throw DomainError("--algorithm must be fast or oracle");
    PointConfig pc = load_points(a);

    if (a.crosscheck) {
        // refuse before spending time on the fast path
        Rat slow = structured_oracle(t, pc, a);
        Rat fast = structured_fast(t, pc, a);
        print_value(fast, a.decimal);
        if (fast != slow) {
            std::cerr << "cross-check mismatch: fast " << fast.str() << " vs exponential " << slow.str() << '\n';
            return kExitMismatch;
        }
        std::cerr << "cross-check ok\n";
        return 0;
    }
    print_value(a.algorithm == "fast" ? structured_fast(t, pc, a) : structured_oracle(t, pc, a), a.decimal);
    return 0;
}

// verify

struct VerifyArgs {
    std::uint64_t seed = 42;
    std::string sizes = "1..3", only;
    std::size_t trials = 5;
    unsigned threads = 0;
    bool no_timing = false;
};

int run_verify(const VerifyArgs& a) {
    SuiteOptions o;
    o.seed = a.seed;
    o.sizes = parse_sizes(a.sizes);
    o.trials = a.trials;
    o.threads = a.threads;
    for (const auto& name : split_names(a.only)) {
        auto id = identity_from_string(name);
        if (!id) throw DomainError("unknown identity '" + name + "'");
        o.only.push_back(*id);
    }
    SuiteResult r = run_suite(o);
    std::cout << render_suite(r, !a.no_timing);
    return r.ok() ? 0 : kExitMismatch;
}

// bench

struct BenchArgs {
    std::string fn = "hafnian", sizes, algorithms = "oracle,exponential,fast", output;
    std::size_t repeats = 3;
};

int run_bench_cmd(const BenchArgs& a) {
    BenchOptions o;
    o.functional = a.fn;
    o.sizes = parse_sizes(a.sizes);
    o.algorithms = split_names(a.algorithms);
    o.repeats = a.repeats;
    auto rows = run_bench(o);
    if (a.output.empty() || a.output == "-") {
        write_bench_csv(std::cout, rows);
    } else {
        std::ofstream out(a.output);
        if (!out) throw DomainError("cannot write " + a.output);
        write_bench_csv(out, rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinants, permanents, Pfaffians and Hafnians"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate a functional of a matrix");
    eval->add_option("--input", ea.input, "JSON matrix file");
    eval->add_option("--csv", ea.csv, "CSV / whitespace grid file");
    eval->add_option("--fn", ea.fn, "det, perm, pf or hf")->required();
    eval->add_option("--algorithm", ea.algorithm, "oracle, fast or auto");
    eval->add_option("--decimal", ea.decimal, "Also round to this many digits");
    eval->add_flag("--json", ea.json, "Print a JSON object with metadata");

    StructuredArgs sa;
    auto* structured = app.add_subcommand("structured", "Fast paths for Cauchy and Hafnian-type matrices");
    structured->add_option("--xs", sa.xs, "Comma-separated rationals");
    structured->add_option("--ys", sa.ys, "Comma-separated rationals (perm and det targets)");
    structured->add_option("--points", sa.points, "JSON file with xs and ys");
    structured->add_option("--f", sa.f, "Bilinear form: x+y, 1-xy or a,b,c,d");
    structured->add_option("--g", sa.g, "Symmetric form: x+y, 1-xy or a,b,c");
    structured->add_option("--target", sa.target, "perm, hafnian, det or pf")->required();
    structured->add_option("--algorithm", sa.algorithm, "fast or oracle");
    structured->add_flag("--crosscheck", sa.crosscheck, "Compare against the exponential kernel");
    structured->add_option("--decimal", sa.decimal, "Round to this many digits");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check every identity on random instances");
    verify->add_option("--seed", va.seed);
    verify->add_option("--sizes", va.sizes, "List such as 1,2,4 or a range 1..4");
    verify->add_option("--trials", va.trials);
    verify->add_option("--only", va.only, "Comma-separated identity ids");
    verify->add_option("--threads", va.threads);
    verify->add_flag("--no-timing", va.no_timing, "Omit elapsed_ns for byte-stable output");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Time oracle, exponential and fast algorithms");
    bench->add_option("--fn", ba.fn, "hafnian or perm");
    bench->add_option("--sizes", ba.sizes, "List such as 2,4,6 or a range 2..12");
    bench->add_option("--repeats", ba.repeats);
    bench->add_option("--algorithms", ba.algorithms);
    bench->add_option("--output", ba.output, "CSV path, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) return run_eval(ea);
        if (*structured) return run_structured(sa);
        if (*verify) return run_verify(va);
        if (*bench) return run_bench_cmd(ba);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
