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

#include "pfhaf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "pfhaf/errors.hpp"
#include "pfhaf/io.hpp"
#include "pfhaf/kernels.hpp"
#include "pfhaf/structured.hpp"

namespace pfhaf {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    return splitmix(splitmix(splitmix(splitmix(seed) ^ a) ^ b) ^ c);
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    long nonzero(long bound) {
        long v = uniform(-bound, bound - 1);
        return v >= 0 ? v + 1 : v;
    }

private:
    std::mt19937_64 rng_;
};

long floor_of(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q.get_si();
}

long ceil_of(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q.get_si();
}

// Draws m values one at a time; `accept` sees the values kept so far.
std::vector<Rat> draw(Sampler& rng, std::size_t m, const GenConstraints& c,
                      const std::function<bool(const std::vector<Rat>&, const Rat&)>& accept) {
    if (c.max_den < 1) throw GenError("max_den must be at least 1");
    if (c.bounds && c.bounds->first > c.bounds->second) throw GenError("empty bounds");
    std::vector<Rat> out;
    std::set<Rat> seen;
    const std::size_t budget = 1000 * (m + 1);
    std::size_t attempts = 0;
    while (out.size() < m) {
        if (++attempts > budget) {
            throw GenError("could not draw " + std::to_string(m) + " points under the given constraints");
        }
        long q = rng.uniform(1, c.max_den);
        long p;
        if (c.bounds) {
            long lo = ceil_of(c.bounds->first * Rat(q));
            long hi = floor_of(c.bounds->second * Rat(q));
            if (lo > hi) continue;
            p = rng.uniform(lo, hi);
        } else {
            p = rng.uniform(1, 100);
        }
        Rat v{mpz_class(p), mpz_class(q)};
        if (c.positive && v.sign() <= 0) continue;
        if (c.distinct && seen.count(v)) continue;
        if (c.no_pole) {
            bool pole = false;
            for (const Rat& x : out) pole = pole || (*c.no_pole)(x, v).is_zero();
            if (pole) continue;
        }
        if (!accept(out, v)) continue;
        seen.insert(v);
        out.push_back(std::move(v));
    }
    return out;
}

SymmetricForm random_symmetric(Sampler& rng) {
    while (true) {
        long a = rng.uniform(-3, 3), b = rng.uniform(-3, 3), c = rng.uniform(-3, 3);
        if (a != 0 || b != 0 || c != 0) return {a, b, c};
    }
}

BilinearForm random_bilinear(Sampler& rng) {
    while (true) {
        long a = rng.uniform(-3, 3), b = rng.uniform(-3, 3), c = rng.uniform(-3, 3), d = rng.uniform(-3, 3);
        if (a != 0 || b != 0 || c != 0 || d != 0) return {a, b, c, d};
    }
}

Rat random_small(Sampler& rng, bool nonzero) {
    long p = nonzero ? rng.nonzero(9) : rng.uniform(-9, 9);
    return Rat(mpz_class(p), mpz_class(rng.uniform(1, 5)));
}

// prod_{i<j} (x_i - x_j)/g = (-1)^{pairs} * prod_{i<j} (x_j - x_i)/g
Rat reversed_schur_product(const PointConfig& pc, const SymmetricForm& g) {
    std::size_t m = pc.xs.size();
    Rat p = schur_product(pc, g);
    return (m * (m - 1) / 2) % 2 == 0 ? p : -p;
}

Matrix<Rat> build_hafnian_from(std::span<const Rat> xs) {
    return build_hafnian_mat(PointConfig{std::vector<Rat>(xs.begin(), xs.end()), std::nullopt}, SymmetricForm::sum());
}

const Rat& require_z(const CheckInput& in, std::string_view id) {
    if (!in.z) throw DomainError(std::string(id) + " needs z");
    return *in.z;
}

json params_of(const CheckInput& in) {
    json p = {{"points", to_json(in.points)}};
    if (in.f) p["f"] = to_json(*in.f);
    if (in.g) p["g"] = to_json(*in.g);
    if (in.z) p["z"] = in.z->str();
    if (in.rank2) {
        auto arr = [](const std::vector<Rat>& v) {
            json a = json::array();
            for (const auto& r : v) a.push_back(r.str());
            return a;
        };
        p["rank2"] = {{"u", arr(in.rank2->u)}, {"v", arr(in.rank2->v)}, {"s", arr(in.rank2->s)}, {"t", arr(in.rank2->t)}};
    }
    return p;
}

}  // namespace

PointConfig gen_points(std::uint64_t seed, std::size_t m, const GenConstraints& constraints) {
    Sampler rng(derive_seed(seed, 0x70));
    auto xs = draw(rng, m, constraints, [](const std::vector<Rat>&, const Rat&) { return true; });
    return PointConfig{std::move(xs), std::nullopt};
}

PointConfig gen_cauchy_points(std::uint64_t seed, std::size_t n, const BilinearForm& f,
                              const GenConstraints& constraints) {
    GenConstraints c = constraints;
    c.no_pole.reset();
    Sampler rng(derive_seed(seed, 0x71));
    // an x with f(x, .) identically zero would leave no admissible y
    auto xs = draw(rng, n, c, [&](const std::vector<Rat>&, const Rat& x) {
        return !((f.a() * x + f.c()).is_zero() && (f.b() * x + f.d()).is_zero());
    });
    auto ys = draw(rng, n, c, [&](const std::vector<Rat>&, const Rat& y) {
        return std::none_of(xs.begin(), xs.end(), [&](const Rat& x) { return f(x, y).is_zero(); });
    });
    return PointConfig{std::move(xs), std::move(ys)};
}

Matrix<Rat> Rank2Spec::matrix() const {
    std::size_t n = size();
    std::vector<Rat> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.push_back(entry(i, j));
    return Matrix<Rat>(n, std::move(e));
}

Rank2Spec gen_rank2(std::uint64_t seed, std::size_t n, bool rank1) {
    if (n == 0) throw DomainError("rank-2 input needs n >= 1");
    Sampler rng(derive_seed(seed, 0x72));
    Rank2Spec r;
    for (std::size_t j = 0; j < n; ++j) {
        r.v.push_back(random_small(rng, true));
        r.t.push_back(rank1 ? Rat(0) : random_small(rng, false));
    }
    for (std::size_t i = 0; i < n; ++i) {
        // resample row i until none of its entries vanish
        while (true) {
            Rat u = random_small(rng, true);
            Rat s = rank1 ? Rat(0) : random_small(rng, false);
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) ok = !(u * r.v[j] + s * r.t[j]).is_zero();
            if (ok) {
                r.u.push_back(std::move(u));
                r.s.push_back(std::move(s));
                break;
            }
        }
    }
    return r;
}

std::pair<Rat, Rat> lemma1_sides(std::span<const Rat> xs, const Rat& z) {
    const std::size_t m = xs.size();
    for (const Rat& x : xs)
        if (x == z || x == -z) throw DomainError("lemma needs z != +-x_k");
    Matrix<Rat> b = build_hafnian_from(xs);
    Rat lhs(0);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            if (k == l) continue;
            Rat hf = hf_recursive(minor(b, IndexSet{k + 1, l + 1}));
            lhs += hf / ((xs[k] - z) * (xs[l] + z));
        }
    }
    Rat sum(0);
    for (const Rat& x : xs) sum += Rat(2) * x / (x * x - z * z);
    return {lhs, hf_recursive(b) * sum};
}

std::pair<Rat, Rat> lemma2_sides(std::span<const Rat> xs, const Rat& z) {
    const std::size_t m = xs.size();
    if (m < 2 || m % 2 != 0) throw DomainError("lemma needs an even number of points");
    const std::size_t last = m - 1;  // the first 2n-1 points take part
    if (!all_distinct(xs.subspan(0, last))) throw DomainError("lemma needs distinct x_1..x_{2n-1}");
    for (std::size_t k = 0; k < last; ++k)
        if (xs[k] == -z) throw DomainError("lemma needs z != -x_k");
    Matrix<Rat> b = build_hafnian_from(xs);
    std::vector<Rat> hf;
    for (std::size_t k = 0; k < last; ++k) hf.push_back(hf_recursive(minor(b, IndexSet{k + 1, m})));

    Rat lhs(0);
    for (std::size_t k = 0; k < last; ++k) {
        Rat term = (xs[k] - z) / ((xs[k] + z) * (xs[k] + z));
        for (std::size_t i = 0; i < last; ++i)
            if (i != k) term *= (xs[k] + xs[i]) / (xs[k] - xs[i]);
        lhs += term * hf[k];
    }
    Rat prod(1);
    Rat sum(0);
    for (std::size_t i = 0; i < last; ++i) {
        prod *= (xs[i] - z) / (xs[i] + z);
        sum += hf[i] / (xs[i] + z);
    }
    return {lhs, prod * sum};
}

IdentityReport check_identity(IdentityId id, const CheckInput& in) {
    auto start = std::chrono::steady_clock::now();
    const PointConfig& pc = in.points;
    const auto sum_g = SymmetricForm::sum();
    const auto omp_g = SymmetricForm::one_minus_product();
    const auto sum_f = BilinearForm::sum();
    const auto omp_f = BilinearForm::one_minus_product();
    auto need_f = [&]() -> const BilinearForm& {
        if (!in.f) throw DomainError(std::string(to_string(id)) + " needs a bilinear form f");
        return *in.f;
    };
    auto need_g = [&]() -> const SymmetricForm& {
        if (!in.g) throw DomainError(std::string(to_string(id)) + " needs a symmetric form g");
        return *in.g;
    };

    Rat lhs, rhs;
    std::size_t size = pc.xs.size();
    switch (id) {
        case IdentityId::CAUCHY1:
        case IdentityId::CAUCHY2: {
            const auto& f = id == IdentityId::CAUCHY1 ? sum_f : omp_f;
            lhs = det_bareiss(build_cauchy(pc, f, 1));
            rhs = cauchy_product(pc, f);
            break;
        }
        case IdentityId::BORCH1:
        case IdentityId::BORCH2: {
            const auto& f = id == IdentityId::BORCH1 ? sum_f : omp_f;
            lhs = det_bareiss(build_cauchy(pc, f, 2));
            rhs = cauchy_product(pc, f) * perm_ryser(build_cauchy(pc, f, 1));
            break;
        }
        case IdentityId::SCHUR1:
        case IdentityId::SCHUR2: {
            const auto& g = id == IdentityId::SCHUR1 ? sum_g : omp_g;
            lhs = pf_elimination(build_schur(pc, g, 1, Orientation::ji));
            rhs = schur_product(pc, g);
            size /= 2;
            break;
        }
        case IdentityId::MAIN1:
        case IdentityId::MAIN2: {
            const auto& g = id == IdentityId::MAIN1 ? sum_g : omp_g;
            lhs = pf_elimination(build_schur(pc, g, 2, Orientation::ij));
            rhs = reversed_schur_product(pc, g) * hf_recursive(build_hafnian_mat(pc, g));
            size /= 2;
            break;
        }
        case IdentityId::GEN_DET: {
            const auto& f = need_f();
            lhs = det_bareiss(build_cauchy(pc, f, 1));
            rhs = cauchy_det_closed(pc, f);
            break;
        }
        case IdentityId::GEN_BORCH: {
            const auto& f = need_f();
            lhs = det_bareiss(build_cauchy(pc, f, 2));
            rhs = cauchy_det_closed(pc, f) * perm_ryser(build_cauchy(pc, f, 1));
            break;
        }
        case IdentityId::GEN_SCHUR: {
            const auto& g = need_g();
            lhs = pf_elimination(build_schur(pc, g, 1, Orientation::ji));
            rhs = schur_pf_closed(pc, g);
            size /= 2;
            break;
        }
        case IdentityId::GEN_MAIN: {
            const auto& g = need_g();
            lhs = pf_elimination(build_schur(pc, g, 2, Orientation::ji));
            rhs = schur_pf_closed(pc, g) * hf_recursive(build_hafnian_mat(pc, g));
            size /= 2;
            break;
        }
        case IdentityId::LEMMA1: {
            if (pc.xs.size() % 2 != 0) throw DomainError("LEMMA1 needs an even number of points");
            std::tie(lhs, rhs) = lemma1_sides(pc.xs, require_z(in, "LEMMA1"));
            size /= 2;
            break;
        }
        case IdentityId::LEMMA2: {
            std::tie(lhs, rhs) = lemma2_sides(pc.xs, require_z(in, "LEMMA2"));
            size /= 2;
            break;
        }
        case IdentityId::CARLITZ: {
            if (!in.rank2) throw DomainError("CARLITZ needs a rank-2 input");
            Matrix<Rat> a = in.rank2->matrix();
            for (const Rat& v : a.entries())
                if (v.is_zero()) throw DomainError("CARLITZ needs all a_ij != 0");
            Matrix<Rat> inv = a.map([](const Rat& v) { return v.inverse(); });
            Matrix<Rat> inv2 = inv.map([](const Rat& v) { return v * v; });
            lhs = det_bareiss(inv2);
            rhs = det_bareiss(inv) * perm_ryser(inv);
            size = a.size();
            break;
        }
        case IdentityId::DEGENERATE_PF: {
            const std::size_t m = pc.xs.size();
            if (m == 0 || m % 2 != 0) throw DomainError("DEGENERATE_PF needs a positive even number of points");
            std::vector<Rat> e(m * m, Rat(0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) e[i * m + j] = pc.xs[j] - pc.xs[i];
            lhs = pf_elimination(Matrix<Rat>(m, std::move(e), Kind::skew));
            rhs = m == 2 ? pc.xs[1] - pc.xs[0] : Rat(0);
            size /= 2;
            break;
        }
    }

    IdentityReport r;
    r.id = id;
    r.size = size;
    r.params = params_of(in);
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.pass = lhs == rhs;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

CheckInput make_instance(IdentityId id, std::size_t n, std::uint64_t seed) {
    Sampler rng(derive_seed(seed, 0x80));
    CheckInput in;
    GenConstraints c;
    switch (id) {
        case IdentityId::CAUCHY1:
        case IdentityId::BORCH1:
            in.points = gen_cauchy_points(seed, n, BilinearForm::sum(), c);
            break;
        case IdentityId::CAUCHY2:
        case IdentityId::BORCH2:
            in.points = gen_cauchy_points(seed, n, BilinearForm::one_minus_product(), c);
            break;
        case IdentityId::GEN_DET:
        case IdentityId::GEN_BORCH:
            in.f = random_bilinear(rng);
            in.points = gen_cauchy_points(seed, n, *in.f, c);
            break;
        case IdentityId::SCHUR1:
        case IdentityId::MAIN1:
            c.no_pole = SymmetricForm::sum();
            in.points = gen_points(seed, 2 * n, c);
            break;
        case IdentityId::SCHUR2:
        case IdentityId::MAIN2:
            c.no_pole = SymmetricForm::one_minus_product();
            in.points = gen_points(seed, 2 * n, c);
            break;
        case IdentityId::GEN_SCHUR:
        case IdentityId::GEN_MAIN:
            in.g = random_symmetric(rng);
            c.no_pole = in.g;
            in.points = gen_points(seed, 2 * n, c);
            break;
        case IdentityId::LEMMA1:
        case IdentityId::LEMMA2: {
            in.points = gen_points(seed, 2 * n, c);
            // z from a range disjoint from the points' 1..100, so no pole is possible
            GenConstraints zc;
            zc.bounds = std::make_pair(Rat(101), Rat(200));
            in.z = gen_points(derive_seed(seed, 0x81), 1, zc).xs.front();
            break;
        }
        case IdentityId::CARLITZ:
            in.rank2 = gen_rank2(seed, n);
            break;
        case IdentityId::DEGENERATE_PF:
            in.points = gen_points(seed, 2 * n, c);
            break;
    }
    return in;
}

SuiteResult run_suite(const SuiteOptions& options) {
    struct Task {
        IdentityId id;
        std::size_t size;
        std::size_t trial;
    };
    std::vector<Task> tasks;
    std::set<IdentityId> exercised;
    for (IdentityId id : kAllIdentities) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
            continue;
        for (std::size_t size : options.sizes)
            for (std::size_t t = 0; t < options.trials; ++t) {
                tasks.push_back({id, size, t});
                exercised.insert(id);
            }
    }

    SuiteResult result;
    result.reports.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& task = tasks[i];
            std::uint64_t s = derive_seed(options.seed, static_cast<std::uint64_t>(task.id) + 1, task.size, task.trial);
            IdentityReport rep;
            auto start = std::chrono::steady_clock::now();
            try {
                rep = check_identity(task.id, make_instance(task.id, task.size, s));
            } catch (const std::exception& e) {
                rep.id = task.id;
                rep.pass = false;
                rep.note = e.what();
            }
            rep.size = task.size;
            rep.trial = task.trial;
            rep.params["seed"] = s;
            rep.elapsed = std::chrono::steady_clock::now() - start;
            result.reports[i] = std::move(rep);
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& r : result.reports) (r.pass ? result.passed : result.failed)++;
    result.identities = exercised.size();
    return result;
}

std::string render_suite(const SuiteResult& result, bool with_timing) {
    std::string out;
    for (const auto& r : result.reports) {
        out += to_json_line(r, with_timing);
        out += '\n';
    }
    nlohmann::ordered_json summary;
    summary["summary"] = {{"total", result.reports.size()},
                          {"passed", result.passed},
                          {"failed", result.failed},
                          {"identities", result.identities}};
    out += summary.dump();
    out += '\n';
    return out;
}

}  // namespace pfhaf
