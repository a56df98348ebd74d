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

#include "pfhaf/structured.hpp"

#include <chrono>

#include "pfhaf/io.hpp"
#include "pfhaf/kernels.hpp"

namespace pfhaf {

namespace {

void require_power(int power) {
    if (power != 1 && power != 2) throw DomainError("power must be 1 or 2");
}

void require_even(const PointConfig& pc) {
    if (pc.xs.size() % 2 != 0) throw DomainError("need an even number of points, got " + std::to_string(pc.xs.size()));
}

const std::vector<Rat>& require_ys(const PointConfig& pc) {
    if (!pc.ys) throw DomainError("Cauchy-type matrix needs ys");
    if (pc.ys->size() != pc.xs.size()) throw DomainError("xs and ys must have the same length");
    return *pc.ys;
}

Rat checked_g(const SymmetricForm& g, const std::vector<Rat>& xs, std::size_t i, std::size_t j) {
    Rat v = g(xs[i], xs[j]);
    if (v.is_zero()) throw PoleError("g(x_i, x_j) = 0", i + 1, j + 1);
    return v;
}

Rat checked_f(const BilinearForm& f, const PointConfig& pc, std::size_t i, std::size_t j) {
    Rat v = f(pc.xs[i], (*pc.ys)[j]);
    if (v.is_zero()) throw PoleError("f(x_i, y_j) = 0", i + 1, j + 1);
    return v;
}

// Running product of quotients; numerator and denominator are reduced once at the end.
class QuotientProduct {
public:
    void times(const Rat& top, const Rat& bottom) {
        num_ *= top.raw().get_num();
        num_ *= bottom.raw().get_den();
        den_ *= top.raw().get_den();
        den_ *= bottom.raw().get_num();
    }
    Rat value() const { return Rat(num_, den_); }

private:
    mpz_class num_ = 1, den_ = 1;
};

long pairs(std::size_t m) { return static_cast<long>(m * (m - 1) / 2); }

// Sum-form matrices over an arbitrary field, used at the Moebius images.
template <typename T>
Matrix<T> sum_schur(const std::vector<T>& ys) {
    std::size_t m = ys.size();
    std::vector<T> e(m * m, T(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) e[i * m + j] = (ys[j] - ys[i]) / (ys[j] + ys[i]);
    return Matrix<T>(m, std::move(e), Kind::skew);
}

template <typename T>
Matrix<T> sum_main(const std::vector<T>& ys) {
    std::size_t m = ys.size();
    std::vector<T> e(m * m, T(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) e[i * m + j] = (ys[i] - ys[j]) / ((ys[i] + ys[j]) * (ys[i] + ys[j]));
    return Matrix<T>(m, std::move(e), Kind::skew);
}

template <typename T>
Matrix<T> sum_hafnian(const std::vector<T>& ys) {
    std::size_t m = ys.size();
    std::vector<T> e(m * m, T(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) e[i * m + j] = T(1) / (ys[i] + ys[j]);
    return Matrix<T>(m, std::move(e), Kind::symmetric);
}

template <typename T>
T sum_schur_product(const std::vector<T>& ys) {
    T p(1);
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) p *= (ys[j] - ys[i]) / (ys[j] + ys[i]);
    return p;
}

// Scale factors relating sum-form quantities at the mapped points to the
// g-form quantities at the original points.
struct Transport {
    std::vector<QuadExt> mapped;
    QuadExt schur_factor;   // Pf_sum(M5 at y) = factor * Pf(build_schur(x, g, 1, ji))
    QuadExt product_factor; // prod5(y) = factor * schur_product(x, g)
    QuadExt main_factor;    // Pf_sum(A7 at y) = factor * Pf(build_schur(x, g, 2, ji))
    QuadExt hafnian_factor; // Hf_sum(B at y) = factor * Hf(build_hafnian_mat(x, g))
    std::string route;
};

Transport transport_via_moebius(const std::vector<Rat>& xs, const SymmetricForm& g) {
    const long n = static_cast<long>(xs.size() / 2);
    MoebiusMap<QuadExt> phi = moebius_for(g);
    QuadExt s = form_sqrt_disc(g);
    Transport t;
    QuadExt den_product(1);
    for (const Rat& x : xs) {
        QuadExt qx(x);
        t.mapped.push_back(phi.apply(qx));
        den_product *= phi.denominator(qx);
    }
    t.schur_factor = (-s).pow(n);
    t.product_factor = (-s).pow(n * (2 * n - 1));
    t.main_factor = s.pow(n) * den_product;
    t.hafnian_factor = den_product;
    t.route = "moebius";
    return t;
}

Transport build_transport(const std::vector<Rat>& xs, const SymmetricForm& g) {
    const long n = static_cast<long>(xs.size() / 2);
    if (!g.a().is_zero()) return transport_via_moebius(xs, g);
    if (!g.c().is_zero()) {
        // x -> 1/x turns g into (c, b, 0), which has a nonzero leading coefficient
        std::vector<Rat> us;
        Rat u_product(1);
        for (const Rat& x : xs) {
            if (x.is_zero()) throw DomainError("inversion branch needs nonzero points");
            us.push_back(x.inverse());
            u_product *= us.back();
        }
        SymmetricForm inverted(g.c(), g.b(), 0);
        Transport t = transport_via_moebius(us, inverted);
        QuadExt s = form_sqrt_disc(g);
        QuadExt sign = QuadExt(n % 2 == 0 ? 1 : -1);
        t.schur_factor = s.pow(n);
        t.product_factor = s.pow(n * (2 * n - 1));
        t.main_factor = sign * t.main_factor / QuadExt(u_product);
        t.hafnian_factor = t.hafnian_factor / QuadExt(u_product);
        t.route = "inversion+moebius";
        return t;
    }
    // g = b(x+y): identity map
    Transport t;
    for (const Rat& x : xs) t.mapped.emplace_back(x);
    QuadExt b(g.b());
    t.schur_factor = b.pow(n);
    t.product_factor = b.pow(n * (2 * n - 1));
    t.main_factor = QuadExt(n % 2 == 0 ? 1 : -1) * b.pow(2 * n);
    t.hafnian_factor = b.pow(n);
    t.route = "scaled-sum";
    return t;
}

}  // namespace

Matrix<Rat> build_cauchy(const PointConfig& pc, const BilinearForm& f, int power) {
    require_power(power);
    require_ys(pc);
    const std::size_t n = pc.xs.size();
    std::vector<Rat> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = checked_f(f, pc, i, j).inverse();
            e.push_back(power == 2 ? v * v : v);
        }
    }
    return Matrix<Rat>(n, std::move(e));
}

Matrix<Rat> build_schur(const PointConfig& pc, const SymmetricForm& g, int power, Orientation orientation) {
    require_power(power);
    require_even(pc);
    const auto& xs = pc.xs;
    const std::size_t m = xs.size();
    std::vector<Rat> e(m * m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat den = checked_g(g, xs, i, j);
            if (power == 2) den *= den;
            Rat v = (xs[j] - xs[i]) / den;
            if (orientation == Orientation::ij) v = -v;
            e[i * m + j] = v;
            e[j * m + i] = -v;
        }
    }
    return Matrix<Rat>(m, std::move(e), Kind::skew);
}

Matrix<Rat> build_hafnian_mat(const PointConfig& pc, const SymmetricForm& g) {
    require_even(pc);
    const auto& xs = pc.xs;
    const std::size_t m = xs.size();
    std::vector<Rat> e(m * m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat v = checked_g(g, xs, i, j).inverse();
            e[i * m + j] = v;
            e[j * m + i] = v;
        }
    }
    return Matrix<Rat>(m, std::move(e), Kind::symmetric);
}

Rat cauchy_product(const PointConfig& pc, const BilinearForm& f) {
    const auto& ys = require_ys(pc);
    const auto& xs = pc.xs;
    const std::size_t n = xs.size();
    QuotientProduct p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) p.times((xs[j] - xs[i]) * (ys[j] - ys[i]), Rat(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.times(Rat(1), checked_f(f, pc, i, j));
    return p.value();
}

Rat cauchy_det_closed(const PointConfig& pc, const BilinearForm& f) {
    // The sign is (-1)^{n(n-1)/2}, so the base is bc - ad rather than ad - bc:
    // for f = x + y this reduces to the classical product with no sign.
    Rat base = -f.disc();
    return base.pow(pairs(pc.xs.size())) * cauchy_product(pc, f);
}

Rat schur_product(const PointConfig& pc, const SymmetricForm& g) {
    const auto& xs = pc.xs;
    QuotientProduct p;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) p.times(xs[j] - xs[i], checked_g(g, xs, i, j));
    return p.value();
}

Rat schur_pf_closed(const PointConfig& pc, const SymmetricForm& g) {
    require_even(pc);
    long n = static_cast<long>(pc.xs.size() / 2);
    return g.disc().pow(n * (n - 1)) * schur_product(pc, g);
}

Rat fast_cauchy_perm(const PointConfig& pc, const BilinearForm& f) {
    const auto& ys = require_ys(pc);
    if (f.disc().is_zero()) {
        throw DegenerateFormError("ad - bc = 0: closed-form Cauchy determinant vanishes; use perm_ryser");
    }
    if (!all_distinct(pc.xs)) throw DomainError("fast permanent needs distinct xs");
    if (!all_distinct(ys)) throw DomainError("fast permanent needs distinct ys");
    Rat closed = cauchy_det_closed(pc, f);
    return det_bareiss(build_cauchy(pc, f, 2)) / closed;
}

Rat fast_cauchy_hafnian(const PointConfig& pc, const SymmetricForm& g) {
    require_even(pc);
    if (g.disc().is_zero()) {
        throw DegenerateFormError("b^2 - ac = 0: Schur Pfaffian vanishes; use hf_recursive");
    }
    if (!all_distinct(pc.xs)) throw DomainError("fast Hafnian needs distinct xs");
    // one pass over the pairs feeds both the squared Schur matrix and its closed-form partner
    const auto& xs = pc.xs;
    const std::size_t m = xs.size();
    const long n = static_cast<long>(m / 2);
    std::vector<Rat> e(m * m, Rat(0));
    QuotientProduct prod;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat den = checked_g(g, xs, i, j);
            Rat diff = xs[j] - xs[i];
            prod.times(diff, den);
            Rat v = diff / (den * den);
            e[j * m + i] = -v;
            e[i * m + j] = std::move(v);
        }
    }
    Rat closed = g.disc().pow(n * (n - 1)) * prod.value();
    return pf_fraction_free(Matrix<Rat>(m, std::move(e), Kind::skew)) / closed;
}

QuadExt form_sqrt_disc(const SymmetricForm& g) {
    Rat d = g.disc();
    if (d.is_zero()) throw DegenerateFormError("b^2 - ac = 0");
    if (auto r = d.exact_sqrt()) return QuadExt(*r);
    return QuadExt::sqrt_of(d);
}

MoebiusMap<QuadExt> moebius_for(const SymmetricForm& g) {
    if (g.a().is_zero()) throw DomainError("Moebius reduction needs a != 0");
    QuadExt s = form_sqrt_disc(g);
    QuadExt a(g.a());
    QuadExt b(g.b());
    return MoebiusMap<QuadExt>(QuadExt(Rat(1, 2)), (b + s) / (QuadExt(2) * a), a, b - s);
}

IdentityReport substitution_witness(const PointConfig& pc, const SymmetricForm& g) {
    auto start = std::chrono::steady_clock::now();
    require_even(pc);
    if (pc.xs.empty()) throw DomainError("substitution witness needs at least two points");
    if (g.disc().is_zero()) throw DegenerateFormError("b^2 - ac = 0 has no Moebius reduction");

    IdentityReport rep;
    rep.id = IdentityId::GEN_MAIN;
    rep.size = pc.xs.size() / 2;
    rep.params = {{"points", to_json(pc)}, {"form", to_json(g)}, {"check", "substitution"}};

    Transport t = build_transport(pc.xs, g);
    rep.params["route"] = t.route;

    // general-form quantities at the original points
    Rat schur_g = pf_elimination(build_schur(pc, g, 1, Orientation::ji));
    Rat main_g = pf_elimination(build_schur(pc, g, 2, Orientation::ji));
    Rat hf_g = hf_recursive(build_hafnian_mat(pc, g));
    Rat prod_g = schur_product(pc, g);
    long n = static_cast<long>(rep.size);
    Rat disc_power = g.disc().pow(n * (n - 1));

    // sum-form quantities at the mapped points
    QuadExt schur_y = pf_elimination(sum_schur(t.mapped));
    QuadExt prod_y = sum_schur_product(t.mapped);
    QuadExt main_y = pf_elimination(sum_main(t.mapped));
    QuadExt hf_y = hf_recursive(sum_hafnian(t.mapped));
    QuadExt sign_n(n % 2 == 0 ? 1 : -1);

    std::vector<std::string> failed;
    auto expect = [&](bool ok, const char* what) {
        if (!ok) failed.emplace_back(what);
    };
    expect(schur_y == prod_y, "sum-form Schur identity at mapped points");
    expect(main_y == sign_n * prod_y * hf_y, "sum-form Pfaffian-Hafnian identity at mapped points");
    expect(schur_y == t.schur_factor * QuadExt(schur_g), "Schur Pfaffian transport");
    expect(prod_y == t.product_factor * QuadExt(prod_g), "Schur product transport");
    expect(main_y == t.main_factor * QuadExt(main_g), "main Pfaffian transport");
    expect(hf_y == t.hafnian_factor * QuadExt(hf_g), "Hafnian transport");
    expect(schur_g == disc_power * prod_g, "general Schur identity at original points");

    QuadExt recovered = main_y / t.main_factor;
    Rat rhs = disc_power * prod_g * hf_g;
    rep.rhs = rhs.str();
    rep.lhs = recovered.str();
    if (!recovered.is_rational()) {
        failed.emplace_back("odd power of the square root survived in the recovered Pfaffian");
    } else {
        expect(recovered.to_rat() == main_g, "recovered Pfaffian matches direct evaluation");
        expect(recovered.to_rat() == rhs, "general Pfaffian-Hafnian identity at original points");
    }

    rep.pass = failed.empty();
    for (const auto& f : failed) rep.note += (rep.note.empty() ? "" : "; ") + f;
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

}  // namespace pfhaf
