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

#include "pfhaf/errors.hpp"
#include "pfhaf/forms.hpp"
#include "pfhaf/matrix.hpp"
#include "pfhaf/quad_ext.hpp"
#include "pfhaf/rat.hpp"
#include "pfhaf/report.hpp"

namespace pfhaf {

/// Sign of the Schur-type numerator: ji puts x_j - x_i at [i][j], ij puts x_i - x_j.
enum class Orientation { ji, ij };

/// [i][j] = 1 / f(x_i, y_j)^power, power in {1, 2}.
Matrix<Rat> build_cauchy(const PointConfig& pc, const BilinearForm& f, int power);

/// Skew matrix with [i][j] = +-(x_j - x_i) / g(x_i, x_j)^power, zero diagonal.
Matrix<Rat> build_schur(const PointConfig& pc, const SymmetricForm& g, int power, Orientation orientation);

/// Symmetric matrix with [i][j] = 1 / g(x_i, x_j) off the diagonal and 0 on it.
Matrix<Rat> build_hafnian_mat(const PointConfig& pc, const SymmetricForm& g);

/// prod_{i<j} (x_j-x_i)(y_j-y_i) / prod_{i,j} f(x_i,y_j).
Rat cauchy_product(const PointConfig& pc, const BilinearForm& f);

/// Determinant of build_cauchy(pc, f, 1) in closed form:
/// (bc-ad)^{n(n-1)/2} * cauchy_product(pc, f).
Rat cauchy_det_closed(const PointConfig& pc, const BilinearForm& f);

/// prod_{i<j} (x_j - x_i) / g(x_i, x_j), without the discriminant factor.
Rat schur_product(const PointConfig& pc, const SymmetricForm& g);

/// (b^2-ac)^{n(n-1)} prod_{i<j} (x_j - x_i) / g(x_i, x_j).
Rat schur_pf_closed(const PointConfig& pc, const SymmetricForm& g);

/**
 * Permanent of [1/f(x_i,y_j)] in O(n^3) as det[1/f^2] / det[1/f], with the
 * denominator taken from its closed product form.
 *
 * Throws DegenerateFormError when ad - bc = 0 and DomainError when the xs or the
 * ys repeat; perm_ryser on build_cauchy is the fallback in both cases.
 */
Rat fast_cauchy_perm(const PointConfig& pc, const BilinearForm& f);

/**
 * Hafnian of [1/g(x_i,x_j)] in O(n^3) as Pf[(x_j-x_i)/g^2] divided by the
 * closed form of Pf[(x_j-x_i)/g]. Both use the ji orientation, so signs cancel.
 *
 * Throws DegenerateFormError when b^2 - ac = 0 (fall back to hf_recursive) and
 * DomainError on repeated xs or odd length.
 */
Rat fast_cauchy_hafnian(const PointConfig& pc, const SymmetricForm& g);

/// z -> (A z + B) / (C z + D), AD - BC != 0.
template <typename T>
class MoebiusMap {
public:
    MoebiusMap(T A, T B, T C, T D) : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)) {
        if (determinant().is_zero()) throw DomainError("Moebius map with AD - BC = 0");
    }

    static MoebiusMap identity() { return MoebiusMap(T(1), T(0), T(0), T(1)); }

    T apply(const T& z) const {
        T den = C_ * z + D_;
        if (den.is_zero()) throw PoleError("Moebius denominator C*z + D vanishes");
        return (A_ * z + B_) / den;
    }

    /// Denominator C*z + D at z.
    T denominator(const T& z) const { return C_ * z + D_; }

    T determinant() const { return A_ * D_ - B_ * C_; }

    MoebiusMap inverse() const { return MoebiusMap(D_, -B_, -C_, A_); }

    /// this o other, i.e. z -> this(other(z)).
    MoebiusMap compose(const MoebiusMap& other) const {
        return MoebiusMap(A_ * other.A_ + B_ * other.C_, A_ * other.B_ + B_ * other.D_,
                          C_ * other.A_ + D_ * other.C_, C_ * other.B_ + D_ * other.D_);
    }

    const T& A() const noexcept { return A_; }
    const T& B() const noexcept { return B_; }
    const T& C() const noexcept { return C_; }
    const T& D() const noexcept { return D_; }

private:
    T A_, B_, C_, D_;
};

/// sqrt(b^2 - ac) as a rational when it is a square, else as a QuadExt generator.
QuadExt form_sqrt_disc(const SymmetricForm& g);

/**
 * The map sending g back to the sum form: A = 1/2, B = (b + s)/(2a), C = a,
 * D = b - s with s = sqrt(b^2 - ac). Requires a != 0 and b^2 - ac != 0.
 */
MoebiusMap<QuadExt> moebius_for(const SymmetricForm& g);

/**
 * Checks that the classical sum-form Schur and Pfaffian-Hafnian identities,
 * evaluated at the Moebius images of the points, transport exactly onto the
 * general-form identities for g at the original points.
 *
 * a != 0 uses moebius_for(g); a = 0, c != 0 first inverts x -> 1/x (zero
 * points are rejected); a = c = 0 is the sum form up to the factor b.
 * Work happens in Q(sqrt(b^2-ac)). Throws DegenerateFormError when b^2-ac = 0.
 */
IdentityReport substitution_witness(const PointConfig& pc, const SymmetricForm& g);

}  // namespace pfhaf
