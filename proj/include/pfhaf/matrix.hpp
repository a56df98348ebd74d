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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfhaf/errors.hpp"

namespace pfhaf {

enum class Kind { general, symmetric, skew };

std::string_view to_string(Kind k);
/// Throws DomainError for anything but "general", "symmetric", "skew".
Kind kind_from_string(std::string_view s);

/**
 * Rows/columns to remove from a matrix. Indices are 1-based, stored sorted.
 */
class IndexSet {
public:
    IndexSet() = default;
    /// Throws DomainError on a zero or repeated index.
    IndexSet(std::initializer_list<std::size_t> idx) : IndexSet(std::vector<std::size_t>(idx)) {}
    explicit IndexSet(std::vector<std::size_t> idx);

    const std::vector<std::size_t>& indices() const noexcept { return idx_; }
    std::size_t size() const noexcept { return idx_.size(); }
    bool empty() const noexcept { return idx_.empty(); }
    bool contains(std::size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

private:
    std::vector<std::size_t> idx_;
};

/**
 * Dense n x n matrix, row-major, with a kind tag.
 *
 * Element access through operator() is 0-based. The kind tag is verified
 * whenever one is supplied; otherwise it is computed by classify().
 */
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)), kind_(Kind::skew) {}
    Matrix(std::size_t n, std::vector<T> entries);
    Matrix(std::size_t n, std::vector<T> entries, Kind declared);

    static Matrix from_rows(const std::vector<std::vector<T>>& rows);
    static Matrix identity(std::size_t n);
    static Matrix constant(std::size_t n, const T& v);

    std::size_t size() const noexcept { return n_; }
    Kind kind() const noexcept { return kind_; }

    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::span<const T> entries() const noexcept { return data_; }

    bool is_symmetric() const;
    bool is_skew() const;

    /// Copy with a transformed entry set; the kind is recomputed.
    template <typename F>
    Matrix map(F&& f) const {
        std::vector<T> out;
        out.reserve(data_.size());
        for (const auto& v : data_) out.push_back(f(v));
        return Matrix(n_, std::move(out));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
    Kind kind_ = Kind::skew;
};

template <typename T>
bool Matrix<T>::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

template <typename T>
bool Matrix<T>::is_skew() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(*this)(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!((*this)(i, j) == -(*this)(j, i))) return false;
    }
    return true;
}

/// Strictest applicable tag: skew, then symmetric, then general.
template <typename T>
Kind classify(const Matrix<T>& m) {
    if (m.is_skew()) return Kind::skew;
    if (m.is_symmetric()) return Kind::symmetric;
    return Kind::general;
}

template <typename T>
Matrix<T>::Matrix(std::size_t n, std::vector<T> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n) {
        throw DomainError("matrix of dimension " + std::to_string(n) + " needs " + std::to_string(n * n) +
                          " entries, got " + std::to_string(data_.size()));
    }
    kind_ = classify(*this);
}

template <typename T>
Matrix<T>::Matrix(std::size_t n, std::vector<T> entries, Kind declared) : Matrix(n, std::move(entries)) {
    bool ok = declared == Kind::general || (declared == Kind::skew && is_skew()) ||
              (declared == Kind::symmetric && is_symmetric());
    if (!ok) throw DomainError("matrix entries are not " + std::string(to_string(declared)));
    kind_ = declared;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t n = rows.size();
    std::vector<T> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw DomainError("matrix is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Matrix(n, std::move(flat));
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    std::vector<T> flat(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = T(1);
    return Matrix(n, std::move(flat));
}

template <typename T>
Matrix<T> Matrix<T>::constant(std::size_t n, const T& v) {
    return Matrix(n, std::vector<T>(n * n, v));
}

/// Deletes the rows and columns listed in `s`; remaining order is kept and the kind tag carried over.
template <typename T>
Matrix<T> minor(const Matrix<T>& m, const IndexSet& s) {
    std::size_t n = m.size();
    if (s.size() > n) throw DomainError("cannot remove more indices than the dimension");
    for (std::size_t i : s.indices()) {
        if (i > n) throw DomainError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    }
    std::vector<std::size_t> keep;
    keep.reserve(n - s.size());
    for (std::size_t i = 1; i <= n; ++i)
        if (!s.contains(i)) keep.push_back(i - 1);
    std::vector<T> out;
    out.reserve(keep.size() * keep.size());
    for (std::size_t i : keep)
        for (std::size_t j : keep) out.push_back(m(i, j));
    Kind k = m.kind();
    return Matrix<T>(keep.size(), std::move(out), k);
}

/// P * M * Q, with P and Q the permutation matrices sending row i to row_perm[i]
/// and column j to col_perm[j] (0-based images).
template <typename T>
Matrix<T> permute(const Matrix<T>& m, std::span<const std::size_t> row_perm, std::span<const std::size_t> col_perm) {
    std::size_t n = m.size();
    if (row_perm.size() != n || col_perm.size() != n) throw DomainError("permutation length mismatch");
    std::vector<T> out(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[row_perm[i] * n + col_perm[j]] = m(i, j);
    return Matrix<T>(n, std::move(out));
}

/// P * M * P^T.
template <typename T>
Matrix<T> conjugate_by(const Matrix<T>& m, std::span<const std::size_t> perm) {
    return permute(m, perm, perm);
}

/// +1 or -1 by inversion count.
int permutation_sign(std::span<const std::size_t> perm);

template <typename T>
Matrix<T> scale(const Matrix<T>& m, const T& c) {
    return m.map([&](const T& v) { return v * c; });
}

}  // namespace pfhaf
