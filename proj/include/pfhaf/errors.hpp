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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfhaf {

/// A precondition on the values of the inputs was violated.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An oracle or guarded kernel was asked for a dimension above its limit.
class SizeError : public std::length_error {
public:
    SizeError(const std::string& what, std::size_t requested, std::size_t limit)
        : std::length_error(what + " (requested " + std::to_string(requested) +
                            ", limit " + std::to_string(limit) + ")"),
          requested_(requested),
          limit_(limit) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

/// A form vanished at a sampled pair, so a matrix entry would be 1/0.
/// Indices are 1-based.
class PoleError : public DomainError {
public:
    /// A pole not tied to a matrix position; row() and col() report 0.
    explicit PoleError(const std::string& what) : DomainError(what), i_(0), j_(0) {}
    PoleError(const std::string& what, std::size_t i, std::size_t j)
        : DomainError(what + " at (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          i_(i),
          j_(j) {}

    std::size_t row() const noexcept { return i_; }
    std::size_t col() const noexcept { return j_; }

private:
    std::size_t i_;
    std::size_t j_;
};

/// The form's discriminant is zero, so the division-form fast path is undefined.
class DegenerateFormError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Random instance generation could not satisfy its constraints.
class GenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pfhaf
