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

#include "pfhaf/matrix.hpp"

namespace pfhaf {

std::string_view to_string(Kind k) {
    switch (k) {
        case Kind::general: return "general";
        case Kind::symmetric: return "symmetric";
        case Kind::skew: return "skew";
    }
    return "general";
}

Kind kind_from_string(std::string_view s) {
    if (s == "general") return Kind::general;
    if (s == "symmetric") return Kind::symmetric;
    if (s == "skew") return Kind::skew;
    throw DomainError("unknown matrix kind '" + std::string(s) + "'");
}

IndexSet::IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    if (!idx_.empty() && idx_.front() == 0) throw DomainError("index 0 in a 1-based index set");
    if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
        throw DomainError("duplicated index in index set");
    }
}

int permutation_sign(std::span<const std::size_t> perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace pfhaf
