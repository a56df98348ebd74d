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

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace pfhaf {

enum class IdentityId {
    CAUCHY1,
    CAUCHY2,
    BORCH1,
    BORCH2,
    SCHUR1,
    SCHUR2,
    MAIN1,
    MAIN2,
    GEN_DET,
    GEN_BORCH,
    GEN_SCHUR,
    GEN_MAIN,
    LEMMA1,
    LEMMA2,
    CARLITZ,
    DEGENERATE_PF,
};

inline constexpr std::array kAllIdentities = {
    IdentityId::CAUCHY1,   IdentityId::CAUCHY2,  IdentityId::BORCH1,    IdentityId::BORCH2,
    IdentityId::SCHUR1,    IdentityId::SCHUR2,   IdentityId::MAIN1,     IdentityId::MAIN2,
    IdentityId::GEN_DET,   IdentityId::GEN_BORCH, IdentityId::GEN_SCHUR, IdentityId::GEN_MAIN,
    IdentityId::LEMMA1,    IdentityId::LEMMA2,   IdentityId::CARLITZ,   IdentityId::DEGENERATE_PF,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view s);

/// Outcome of one exact identity check. pass holds iff lhs and rhs are equal
/// as exact values (and, for composite checks, every sub-check held).
struct IdentityReport {
    IdentityId id = IdentityId::CAUCHY1;
    std::size_t size = 0;
    std::size_t trial = 0;
    nlohmann::json params = nlohmann::json::object();
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string note;
    std::chrono::nanoseconds elapsed{0};
};

/// One JSON object, no trailing newline. Timing is omitted when with_timing is false.
std::string to_json_line(const IdentityReport& r, bool with_timing = true);

}  // namespace pfhaf
