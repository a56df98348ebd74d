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

#include "pfhaf/report.hpp"

namespace pfhaf {

std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::CAUCHY1: return "CAUCHY1";
        case IdentityId::CAUCHY2: return "CAUCHY2";
        case IdentityId::BORCH1: return "BORCH1";
        case IdentityId::BORCH2: return "BORCH2";
        case IdentityId::SCHUR1: return "SCHUR1";
        case IdentityId::SCHUR2: return "SCHUR2";
        case IdentityId::MAIN1: return "MAIN1";
        case IdentityId::MAIN2: return "MAIN2";
        case IdentityId::GEN_DET: return "GEN_DET";
        case IdentityId::GEN_BORCH: return "GEN_BORCH";
        case IdentityId::GEN_SCHUR: return "GEN_SCHUR";
        case IdentityId::GEN_MAIN: return "GEN_MAIN";
        case IdentityId::LEMMA1: return "LEMMA1";
        case IdentityId::LEMMA2: return "LEMMA2";
        case IdentityId::CARLITZ: return "CARLITZ";
        case IdentityId::DEGENERATE_PF: return "DEGENERATE_PF";
    }
    return "UNKNOWN";
}

std::optional<IdentityId> identity_from_string(std::string_view s) {
    for (IdentityId id : kAllIdentities)
        if (to_string(id) == s) return id;
    return std::nullopt;
}

std::string to_json_line(const IdentityReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["id"] = std::string(to_string(r.id));
    j["size"] = r.size;
    j["trial"] = r.trial;
    j["params"] = nlohmann::ordered_json::parse(r.params.dump());
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    if (with_timing) j["elapsed_ns"] = r.elapsed.count();
    return j.dump();
}

}  // namespace pfhaf
