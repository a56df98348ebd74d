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

#include "pfhaf/forms.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pfhaf/errors.hpp"

namespace pfhaf {

namespace {

std::string compact(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

bool all_distinct(std::span<const Rat> v) {
    std::set<Rat> seen(v.begin(), v.end());
    return seen.size() == v.size();
}

std::vector<Rat> parse_rat_list(std::string_view text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    if (compact(text).empty()) return out;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(Rat::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

BilinearForm::BilinearForm(Rat a, Rat b, Rat c, Rat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero()) {
        throw DomainError("bilinear form is identically zero");
    }
}

BilinearForm BilinearForm::parse(std::string_view text) {
    std::string s = compact(text);
    if (s == "x+y") return sum();
    if (s == "1-xy") return one_minus_product();
    auto v = parse_rat_list(s);
    if (v.size() != 4) throw DomainError("bilinear form needs \"x+y\", \"1-xy\" or a,b,c,d; got '" + s + "'");
    return {v[0], v[1], v[2], v[3]};
}

SymmetricForm::SymmetricForm(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.is_zero() && b_.is_zero() && c_.is_zero()) throw DomainError("symmetric form is identically zero");
}

SymmetricForm SymmetricForm::parse(std::string_view text) {
    std::string s = compact(text);
    if (s == "x+y") return sum();
    if (s == "1-xy") return one_minus_product();
    auto v = parse_rat_list(s);
    if (v.size() != 3) throw DomainError("symmetric form needs \"x+y\", \"1-xy\" or a,b,c; got '" + s + "'");
    return {v[0], v[1], v[2]};
}

}  // namespace pfhaf
