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

#include "pfhaf/io.hpp"

#include <fstream>
#include <sstream>

#include "pfhaf/errors.hpp"

namespace pfhaf {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw DomainError("expected a rational string, got " + j.dump());
}

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::vector<Rat> rat_array(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(rat_from_json(v));
    return out;
}

json rat_array_json(std::span<const Rat> v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

}  // namespace

json to_json(const QuadExt& v) {
    json j = {{"p", v.rational_part().str()}, {"q", v.radical_part().str()}};
    if (v.radicand()) j["d"] = v.radicand()->str();
    return j;
}

QuadExt quad_from_json(const json& j) {
    Rat p = rat_from_json(field(j, "p"));
    Rat q = j.contains("q") ? rat_from_json(j.at("q")) : Rat(0);
    if (!j.contains("d") || j.at("d").is_null()) {
        if (!q.is_zero()) throw DomainError("quadratic element with nonzero q needs a radicand d");
        return QuadExt(p);
    }
    return QuadExt(p, q, rat_from_json(j.at("d")));
}

json to_json(const Matrix<Rat>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(rat_array_json(m.row(i)));
    return {{"n", m.size()}, {"kind", std::string(to_string(m.kind()))}, {"entries", rows}};
}

Matrix<Rat> matrix_from_json(const json& j) {
    const json& nj = field(j, "n");
    if (!nj.is_number_unsigned() && !(nj.is_number_integer() && nj.get<long>() >= 0)) {
        throw DomainError("'n' must be a non-negative integer");
    }
    auto n = nj.get<std::size_t>();
    const json& rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != n) throw DomainError("'entries' must have n rows");
    std::vector<Rat> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        auto r = rat_array(row, "matrix row");
        if (r.size() != n) throw DomainError("every matrix row must have n entries");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    if (j.contains("kind")) {
        return Matrix<Rat>(n, std::move(flat), kind_from_string(j.at("kind").get<std::string>()));
    }
    return Matrix<Rat>(n, std::move(flat));
}

json to_json(const PointConfig& pc) {
    json j = {{"xs", rat_array_json(pc.xs)}};
    if (pc.ys) j["ys"] = rat_array_json(*pc.ys);
    return j;
}

PointConfig point_config_from_json(const json& j) {
    PointConfig pc;
    pc.xs = rat_array(field(j, "xs"), "xs");
    if (j.contains("ys") && !j.at("ys").is_null()) pc.ys = rat_array(j.at("ys"), "ys");
    return pc;
}

json to_json(const BilinearForm& f) {
    return {{"a", f.a().str()}, {"b", f.b().str()}, {"c", f.c().str()}, {"d", f.d().str()}};
}

BilinearForm bilinear_from_json(const json& j) {
    return {rat_from_json(field(j, "a")), rat_from_json(field(j, "b")), rat_from_json(field(j, "c")),
            rat_from_json(field(j, "d"))};
}

json to_json(const SymmetricForm& g) { return {{"a", g.a().str()}, {"b", g.b().str()}, {"c", g.c().str()}}; }

SymmetricForm symmetric_from_json(const json& j) {
    return {rat_from_json(field(j, "a")), rat_from_json(field(j, "b")), rat_from_json(field(j, "c"))};
}

Matrix<Rat> read_csv_grid(std::istream& in) {
    std::vector<std::vector<Rat>> rows;
    std::string line;
    while (std::getline(in, line)) {
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
        std::istringstream ls(line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok) row.push_back(Rat::parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return Matrix<Rat>::from_rows(rows);
}

Matrix<Rat> read_matrix_file(const std::filesystem::path& path, bool csv) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path.string());
    if (csv) return read_csv_grid(in);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return matrix_from_json(j);
}

}  // namespace pfhaf
