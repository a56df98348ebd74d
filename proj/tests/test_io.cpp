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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pfhaf/errors.hpp"
#include "pfhaf/io.hpp"
#include "pfhaf/report.hpp"

using namespace pfhaf;
using nlohmann::json;

namespace {

Rat q(const char* s) { return Rat::parse(s); }

}  // namespace

TEST_CASE("matrix JSON round trip") {
    auto m = Matrix<Rat>::from_rows({{0, q("1/2")}, {q("-1/2"), 0}});
    json j = to_json(m);
    CHECK(j["kind"] == "skew");
    CHECK(j["entries"][0][1] == "1/2");
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_from_json(json::parse(j.dump())).kind() == Kind::skew);
}

TEST_CASE("matrix JSON accepts integers and checks declared kinds") {
    auto j = json::parse(R"({"n":2,"entries":[[1,2],[2,"3/4"]]})");
    auto m = matrix_from_json(j);
    CHECK(m.kind() == Kind::symmetric);
    CHECK(m(1, 1) == q("3/4"));
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":2,"kind":"skew","entries":[[0,1],[1,0]]})")), DomainError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":2,"kind":"weird","entries":[[0,1],[1,0]]})")), DomainError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":2,"entries":[[0,1]]})")), DomainError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":2,"entries":[[0,1],[1]]})")), DomainError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"entries":[]})")), DomainError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":1,"entries":[["x"]]})")), DomainError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":1,"entries":[[1.5]]})")), DomainError);
}

TEST_CASE("quadratic element JSON") {
    QuadExt v(q("1/2"), Rat(-3), Rat(5));
    json j = to_json(v);
    CHECK(j["p"] == "1/2");
    CHECK(j["d"] == "5");
    CHECK(quad_from_json(j) == v);
    json r = to_json(QuadExt(Rat(7)));
    CHECK_FALSE(r.contains("d"));
    CHECK(quad_from_json(r) == QuadExt(7));
    CHECK_THROWS_AS(quad_from_json(json::parse(R"({"p":"1","q":"2"})")), DomainError);
    CHECK_THROWS_AS(quad_from_json(json::parse(R"({"p":"1","q":"2","d":"9"})")), DomainError);
}

TEST_CASE("forms and points JSON") {
    BilinearForm f(1, q("-2/3"), 0, 5);
    CHECK(bilinear_from_json(to_json(f)) == f);
    SymmetricForm g(1, 1, -1);
    CHECK(symmetric_from_json(to_json(g)) == g);
    PointConfig pc{{q("1/2"), Rat(3)}, std::vector<Rat>{Rat(4), Rat(5)}};
    auto back = point_config_from_json(to_json(pc));
    CHECK(back.xs == pc.xs);
    CHECK(back.ys == pc.ys);
    CHECK_FALSE(point_config_from_json(json::parse(R"({"xs":["1"]})")).ys.has_value());
    CHECK_THROWS_AS(symmetric_from_json(json::parse(R"({"a":"0","b":"0","c":"0"})")), DomainError);
    CHECK_THROWS_AS(point_config_from_json(json::parse(R"({"ys":[]})")), DomainError);
}

TEST_CASE("CSV grids") {
    std::istringstream comma("1,2\n3,4\n");
    CHECK(read_csv_grid(comma) == Matrix<Rat>::from_rows({{1, 2}, {3, 4}}));
    std::istringstream mixed("0; 1/2\t-1\n-1/2 0 3\n\n1 -3 0\r\n");
    auto m = read_csv_grid(mixed);
    CHECK(m.size() == 3);
    CHECK(m(0, 1) == q("1/2"));
    CHECK(m(2, 1) == Rat(-3));
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_csv_grid(ragged), DomainError);
    std::istringstream bad("1,x\n3,4\n");
    CHECK_THROWS_AS(read_csv_grid(bad), DomainError);
}

TEST_CASE("matrix files") {
    auto dir = std::filesystem::temp_directory_path() / "pfhaf_io_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "m.json") << R"({"n":2,"kind":"skew","entries":[["0","1"],["-1","0"]]})";
        std::ofstream(dir / "m.csv") << "0,1\n-1,0\n";
        std::ofstream(dir / "bad.json") << "{not json";
    }
    CHECK(read_matrix_file(dir / "m.json", false) == read_matrix_file(dir / "m.csv", true));
    CHECK_THROWS_AS(read_matrix_file(dir / "bad.json", false), DomainError);
    CHECK_THROWS_AS(read_matrix_file(dir / "missing.json", false), DomainError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("report lines") {
    IdentityReport r;
    r.id = IdentityId::BORCH1;
    r.size = 2;
    r.lhs = "49/360000";
    r.rhs = "49/360000";
    r.pass = true;
    r.elapsed = std::chrono::nanoseconds(1500);
    auto j = json::parse(to_json_line(r, true));
    CHECK(j["id"] == "BORCH1");
    CHECK(j["elapsed_ns"] == 1500);
    CHECK_FALSE(j.contains("note"));
    auto line = to_json_line(r, false);
    CHECK(line.find("elapsed_ns") == std::string::npos);
    CHECK(line.rfind("{\"id\":\"BORCH1\",\"size\":2", 0) == 0);
}
