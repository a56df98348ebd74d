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

#include <filesystem>
#include <istream>

#include <json.hpp>

#include "pfhaf/forms.hpp"
#include "pfhaf/matrix.hpp"
#include "pfhaf/quad_ext.hpp"
#include "pfhaf/rat.hpp"

namespace pfhaf {

using nlohmann::json;

// Malformed input raises DomainError throughout.

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// {"p":"1/2","q":"1","d":"2"}; "d" is omitted for an element without radicand.
json to_json(const QuadExt& v);
QuadExt quad_from_json(const json& j);

/// {"n":2,"kind":"skew","entries":[["0","1/3"],["-1/3","0"]]}
json to_json(const Matrix<Rat>& m);
Matrix<Rat> matrix_from_json(const json& j);

/// {"xs":[...],"ys":[...]}
json to_json(const PointConfig& pc);
PointConfig point_config_from_json(const json& j);

/// {"a":"0","b":"1","c":"1","d":"0"}
json to_json(const BilinearForm& f);
BilinearForm bilinear_from_json(const json& j);

/// {"a":"1","b":"0","c":"-1"}
json to_json(const SymmetricForm& g);
SymmetricForm symmetric_from_json(const json& j);

/// Comma- or whitespace-separated grid of rationals, one row per line.
Matrix<Rat> read_csv_grid(std::istream& in);

/// Reads the JSON matrix format, or a CSV grid when `csv` is set.
Matrix<Rat> read_matrix_file(const std::filesystem::path& path, bool csv);

}  // namespace pfhaf
