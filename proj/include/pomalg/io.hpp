// Copyright 2026 The pomalg developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "pomalg/pom.hpp"

namespace pomalg::io {

using nlohmann::json;

/// Canonical document convention: complex numbers as [re, im] pairs and all
/// floating-point output rounded to 12 significant digits, so that emitted
/// documents re-parse to identical values.
double sig12(double x);

json complex_to_json(Complex z);
Complex complex_from_json(const json &j, const std::string &path);

json to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j, const std::string &path);
json ket_to_json(const ComplexVector &v);
ComplexVector ket_from_json(const json &j, const std::string &path);

json to_json(const State &psi);
State state_from_json(const json &j);

json to_json(const GeneralPom &pom);
json to_json(const MaximalPom &pom);

using AnyPom = std::variant<GeneralPom, MaximalPom>;
/// Dispatches on "kind": "general" or "maximal".
AnyPom pom_from_json(const json &j);

GeneralPom to_general(const AnyPom &pom);

/// File helpers; FormatError on unreadable or malformed content.
json load_json(const std::string &path);
void save_json(const json &j, const std::string &path);

} // namespace pomalg::io
