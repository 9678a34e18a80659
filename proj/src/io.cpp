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

#include "pomalg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace pomalg::io {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw FormatError("at " + (path.empty() ? "/" : path) + ": " + what);
}

const json &member(const json &j, const char *key, const std::string &path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail(path, std::string("missing key \"") + key + "\"");
    }
    return *it;
}

double number_at(const json &j, const std::string &path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

Index index_at(const json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        fail(path, "expected a positive integer");
    }
    return static_cast<Index>(j.get<long long>());
}

} // namespace

double sig12(double x) {
    if (x == 0.0 || !std::isfinite(x)) {
        return x;
    }
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.11e", x);
    return std::strtod(buffer, nullptr);
}

json complex_to_json(Complex z) {
    return json::array({sig12(z.real()), sig12(z.imag())});
}

Complex complex_from_json(const json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2) {
        fail(path, "expected a complex number as [re, im]");
    }
    return {number_at(j[0], path + "/0"), number_at(j[1], path + "/1")};
}

json to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index k = 0; k < m.cols(); ++k) {
            row.push_back(complex_to_json(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        fail(path, "expected a non-empty array of rows");
    }
    const Index rows = static_cast<Index>(j.size());
    if (!j[0].is_array() || j[0].empty()) {
        fail(path + "/0", "expected a non-empty row");
    }
    const Index cols = static_cast<Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const auto &row = j[static_cast<std::size_t>(i)];
        const std::string row_path = path + "/" + std::to_string(i);
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            fail(row_path, "ragged matrix row");
        }
        for (Index k = 0; k < cols; ++k) {
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                        row_path + "/" + std::to_string(k));
        }
    }
    return m;
}

json ket_to_json(const ComplexVector &v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v[i]));
    }
    return out;
}

ComplexVector ket_from_json(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        fail(path, "expected a non-empty array of complex numbers");
    }
    ComplexVector v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i) {
        v[i] = complex_from_json(j[static_cast<std::size_t>(i)],
                                 path + "/" + std::to_string(i));
    }
    return v;
}

json to_json(const State &psi) {
    return json{{"dim", psi.dim()}, {"amplitudes", ket_to_json(psi.ket)}};
}

State state_from_json(const json &j) {
    const Index dim = index_at(member(j, "dim", ""), "/dim");
    ComplexVector v = ket_from_json(member(j, "amplitudes", ""),
                                    "/amplitudes");
    if (v.size() != dim) {
        fail("/amplitudes", "length does not match dim");
    }
    return State(std::move(v));
}

json to_json(const GeneralPom &pom) {
    json elements = json::array();
    for (const auto &e : pom.elements) {
        elements.push_back(
            {{"outcome", sig12(e.outcome)}, {"matrix", to_json(e.op)}});
    }
    return json{{"dim", pom.dim},
                {"kind", "general"},
                {"elements", std::move(elements)}};
}

json to_json(const MaximalPom &pom) {
    json elements = json::array();
    for (const auto &e : pom.elements) {
        elements.push_back(
            {{"outcome", sig12(e.outcome)}, {"ket", ket_to_json(e.ket)}});
    }
    return json{{"dim", pom.dim},
                {"kind", "maximal"},
                {"elements", std::move(elements)}};
}

AnyPom pom_from_json(const json &j) {
    const Index dim = index_at(member(j, "dim", ""), "/dim");
    const json &kind = member(j, "kind", "");
    const json &elements = member(j, "elements", "");
    if (!elements.is_array() || elements.empty()) {
        fail("/elements", "expected a non-empty array");
    }
    if (kind == "general") {
        GeneralPom pom;
        pom.dim = dim;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const std::string path = "/elements/" + std::to_string(i);
            const json &e = elements[i];
            const double outcome =
                number_at(member(e, "outcome", path), path + "/outcome");
            ComplexMatrix op = matrix_from_json(member(e, "matrix", path),
                                                path + "/matrix");
            if (op.rows() != dim || op.cols() != dim) {
                fail(path + "/matrix", "shape does not match dim");
            }
            pom.elements.push_back({outcome, std::move(op)});
        }
        return pom;
    }
    if (kind == "maximal") {
        MaximalPom pom;
        pom.dim = dim;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const std::string path = "/elements/" + std::to_string(i);
            const json &e = elements[i];
            const double outcome =
                number_at(member(e, "outcome", path), path + "/outcome");
            ComplexVector ket =
                ket_from_json(member(e, "ket", path), path + "/ket");
            if (ket.size() != dim) {
                fail(path + "/ket", "length does not match dim");
            }
            pom.elements.push_back({outcome, std::move(ket)});
        }
        return pom;
    }
    fail("/kind", "expected \"general\" or \"maximal\"");
}

GeneralPom to_general(const AnyPom &pom) {
    if (std::holds_alternative<GeneralPom>(pom)) {
        return std::get<GeneralPom>(pom);
    }
    return std::get<MaximalPom>(pom).to_general();
}

json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open file: " + path);
    }
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        throw FormatError("malformed JSON in " + path);
    }
    return j;
}

void save_json(const json &j, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot open file for writing: " + path);
    }
    out << j.dump(2) << "\n";
}

} // namespace pomalg::io
