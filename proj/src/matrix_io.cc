// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqc1sim/matrix_io.h"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dqc1sim/errors.h"

namespace dqc1sim {

namespace {

using nlohmann::json;

void read_part(const json &rows, std::size_t dim, const char *name, Matrix &out, bool imaginary) {
    if (!rows.is_array() || rows.size() != dim) {
        throw Error(ErrorKind::InputFormat, std::string("\"") + name + "\" must be an array of " +
                                                std::to_string(dim) + " rows");
    }
    for (std::size_t i = 0; i < dim; i++) {
        const json &row = rows[i];
        if (!row.is_array() || row.size() != dim) {
            throw Error(ErrorKind::InputFormat, std::string("row ") + std::to_string(i) + " of \"" + name +
                                                    "\" must have " + std::to_string(dim) + " entries");
        }
        for (std::size_t j = 0; j < dim; j++) {
            if (!row[j].is_number()) {
                throw Error(ErrorKind::InputFormat, std::string("non-numeric entry in \"") + name + "\"");
            }
            double v = row[j].get<double>();
            auto r = static_cast<Eigen::Index>(i);
            auto c = static_cast<Eigen::Index>(j);
            if (imaginary) {
                out(r, c).imag(v);
            } else {
                out(r, c).real(v);
            }
        }
    }
}

}  // namespace

UnitarySpec parse_unitary_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::InputFormat, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re") || !doc.contains("im")) {
        throw Error(ErrorKind::InputFormat, "matrix file needs \"dim\", \"re\" and \"im\"");
    }
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
        throw Error(ErrorKind::InputFormat, "\"dim\" must be a positive integer");
    }
    auto dim = doc["dim"].get<std::size_t>();
    if (dim > kMaxDenseDim) {
        throw Error(ErrorKind::DimTooLarge, "matrix dimension " + std::to_string(dim) + " exceeds " +
                                                std::to_string(kMaxDenseDim));
    }
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    read_part(doc["re"], dim, "re", m, false);
    read_part(doc["im"], dim, "im", m, true);
    return UnitarySpec::dense(std::move(m));
}

UnitarySpec load_unitary_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InputFormat, "cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_unitary_json(buf.str());
}

std::string unitary_to_json(const Matrix &m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        json rr = json::array(), ii = json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            rr.push_back(m(i, j).real());
            ii.push_back(m(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    json doc = {{"dim", m.rows()}, {"re", re}, {"im", im}};
    return doc.dump();
}

}  // namespace dqc1sim
