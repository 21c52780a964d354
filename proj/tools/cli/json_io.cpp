// Copyright 2026 The qdestruct Authors
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

#include "cli/json_io.hpp"

namespace qdestruct::cli {

using nlohmann::json;

ValidationError::ValidationError(std::string field, const std::string& message)
    : Error((field.empty() ? std::string("(root)") : field) + ": " + message),
      field_(std::move(field)) {}

namespace {

Complex parse_entry(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ValidationError(field, "expected a number or an [re, im] pair");
}

}  // namespace

Matrix parse_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(field, "expected a non-empty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array()) throw ValidationError(row_field, "expected an array");
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw ValidationError(field, "matrix is not square (row " +
                                       std::to_string(r) + " has " +
                                       std::to_string(row.size()) +
                                       " entries, expected " +
                                       std::to_string(n) + ")");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = parse_entry(row[static_cast<std::size_t>(c)],
                            row_field + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json defects_to_json(const DensityDefects& d) {
  return {{"hermiticity", d.hermiticity},
          {"trace", d.trace},
          {"min_eigenvalue", d.min_eigenvalue}};
}

}  // namespace qdestruct::cli
