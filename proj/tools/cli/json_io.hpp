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

#pragma once

#include <string>

#include <json.hpp>

#include "qdestruct/operator.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct::cli {

/// Input file could not be read or is not JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Scenario content is invalid; `field()` is a path such as "state[1][0]".
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Square matrix as row-major nested arrays. Entries are [re, im] pairs or
/// plain real numbers.
Matrix parse_matrix(const nlohmann::json& j, const std::string& field);

/// Row-major nested arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json defects_to_json(const DensityDefects& d);

}  // namespace qdestruct::cli
