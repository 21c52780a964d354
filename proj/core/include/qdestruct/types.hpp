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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdestruct {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Numerical tolerances shared by certification, projector construction and
/// the verification harness. Defaults are sized for dense matrices up to
/// 25x25 (two qudits of dimension 4 plus vacuum).
struct Tolerances {
  double hermiticity = 1e-12;  // max |M - M^dagger| entry
  double trace = 1e-10;        // |Tr M - 1|
  double psd = 1e-10;          // allowed negative eigenvalue magnitude
  double eigenvalue = 1e-8;    // spectral window matching
  double probability = 1e-12;  // below this a selection branch is impossible
  double symmetry = 1e-10;     // exchange-symmetry component conditions
};

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace qdestruct
