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

#include <string_view>
#include <vector>

#include "qdestruct/space.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct {

/// Numeric distance of a matrix from the density-matrix invariants.
struct DensityDefects {
  double hermiticity = 0.0;     // max_ij |M_ij - conj(M_ji)|
  double trace = 0.0;           // |Tr M - 1|
  double min_eigenvalue = 0.0;  // of the Hermitian part
};

DensityDefects measure_density_defects(const Matrix& m);

enum class CertificationFailure { NotSquare, NotHermitian, TraceNotOne, NotPositiveSemidefinite };

std::string_view to_string(CertificationFailure failure);

class CertificationError : public Error {
 public:
  CertificationError(CertificationFailure failure, double defect);

  CertificationFailure failure() const { return failure_; }
  /// Violating quantity: the hermiticity or trace defect, or the offending
  /// minimum eigenvalue for NotPositiveSemidefinite.
  double defect() const { return defect_; }

 private:
  CertificationFailure failure_;
  double defect_;
};

/// A matrix together with its certification record.
///
/// Instances produced by certify_density satisfy every invariant within the
/// tolerances used; instances produced by inspect_density only carry the
/// measured defects and may violate them.
class DensityMatrix {
 public:
  const Matrix& matrix() const { return matrix_; }
  const DensityDefects& defects() const { return defects_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  bool satisfies(const Tolerances& tol) const;

  friend DensityMatrix certify_density(Matrix m, const Tolerances& tol);
  friend DensityMatrix inspect_density(Matrix m);

 private:
  DensityMatrix(Matrix m, DensityDefects d)
      : matrix_(std::move(m)), defects_(d) {}

  Matrix matrix_;
  DensityDefects defects_;
};

/// Throws CertificationError naming the first violated invariant.
DensityMatrix certify_density(Matrix m, const Tolerances& tol = {});
/// Measures defects without enforcing them. Throws only for non-square input.
DensityMatrix inspect_density(Matrix m);

/// Subset of an observable's spectrum. An empty window selects nothing.
struct SpectralWindow {
  std::vector<double> omega;
  double tolerance = 1e-8;
};

class NonHermitianObservable : public Error {
 public:
  explicit NonHermitianObservable(double defect);
  double defect() const { return defect_; }

 private:
  double defect_;
};

class InvalidProjector : public Error {
 public:
  using Error::Error;
};

/// Orthogonal projector on a physical space together with its complement.
class Projector {
 public:
  /// Validates Hermiticity and idempotence within `tol`.
  static Projector from_matrix(Matrix pi, double tol = 1e-12);
  static Projector zero(Eigen::Index dim);
  static Projector identity(Eigen::Index dim);

  const Matrix& matrix() const { return pi_; }
  /// I - Pi on the same (physical) space.
  const Matrix& complement() const { return complement_; }
  Eigen::Index dim() const { return pi_.rows(); }
  /// Rounded trace.
  Eigen::Index rank() const;

 private:
  explicit Projector(Matrix pi);

  Matrix pi_;
  Matrix complement_;
};

/// Spectral projector onto the eigenspaces of `observable` whose eigenvalues
/// lie within window.tolerance of some value in window.omega. Degenerate
/// eigenspaces are included whole.
Projector projector_from_observable(const Matrix& observable,
                                    const SpectralWindow& window,
                                    const Tolerances& tol = {});

/// -sum lambda ln lambda over eigenvalues, in nats. Eigenvalues in
/// [-tol.psd, 0) count as zero; anything more negative throws
/// CertificationError.
double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = {});
double von_neumann_entropy(const Matrix& rho, const Tolerances& tol = {});

/// Zero-pads the vacuum row and column.
Matrix embed_physical(const Matrix& op, const ExtendedSpace& target);

/// Embeds an operator on H_a (x) H_b into the extended product space.
Matrix embed_physical(const Matrix& op, const ProductSpace& target);

/// Kronecker product; (a (x) b)[i*rb + j, k*cb + l] = a[i,k] * b[j,l].
Matrix tensor(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);
double hermiticity_defect(const Matrix& m);
/// Eigenvalues of the Hermitian part, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

}  // namespace qdestruct
