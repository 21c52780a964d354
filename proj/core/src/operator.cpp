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

#include "qdestruct/operator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdestruct {

namespace {

std::string certification_message(CertificationFailure failure, double defect) {
  std::ostringstream os;
  os << to_string(failure) << " (defect " << defect << ")";
  return os.str();
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols()
       << ", expected square";
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

std::string_view to_string(CertificationFailure failure) {
  switch (failure) {
    case CertificationFailure::NotSquare:
      return "NotSquare";
    case CertificationFailure::NotHermitian:
      return "NotHermitian";
    case CertificationFailure::TraceNotOne:
      return "TraceNotOne";
    case CertificationFailure::NotPositiveSemidefinite:
      return "NotPositiveSemidefinite";
  }
  return "Unknown";
}

CertificationError::CertificationError(CertificationFailure failure,
                                       double defect)
    : Error(certification_message(failure, defect)),
      failure_(failure),
      defect_(defect) {}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityDefects measure_density_defects(const Matrix& m) {
  require_square(m, "density defects");
  DensityDefects d;
  d.hermiticity = hermiticity_defect(m);
  d.trace = std::abs(m.trace() - Complex(1.0, 0.0));
  d.min_eigenvalue = m.size() == 0 ? 0.0 : hermitian_eigenvalues(m).minCoeff();
  return d;
}

bool DensityMatrix::satisfies(const Tolerances& tol) const {
  return defects_.hermiticity <= tol.hermiticity &&
         defects_.trace <= tol.trace && defects_.min_eigenvalue >= -tol.psd;
}

DensityMatrix certify_density(Matrix m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw CertificationError(CertificationFailure::NotSquare,
                             static_cast<double>(m.rows() - m.cols()));
  }
  const DensityDefects d = measure_density_defects(m);
  if (d.hermiticity > tol.hermiticity) {
    throw CertificationError(CertificationFailure::NotHermitian, d.hermiticity);
  }
  if (d.trace > tol.trace) {
    throw CertificationError(CertificationFailure::TraceNotOne, d.trace);
  }
  if (d.min_eigenvalue < -tol.psd) {
    throw CertificationError(CertificationFailure::NotPositiveSemidefinite,
                             d.min_eigenvalue);
  }
  return DensityMatrix(std::move(m), d);
}

DensityMatrix inspect_density(Matrix m) {
  const DensityDefects d = measure_density_defects(m);
  return DensityMatrix(std::move(m), d);
}

NonHermitianObservable::NonHermitianObservable(double defect)
    : Error("observable is not Hermitian (defect " + std::to_string(defect) +
            ")"),
      defect_(defect) {}

Projector::Projector(Matrix pi)
    : pi_(std::move(pi)),
      complement_(Matrix::Identity(pi_.rows(), pi_.cols()) - pi_) {}

Projector Projector::from_matrix(Matrix pi, double tol) {
  if (pi.rows() != pi.cols()) {
    throw InvalidProjector("projector must be square");
  }
  if (hermiticity_defect(pi) > tol) {
    throw InvalidProjector("projector is not Hermitian");
  }
  if (max_abs(pi * pi - pi) > tol) {
    throw InvalidProjector("projector is not idempotent");
  }
  return Projector(std::move(pi));
}

Projector Projector::zero(Eigen::Index dim) {
  return Projector(Matrix::Zero(dim, dim));
}

Projector Projector::identity(Eigen::Index dim) {
  return Projector(Matrix::Identity(dim, dim));
}

Eigen::Index Projector::rank() const {
  return static_cast<Eigen::Index>(std::llround(pi_.trace().real()));
}

Projector projector_from_observable(const Matrix& observable,
                                    const SpectralWindow& window,
                                    const Tolerances& tol) {
  require_square(observable, "observable");
  const double defect = hermiticity_defect(observable);
  if (defect > tol.hermiticity) throw NonHermitianObservable(defect);

  const Eigen::Index n = observable.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      0.5 * (observable + observable.adjoint()));
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Matrix& vectors = solver.eigenvectors();

  Matrix pi = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const bool selected = std::any_of(
        window.omega.begin(), window.omega.end(),
        [&](double w) { return std::abs(values(k) - w) <= window.tolerance; });
    if (selected) pi += vectors.col(k) * vectors.col(k).adjoint();
  }
  return Projector::from_matrix(std::move(pi), tol.hermiticity);
}

double von_neumann_entropy(const Matrix& rho, const Tolerances& tol) {
  require_square(rho, "entropy");
  const Eigen::VectorXd values = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    const double v = values(k);
    if (v < -tol.psd) {
      throw CertificationError(CertificationFailure::NotPositiveSemidefinite, v);
    }
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  return von_neumann_entropy(rho.matrix(), tol);
}

Matrix embed_physical(const Matrix& op, const ExtendedSpace& target) {
  const auto d = static_cast<Eigen::Index>(target.physical_dim());
  if (op.rows() != d || op.cols() != d) {
    throw DimensionMismatch("embed_physical: operator dimension " +
                            std::to_string(op.rows()) +
                            " does not match physical dimension " +
                            std::to_string(d));
  }
  Matrix out = Matrix::Zero(d + 1, d + 1);
  out.topLeftCorner(d, d) = op;
  return out;
}

Matrix embed_physical(const Matrix& op, const ProductSpace& target) {
  const std::size_t da = target.left().physical_dim();
  const std::size_t db = target.right().physical_dim();
  const auto n = static_cast<Eigen::Index>(da * db);
  if (op.rows() != n || op.cols() != n) {
    throw DimensionMismatch("embed_physical: operator dimension " +
                            std::to_string(op.rows()) +
                            " does not match physical product dimension " +
                            std::to_string(n));
  }
  const auto big = static_cast<Eigen::Index>(target.dim());
  Matrix out = Matrix::Zero(big, big);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < db; ++b) {
      const auto row = static_cast<Eigen::Index>(target.pair_index(a, b));
      const auto src_row = static_cast<Eigen::Index>(a * db + b);
      for (std::size_t a2 = 0; a2 < da; ++a2) {
        for (std::size_t b2 = 0; b2 < db; ++b2) {
          out(row, static_cast<Eigen::Index>(target.pair_index(a2, b2))) =
              op(src_row, static_cast<Eigen::Index>(a2 * db + b2));
        }
      }
    }
  }
  return out;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  Matrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * rb, k * cb, rb, cb) = a(i, k) * b;
    }
  }
  return out;
}

}  // namespace qdestruct
