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

// Brute-force reference implementations used only by tests. They build every
// operator from explicit kets and bras instead of index arithmetic.

#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline Vector ket(Index n, Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1.0;
  return v;
}

inline Matrix ketbra(Index n, Index i, Index j) {
  return ket(n, i) * ket(n, j).adjoint();
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

enum class Partial { Left, Right, Inner, External };

/// Partial supertrace of `sigma` on (H_a + H0) (x) (H_b + H0), computed by
/// expanding sigma over |a><a'| (x) |b><b'| and mapping each term to its
/// image ket-bra. `na`, `nb` are extended dimensions; the vacuum is last.
inline Matrix partial(Partial kind, const Matrix& sigma, Index na, Index nb) {
  const Index va = na - 1;
  const Index vb = nb - 1;
  Matrix out = Matrix::Zero(na * nb, na * nb);
  for (Index a = 0; a < na; ++a) {
    for (Index b = 0; b < nb; ++b) {
      for (Index a2 = 0; a2 < na; ++a2) {
        for (Index b2 = 0; b2 < nb; ++b2) {
          const Complex c = sigma(a * nb + b, a2 * nb + b2);
          if (c == Complex(0.0)) continue;
          switch (kind) {
            case Partial::Left:
              if (a2 == a) out += c * kron(ketbra(na, va, va), ketbra(nb, b, b2));
              break;
            case Partial::Right:
              if (b2 == b) out += c * kron(ketbra(na, a, a2), ketbra(nb, vb, vb));
              break;
            case Partial::Inner:
              if (a2 == b) out += c * kron(ketbra(na, a, va), ketbra(nb, vb, b2));
              break;
            case Partial::External:
              if (b2 == a) out += c * kron(ketbra(na, va, a2), ketbra(nb, b, vb));
              break;
          }
        }
      }
    }
  }
  return out;
}

/// Tr(sigma) on the double-vacuum cell.
inline Matrix full(const Matrix& sigma, Index na, Index nb) {
  return sigma.trace() * kron(ketbra(na, na - 1, na - 1), ketbra(nb, nb - 1, nb - 1));
}

/// Zero-pads an operator on H_a (x) H_b (dims da, db) into the extended
/// product space.
inline Matrix embed(const Matrix& op, Index da, Index db) {
  const Index nb = db + 1;
  Matrix out = Matrix::Zero((da + 1) * nb, (da + 1) * nb);
  for (Index a = 0; a < da; ++a) {
    for (Index b = 0; b < db; ++b) {
      for (Index a2 = 0; a2 < da; ++a2) {
        for (Index b2 = 0; b2 < db; ++b2) {
          out(a * nb + b, a2 * nb + b2) = op(a * db + b, a2 * db + b2);
        }
      }
    }
  }
  return out;
}

/// Pads a one-particle operator with a vacuum row and column.
inline Matrix pad(const Matrix& op) {
  Matrix out = Matrix::Zero(op.rows() + 1, op.cols() + 1);
  out.topLeftCorner(op.rows(), op.cols()) = op;
  return out;
}

/// One-destroyed branch of identical particles in closed form:
///   sum_{al, al'} M_{al al'} (|al,0> + |0,al>)(<al',0| + <0,al'|)
/// with M = Tr_2 of (Pi^perp (x) Pi) rho (Pi^perp (x) Pi). Unnormalized.
inline Matrix one_destroyed_branch(const Matrix& rho, const Matrix& pi) {
  const Index d = pi.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix p = kron(id - pi, pi);
  const Matrix sigma = p * rho * p;
  Matrix m = Matrix::Zero(d, d);
  for (Index al = 0; al < d; ++al) {
    for (Index al2 = 0; al2 < d; ++al2) {
      for (Index be = 0; be < d; ++be) m(al, al2) += sigma(al * d + be, al2 * d + be);
    }
  }
  const Index n = d + 1;
  Matrix out = Matrix::Zero(n * n, n * n);
  for (Index al = 0; al < d; ++al) {
    const Vector u = kron(ket(n, al), ket(n, d)) + kron(ket(n, d), ket(n, al));
    for (Index al2 = 0; al2 < d; ++al2) {
      const Vector v = kron(ket(n, al2), ket(n, d)) + kron(ket(n, d), ket(n, al2));
      out += m(al, al2) * u * v.adjoint();
    }
  }
  return out;
}

/// Entropy of [[w, c], [c*, 1 - w]] from its closed-form eigenvalues
/// 1/2 +- sqrt((1/2 - w)^2 + |c|^2).
inline double qubit_entropy(double w, Complex c) {
  const double r = std::sqrt((0.5 - w) * (0.5 - w) + std::norm(c));
  double s = 0.0;
  for (double lam : {0.5 + r, 0.5 - r}) {
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace oracle
