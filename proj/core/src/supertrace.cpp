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

#include "qdestruct/supertrace.hpp"

#include <stdexcept>

#include "qdestruct/operator.hpp"

namespace qdestruct {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

Matrix left_trace(const Matrix& op, const ProductSpace& space) {
  const std::size_t na = space.left().total_dim();
  const std::size_t nb = space.right().total_dim();
  const std::size_t vac = space.left().vacuum_index();
  Matrix out = Matrix::Zero(idx(space.dim()), idx(space.dim()));
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t b2 = 0; b2 < nb; ++b2) {
      Complex sum = 0.0;
      for (std::size_t a = 0; a < na; ++a) {
        sum += op(idx(space.pair_index(a, b)), idx(space.pair_index(a, b2)));
      }
      out(idx(space.pair_index(vac, b)), idx(space.pair_index(vac, b2))) = sum;
    }
  }
  return out;
}

Matrix right_trace(const Matrix& op, const ProductSpace& space) {
  const std::size_t na = space.left().total_dim();
  const std::size_t nb = space.right().total_dim();
  const std::size_t vac = space.right().vacuum_index();
  Matrix out = Matrix::Zero(idx(space.dim()), idx(space.dim()));
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t a2 = 0; a2 < na; ++a2) {
      Complex sum = 0.0;
      for (std::size_t b = 0; b < nb; ++b) {
        sum += op(idx(space.pair_index(a, b)), idx(space.pair_index(a2, b)));
      }
      out(idx(space.pair_index(a, vac)), idx(space.pair_index(a2, vac))) = sum;
    }
  }
  return out;
}

// delta(a', b): |a><a'| (x) |b><b'|  ->  |a><0| (x) |0><b'|
Matrix inner_trace(const Matrix& op, const ProductSpace& space) {
  const std::size_t n = space.left().total_dim();
  const std::size_t vac = space.left().vacuum_index();
  Matrix out = Matrix::Zero(idx(space.dim()), idx(space.dim()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      Complex sum = 0.0;
      for (std::size_t b = 0; b < n; ++b) {
        sum += op(idx(space.pair_index(a, b)), idx(space.pair_index(b, b2)));
      }
      out(idx(space.pair_index(a, vac)), idx(space.pair_index(vac, b2))) += sum;
    }
  }
  return out;
}

// delta(b', a): |a><a'| (x) |b><b'|  ->  |0><a'| (x) |b><0|
Matrix external_trace(const Matrix& op, const ProductSpace& space) {
  const std::size_t n = space.left().total_dim();
  const std::size_t vac = space.left().vacuum_index();
  Matrix out = Matrix::Zero(idx(space.dim()), idx(space.dim()));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      Complex sum = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        sum += op(idx(space.pair_index(a, b)), idx(space.pair_index(a2, a)));
      }
      out(idx(space.pair_index(vac, b)), idx(space.pair_index(a2, vac))) += sum;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(SupertraceKind kind) {
  switch (kind) {
    case SupertraceKind::Full1:
      return "Full1";
    case SupertraceKind::FullProduct:
      return "FullProduct";
    case SupertraceKind::Left:
      return "Left";
    case SupertraceKind::Right:
      return "Right";
    case SupertraceKind::Inner:
      return "Inner";
    case SupertraceKind::External:
      return "External";
  }
  return "Unknown";
}

std::string_view alias(SupertraceKind kind) {
  switch (kind) {
    case SupertraceKind::Left:
      return "11";
    case SupertraceKind::Right:
      return "22";
    case SupertraceKind::Inner:
      return "21";
    case SupertraceKind::External:
      return "12";
    default:
      return {};
  }
}

std::optional<SupertraceKind> kind_from_alias(std::string_view name) {
  for (auto kind : {SupertraceKind::Left, SupertraceKind::Right,
                    SupertraceKind::Inner, SupertraceKind::External}) {
    if (alias(kind) == name) return kind;
  }
  return std::nullopt;
}

InnerExternalOnDistinctSpaces::InnerExternalOnDistinctSpaces()
    : Error(
          "inner/external partial supertraces need identical left and right "
          "physical spaces") {}

Matrix supertrace1(const Matrix& op, const ExtendedSpace& space) {
  const auto d = idx(space.physical_dim());
  if (op.rows() != op.cols() || (op.rows() != d && op.rows() != d + 1)) {
    throw DimensionMismatch("supertrace1: operator must be on H or H (+) H0");
  }
  Matrix out = Matrix::Zero(d + 1, d + 1);
  out(idx(space.vacuum_index()), idx(space.vacuum_index())) = op.trace();
  return out;
}

Matrix as_extended(const Matrix& op, const ProductSpace& space) {
  const auto full = idx(space.dim());
  if (op.rows() == full && op.cols() == full) return op;
  return embed_physical(op, space);
}

Matrix supertrace_product(const Matrix& op, const ProductSpace& space) {
  const Matrix ext = as_extended(op, space);
  Matrix out = Matrix::Zero(ext.rows(), ext.cols());
  const auto vac = idx(space.double_vacuum_index());
  out(vac, vac) = ext.trace();
  return out;
}

Matrix partial_supertrace(SupertraceKind kind, const Matrix& op,
                          const ProductSpace& space) {
  const Matrix ext = as_extended(op, space);
  switch (kind) {
    case SupertraceKind::Left:
      return left_trace(ext, space);
    case SupertraceKind::Right:
      return right_trace(ext, space);
    case SupertraceKind::Inner:
      if (!space.same_factors()) throw InnerExternalOnDistinctSpaces();
      return inner_trace(ext, space);
    case SupertraceKind::External:
      if (!space.same_factors()) throw InnerExternalOnDistinctSpaces();
      return external_trace(ext, space);
    default:
      throw std::invalid_argument("partial_supertrace: not a partial kind: " +
                                  std::string(to_string(kind)));
  }
}

Matrix apply_supertrace(SupertraceKind kind, const Matrix& op,
                        const ProductSpace& space) {
  if (kind == SupertraceKind::FullProduct) return supertrace_product(op, space);
  return partial_supertrace(kind, op, space);
}

const SupertraceTable& SupertraceTable::standard() {
  static const SupertraceTable table{
      [](const Matrix& m, const ProductSpace& s) {
        return partial_supertrace(SupertraceKind::Left, m, s);
      },
      [](const Matrix& m, const ProductSpace& s) {
        return partial_supertrace(SupertraceKind::Right, m, s);
      },
      [](const Matrix& m, const ProductSpace& s) {
        return partial_supertrace(SupertraceKind::Inner, m, s);
      },
      [](const Matrix& m, const ProductSpace& s) {
        return partial_supertrace(SupertraceKind::External, m, s);
      },
      [](const Matrix& m, const ProductSpace& s) {
        return supertrace_product(m, s);
      },
  };
  return table;
}

}  // namespace qdestruct
