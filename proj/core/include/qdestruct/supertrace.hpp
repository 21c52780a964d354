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

#include <functional>
#include <optional>
#include <string_view>

#include "qdestruct/space.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct {

enum class SupertraceKind { Full1, FullProduct, Left, Right, Inner, External };

std::string_view to_string(SupertraceKind kind);

/// Two-index name of a partial supertrace: the ket position contracted with
/// the bra position. Left = "11", Right = "22", Inner = "21",
/// External = "12". Full supertraces have no alias (empty view).
std::string_view alias(SupertraceKind kind);
std::optional<SupertraceKind> kind_from_alias(std::string_view alias);

class InnerExternalOnDistinctSpaces : public Error {
 public:
  InnerExternalOnDistinctSpaces();
};

/// Tr(op) |0><0| on H (+) H0. `op` may be given on H or on H (+) H0.
Matrix supertrace1(const Matrix& op, const ExtendedSpace& space);

/// Tr(op) placed on the double-vacuum diagonal cell.
Matrix supertrace_product(const Matrix& op, const ProductSpace& space);

/// Left/Right/Inner/External partial supertraces. On basis endomorphisms
/// |a><a'| (x) |b><b'| over extended indices:
///
///   Left:     delta(a', a) |0><0|  (x) |b><b'|
///   Right:    delta(b', b) |a><a'| (x) |0><0|
///   Inner:    delta(a', b) |a><0|  (x) |0><b'|
///   External: delta(b', a) |0><a'| (x) |b><0|
///
/// `op` may be given on the physical product H_a (x) H_b or on the full
/// extended product space; the result is always on the extended space.
/// Inner and External require space.same_factors().
Matrix partial_supertrace(SupertraceKind kind, const Matrix& op,
                          const ProductSpace& space);

/// Applies any two-particle kind (FullProduct or a partial supertrace).
Matrix apply_supertrace(SupertraceKind kind, const Matrix& op,
                        const ProductSpace& space);

/// Lifts a physical-product operator to the extended product space; returns
/// extended-size input unchanged.
Matrix as_extended(const Matrix& op, const ProductSpace& space);

using ProductSuperoperator =
    std::function<Matrix(const Matrix&, const ProductSpace&)>;

/// The supertraces used by the two-particle destruction maps. Replaceable so
/// the verification harness can check that it detects a corrupted map.
struct SupertraceTable {
  ProductSuperoperator left;
  ProductSuperoperator right;
  ProductSuperoperator inner;
  ProductSuperoperator external;
  ProductSuperoperator full;

  static const SupertraceTable& standard();
};

}  // namespace qdestruct
