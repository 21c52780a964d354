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

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdestruct/types.hpp"

namespace qdestruct {

/// A finite-dimensional one-particle Hilbert space with labelled basis.
class PhysicalSpace {
 public:
  /// Basis labels default to "0", "1", ...
  explicit PhysicalSpace(std::size_t dim);
  explicit PhysicalSpace(std::vector<std::string> basis_labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  friend bool operator==(const PhysicalSpace&, const PhysicalSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// H (+) H0: the physical space followed by a single vacuum index.
///
/// The vacuum is always the last index, so an operator on H embeds into the
/// leading dim x dim block of an operator on the extended space.
class ExtendedSpace {
 public:
  explicit ExtendedSpace(PhysicalSpace physical);

  const PhysicalSpace& physical() const { return physical_; }
  std::size_t physical_dim() const { return physical_.dim(); }
  std::size_t total_dim() const { return physical_.dim() + 1; }
  std::size_t vacuum_index() const { return physical_.dim(); }
  bool is_vacuum(std::size_t i) const { return i == vacuum_index(); }

  friend bool operator==(const ExtendedSpace&, const ExtendedSpace&) = default;

 private:
  PhysicalSpace physical_;
};

ExtendedSpace make_extended(PhysicalSpace physical);

/// Sector of the vacuum-extended two-particle space a basis vector belongs to.
enum class SectorTag {
  TwoParticle,             // H_a (x) H_b
  OneParticleLeftAlive,    // H_a (x) H0
  OneParticleRightAlive,   // H0 (x) H_b
  OneParticleSymmetrized,  // identical particles, symmetric one-particle span
  Vacuum,                  // H0 (x) H0
};

std::string_view to_string(SectorTag tag);

/// (H_a (+) H0) (x) (H_b (+) H0) with row-major pair layout
/// flat = i * (d_b + 1) + j over extended indices.
class ProductSpace {
 public:
  ProductSpace(ExtendedSpace left, ExtendedSpace right);

  /// Identical-particle space: both factors are the same extended space.
  static ProductSpace identical(const PhysicalSpace& physical);

  const ExtendedSpace& left() const { return left_; }
  const ExtendedSpace& right() const { return right_; }

  std::size_t dim() const { return left_.total_dim() * right_.total_dim(); }
  std::size_t physical_dim() const {
    return left_.physical_dim() * right_.physical_dim();
  }

  /// True when both factors carry the same physical space, the precondition
  /// for the inner and external partial supertraces.
  bool same_factors() const { return left_ == right_; }

  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> unpair_index(std::size_t flat) const;
  SectorTag sector_of(std::size_t flat) const;

  std::size_t double_vacuum_index() const { return dim() - 1; }

 private:
  ExtendedSpace left_;
  ExtendedSpace right_;
};

}  // namespace qdestruct
