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

#include "qdestruct/space.hpp"

#include <set>
#include <stdexcept>

namespace qdestruct {

namespace {

std::vector<std::string> default_labels(std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

PhysicalSpace::PhysicalSpace(std::size_t dim)
    : PhysicalSpace(default_labels(dim)) {}

PhysicalSpace::PhysicalSpace(std::vector<std::string> basis_labels)
    : labels_(std::move(basis_labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("physical space dimension must be >= 1");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw std::invalid_argument("basis labels must be unique");
  }
}

ExtendedSpace::ExtendedSpace(PhysicalSpace physical)
    : physical_(std::move(physical)) {}

ExtendedSpace make_extended(PhysicalSpace physical) {
  return ExtendedSpace(std::move(physical));
}

std::string_view to_string(SectorTag tag) {
  switch (tag) {
    case SectorTag::TwoParticle:
      return "TwoParticle";
    case SectorTag::OneParticleLeftAlive:
      return "OneParticleLeftAlive";
    case SectorTag::OneParticleRightAlive:
      return "OneParticleRightAlive";
    case SectorTag::OneParticleSymmetrized:
      return "OneParticleSymmetrized";
    case SectorTag::Vacuum:
      return "Vacuum";
  }
  return "Unknown";
}

ProductSpace::ProductSpace(ExtendedSpace left, ExtendedSpace right)
    : left_(std::move(left)), right_(std::move(right)) {}

ProductSpace ProductSpace::identical(const PhysicalSpace& physical) {
  return ProductSpace(ExtendedSpace(physical), ExtendedSpace(physical));
}

std::size_t ProductSpace::pair_index(std::size_t i, std::size_t j) const {
  if (i >= left_.total_dim() || j >= right_.total_dim()) {
    throw std::out_of_range("pair_index: extended index out of range");
  }
  return i * right_.total_dim() + j;
}

std::pair<std::size_t, std::size_t> ProductSpace::unpair_index(
    std::size_t flat) const {
  if (flat >= dim()) {
    throw std::out_of_range("unpair_index: flat index out of range");
  }
  return {flat / right_.total_dim(), flat % right_.total_dim()};
}

SectorTag ProductSpace::sector_of(std::size_t flat) const {
  const auto [i, j] = unpair_index(flat);
  const bool left_vac = left_.is_vacuum(i);
  const bool right_vac = right_.is_vacuum(j);
  if (left_vac && right_vac) return SectorTag::Vacuum;
  if (left_vac) return SectorTag::OneParticleRightAlive;
  if (right_vac) return SectorTag::OneParticleLeftAlive;
  return SectorTag::TwoParticle;
}

}  // namespace qdestruct
