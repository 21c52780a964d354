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

#include <map>

#include <gtest/gtest.h>

#include "qdestruct/space.hpp"

namespace qdestruct {
namespace {

TEST(PhysicalSpace, DefaultLabelsAreIndices) {
  const PhysicalSpace h(3);
  EXPECT_EQ(h.dim(), 3u);
  EXPECT_EQ(h.label(0), "0");
  EXPECT_EQ(h.label(2), "2");
}

TEST(PhysicalSpace, RejectsEmptyOrDuplicateLabels) {
  EXPECT_THROW(PhysicalSpace(std::vector<std::string>{}), std::invalid_argument);
  EXPECT_THROW(PhysicalSpace(std::vector<std::string>{"up", "up"}),
               std::invalid_argument);
}

TEST(ExtendedSpace, VacuumIsLast) {
  const ExtendedSpace spin_half(PhysicalSpace({"up", "down"}));
  EXPECT_EQ(spin_half.total_dim(), 3u);
  EXPECT_EQ(spin_half.vacuum_index(), 2u);
  EXPECT_TRUE(spin_half.is_vacuum(2));
  EXPECT_FALSE(spin_half.is_vacuum(1));

  const ExtendedSpace spin_one = make_extended(PhysicalSpace({"1,1", "1,0", "1,-1"}));
  EXPECT_EQ(spin_one.total_dim(), 4u);
}

TEST(ProductSpace, PairIndexRoundTripsOnWholeGrid) {
  for (std::size_t da = 1; da <= 6; ++da) {
    for (std::size_t db = 1; db <= 6; ++db) {
      const ProductSpace space{ExtendedSpace(PhysicalSpace(da)),
                               ExtendedSpace(PhysicalSpace(db))};
      ASSERT_EQ(space.dim(), (da + 1) * (db + 1));
      for (std::size_t flat = 0; flat < space.dim(); ++flat) {
        const auto [i, j] = space.unpair_index(flat);
        ASSERT_EQ(space.pair_index(i, j), flat);
        ASSERT_EQ(flat, i * (db + 1) + j);
      }
    }
  }
}

TEST(ProductSpace, SectorSizes) {
  for (std::size_t da = 1; da <= 6; ++da) {
    for (std::size_t db = 1; db <= 6; ++db) {
      const ProductSpace space{ExtendedSpace(PhysicalSpace(da)),
                               ExtendedSpace(PhysicalSpace(db))};
      std::map<SectorTag, std::size_t> count;
      for (std::size_t flat = 0; flat < space.dim(); ++flat) {
        ++count[space.sector_of(flat)];
      }
      EXPECT_EQ(count[SectorTag::TwoParticle], da * db);
      EXPECT_EQ(count[SectorTag::OneParticleLeftAlive], da);
      EXPECT_EQ(count[SectorTag::OneParticleRightAlive], db);
      EXPECT_EQ(count[SectorTag::Vacuum], 1u);
      EXPECT_EQ(da * db + da + db + 1, space.dim());
    }
  }
}

TEST(ProductSpace, QubitPairLayout) {
  const ProductSpace space = ProductSpace::identical(PhysicalSpace({"up", "down"}));
  EXPECT_EQ(space.dim(), 9u);
  EXPECT_EQ(space.double_vacuum_index(), 8u);
  EXPECT_EQ(space.pair_index(1, 2), 5u);  // |down> (x) |0>
  EXPECT_EQ(space.sector_of(5), SectorTag::OneParticleLeftAlive);
  EXPECT_EQ(space.sector_of(7), SectorTag::OneParticleRightAlive);
  EXPECT_TRUE(space.same_factors());
}

TEST(ProductSpace, OutOfRangeIndices) {
  const ProductSpace space = ProductSpace::identical(PhysicalSpace(2));
  EXPECT_THROW(space.pair_index(3, 0), std::out_of_range);
  EXPECT_THROW(space.unpair_index(9), std::out_of_range);
}

TEST(ProductSpace, DistinctFactors) {
  const ProductSpace space{ExtendedSpace(PhysicalSpace(3)),
                           ExtendedSpace(PhysicalSpace(1))};
  EXPECT_FALSE(space.same_factors());
  EXPECT_EQ(space.dim(), 8u);
  EXPECT_EQ(space.physical_dim(), 3u);
}

TEST(SectorTag, Names) {
  EXPECT_EQ(to_string(SectorTag::TwoParticle), "TwoParticle");
  EXPECT_EQ(to_string(SectorTag::Vacuum), "Vacuum");
}

}  // namespace
}  // namespace qdestruct
