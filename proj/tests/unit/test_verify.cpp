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

#include <gtest/gtest.h>
#include <json.hpp>

#include "qdestruct/verify.hpp"

namespace qdestruct {
namespace {

TrialConfig small_config(std::size_t trials = 5) {
  TrialConfig c;
  c.trials = trials;
  c.dims = {2, 3};
  return c;
}

TEST(TrialConfig, Validation) {
  TrialConfig c;
  EXPECT_NO_THROW(c.validate());
  c.trials = 0;
  EXPECT_THROW(c.validate(), InvalidConfig);
  c = TrialConfig{};
  c.dims = {2, 1};
  EXPECT_THROW(c.validate(), InvalidConfig);
  c = TrialConfig{};
  c.dims.clear();
  EXPECT_THROW(c.validate(), InvalidConfig);
  c = TrialConfig{};
  c.kinds.clear();
  EXPECT_THROW(c.validate(), InvalidConfig);
  c = TrialConfig{};
  c.trials = 0;
  EXPECT_THROW(run_suite(c), InvalidConfig);
}

TEST(SystemKind, Names) {
  EXPECT_EQ(to_string(SystemKind::TwoAntisymmetric), "two_antisym");
  EXPECT_EQ(system_kind_from_string("two_dist"), SystemKind::TwoDistinguishable);
  EXPECT_FALSE(system_kind_from_string("three").has_value());
}

TEST(RunSuite, SmallConfigPasses) {
  const std::vector<PropertyReport> reports = run_suite(small_config());
  for (const PropertyReport& r : reports) {
    EXPECT_TRUE(r.passed) << r.name << " defect " << r.max_defect;
    EXPECT_GT(r.trials, 0u) << r.name;
  }
  EXPECT_TRUE(all_passed(reports));
}

TEST(RunSuite, DeterministicGivenSeed) {
  const auto a = run_suite(small_config(3));
  const auto b = run_suite(small_config(3));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].trials, b[i].trials);
    EXPECT_EQ(a[i].max_defect, b[i].max_defect);
    EXPECT_EQ(a[i].worst_seed, b[i].worst_seed);
    EXPECT_EQ(a[i].worst_trial, b[i].worst_trial);
  }
  TrialConfig other = small_config(3);
  other.seed = 7;
  const auto c = run_suite(other);
  bool any_different = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    any_different |= a[i].max_defect != c[i].max_defect;
  }
  EXPECT_TRUE(any_different);
}

TEST(RunSuite, KindsFilterKindParametrizedProperties) {
  TrialConfig c = small_config(2);
  c.kinds = {SystemKind::One};
  for (const PropertyReport& r : check_kraus(c)) {
    EXPECT_EQ(r.name.rfind("kraus.one.", 0), 0u) << r.name;
  }
}

TEST(RunSuite, DefaultConfigPasses) {
  const std::vector<PropertyReport> reports = run_suite(TrialConfig{});
  for (const PropertyReport& r : reports) {
    EXPECT_TRUE(r.passed) << r.name << " defect " << r.max_defect << " seed "
                          << r.worst_seed;
  }
}

TEST(Mutation, CorruptedRightBreaksTracePreservation) {
  const ProductSpace space{ExtendedSpace(PhysicalSpace(2)),
                           ExtendedSpace(PhysicalSpace(2))};
  Matrix sigma = Matrix::Zero(4, 4);
  sigma(0, 1) = 1.0;  // |0><0| (x) |0><1|
  const Matrix good = partial_supertrace(SupertraceKind::Right, sigma, space);
  const Matrix bad = corrupted_right_supertrace(sigma, space);
  EXPECT_EQ(good.trace(), Complex(0.0));
  EXPECT_EQ(bad.trace(), Complex(1.0));
}

TEST(Mutation, DetectedInAlmostAllTrials) {
  TrialConfig c;
  c.trials = 300;
  const MutationReport m = run_mutation_check(c);
  EXPECT_EQ(m.trials, 300u);
  EXPECT_GE(m.detected_fraction(), 0.95);
}

TEST(SuiteJson, Shape) {
  const TrialConfig c = small_config(1);
  const auto reports = run_suite(c);
  const nlohmann::json doc = nlohmann::json::parse(suite_report_json(c, reports));
  EXPECT_EQ(doc.at("all_passed"), true);
  EXPECT_EQ(doc.at("config").at("seed"), "42");
  EXPECT_EQ(doc.at("config").at("dims"), nlohmann::json::array({2, 3}));
  ASSERT_EQ(doc.at("properties").size(), reports.size());
  const auto& first = doc.at("properties").at(0);
  for (const char* key : {"name", "trials", "max_defect", "tolerance", "passed",
                          "worst_trial", "worst_seed"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
  EXPECT_TRUE(first.at("worst_seed").is_string());
}

}  // namespace
}  // namespace qdestruct
