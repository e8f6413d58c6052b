// Copyright 2026 The linguse Authors
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
#include "linguse/report.hpp"

#include <gtest/gtest.h>

#include <random>

namespace linguse {
namespace {

TEST(Retranslate, CaseEntries) {
  const auto r = retranslate_vectors({{"R2", {TwoTuple(4, 0.33, 9)}}, {"global", {TwoTuple(4, -0.24, 9)}}});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].scope, "R2");
  EXPECT_EQ(r.entries[0].value.label(), SusLabel::Ok);
  EXPECT_NEAR(r.entries[0].value.alpha(), 0.165, 1e-9);
  EXPECT_EQ(r.entries[1].value.label(), SusLabel::Ok);
  EXPECT_NEAR(r.entries[1].value.alpha(), -0.12, 1e-9);
  EXPECT_EQ(r.usability, std::vector<SusLabel>{SusLabel::Ok});
}

TEST(Retranslate, Floor) {
  const auto r = retranslate_vectors({{"global", {TwoTuple(0, 0.0, 9)}}});
  EXPECT_EQ(r.entries[0].value.label(), SusLabel::None);
  EXPECT_EQ(r.entries[0].value.alpha(), 0.0);
}

TEST(Retranslate, OneEntryPerScopeAndAlternative) {
  const std::vector<TwoTuple> v{TwoTuple(1, 0.0, 9), TwoTuple(5, 0.25, 9), TwoTuple(8, 0.0, 9)};
  const auto r = retranslate_vectors({{"R1", v}, {"R2", v}, {"global", v}});
  ASSERT_EQ(r.entries.size(), 9u);
  EXPECT_EQ(r.usability.size(), 3u);
  for (std::size_t k = 0; k < r.entries.size(); ++k) EXPECT_EQ(r.entries[k].alternative, static_cast<int>(k % 3));
}

TEST(NpsSummary, CaseColumn) {
  std::vector<NpsResponse> a2;
  for (int v : {7, 7, 1, 2, 8, 7, 5, 8, 6, 8, 8, 7, 5, 2, 8}) a2.push_back({v});
  const auto s = nps_summary(a2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->promoters, 0);
  EXPECT_EQ(s->detractors, 6);
  EXPECT_EQ(s->passives, 9);
  EXPECT_NEAR(s->nps, -40.0, 1e-12);
}

TEST(NpsSummary, ExtremesAndEmpty) {
  EXPECT_DOUBLE_EQ(nps_summary(std::vector<NpsResponse>(4, {10}))->nps, 100.0);
  EXPECT_DOUBLE_EQ(nps_summary(std::vector<NpsResponse>(4, {0}))->nps, -100.0);
  EXPECT_FALSE(nps_summary({}));
}

TEST(NpsSummary, SegmentsPartitionRespondents) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> ltr(0, 10);
  for (int it = 0; it < 200; ++it) {
    std::vector<NpsResponse> rs(1 + it % 20);
    for (auto& r : rs) r.ltr = ltr(rng);
    const auto s = nps_summary(rs);
    EXPECT_EQ(s->total(), static_cast<int>(rs.size()));
    EXPECT_GE(s->nps, -100.0);
    EXPECT_LE(s->nps, 100.0);
  }
}

TEST(Formatting, SignedAlphaNeverRoundsTheLabel) {
  EXPECT_EQ(format_adjective(UnbalancedSusValue(SusLabel::Ok, -0.12, 2)), "OK - 0.12");
  EXPECT_EQ(format_adjective(UnbalancedSusValue(SusLabel::Ok, 0.12, 2)), "OK + 0.12");
  EXPECT_EQ(format_adjective(UnbalancedSusValue(SusLabel::Excellent, 0.0, 3)), "Excellent");
  EXPECT_EQ(format_tuple(TwoTuple(4, -0.4, 9)), "(s4, -0.40)");
  EXPECT_EQ(format_fixed(-0.0001, 2), "0.00");
  EXPECT_EQ(format_fixed(2.18349, 3), "2.183");
}

}  // namespace
}  // namespace linguse
