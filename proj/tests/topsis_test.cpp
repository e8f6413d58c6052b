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
#include "linguse/topsis.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"

namespace linguse {
namespace {

const std::vector<double> kCaseWc{0.5665, 0.1144, 0.2916, 0.0275};

UnifiedDecisionMatrix from_cells(const nlohmann::json& cells) {
  UnifiedDecisionMatrix m(static_cast<int>(cells.size()), static_cast<int>(cells[0].size()));
  for (int i = 0; i < m.alternatives(); ++i)
    for (int j = 0; j < m.criteria(); ++j) m.set(i, j, TwoTuple(cells[i][j][0], cells[i][j][1], 9));
  return m;
}

struct Oracle {
  std::vector<double> dp, dm, rc;
};

// Direct evaluation: weighted values, column extremes, Euclidean distances.
Oracle brute_force(const std::vector<std::vector<double>>& beta, const std::vector<double>& wc) {
  const std::size_t n = beta.size(), m = wc.size();
  std::vector<double> hi(m, -1e300), lo(m, 1e300);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      hi[j] = std::max(hi[j], beta[i][j] * wc[j]);
      lo[j] = std::min(lo[j], beta[i][j] * wc[j]);
    }
  Oracle o;
  for (std::size_t i = 0; i < n; ++i) {
    double a = 0, b = 0;
    for (std::size_t j = 0; j < m; ++j) {
      a += std::pow(beta[i][j] * wc[j] - hi[j], 2);
      b += std::pow(beta[i][j] * wc[j] - lo[j], 2);
    }
    o.dp.push_back(std::sqrt(a));
    o.dm.push_back(std::sqrt(b));
    o.rc.push_back(o.dp.back() + o.dm.back() == 0 ? 1.0 : o.dm.back() / (o.dp.back() + o.dm.back()));
  }
  return o;
}

UnifiedDecisionMatrix to_matrix(const std::vector<std::vector<double>>& beta) {
  UnifiedDecisionMatrix m(static_cast<int>(beta.size()), static_cast<int>(beta[0].size()));
  for (int i = 0; i < m.alternatives(); ++i)
    for (int j = 0; j < m.criteria(); ++j) m.set(i, j, delta(beta[i][j], 9));
  return m;
}

std::vector<std::vector<double>> random_betas(std::mt19937& rng, int n, int m) {
  std::uniform_real_distribution<double> b(0.0, 8.0);
  std::vector<std::vector<double>> out(n, std::vector<double>(m));
  for (auto& r : out)
    for (auto& v : r) v = std::round(b(rng) * 100) / 100;  // 2-tuple exact at this precision
  return out;
}

std::vector<double> random_wc(std::mt19937& rng, int m) {
  std::uniform_real_distribution<double> w(0.01, 1.0);
  std::vector<double> raw(m);
  double s = 0;
  for (auto& v : raw) s += (v = w(rng));
  for (auto& v : raw) v /= s;
  return raw;
}

TEST(WeightedValues, CaseCells) {
  UnifiedDecisionMatrix m(1, 4);
  m.set(0, 0, TwoTuple(4, -0.15, 9));
  m.set(0, 3, TwoTuple(3, -0.2, 9));
  const auto v = weighted_values(m, {0.567, 0.114, 0.292, 0.027});
  EXPECT_NEAR(v.at(0, 0), 2.183, 0.0005);
  EXPECT_NEAR(v.at(0, 3), 0.076, 0.0005);
  EXPECT_EQ(v.at(0, 1), 0.0);

  UnifiedDecisionMatrix u(1, 2);
  u.set(0, 0, TwoTuple(6, 0.0, 9));
  u.set(0, 1, TwoTuple(2, 0.0, 9));
  const auto uv = weighted_values(u, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(uv.at(0, 0), 3.0);
  EXPECT_DOUBLE_EQ(uv.at(0, 1), 1.0);
}

TEST(IdealSolutions, CaseRoleOneAndGlobal) {
  const auto expected = load_json_file(testing::case_dir() / "expected.json");
  const auto r1 = rank_scope("R1", from_cells(expected["roles"]["R1"]["cells"]), kCaseWc);
  const auto g = rank_scope("global", from_cells(expected["global"]["cells"]), kCaseWc);
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(r1.ideals.positive[j], expected["roles"]["R1"]["positive_ideal"][j].get<double>(), 0.005);
    EXPECT_NEAR(r1.ideals.negative[j], expected["roles"]["R1"]["negative_ideal"][j].get<double>(), 0.005);
    EXPECT_NEAR(g.ideals.positive[j], expected["global"]["positive_ideal"][j].get<double>(), 0.005);
    EXPECT_NEAR(g.ideals.negative[j], expected["global"]["negative_ideal"][j].get<double>(), 0.005);
  }
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(g.closeness.rc[i], expected["global"]["rc"][i].get<double>(), 0.01);
    EXPECT_NEAR(g.closeness.d_plus[i], expected["global"]["d_plus"][i].get<double>(), 0.01);
    EXPECT_NEAR(g.closeness.d_minus[i], expected["global"]["d_minus"][i].get<double>(), 0.01);
  }
  EXPECT_EQ(r1.closeness.ranking, (std::vector<int>{1, 0, 2}));
  // Descending RC over the printed global cells.
  EXPECT_EQ(g.closeness.ranking, (std::vector<int>{1, 2, 0}));
}

TEST(IdealSolutions, SingleAlternativeDegenerates) {
  const auto s = rank_scope("R1", to_matrix({{3.0, 5.5}}), {0.5, 0.5});
  EXPECT_EQ(s.ideals.positive, s.ideals.negative);
  EXPECT_EQ(s.closeness.ranking, std::vector<int>{0});
  EXPECT_EQ(s.closeness.rc, std::vector<double>{1.0});
}

TEST(Closeness, TrivialGeometry) {
  // Row 0 is the positive ideal, row 1 the negative one, row 2 the midpoint.
  const auto s = rank_scope("x", to_matrix({{6, 6}, {2, 2}, {4, 4}}), {0.5, 0.5});
  EXPECT_DOUBLE_EQ(s.closeness.rc[0], 1.0);
  EXPECT_DOUBLE_EQ(s.closeness.rc[1], 0.0);
  EXPECT_NEAR(s.closeness.rc[2], 0.5, 1e-12);
  EXPECT_EQ(s.closeness.ranking, (std::vector<int>{0, 2, 1}));
}

TEST(Closeness, TiesKeepDeclarationOrder) {
  const auto s = rank_scope("x", to_matrix({{4, 4}, {4, 4}, {4, 4}}), {0.5, 0.5});
  EXPECT_EQ(s.closeness.ranking, (std::vector<int>{0, 1, 2}));
}

TEST(TopsisProperties, BruteForceOracleOnRandomInstances) {
  std::mt19937 rng(2024);
  for (int it = 0; it < 2000; ++it) {
    const auto beta = random_betas(rng, 3, 4);
    const auto wc = random_wc(rng, 4);
    const auto s = rank_scope("x", to_matrix(beta), wc);
    const auto o = brute_force(beta, wc);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(s.closeness.d_plus[i], o.dp[i], 1e-9);
      EXPECT_NEAR(s.closeness.d_minus[i], o.dm[i], 1e-9);
      EXPECT_NEAR(s.closeness.rc[i], o.rc[i], 1e-9);
      EXPECT_GE(s.closeness.rc[i], 0.0);
      EXPECT_LE(s.closeness.rc[i], 1.0);
    }
    for (int j = 0; j < 4; ++j) EXPECT_GE(s.ideals.positive[j], s.ideals.negative[j]);
    for (std::size_t k = 1; k < s.closeness.ranking.size(); ++k) {
      EXPECT_GE(s.closeness.rc[s.closeness.ranking[k - 1]], s.closeness.rc[s.closeness.ranking[k]]);
    }
  }
}

TEST(TopsisProperties, ScalingKeepsTheOrder) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> c(0.1, 10.0);
  for (int it = 0; it < 500; ++it) {
    const auto wv = weighted_values(to_matrix(random_betas(rng, 3, 4)), random_wc(rng, 4));
    auto scaled = wv;
    const double k = c(rng);
    for (auto& v : scaled.values) v *= k;
    const auto a = separations_and_closeness(wv, ideal_solutions(wv));
    const auto b = separations_and_closeness(scaled, ideal_solutions(scaled));
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(a.rc[i], b.rc[i], 1e-9);
    EXPECT_EQ(a.ranking, b.ranking);
  }
}

TEST(TopsisProperties, TwoAlternativesAreComplementary) {
  std::mt19937 rng(9);
  for (int it = 0; it < 500; ++it) {
    const int m = 2 + it % 4;
    const auto beta = random_betas(rng, 2, m);
    if (beta[0] == beta[1]) continue;
    const auto s = rank_scope("x", to_matrix(beta), random_wc(rng, m));
    EXPECT_NEAR(s.closeness.rc[0] + s.closeness.rc[1], 1.0, 1e-9);
  }
}

TEST(RankAll, RolesFirstThenGlobal) {
  const auto a = to_matrix({{1, 2}, {3, 4}});
  const auto all = rank_all({{"R1", a}, {"R2", a}}, a, {0.5, 0.5});
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].scope, "R1");
  EXPECT_EQ(all[1].scope, "R2");
  EXPECT_EQ(all[2].scope, "global");
  for (const auto& s : all) {
    auto sorted = s.closeness.ranking;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 1}));
  }
}

}  // namespace
}  // namespace linguse
