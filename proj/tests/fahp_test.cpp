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
#include "linguse/fahp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "linguse/errors.hpp"

namespace linguse {
namespace {

// SUS, NPS, UT, ACC as judged by the case-study moderator.
PairwiseMatrix case_matrix() {
  return build_pairwise_matrix(4, {{0, 1, "Very strongly important"},
                                   {0, 2, "Equally important"},
                                   {0, 3, "Weak importance"},
                                   {1, 2, "Equally important"},
                                   {1, 3, "Just important"},
                                   {2, 3, "Weak importance"}});
}

PairwiseMatrix neutral_matrix(int m) {
  std::vector<PairJudgment> j;
  for (int r = 0; r < m; ++r)
    for (int c = r + 1; c < m; ++c) j.push_back({r, c, "Just important"});
  return build_pairwise_matrix(m, j);
}

// Each criterion beats the next one very strongly, and the last beats the first.
PairwiseMatrix cyclic_matrix() {
  return build_pairwise_matrix(3, {{0, 1, "Very strongly important"},
                                   {1, 2, "Very strongly important"},
                                   {2, 0, "Very strongly important"}});
}

// Classical crisp AHP index on the midpoint matrix via power iteration.
double eigen_ci_oracle(const PairwiseMatrix& matrix) {
  const int m = matrix.size();
  if (m <= 2) return 0.0;
  std::vector<double> x(m, 1.0 / m), y(m);
  double lambda = 0.0;
  for (int it = 0; it < 1000; ++it) {
    for (int r = 0; r < m; ++r) {
      y[r] = 0.0;
      for (int c = 0; c < m; ++c) y[r] += matrix.at(r, c).m * x[c];
    }
    const double s = std::accumulate(y.begin(), y.end(), 0.0);
    lambda = s;  // x sums to 1, so the growth factor is the sum of y
    for (int r = 0; r < m; ++r) x[r] = y[r] / s;
  }
  return (lambda - m) / (m - 1);
}

void expect_tfn_near(const TriangularFuzzyNumber& got, double l, double m, double u, double tol) {
  EXPECT_NEAR(got.l, l, tol);
  EXPECT_NEAR(got.m, m, tol);
  EXPECT_NEAR(got.u, u, tol);
}

TEST(PairwiseMatrixTest, ReciprocalCompletion) {
  const auto cp = case_matrix();
  EXPECT_EQ(cp.at(0, 1), (TriangularFuzzyNumber{5, 7, 9}));
  expect_tfn_near(cp.at(1, 0), 1.0 / 9, 1.0 / 7, 1.0 / 5, 1e-12);
  EXPECT_EQ(cp.at(0, 3), (TriangularFuzzyNumber{1, 3, 5}));
  expect_tfn_near(cp.at(3, 0), 0.2, 1.0 / 3, 1.0, 1e-12);
  EXPECT_EQ(cp.at(1, 3), (TriangularFuzzyNumber{1, 1, 1}));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(cp.at(i, i), (TriangularFuzzyNumber{1, 1, 1}));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      expect_tfn_near(cp.at(c, r), 1 / cp.at(r, c).u, 1 / cp.at(r, c).m, 1 / cp.at(r, c).l, 1e-12);
    }
}

TEST(PairwiseMatrixTest, Errors) {
  EXPECT_THROW(build_pairwise_matrix(2, {{0, 1, "Somewhat"}}), ConfigurationError);
  EXPECT_THROW(build_pairwise_matrix(3, {{0, 1, "Just important"}}), ValidationError);
  EXPECT_THROW(build_pairwise_matrix(2, {{0, 1, "Just important"}, {1, 0, "Just important"}}), ValidationError);
  EXPECT_THROW(build_pairwise_matrix(2, {{0, 0, "Just important"}}), ValidationError);
  EXPECT_THROW(JudgmentScale::standard().merged({{"Zero", {0, 1, 1}}}), DomainError);
  EXPECT_THROW(JudgmentScale({{"Zero", {0, 1, 1}}}), DomainError);
  EXPECT_THROW(JudgmentScale({{"Bad", {3, 2, 1}}}), DomainError);
}

TEST(PairwiseMatrixTest, LowerTriangleJudgmentIsMirrored) {
  auto a = build_pairwise_matrix(2, {{1, 0, "Strongly important"}});
  EXPECT_EQ(a.at(1, 0), (TriangularFuzzyNumber{3, 5, 7}));
  expect_tfn_near(a.at(0, 1), 1.0 / 7, 0.2, 1.0 / 3, 1e-12);
}

TEST(ExtentTest, CaseStudy) {
  const auto ext = fuzzy_synthetic_extents(case_matrix());
  expect_tfn_near(ext.row_sums[0], 8, 12, 18, 1e-12);
  expect_tfn_near(ext.inverse_total, 0.028, 0.042, 0.062, 0.001);
  expect_tfn_near(ext.extents[0], 0.23, 0.50, 1.11, 0.01);
  expect_tfn_near(ext.extents[1], 0.09, 0.13, 0.32, 0.01);
}

TEST(ExtentTest, NeutralTwoByTwo) {
  const auto ext = fuzzy_synthetic_extents(neutral_matrix(2));
  for (const auto& e : ext.extents) expect_tfn_near(e, 0.5, 0.5, 0.5, 1e-12);
}

TEST(PossibilityTest, Examples) {
  EXPECT_NEAR(possibility_degree({0.09, 0.13, 0.32}, {0.23, 0.50, 1.11}), 0.20, 0.01);
  TriangularFuzzyNumber a{0.1, 0.2, 0.3};
  EXPECT_EQ(possibility_degree(a, a), 1.0);
  EXPECT_EQ(possibility_degree({0.1, 0.2, 0.3}, {0.4, 0.5, 0.6}), 0.0);
  const auto ext = fuzzy_synthetic_extents(case_matrix()).extents;
  EXPECT_NEAR(possibility_degree(ext[3], ext[0]), 0.05, 0.01);
}

TEST(DeriveWeightsTest, CaseStudy) {
  const auto w = derive_weights(case_matrix());
  const std::vector<double> expected{0.567, 0.114, 0.292, 0.027};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(w.normalized[j], expected[j], 0.002);
  EXPECT_EQ(w.raw[0], 1.0);
  EXPECT_NEAR(w.raw[2], 0.515, 0.002);
  EXPECT_NEAR(w.raw[3], 0.048, 0.002);
  EXPECT_NEAR(std::accumulate(w.normalized.begin(), w.normalized.end(), 0.0), 1.0, 1e-9);
  EXPECT_TRUE(w.consistent);
  EXPECT_NEAR(w.consistency_index, -0.087, 0.001);
}

TEST(DeriveWeightsTest, NeutralIsUniform) {
  for (int m : {1, 2, 3, 4, 7}) {
    const auto w = derive_weights(neutral_matrix(m));
    for (double x : w.normalized) EXPECT_NEAR(x, 1.0 / m, 1e-12);
    EXPECT_NEAR(w.consistency_index, 0.0, 1e-12);
    EXPECT_TRUE(w.consistent);
  }
}

TEST(ConsistencyTest, SmallMatricesAreConsistent) {
  PairwiseMatrix m(2);
  m.set(0, 1, {2, 2, 2});
  EXPECT_EQ(consistency_index(m), 0.0);
  EXPECT_EQ(consistency_index(PairwiseMatrix(1)), 0.0);
}

TEST(ConsistencyTest, CyclicMatrixFailsTheGate) {
  const auto cp = cyclic_matrix();
  EXPECT_GT(eigen_ci_oracle(cp), kConsistencyThreshold);
  const auto w = derive_weights(cp);
  EXPECT_GT(w.consistency_index, kConsistencyThreshold);
  EXPECT_FALSE(w.consistent);
}

TEST(ConsistencyTest, AgreesWithEigenOracleOnVerdict) {
  // Crisp consistent matrices a_ij = w_i / w_j have lambda_max = m for both estimates.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(0.5, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + trial % 4;
    std::vector<double> w(m);
    for (double& x : w) x = dist(rng);
    PairwiseMatrix cp(m);
    for (int r = 0; r < m; ++r)
      for (int c = r + 1; c < m; ++c) {
        const double v = w[r] / w[c];
        cp.set(r, c, {v, v, v});
      }
    EXPECT_NEAR(eigen_ci_oracle(cp), 0.0, 1e-9);
    // Extent analysis weights are not w, so lambda_hat need not be exactly m,
    // but it never exceeds the gate for a perfectly consistent matrix.
    EXPECT_LE(consistency_index(cp), kConsistencyThreshold);
  }
  EXPECT_NEAR(eigen_ci_oracle(case_matrix()), 0.126, 0.001);
}

TEST(DeriveWeightsTest, PermutationEquivariance) {
  const auto base = case_matrix();
  const auto w = derive_weights(base).normalized;
  std::vector<int> perm{0, 1, 2, 3};
  do {
    PairwiseMatrix p(4);
    for (int r = 0; r < 4; ++r)
      for (int c = r + 1; c < 4; ++c) p.set(r, c, base.at(perm[r], perm[c]));
    const auto wp = derive_weights(p).normalized;
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(wp[j], w[perm[j]], 1e-12);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace
}  // namespace linguse
