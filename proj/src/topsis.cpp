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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linguse/errors.hpp"

namespace linguse {

WeightedValueMatrix weighted_values(const UnifiedDecisionMatrix& matrix, const std::vector<double>& wc) {
  if (static_cast<int>(wc.size()) != matrix.criteria()) {
    throw DomainError("weighted_values: " + std::to_string(wc.size()) + " weights for " +
                      std::to_string(matrix.criteria()) + " criteria");
  }
  WeightedValueMatrix out{matrix.alternatives(), matrix.criteria(), {}};
  out.values.reserve(static_cast<std::size_t>(out.alternatives) * out.criteria);
  for (int i = 0; i < matrix.alternatives(); ++i) {
    for (int j = 0; j < matrix.criteria(); ++j) {
      const auto& cell = matrix.at(i, j);
      out.values.push_back(cell ? delta_inverse(*cell) * wc[j] : 0.0);
    }
  }
  return out;
}

IdealSolutions ideal_solutions(const WeightedValueMatrix& matrix) {
  if (matrix.alternatives < 1) throw DomainError("ideal_solutions: no alternatives");
  IdealSolutions ideals;
  for (int j = 0; j < matrix.criteria; ++j) {
    double hi = matrix.at(0, j), lo = hi;
    for (int i = 1; i < matrix.alternatives; ++i) {
      hi = std::max(hi, matrix.at(i, j));
      lo = std::min(lo, matrix.at(i, j));
    }
    ideals.positive.push_back(hi);
    ideals.negative.push_back(lo);
  }
  return ideals;
}

ClosenessResult separations_and_closeness(const WeightedValueMatrix& matrix, const IdealSolutions& ideals) {
  if (static_cast<int>(ideals.positive.size()) != matrix.criteria ||
      static_cast<int>(ideals.negative.size()) != matrix.criteria) {
    throw DomainError("separations_and_closeness: ideal vectors do not match the criteria");
  }
  ClosenessResult r;
  for (int i = 0; i < matrix.alternatives; ++i) {
    double dp = 0.0, dm = 0.0;
    for (int j = 0; j < matrix.criteria; ++j) {
      const double v = matrix.at(i, j);
      dp += (v - ideals.positive[j]) * (v - ideals.positive[j]);
      dm += (v - ideals.negative[j]) * (v - ideals.negative[j]);
    }
    dp = std::sqrt(dp);
    dm = std::sqrt(dm);
    r.d_plus.push_back(dp);
    r.d_minus.push_back(dm);
    r.rc.push_back(dp + dm > 0.0 ? dm / (dp + dm) : 1.0);
  }
  r.ranking.resize(matrix.alternatives);
  std::iota(r.ranking.begin(), r.ranking.end(), 0);
  std::stable_sort(r.ranking.begin(), r.ranking.end(), [&](int a, int b) { return r.rc[a] > r.rc[b]; });
  return r;
}

ScopedRanking rank_scope(const std::string& scope, const UnifiedDecisionMatrix& matrix, const std::vector<double>& wc) {
  ScopedRanking s{scope, weighted_values(matrix, wc), {}, {}};
  if (s.values.alternatives == 0) return s;
  s.ideals = ideal_solutions(s.values);
  s.closeness = separations_and_closeness(s.values, s.ideals);
  return s;
}

std::vector<ScopedRanking> rank_all(const std::vector<std::pair<std::string, UnifiedDecisionMatrix>>& roles,
                                    const UnifiedDecisionMatrix& global, const std::vector<double>& wc) {
  std::vector<ScopedRanking> out;
  for (const auto& [id, matrix] : roles) out.push_back(rank_scope(id, matrix, wc));
  out.push_back(rank_scope("global", global, wc));
  return out;
}

}  // namespace linguse
